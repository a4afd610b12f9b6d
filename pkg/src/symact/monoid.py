"""Finite monoids presented as multiplication tables.

Elements are the indices 0..size-1 and table[a][b] is the product a*b.
Everything here is brute-force over tiny tables; enumeration-style
operations take an explicit bound and refuse to run past it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BadIdentity,
    IndexOutOfRange,
    NotAssociative,
    SizeBoundExceeded,
    SubmonoidMismatch,
)

Table = tuple[tuple[int, ...], ...]

SUBMONOID_ENUM_BOUND = 12
MONOID_ENUM_BOUND = 4
HOM_ORACLE_BOUND = 8


@dataclass(frozen=True)
class FiniteMonoid:
    """Multiplication table plus the index of the identity element."""

    table: Table
    identity: int

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, m: int, k: int) -> int:
        # m**0 is the identity
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][m]
        return acc

    def elements(self) -> range:
        return range(len(self.table))


def same_monoid(a: FiniteMonoid, b: FiniteMonoid) -> bool:
    return a.table == b.table and a.identity == b.identity


def _freeze_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in table)


def validate_monoid(table: Sequence[Sequence[int]], identity: int) -> FiniteMonoid:
    """Check the monoid laws and return the validated value."""
    frozen = _freeze_table(table)
    n = len(frozen)
    for row in frozen:
        if len(row) != n:
            raise IndexOutOfRange(f"table is not square: row of length {len(row)} in a {n}-row table")
        for entry in row:
            if not (0 <= entry < n):
                raise IndexOutOfRange(f"table entry {entry} outside 0..{n - 1}")
    if not (0 <= identity < n):
        raise IndexOutOfRange(f"identity index {identity} outside 0..{n - 1}")
    for m in range(n):
        if frozen[identity][m] != m or frozen[m][identity] != m:
            raise BadIdentity(m)
    for a in range(n):
        for b in range(n):
            ab = frozen[a][b]
            row_ab = frozen[ab]
            row_a = frozen[a]
            row_b = frozen[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAssociative(a, b, c)
    return FiniteMonoid(frozen, identity)


def is_group(monoid: FiniteMonoid) -> bool:
    """A finite monoid is a group iff every translation row is a permutation."""
    full = set(range(monoid.size))
    return all(set(row) == full for row in monoid.table)


def idempotents(monoid: FiniteMonoid) -> tuple[int, ...]:
    return tuple(m for m in monoid.elements() if monoid.table[m][m] == m)


def index_period(monoid: FiniteMonoid, m: int) -> tuple[int, int]:
    """Least (k, p) with m**k == m**(k+p); k >= 0, p >= 1."""
    if not (0 <= m < monoid.size):
        raise IndexOutOfRange(f"element {m} outside 0..{monoid.size - 1}")
    seen: dict[int, int] = {}
    acc = monoid.identity
    step = 0
    while acc not in seen:
        seen[acc] = step
        acc = monoid.table[acc][m]
        step += 1
    k = seen[acc]
    return k, step - k


@dataclass(frozen=True)
class MonoidHom:
    """Map of element indices preserving identity and products."""

    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.mapping[m]


def is_hom(f: MonoidHom) -> bool:
    src, dst, mp = f.source, f.target, f.mapping
    if len(mp) != src.size or any(not (0 <= v < dst.size) for v in mp):
        return False
    if mp[src.identity] != dst.identity:
        return False
    return all(
        mp[src.table[a][b]] == dst.table[mp[a]][mp[b]]
        for a in src.elements()
        for b in src.elements()
    )


def compose_hom(outer: MonoidHom, inner: MonoidHom) -> MonoidHom:
    if not same_monoid(outer.source, inner.target):
        raise SubmonoidMismatch("hom composition: inner target differs from outer source")
    return MonoidHom(inner.source, outer.target, tuple(outer.mapping[v] for v in inner.mapping))


@dataclass(frozen=True)
class Submonoid:
    """A multiplicatively closed subset containing the identity.

    elements lists parent indices in increasing order; embedded is the
    same monoid re-indexed along that order, and inclusion embeds it back.
    """

    parent: FiniteMonoid
    elements: tuple[int, ...]
    embedded: FiniteMonoid
    inclusion: MonoidHom

    @property
    def size(self) -> int:
        return len(self.elements)

    def position(self, parent_element: int) -> int:
        return self.elements.index(parent_element)


def submonoid(parent: FiniteMonoid, elements: Iterable[int]) -> Submonoid:
    """Wrap an explicit closed subset; raises SubmonoidMismatch if it is not one."""
    elems = tuple(sorted(set(elements)))
    for e in elems:
        if not (0 <= e < parent.size):
            raise IndexOutOfRange(f"element {e} outside 0..{parent.size - 1}")
    if parent.identity not in elems:
        raise SubmonoidMismatch("subset does not contain the identity")
    index = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            if parent.table[a][b] not in index:
                raise SubmonoidMismatch(f"subset not closed: {a}*{b} = {parent.table[a][b]} missing")
    table = tuple(tuple(index[parent.table[a][b]] for b in elems) for a in elems)
    embedded = FiniteMonoid(table, index[parent.identity])
    inclusion = MonoidHom(embedded, parent, elems)
    return Submonoid(parent, elems, embedded, inclusion)


def submonoid_generated(parent: FiniteMonoid, seed: Iterable[int]) -> Submonoid:
    """Smallest submonoid containing the seed elements."""
    current = {parent.identity}
    for e in seed:
        if not (0 <= e < parent.size):
            raise IndexOutOfRange(f"element {e} outside 0..{parent.size - 1}")
        current.add(e)
    frontier = list(current)
    while frontier:
        nxt = []
        for a in list(current):
            for b in frontier:
                for prod in (parent.table[a][b], parent.table[b][a]):
                    if prod not in current:
                        current.add(prod)
                        nxt.append(prod)
        frontier = nxt
    return submonoid(parent, current)


def all_submonoids(parent: FiniteMonoid, max_size: int = SUBMONOID_ENUM_BOUND) -> tuple[Submonoid, ...]:
    """Every submonoid, ordered by (size, element tuple)."""
    n = parent.size
    if n > max_size:
        raise SizeBoundExceeded("submonoid enumeration", n, max_size)
    rest = [e for e in range(n) if e != parent.identity]
    found: list[tuple[int, ...]] = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            subset = tuple(sorted((parent.identity,) + extra))
            index = set(subset)
            if all(parent.table[a][b] in index for a in subset for b in subset):
                found.append(subset)
    found.sort(key=lambda s: (len(s), s))
    return tuple(submonoid(parent, s) for s in found)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


@dataclass(frozen=True)
class Congruence:
    """Two-sided congruence stored as a representative map.

    representative[x] is the least element of the class of x, so the map
    is idempotent.
    """

    monoid: FiniteMonoid
    representative: tuple[int, ...]

    def same(self, a: int, b: int) -> bool:
        return self.representative[a] == self.representative[b]

    def classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: dict[int, list[int]] = {}
        for x, r in enumerate(self.representative):
            buckets.setdefault(r, []).append(x)
        return tuple(tuple(buckets[r]) for r in sorted(buckets))


def congruence_closure(monoid: FiniteMonoid, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest two-sided congruence containing the given pairs."""
    n = monoid.size
    uf = _UnionFind(n)
    queue: list[tuple[int, int]] = []
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{n - 1}")
        if uf.union(a, b):
            queue.append((a, b))
    table = monoid.table
    while queue:
        a, b = queue.pop()
        for c in range(n):
            for x, y in ((table[a][c], table[b][c]), (table[c][a], table[c][b])):
                if uf.union(x, y):
                    queue.append((x, y))
    reps = [0] * n
    least: dict[int, int] = {}
    for x in range(n):
        r = uf.find(x)
        if r not in least or x < least[r]:
            least[r] = x
    for x in range(n):
        reps[x] = least[uf.find(x)]
    return Congruence(monoid, tuple(reps))


def quotient_monoid(monoid: FiniteMonoid, congruence: Congruence) -> tuple[FiniteMonoid, MonoidHom]:
    """Quotient table plus the projection hom; identity class lands at index 0."""
    if congruence.monoid.table != monoid.table:
        raise SubmonoidMismatch("congruence belongs to a different monoid")
    reps = congruence.representative
    id_rep = reps[monoid.identity]
    ordered = [id_rep] + [r for r in sorted(set(reps)) if r != id_rep]
    index = {r: i for i, r in enumerate(ordered)}
    table = tuple(
        tuple(index[reps[monoid.table[a][b]]] for b in ordered) for a in ordered
    )
    quotient = FiniteMonoid(table, 0)
    projection = MonoidHom(monoid, quotient, tuple(index[reps[x]] for x in range(monoid.size)))
    return quotient, projection


def monoid_homs(
    source: FiniteMonoid, target: FiniteMonoid, max_size: int = HOM_ORACLE_BOUND
) -> tuple[MonoidHom, ...]:
    """All homomorphisms, by backtracking with forced products.

    Sorted by mapping tuple. Both sizes must stay within max_size.
    """
    if source.size > max_size or target.size > max_size:
        raise SizeBoundExceeded("hom enumeration", max(source.size, target.size), max_size)
    n, src, dst = source.size, source.table, target.table
    mapping = [-1] * n
    assigned: list[int] = []
    results: list[tuple[int, ...]] = []

    def push(x: int, v: int, trail: list[int]) -> bool:
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            cur = mapping[x]
            if cur != -1:
                if cur != v:
                    return False
                continue
            mapping[x] = v
            trail.append(x)
            assigned.append(x)
            for y in assigned:
                stack.append((src[x][y], dst[v][mapping[y]]))
                stack.append((src[y][x], dst[mapping[y]][v]))
        return True

    def search() -> None:
        x = next((i for i in range(n) if mapping[i] == -1), None)
        if x is None:
            results.append(tuple(mapping))
            return
        for v in range(target.size):
            trail: list[int] = []
            if push(x, v, trail):
                search()
            for t in trail:
                mapping[t] = -1
                assigned.pop()

    seed: list[int] = []
    if push(source.identity, target.identity, seed):
        search()
    results.sort()
    return tuple(MonoidHom(source, target, r) for r in results)


@lru_cache(maxsize=None)
def _enumerate_tables(n: int) -> tuple[Table, ...]:
    # Backtracking over the n*n table with identity fixed at index 0,
    # checking associativity on every fully determined triple as cells fill.
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    table = [[-1] * n for _ in range(n)]
    for m in range(n):
        table[0][m] = m
        table[m][0] = m
    out: list[Table] = []

    def consistent(a: int, b: int) -> bool:
        for c in range(n):
            ab = table[a][b]
            # (a*b)*c vs a*(b*c)
            bc = table[b][c]
            if bc != -1 and table[ab][c] != -1 and table[a][bc] != -1:
                if table[ab][c] != table[a][bc]:
                    return False
            # (c*a)*b vs c*(a*b)
            ca = table[c][a]
            if ca != -1 and table[ca][b] != -1 and table[c][ab] != -1:
                if table[ca][b] != table[c][ab]:
                    return False
        return True

    def full_check() -> bool:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        return False
        return True

    def fill(pos: int) -> None:
        if pos == len(cells):
            if full_check():
                out.append(tuple(tuple(row) for row in table))
            return
        a, b = cells[pos]
        for v in range(n):
            table[a][b] = v
            if consistent(a, b):
                fill(pos + 1)
        table[a][b] = -1

    fill(0)
    return tuple(out)


def enumerate_monoids(n: int, max_size: int = MONOID_ENUM_BOUND) -> tuple[FiniteMonoid, ...]:
    """All monoid tables of order n with identity at index 0, lexicographic."""
    if n < 1:
        raise IndexOutOfRange(f"monoid order must be positive, got {n}")
    if n > max_size:
        raise SizeBoundExceeded("monoid enumeration", n, max_size)
    return tuple(FiniteMonoid(t, 0) for t in _enumerate_tables(n))
