"""Finite monoid actions and the constructions between them.

An action is a table action[m][a] giving m . a; identity row must be the
identity permutation and rows must compose along the monoid table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CompatibilityViolated,
    IdentityLawViolated,
    IndexOutOfRange,
    MonoidMismatch,
    NotEquivariant,
    ShapeMismatch,
    SizeBoundExceeded,
    SubmonoidMismatch,
)
from .monoid import FiniteMonoid, Submonoid, _UnionFind, same_monoid

ActionTable = tuple[tuple[int, ...], ...]

MAP_ENUM_BOUND = 1_000_000


@dataclass(frozen=True)
class FinMSet:
    """A finite left action of a finite monoid."""

    monoid: FiniteMonoid
    size: int
    action: ActionTable

    def act(self, m: int, a: int) -> int:
        return self.action[m][a]

    def points(self) -> range:
        return range(self.size)


def validate_mset(monoid: FiniteMonoid, size: int, action: Sequence[Sequence[int]]) -> FinMSet:
    """Check the action laws and return the validated value."""
    rows = tuple(tuple(row) for row in action)
    if len(rows) != monoid.size:
        raise ShapeMismatch(f"expected {monoid.size} action rows, got {len(rows)}")
    for row in rows:
        if len(row) != size:
            raise ShapeMismatch(f"action row of length {len(row)}, expected {size}")
        for entry in row:
            if not (0 <= entry < size):
                raise IndexOutOfRange(f"action entry {entry} outside 0..{size - 1}")
    for a in range(size):
        if rows[monoid.identity][a] != a:
            raise IdentityLawViolated(f"identity moves point {a}")
    for m in monoid.elements():
        for n in monoid.elements():
            mn = monoid.table[m][n]
            for a in range(size):
                if rows[mn][a] != rows[m][rows[n][a]]:
                    raise CompatibilityViolated(m, n, a)
    return FinMSet(monoid, size, rows)


@dataclass(frozen=True)
class EqMap:
    """An equivariant map of actions over one monoid."""

    source: FinMSet
    target: FinMSet
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def validate_eqmap(source: FinMSet, target: FinMSet, mapping: Sequence[int]) -> EqMap:
    """Check shape and equivariance, reporting the first failing pair."""
    if not same_monoid(source.monoid, target.monoid):
        raise MonoidMismatch("map endpoints are over different monoids")
    frozen = tuple(mapping)
    if len(frozen) != source.size:
        raise ShapeMismatch(f"mapping of length {len(frozen)}, expected {source.size}")
    for v in frozen:
        if not (0 <= v < target.size):
            raise IndexOutOfRange(f"mapping value {v} outside 0..{target.size - 1}")
    for m in source.monoid.elements():
        for a in range(source.size):
            if frozen[source.action[m][a]] != target.action[m][frozen[a]]:
                raise NotEquivariant(m, a)
    return EqMap(source, target, frozen)


def is_equivariant(f: EqMap) -> bool:
    src, dst, mp = f.source, f.target, f.mapping
    if not same_monoid(src.monoid, dst.monoid):
        return False
    if len(mp) != src.size or any(not (0 <= v < dst.size) for v in mp):
        return False
    return all(
        mp[src.action[m][a]] == dst.action[m][mp[a]]
        for m in src.monoid.elements()
        for a in src.points()
    )


def compose_eq(outer: EqMap, inner: EqMap) -> EqMap:
    if inner.target.action != outer.source.action or inner.target.size != outer.source.size:
        raise ShapeMismatch("equivariant composition: inner target differs from outer source")
    return EqMap(inner.source, outer.target, tuple(outer.mapping[v] for v in inner.mapping))


def identity_eq(mset: FinMSet) -> EqMap:
    return EqMap(mset, mset, tuple(range(mset.size)))


def orbits(mset: FinMSet) -> tuple[tuple[int, ...], ...]:
    """Weak orbits: connected components under a ~ m.a, sorted by least point."""
    uf = _UnionFind(mset.size)
    for row in mset.action:
        for a in mset.points():
            uf.union(a, row[a])
    buckets: dict[int, list[int]] = {}
    for a in mset.points():
        buckets.setdefault(uf.find(a), []).append(a)
    comps = [tuple(sorted(v)) for v in buckets.values()]
    comps.sort(key=lambda c: c[0])
    return tuple(comps)


def equivariant_maps(source: FinMSet, target: FinMSet, max_maps: int = MAP_ENUM_BOUND) -> tuple[EqMap, ...]:
    """All equivariant maps, sorted by mapping tuple.

    Backtracking assigns one point per orbit and propagates along the
    action, so the search tree is bounded by |target| ** (orbit count).
    """
    if not same_monoid(source.monoid, target.monoid):
        raise MonoidMismatch("equivariant maps need a common monoid")
    if source.size == 0:
        return (EqMap(source, target, ()),)
    orbit_count = len(orbits(source))
    if target.size ** orbit_count > max_maps:
        raise SizeBoundExceeded("equivariant map enumeration", target.size ** orbit_count, max_maps)
    if target.size == 0:
        return ()
    n = source.size
    msize = source.monoid.size
    src_act, dst_act = source.action, target.action
    mapping = [-1] * n
    results: list[tuple[int, ...]] = []

    def push(a: int, v: int, trail: list[int]) -> bool:
        stack = [(a, v)]
        while stack:
            a, v = stack.pop()
            cur = mapping[a]
            if cur != -1:
                if cur != v:
                    return False
                continue
            mapping[a] = v
            trail.append(a)
            for m in range(msize):
                stack.append((src_act[m][a], dst_act[m][v]))
        return True

    def search() -> None:
        a = next((i for i in range(n) if mapping[i] == -1), None)
        if a is None:
            results.append(tuple(mapping))
            return
        for v in range(target.size):
            trail: list[int] = []
            if push(a, v, trail):
                search()
            for t in trail:
                mapping[t] = -1

    search()
    results.sort()
    return tuple(EqMap(source, target, r) for r in results)


def find_isomorphism(a: FinMSet, b: FinMSet, max_maps: int = MAP_ENUM_BOUND) -> EqMap | None:
    """Some equivariant bijection, or None; sizes must match for one to exist."""
    if a.size != b.size:
        return None
    for f in equivariant_maps(a, b, max_maps):
        if len(set(f.mapping)) == a.size:
            return f
    return None


def fixed_points(mset: FinMSet, elements: Iterable[int]) -> tuple[int, ...]:
    """Points fixed by every listed monoid element."""
    elems = tuple(elements)
    for m in elems:
        if not (0 <= m < mset.monoid.size):
            raise IndexOutOfRange(f"element {m} outside 0..{mset.monoid.size - 1}")
    return tuple(a for a in mset.points() if all(mset.action[m][a] == a for m in elems))


def is_symmetric(mset: FinMSet) -> bool:
    """True iff every element acts by a bijection."""
    full = set(range(mset.size))
    return all(set(row) == full for row in mset.action)


def restrict(mset: FinMSet, sub: Submonoid) -> FinMSet:
    """The same points, acted on only by the submonoid (re-indexed)."""
    if not same_monoid(sub.parent, mset.monoid):
        raise SubmonoidMismatch("submonoid of a different monoid")
    rows = tuple(mset.action[e] for e in sub.elements)
    return FinMSet(sub.embedded, mset.size, rows)


@dataclass(frozen=True)
class MSetCongruence:
    """Equivariant equivalence on points, stored as least-representative map."""

    mset: FinMSet
    representative: tuple[int, ...]

    def same(self, a: int, b: int) -> bool:
        return self.representative[a] == self.representative[b]

    def classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: dict[int, list[int]] = {}
        for x, r in enumerate(self.representative):
            buckets.setdefault(r, []).append(x)
        return tuple(tuple(buckets[r]) for r in sorted(buckets))


def mset_congruence_closure(mset: FinMSet, pairs: Iterable[tuple[int, int]]) -> MSetCongruence:
    """Smallest equivariant equivalence containing the pairs."""
    uf = _UnionFind(mset.size)
    queue: list[tuple[int, int]] = []
    for a, b in pairs:
        if not (0 <= a < mset.size and 0 <= b < mset.size):
            raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{mset.size - 1}")
        if uf.union(a, b):
            queue.append((a, b))
    while queue:
        a, b = queue.pop()
        for row in mset.action:
            if uf.union(row[a], row[b]):
                queue.append((row[a], row[b]))
    least: dict[int, int] = {}
    for x in range(mset.size):
        r = uf.find(x)
        if r not in least or x < least[r]:
            least[r] = x
    reps = tuple(least[uf.find(x)] for x in range(mset.size))
    return MSetCongruence(mset, reps)


def quotient_mset(mset: FinMSet, congruence: MSetCongruence) -> tuple[FinMSet, EqMap]:
    """Quotient action plus the projection; classes ordered by least point."""
    if congruence.mset.action != mset.action:
        raise ShapeMismatch("congruence belongs to a different m-set")
    reps = congruence.representative
    ordered = sorted(set(reps))
    index = {r: i for i, r in enumerate(ordered)}
    action = tuple(tuple(index[reps[row[r]]] for r in ordered) for row in mset.action)
    quotient = FinMSet(mset.monoid, len(ordered), action)
    projection = EqMap(mset, quotient, tuple(index[reps[a]] for a in mset.points()))
    return quotient, projection


def coproduct(a: FinMSet, b: FinMSet) -> FinMSet:
    """Disjoint union, points of a first."""
    if not same_monoid(a.monoid, b.monoid):
        raise MonoidMismatch("coproduct needs a common monoid")
    action = tuple(
        tuple(a.action[m]) + tuple(v + a.size for v in b.action[m])
        for m in a.monoid.elements()
    )
    return FinMSet(a.monoid, a.size + b.size, action)


def coproduct_injections(a: FinMSet, b: FinMSet) -> tuple[FinMSet, EqMap, EqMap]:
    both = coproduct(a, b)
    inl = EqMap(a, both, tuple(range(a.size)))
    inr = EqMap(b, both, tuple(range(a.size, a.size + b.size)))
    return both, inl, inr


def product(a: FinMSet, b: FinMSet) -> FinMSet:
    """Cartesian product with the diagonal action; pairs in a-major order."""
    if not same_monoid(a.monoid, b.monoid):
        raise MonoidMismatch("product needs a common monoid")
    action = tuple(
        tuple(
            a.action[m][x] * b.size + b.action[m][y]
            for x in a.points()
            for y in b.points()
        )
        for m in a.monoid.elements()
    )
    return FinMSet(a.monoid, a.size * b.size, action)


def pushout_cocone(f: EqMap, g: EqMap) -> tuple[FinMSet, EqMap, EqMap]:
    """Pushout of f: C -> A against g: C -> B, with both legs."""
    if f.source.action != g.source.action or f.source.size != g.source.size:
        raise ShapeMismatch("pushout needs a common source")
    if not same_monoid(f.target.monoid, g.target.monoid):
        raise MonoidMismatch("pushout needs a common monoid")
    both, inl, inr = coproduct_injections(f.target, g.target)
    pairs = [(inl.mapping[f.mapping[c]], inr.mapping[g.mapping[c]]) for c in f.source.points()]
    congruence = mset_congruence_closure(both, pairs)
    quotient, projection = quotient_mset(both, congruence)
    return quotient, compose_eq(projection, inl), compose_eq(projection, inr)


def pushout(f: EqMap, g: EqMap) -> FinMSet:
    return pushout_cocone(f, g)[0]


def trivial_mset(monoid: FiniteMonoid, size: int = 1) -> FinMSet:
    """size points, every element acting as the identity."""
    row = tuple(range(size))
    return FinMSet(monoid, size, tuple(row for _ in monoid.elements()))


def regular_mset(monoid: FiniteMonoid) -> FinMSet:
    """The monoid acting on itself by left translation."""
    return FinMSet(monoid, monoid.size, monoid.table)


def induce(sub: Submonoid, mset: FinMSet) -> tuple[FinMSet, EqMap]:
    """Left extension along a submonoid inclusion.

    Points are pairs (parent element, point) modulo (m*n, a) ~ (m, n.a);
    since the generating pairs are fixed, one union-find saturation pass
    closes the relation. Returns the extension and the unit into its
    restriction.
    """
    if not same_monoid(mset.monoid, sub.embedded):
        raise SubmonoidMismatch("m-set is not over the submonoid")
    parent = sub.parent
    size = mset.size
    total = parent.size * size

    def pair(m: int, a: int) -> int:
        return m * size + a

    uf = _UnionFind(total)
    for m in parent.elements():
        for k, n in enumerate(sub.elements):
            mn = parent.table[m][n]
            for a in range(size):
                uf.union(pair(mn, a), pair(m, mset.action[k][a]))
    least: dict[int, int] = {}
    for x in range(total):
        r = uf.find(x)
        if r not in least or x < least[r]:
            least[r] = x
    reps = sorted(set(least.values()))
    index = {r: i for i, r in enumerate(reps)}

    def cls(m: int, a: int) -> int:
        return index[least[uf.find(pair(m, a))]]

    action = tuple(
        tuple(cls(parent.table[m][r // size], r % size) for r in reps)
        for m in parent.elements()
    )
    extension = FinMSet(parent, len(reps), action)
    unit_target = restrict(extension, sub)
    unit = EqMap(mset, unit_target, tuple(cls(parent.identity, a) for a in range(size)))
    return extension, unit


def coinduce(sub: Submonoid, mset: FinMSet, max_maps: int = MAP_ENUM_BOUND) -> tuple[FinMSet, EqMap]:
    """Right extension along a submonoid inclusion.

    Points are submonoid-equivariant maps from the parent (acted on by the
    submonoid through left translation) to the given action; the parent
    acts by (m . phi)(x) = phi(x * m). Returns the extension and the counit
    out of its restriction.
    """
    if not same_monoid(mset.monoid, sub.embedded):
        raise SubmonoidMismatch("m-set is not over the submonoid")
    parent = sub.parent
    carrier_rows = tuple(tuple(parent.table[n][x] for x in parent.elements()) for n in sub.elements)
    carrier = FinMSet(sub.embedded, parent.size, carrier_rows)
    maps = equivariant_maps(carrier, mset, max_maps)
    points = [f.mapping for f in maps]
    index = {p: i for i, p in enumerate(points)}
    action = tuple(
        tuple(
            index[tuple(p[parent.table[x][m]] for x in parent.elements())]
            for p in points
        )
        for m in parent.elements()
    )
    extension = FinMSet(parent, len(points), action)
    counit_source = restrict(extension, sub)
    counit = EqMap(counit_source, mset, tuple(p[parent.identity] for p in points))
    return extension, counit
