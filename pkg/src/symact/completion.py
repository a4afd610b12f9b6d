"""Group completion of a finite monoid and subgroup bookkeeping.

For a finite monoid the universal group quotient is obtained by collapsing
every idempotent to the identity and closing up to a congruence; finiteness
makes this the whole group completion because some power of each element
is idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    CompletionMismatch,
    NotAGroup,
    NotASubgroup,
    SizeBoundExceeded,
    TargetNotGroup,
)
from .monoid import (
    HOM_ORACLE_BOUND,
    Congruence,
    FiniteMonoid,
    MonoidHom,
    compose_hom,
    congruence_closure,
    idempotents,
    is_group,
    is_hom,
    monoid_homs,
    quotient_monoid,
    same_monoid,
)

SUBGROUP_ENUM_BOUND = 24


@dataclass(frozen=True)
class GroupCompletion:
    """The universal map q from a monoid onto its group completion."""

    monoid: FiniteMonoid
    group: FiniteMonoid
    q: MonoidHom
    kernel: Congruence


@lru_cache(maxsize=None)
def group_completion(monoid: FiniteMonoid) -> GroupCompletion:
    """Collapse all idempotents to the identity and quotient."""
    pairs = [(e, monoid.identity) for e in idempotents(monoid)]
    kernel = congruence_closure(monoid, pairs)
    group, projection = quotient_monoid(monoid, kernel)
    if not is_group(group):
        raise NotAGroup("idempotent collapse did not produce a group")
    return GroupCompletion(monoid, group, projection, kernel)


def factor_through_completion(gc: GroupCompletion, f: MonoidHom) -> MonoidHom:
    """The unique hom h with h . q = f, for f into a group."""
    if not same_monoid(f.source, gc.monoid):
        raise CompletionMismatch("hom source differs from the completed monoid")
    if not is_group(f.target):
        raise TargetNotGroup("factorization target is not a group")
    mapping = [-1] * gc.group.size
    for m in gc.monoid.elements():
        g = gc.q.mapping[m]
        if mapping[g] == -1:
            mapping[g] = f.mapping[m]
        elif mapping[g] != f.mapping[m]:
            raise CompletionMismatch("hom is not constant on completion fibers")
    h = MonoidHom(gc.group, f.target, tuple(mapping))
    if not is_hom(h):
        raise CompletionMismatch("induced map is not a homomorphism")
    return h


def verify_universal_property(
    gc: GroupCompletion,
    targets: Sequence[FiniteMonoid],
    max_size: int = HOM_ORACLE_BOUND,
) -> bool:
    """Exhaustive check: every hom to a group factors uniquely through q.

    Returns False instead of raising when some hom has zero or several
    factorizations, so corrupted completions are reported, not masked.
    """
    for target in targets:
        if not is_group(target):
            raise NotAGroup("universal property targets must be groups")
        from_monoid = monoid_homs(gc.monoid, target, max_size)
        from_group = monoid_homs(gc.group, target, max_size)
        composites = [compose_hom(h, gc.q).mapping for h in from_group]
        for f in from_monoid:
            if composites.count(f.mapping) != 1:
                return False
        # dually, every composite must be a hom from the monoid
        hom_set = {f.mapping for f in from_monoid}
        if any(c not in hom_set for c in composites):
            return False
    return True


@dataclass(frozen=True)
class SubgroupFamily:
    group: FiniteMonoid
    subgroups: tuple[tuple[int, ...], ...]


def _inverse_table(group: FiniteMonoid) -> tuple[int, ...]:
    inv = [-1] * group.size
    for g in group.elements():
        for h in group.elements():
            if group.table[g][h] == group.identity:
                inv[g] = h
                break
    return tuple(inv)


def is_subgroup(group: FiniteMonoid, subset: Iterable[int]) -> bool:
    elems = sorted(set(subset))
    if not elems or any(not (0 <= e < group.size) for e in elems):
        return False
    if group.identity not in elems:
        return False
    index = set(elems)
    inv = _inverse_table(group)
    return all(group.table[a][b] in index for a in elems for b in elems) and all(
        inv[a] in index for a in elems
    )


def all_subgroups(group: FiniteMonoid, max_size: int = SUBGROUP_ENUM_BOUND) -> SubgroupFamily:
    """Every subgroup, ordered by (size, element tuple)."""
    if not is_group(group):
        raise NotAGroup("subgroup enumeration needs a group")
    n = group.size
    if n > max_size:
        raise SizeBoundExceeded("subgroup enumeration", n, max_size)
    rest = [e for e in range(n) if e != group.identity]
    found: list[tuple[int, ...]] = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            subset = tuple(sorted((group.identity,) + extra))
            if is_subgroup(group, subset):
                found.append(subset)
    found.sort(key=lambda s: (len(s), s))
    return SubgroupFamily(group, tuple(found))


def is_conjugacy_closed(group: FiniteMonoid, subgroups: Sequence[Iterable[int]]) -> bool:
    """True iff the collection is stable under conjugation by every element."""
    members = []
    for subset in subgroups:
        elems = tuple(sorted(set(subset)))
        if not is_subgroup(group, elems):
            raise NotASubgroup(f"{elems} is not a subgroup")
        members.append(elems)
    member_set = set(members)
    inv = _inverse_table(group)
    for h_sub in members:
        for g in group.elements():
            conj = tuple(sorted(group.table[group.table[g][h]][inv[g]] for h in h_sub))
            if conj not in member_set:
                return False
    return True
