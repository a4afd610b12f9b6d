"""Right and left symmetric replacements over the group completion.

rinv carves out the largest subset on which the monoid action descends to
the completion group; linv freely glues group translates of the points.
Both come with the comparison map to or from the original action, and both
have relative versions over a submonoid plus the derived equivalence
verdicts for a family of (submonoid, subgroup) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Sequence

from .completion import GroupCompletion, group_completion, is_conjugacy_closed, is_subgroup
from .errors import (
    CompletionMismatch,
    FamilyInvalid,
    NotASubgroup,
    SizeBoundExceeded,
    SubmonoidMismatch,
)
from .monoid import FiniteMonoid, Submonoid, _UnionFind, same_monoid
from .mset import (
    EqMap,
    FinMSet,
    MAP_ENUM_BOUND,
    equivariant_maps,
    fixed_points,
    restrict,
)

BRUTEFORCE_BOUND = 1_000_000


def qstar(gc: GroupCompletion, gset: FinMSet) -> FinMSet:
    """Pull a group action back to a monoid action along q."""
    if not same_monoid(gset.monoid, gc.group):
        raise CompletionMismatch("action is not over the completion group")
    rows = tuple(gset.action[gc.q.mapping[m]] for m in gc.monoid.elements())
    return FinMSet(gc.monoid, gset.size, rows)


@dataclass(frozen=True)
class RinvResult:
    """A group action together with the counit into the original points."""

    gc: GroupCompletion
    gset: FinMSet
    counit: EqMap


@dataclass(frozen=True)
class LinvResult:
    """A group action together with the unit out of the original points."""

    gc: GroupCompletion
    gset: FinMSet
    unit: EqMap


def rinv(gc: GroupCompletion, mset: FinMSet) -> RinvResult:
    """Largest subset on which the action factors through the completion.

    A point stays iff identified monoid elements act on it identically;
    the completion group then acts through arbitrary q-preimages and the
    counit is the subset inclusion.
    """
    if not same_monoid(mset.monoid, gc.monoid):
        raise CompletionMismatch("action is not over the completed monoid")
    classes = gc.kernel.classes()
    kept = [
        a
        for a in mset.points()
        if all(len({mset.action[m][a] for m in cls}) == 1 for cls in classes)
    ]
    position = {a: i for i, a in enumerate(kept)}
    preimage = [-1] * gc.group.size
    for m in gc.monoid.elements():
        g = gc.q.mapping[m]
        if preimage[g] == -1:
            preimage[g] = m
    rows = tuple(
        tuple(position[mset.action[preimage[g]][a]] for a in kept)
        for g in gc.group.elements()
    )
    gset = FinMSet(gc.group, len(kept), rows)
    counit = EqMap(qstar(gc, gset), mset, tuple(kept))
    return RinvResult(gc, gset, counit)


def rinv_bruteforce(gc: GroupCompletion, mset: FinMSet, max_maps: int = BRUTEFORCE_BOUND) -> RinvResult:
    """Oracle twin of rinv: filter all functions from the completion group.

    Keeps every function sigma with sigma(q(m) * g) = m . sigma(g); the
    group translates arguments on the right and the counit evaluates at
    the group identity. Deliberately shares no code with rinv.
    """
    if not same_monoid(mset.monoid, gc.monoid):
        raise CompletionMismatch("action is not over the completed monoid")
    gsize = gc.group.size
    if mset.size ** gsize > max_maps:
        raise SizeBoundExceeded("replacement brute force", mset.size ** gsize, max_maps)
    kept: list[tuple[int, ...]] = []
    for candidate in iproduct(range(mset.size), repeat=gsize):
        ok = True
        for m in gc.monoid.elements():
            qm = gc.q.mapping[m]
            for g in range(gsize):
                if candidate[gc.group.table[qm][g]] != mset.action[m][candidate[g]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            kept.append(candidate)
    kept.sort()
    index = {c: i for i, c in enumerate(kept)}
    rows = tuple(
        tuple(index[tuple(c[gc.group.table[h][g]] for h in range(gsize))] for c in kept)
        for g in range(gsize)
    )
    gset = FinMSet(gc.group, len(kept), rows)
    counit = EqMap(qstar(gc, gset), mset, tuple(c[gc.group.identity] for c in kept))
    return RinvResult(gc, gset, counit)


def linv(gc: GroupCompletion, mset: FinMSet) -> LinvResult:
    """Free group action on pairs (group element, point) modulo descent.

    Pairs are identified along (g, m.a) ~ (g*q(m), a); the group acts on
    the left coordinate and the unit sends a point to the class of
    (identity, a).
    """
    if not same_monoid(mset.monoid, gc.monoid):
        raise CompletionMismatch("action is not over the completed monoid")
    gsize, size = gc.group.size, mset.size
    total = gsize * size

    def pair(g: int, a: int) -> int:
        return g * size + a

    uf = _UnionFind(total)
    for g in range(gsize):
        for m in gc.monoid.elements():
            gq = gc.group.table[g][gc.q.mapping[m]]
            for a in range(size):
                uf.union(pair(g, mset.action[m][a]), pair(gq, a))
    least: dict[int, int] = {}
    for x in range(total):
        r = uf.find(x)
        if r not in least or x < least[r]:
            least[r] = x
    reps = sorted(set(least.values()))
    index = {r: i for i, r in enumerate(reps)}

    def cls(g: int, a: int) -> int:
        return index[least[uf.find(pair(g, a))]]

    rows = tuple(
        tuple(cls(gc.group.table[k][r // size], r % size) for r in reps)
        for k in range(gsize)
    )
    gset = FinMSet(gc.group, len(reps), rows)
    unit = EqMap(mset, qstar(gc, gset), tuple(cls(gc.group.identity, a) for a in range(size)))
    return LinvResult(gc, gset, unit)


def rinv_rel(sub: Submonoid, mset: FinMSet) -> RinvResult:
    """rinv after restricting to a submonoid, over that submonoid's completion."""
    if not same_monoid(sub.parent, mset.monoid):
        raise SubmonoidMismatch("submonoid of a different monoid")
    return rinv(group_completion(sub.embedded), restrict(mset, sub))


def linv_rel(sub: Submonoid, mset: FinMSet) -> LinvResult:
    """linv after restricting to a submonoid, over that submonoid's completion."""
    if not same_monoid(sub.parent, mset.monoid):
        raise SubmonoidMismatch("submonoid of a different monoid")
    return linv(group_completion(sub.embedded), restrict(mset, sub))


def adjunction_check_right(
    gc: GroupCompletion, gset: FinMSet, mset: FinMSet, max_maps: int = MAP_ENUM_BOUND
) -> bool:
    """Group maps into rinv correspond to monoid maps out of the pullback."""
    replaced = rinv(gc, mset)
    upstairs = equivariant_maps(gset, replaced.gset, max_maps)
    downstairs = equivariant_maps(qstar(gc, gset), mset, max_maps)
    transported = sorted(
        tuple(replaced.counit.mapping[f.mapping[b]] for b in gset.points()) for f in upstairs
    )
    return transported == sorted(f.mapping for f in downstairs)


def adjunction_check_left(
    gc: GroupCompletion, gset: FinMSet, mset: FinMSet, max_maps: int = MAP_ENUM_BOUND
) -> bool:
    """Group maps out of linv correspond to monoid maps into the pullback."""
    replaced = linv(gc, mset)
    upstairs = equivariant_maps(replaced.gset, gset, max_maps)
    downstairs = equivariant_maps(mset, qstar(gc, gset), max_maps)
    transported = sorted(
        tuple(f.mapping[replaced.unit.mapping[a]] for a in mset.points()) for f in upstairs
    )
    return transported == sorted(f.mapping for f in downstairs)


@dataclass(frozen=True)
class FamilyEntry:
    submonoid: Submonoid
    completion: GroupCompletion
    subgroups: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FamilyZY:
    """Submonoids paired with conjugacy-closed subgroup collections."""

    monoid: FiniteMonoid
    entries: tuple[FamilyEntry, ...]


def make_family(
    monoid: FiniteMonoid,
    entries: Sequence[tuple[Submonoid, Sequence[Iterable[int]]]],
) -> FamilyZY:
    """Validate and pack a (submonoid, subgroups) family."""
    seen: set[tuple[int, ...]] = set()
    packed: list[FamilyEntry] = []
    for sub, subgroup_list in entries:
        if not same_monoid(sub.parent, monoid):
            raise FamilyInvalid("family entry over a different monoid")
        if sub.elements in seen:
            raise FamilyInvalid(f"duplicate submonoid {sub.elements}")
        seen.add(sub.elements)
        gc = group_completion(sub.embedded)
        groups = tuple(tuple(sorted(set(h))) for h in subgroup_list)
        if len(set(groups)) != len(groups):
            raise FamilyInvalid("duplicate subgroup in family entry")
        for h in groups:
            if not is_subgroup(gc.group, h):
                raise NotASubgroup(f"{h} is not a subgroup of the completion")
        if not is_conjugacy_closed(gc.group, groups):
            raise FamilyInvalid("subgroup collection is not conjugacy closed")
        packed.append(FamilyEntry(sub, gc, groups))
    return FamilyZY(monoid, tuple(packed))


@dataclass(frozen=True)
class VerdictEntry:
    submonoid_elements: tuple[int, ...]
    subgroup: tuple[int, ...]
    induced: tuple[int, ...]
    bijective: bool


@dataclass(frozen=True)
class Verdict:
    side: str
    ok: bool
    entries: tuple[VerdictEntry, ...]


def right_equivalence(f: EqMap, family: FamilyZY) -> Verdict:
    """Is f a bijection on subgroup-fixed points of every right replacement?"""
    if not same_monoid(f.source.monoid, family.monoid):
        raise FamilyInvalid("map is not over the family monoid")
    entries: list[VerdictEntry] = []
    for entry in family.entries:
        ra = rinv_rel(entry.submonoid, f.source)
        rb = rinv_rel(entry.submonoid, f.target)
        target_pos = {a: i for i, a in enumerate(rb.counit.mapping)}
        induced_all = tuple(target_pos[f.mapping[a]] for a in ra.counit.mapping)
        for subgroup in entry.subgroups:
            fixed_src = fixed_points(ra.gset, subgroup)
            fixed_dst = set(fixed_points(rb.gset, subgroup))
            induced = tuple(induced_all[i] for i in fixed_src)
            bijective = (
                len(set(induced)) == len(induced)
                and set(induced) == fixed_dst
            )
            entries.append(VerdictEntry(entry.submonoid.elements, subgroup, induced, bijective))
    return Verdict("right", all(e.bijective for e in entries), tuple(entries))


def left_equivalence(f: EqMap, family: FamilyZY) -> Verdict:
    """Is f a bijection on subgroup-fixed points of every left replacement?"""
    if not same_monoid(f.source.monoid, family.monoid):
        raise FamilyInvalid("map is not over the family monoid")
    entries: list[VerdictEntry] = []
    for entry in family.entries:
        la = linv_rel(entry.submonoid, f.source)
        lb = linv_rel(entry.submonoid, f.target)
        # every class is [g, a] = g . unit(a), so push it to g . unit(f(a))
        induced_all = [-1] * la.gset.size
        for g in entry.completion.group.elements():
            for a in f.source.points():
                c = la.gset.action[g][la.unit.mapping[a]]
                if induced_all[c] == -1:
                    induced_all[c] = lb.gset.action[g][lb.unit.mapping[f.mapping[a]]]
        for subgroup in entry.subgroups:
            fixed_src = fixed_points(la.gset, subgroup)
            fixed_dst = set(fixed_points(lb.gset, subgroup))
            induced = tuple(induced_all[i] for i in fixed_src)
            bijective = (
                len(set(induced)) == len(induced)
                and set(induced) == fixed_dst
            )
            entries.append(VerdictEntry(entry.submonoid.elements, subgroup, induced, bijective))
    return Verdict("left", all(e.bijective for e in entries), tuple(entries))


def generating_object(sub: Submonoid, subgroup: Iterable[int]) -> tuple[FinMSet, int]:
    """Induced coset action for a subgroup of the submonoid's completion.

    Returns the extension along the inclusion together with the basepoint,
    the class of (identity, identity coset).
    """
    from .mset import induce  # local import keeps module order acyclic

    gc = group_completion(sub.embedded)
    group = gc.group
    h = tuple(sorted(set(subgroup)))
    if not is_subgroup(group, h):
        raise NotASubgroup(f"{h} is not a subgroup of the completion")
    cosets: list[tuple[int, ...]] = []
    elem_to_coset: dict[int, int] = {}
    for g in group.elements():
        if g in elem_to_coset:
            continue
        coset = tuple(sorted({group.table[g][x] for x in h}))
        idx = len(cosets)
        cosets.append(coset)
        for e in coset:
            elem_to_coset[e] = idx
    rows = tuple(
        tuple(elem_to_coset[group.table[k][c[0]]] for c in cosets)
        for k in group.elements()
    )
    coset_gset = FinMSet(group, len(cosets), rows)
    nset = qstar(gc, coset_gset)
    extension, unit = induce(sub, nset)
    basepoint = unit.mapping[elem_to_coset[group.identity]]
    return extension, basepoint
