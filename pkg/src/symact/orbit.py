"""Orbit category of a monoid relative to a family of subgroup pairs.

Objects are (submonoid, subgroup of its completion) pairs realized as
induced coset actions; morphisms are all equivariant maps between the
realizations. Diagrams are contravariant set-valued functors on this
category, with evaluation back at the trivial object recovering an action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .completion import GroupCompletion, all_subgroups, group_completion
from .errors import ObjectNotFound, SizeBoundExceeded
from .monoid import FiniteMonoid, Submonoid, all_submonoids, same_monoid
from .mset import EqMap, FinMSet, MAP_ENUM_BOUND, equivariant_maps, fixed_points, validate_mset
from .replacements import FamilyZY, generating_object, rinv_rel

ORBIT_ALL_BOUND = 8


@dataclass(frozen=True)
class OrbitObject:
    submonoid: Submonoid
    completion: GroupCompletion
    subgroup: tuple[int, ...]
    realization: FinMSet
    basepoint: int

    @property
    def label(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.submonoid.elements, self.subgroup)


@dataclass(frozen=True)
class OrbitCategory:
    monoid: FiniteMonoid
    objects: tuple[OrbitObject, ...]
    homs: tuple[tuple[tuple[EqMap, ...], ...], ...]

    def object_index(self, elements: Sequence[int], subgroup: Sequence[int]) -> int:
        key = (tuple(elements), tuple(subgroup))
        for i, obj in enumerate(self.objects):
            if obj.label == key:
                return i
        raise ObjectNotFound(f"no orbit object {key}")

    def hom(self, src: int, dst: int) -> tuple[EqMap, ...]:
        return self.homs[src][dst]

    def hom_index(self, src: int, dst: int, mapping: tuple[int, ...]) -> int:
        for k, f in enumerate(self.homs[src][dst]):
            if f.mapping == mapping:
                return k
        raise ObjectNotFound(f"no morphism {src} -> {dst} with mapping {mapping}")

    def compose(self, src: int, mid: int, dst: int, f_idx: int, g_idx: int) -> int:
        """Index of g . f where f: src -> mid and g: mid -> dst."""
        f = self.homs[src][mid][f_idx]
        g = self.homs[mid][dst][g_idx]
        return self.hom_index(src, dst, tuple(g.mapping[v] for v in f.mapping))


def build_orbit_category(
    monoid: FiniteMonoid,
    family: FamilyZY | None = None,
    max_monoid: int = ORBIT_ALL_BOUND,
    max_maps: int = MAP_ENUM_BOUND,
) -> OrbitCategory:
    """Realize every (submonoid, subgroup) pair and enumerate all morphisms.

    With no family the scope is every submonoid with every subgroup of its
    completion, which is only allowed for monoids within max_monoid.
    """
    pairs: list[tuple[Submonoid, GroupCompletion, tuple[int, ...]]] = []
    if family is None:
        if monoid.size > max_monoid:
            raise SizeBoundExceeded("orbit category over all submonoids", monoid.size, max_monoid)
        for sub in all_submonoids(monoid):
            gc = group_completion(sub.embedded)
            for subgroup in all_subgroups(gc.group).subgroups:
                pairs.append((sub, gc, subgroup))
    else:
        if not same_monoid(family.monoid, monoid):
            raise ObjectNotFound("family is over a different monoid")
        for entry in sorted(
            family.entries, key=lambda e: (len(e.submonoid.elements), e.submonoid.elements)
        ):
            for subgroup in sorted(entry.subgroups, key=lambda h: (len(h), h)):
                pairs.append((entry.submonoid, entry.completion, subgroup))
    objects = []
    for sub, gc, subgroup in pairs:
        realization, basepoint = generating_object(sub, subgroup)
        objects.append(OrbitObject(sub, gc, subgroup, realization, basepoint))
    homs = tuple(
        tuple(equivariant_maps(a.realization, b.realization, max_maps) for b in objects)
        for a in objects
    )
    return OrbitCategory(monoid, tuple(objects), homs)


@dataclass(frozen=True)
class HomComparison:
    """Morphism set checked two ways: direct enumeration vs fixed points."""

    fixed: tuple[int, ...]
    pairing: tuple[int, ...]
    bijective: bool


def hom_via_rinv(cat: OrbitCategory, src: int, dst: int) -> HomComparison:
    """Compare Hom(src, dst) with subgroup-fixed points of the replacement.

    Each morphism evaluates at the source basepoint to a point of the
    target realization lying in the right replacement over the source
    submonoid; pairing lists the corresponding fixed-point indices.
    """
    if not (0 <= src < len(cat.objects) and 0 <= dst < len(cat.objects)):
        raise ObjectNotFound(f"object pair ({src}, {dst}) out of range")
    source = cat.objects[src]
    replaced = rinv_rel(source.submonoid, cat.objects[dst].realization)
    fixed = fixed_points(replaced.gset, source.subgroup)
    subset_pos = {a: i for i, a in enumerate(replaced.counit.mapping)}
    pairing = tuple(
        subset_pos[f.mapping[source.basepoint]] for f in cat.homs[src][dst]
    )
    bijective = len(set(pairing)) == len(pairing) and set(pairing) == set(fixed)
    return HomComparison(fixed, pairing, bijective)


@dataclass(frozen=True)
class OrbitDiagram:
    """Contravariant set-valued functor given on objects and morphisms.

    values[i] lists the value set of object i as labels; maps[i][j][k]
    sends positions in values[j] to positions in values[i] along the k-th
    morphism i -> j.
    """

    category: OrbitCategory
    values: tuple[tuple[object, ...], ...]
    maps: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]


def x_functor(cat: OrbitCategory, mset: FinMSet, max_maps: int = MAP_ENUM_BOUND) -> OrbitDiagram:
    """The diagram of replaced fixed points of one action.

    Object values are basepoint evaluations of morphisms from the object's
    realization into the action; morphisms act by precomposition.
    """
    if not same_monoid(mset.monoid, cat.monoid):
        raise ObjectNotFound("action is over a different monoid")
    into_x = [equivariant_maps(obj.realization, mset, max_maps) for obj in cat.objects]
    values = tuple(
        tuple(f.mapping[obj.basepoint] for f in maps)
        for obj, maps in zip(cat.objects, into_x)
    )
    position = [
        {f.mapping: k for k, f in enumerate(maps)}
        for maps in into_x
    ]
    maps_out = []
    for i in range(len(cat.objects)):
        row = []
        for j in range(len(cat.objects)):
            per_morphism = []
            for s in cat.homs[i][j]:
                per_morphism.append(
                    tuple(
                        position[i][tuple(f.mapping[v] for v in s.mapping)]
                        for f in into_x[j]
                    )
                )
            row.append(tuple(per_morphism))
        maps_out.append(tuple(row))
    return OrbitDiagram(cat, values, tuple(maps_out))


def representable_diagram(cat: OrbitCategory, obj: int) -> OrbitDiagram:
    """The diagram of morphisms into one object, acting by precomposition."""
    if not (0 <= obj < len(cat.objects)):
        raise ObjectNotFound(f"object {obj} out of range")
    values = tuple(
        tuple(f.mapping for f in cat.homs[i][obj]) for i in range(len(cat.objects))
    )
    maps_out = []
    for i in range(len(cat.objects)):
        row = []
        for j in range(len(cat.objects)):
            per_morphism = []
            for k in range(len(cat.homs[i][j])):
                per_morphism.append(
                    tuple(
                        cat.compose(i, j, obj, k, t)
                        for t in range(len(cat.homs[j][obj]))
                    )
                )
            row.append(tuple(per_morphism))
        maps_out.append(tuple(row))
    return OrbitDiagram(cat, values, tuple(maps_out))


def check_functoriality(diagram: OrbitDiagram) -> bool:
    """Identities map to identities and composition is reversed."""
    cat = diagram.category
    size = len(cat.objects)
    for i in range(size):
        identity = tuple(range(cat.objects[i].realization.size))
        k = cat.hom_index(i, i, identity)
        if diagram.maps[i][i][k] != tuple(range(len(diagram.values[i]))):
            return False
    for i in range(size):
        for j in range(size):
            for k in range(size):
                for fi in range(len(cat.homs[i][j])):
                    for gi in range(len(cat.homs[j][k])):
                        composite = cat.compose(i, j, k, fi, gi)
                        left = diagram.maps[i][k][composite]
                        g_then_f = tuple(
                            diagram.maps[i][j][fi][v] for v in diagram.maps[j][k][gi]
                        )
                        if left != g_then_f:
                            return False
    return True


def upsilon(cat: OrbitCategory, diagram: OrbitDiagram) -> FinMSet:
    """Evaluate a diagram at the trivial object to recover an action.

    The trivial object's realization is the monoid translating itself, so
    its endomorphisms are right translations and the diagram's values
    there carry the original left action.
    """
    monoid = cat.monoid
    ee = cat.object_index((monoid.identity,), (0,))
    realization = cat.objects[ee].realization
    if realization.size != monoid.size:
        raise ObjectNotFound("trivial object does not realize the monoid")
    action = []
    for m in monoid.elements():
        translate = tuple(monoid.table[x][m] for x in monoid.elements())
        k = cat.hom_index(ee, ee, translate)
        action.append(diagram.maps[ee][ee][k])
    return validate_mset(monoid, len(diagram.values[ee]), action)
