"""Discrete dynamics of a single self-map and its monoid bridge.

A functional graph is one step function on finitely many states. Forward
iteration stabilizes on the eventual image, where the step restricts to a
bijection; the two replacement routes below compute that bijection by
different passes and are compared against each other and against the
iterate monoid in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    IndexOutOfRange,
    NotEquivariant,
    ShapeMismatch,
    SizeBoundExceeded,
)
from .monoid import FiniteMonoid
from .mset import FinMSet

TRANSITION_MONOID_BOUND = 128


@dataclass(frozen=True)
class FunctionalGraph:
    size: int
    step: tuple[int, ...]


def validate_graph(size: int, step: Sequence[int]) -> FunctionalGraph:
    frozen = tuple(step)
    if len(frozen) != size:
        raise ShapeMismatch(f"step of length {len(frozen)}, expected {size}")
    for v in frozen:
        if not (0 <= v < size):
            raise IndexOutOfRange(f"step value {v} outside 0..{size - 1}")
    return FunctionalGraph(size, frozen)


@dataclass(frozen=True)
class ZSet:
    """A finite set with a shift bijection: an action of the integers."""

    size: int
    shift: tuple[int, ...]


def validate_zset(size: int, shift: Sequence[int]) -> ZSet:
    frozen = tuple(shift)
    if len(frozen) != size:
        raise ShapeMismatch(f"shift of length {len(frozen)}, expected {size}")
    if sorted(frozen) != list(range(size)):
        raise ShapeMismatch("shift is not a bijection")
    return ZSet(size, frozen)


def _cycles_of(shift: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(shift)
    cycles = []
    for start in range(len(shift)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = shift[x]
        cycles.append(cycle)
    return cycles


def cycle_type(zset: ZSet) -> tuple[int, ...]:
    """Cycle lengths of the shift, ascending."""
    return tuple(sorted(len(c) for c in _cycles_of(zset.shift)))


def zset_isomorphism(a: ZSet, b: ZSet) -> tuple[int, ...] | None:
    """An explicit shift-commuting bijection, or None.

    Cycles of equal length are matched in order; within one matched pair
    any rotation commutes, so the aligned one is taken.
    """
    if a.size != b.size:
        return None
    cycles_a = sorted(_cycles_of(a.shift), key=lambda c: (len(c), c[0]))
    cycles_b = sorted(_cycles_of(b.shift), key=lambda c: (len(c), c[0]))
    if [len(c) for c in cycles_a] != [len(c) for c in cycles_b]:
        return None
    mapping = [-1] * a.size
    for ca, cb in zip(cycles_a, cycles_b):
        for i, x in enumerate(ca):
            mapping[x] = cb[i]
    result = tuple(mapping)
    assert all(result[a.shift[x]] == b.shift[result[x]] for x in range(a.size))
    return result


def eventual_image(fg: FunctionalGraph) -> tuple[tuple[int, ...], ZSet]:
    """Intersection of all forward images, with the restricted step.

    The step permutes the eventual image; states are re-indexed along the
    sorted subset.
    """
    current = set(range(fg.size))
    while True:
        nxt = {fg.step[x] for x in current}
        if nxt == current:
            break
        current = nxt
    subset = tuple(sorted(current))
    position = {e: i for i, e in enumerate(subset)}
    shift = tuple(position[fg.step[e]] for e in subset)
    return subset, ZSet(len(subset), shift)


def rinv_nat(fg: FunctionalGraph) -> ZSet:
    """Right replacement of the dynamics: global image iteration route."""
    return eventual_image(fg)[1]


def linv_nat(fg: FunctionalGraph) -> ZSet:
    """Left replacement of the dynamics: per-point transient walk route.

    Each state is walked forward until its rho tail closes, then pulled
    back around its cycle by the transient length; the glued carrier is
    the union of the discovered cycles.
    """
    carrier: set[int] = set()
    glue: dict[int, int] = {}
    for start in range(fg.size):
        path = [start]
        positions = {start: 0}
        x = start
        while True:
            x = fg.step[x]
            if x in positions:
                entry = positions[x]
                break
            positions[x] = len(path)
            path.append(x)
        cycle = path[entry:]
        carrier.update(cycle)
        # pull the start back around its cycle by the transient length
        offset = (-entry) % len(cycle)
        glue[start] = cycle[offset]
    subset = tuple(sorted(carrier))
    position = {e: i for i, e in enumerate(subset)}
    shift = tuple(position[fg.step[e]] for e in subset)
    for state, target in glue.items():
        assert target in carrier, (state, target)
    return validate_zset(len(subset), shift)


def limit_cycles(fg: FunctionalGraph) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Cycles of the eventual image plus per-state transient lengths.

    Each cycle starts at its least state and follows the step; cycles are
    ordered by least state.
    """
    subset, _ = eventual_image(fg)
    in_image = set(subset)
    cycles = []
    visited: set[int] = set()
    for start in subset:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        x = fg.step[start]
        while x != start:
            cycle.append(x)
            visited.add(x)
            x = fg.step[x]
        cycles.append(tuple(cycle))
    transients = [0] * fg.size
    for a in range(fg.size):
        t, x = 0, a
        while x not in in_image:
            t += 1
            x = fg.step[x]
        transients[a] = t
    return tuple(cycles), tuple(transients)


def transition_monoid(
    fg: FunctionalGraph, max_size: int = TRANSITION_MONOID_BOUND
) -> tuple[FiniteMonoid, FinMSet]:
    """The monoid of iterates of the step, acting on the states.

    Element i is the i-th iterate; once the index and period of the step
    are found, exponents reduce by the usual eventual periodicity.
    """
    iterates: list[tuple[int, ...]] = [tuple(range(fg.size))]
    seen: dict[tuple[int, ...], int] = {iterates[0]: 0}
    while True:
        nxt = tuple(fg.step[x] for x in iterates[-1])
        if nxt in seen:
            index = seen[nxt]
            break
        if len(iterates) >= max_size:
            raise SizeBoundExceeded("transition monoid", len(iterates) + 1, max_size)
        seen[nxt] = len(iterates)
        iterates.append(nxt)
    period = len(iterates) - index

    def reduce(exponent: int) -> int:
        if exponent < len(iterates):
            return exponent
        return index + (exponent - index) % period

    size = len(iterates)
    table = tuple(tuple(reduce(i + j) for j in range(size)) for i in range(size))
    monoid = FiniteMonoid(table, 0)
    action = FinMSet(monoid, fg.size, tuple(iterates))
    return monoid, action


@dataclass(frozen=True)
class DynSystem:
    """States with one step function per named parameter."""

    parameters: tuple[str, ...]
    size: int
    steps: tuple[tuple[int, ...], ...]


def validate_dyn_system(
    parameters: Sequence[str], size: int, steps: Sequence[Sequence[int]]
) -> DynSystem:
    names = tuple(parameters)
    if len(set(names)) != len(names):
        raise ShapeMismatch("duplicate parameter names")
    rows = tuple(tuple(row) for row in steps)
    if len(rows) != len(names):
        raise ShapeMismatch(f"expected {len(names)} step rows, got {len(rows)}")
    for row in rows:
        if len(row) != size:
            raise ShapeMismatch(f"step row of length {len(row)}, expected {size}")
        for v in row:
            if not (0 <= v < size):
                raise IndexOutOfRange(f"step value {v} outside 0..{size - 1}")
    return DynSystem(names, size, rows)


@dataclass(frozen=True)
class DynMorphism:
    """Parameter translation plus a state map commuting with the steps."""

    source: DynSystem
    target: DynSystem
    param_map: tuple[int, ...]
    state_map: tuple[int, ...]


def validate_dyn_morphism(
    source: DynSystem,
    target: DynSystem,
    param_map: Sequence[int],
    state_map: Sequence[int],
) -> DynMorphism:
    pmap = tuple(param_map)
    smap = tuple(state_map)
    if len(pmap) != len(source.parameters):
        raise ShapeMismatch(f"parameter map of length {len(pmap)}, expected {len(source.parameters)}")
    for v in pmap:
        if not (0 <= v < len(target.parameters)):
            raise IndexOutOfRange(f"parameter index {v} outside 0..{len(target.parameters) - 1}")
    if len(smap) != source.size:
        raise ShapeMismatch(f"state map of length {len(smap)}, expected {source.size}")
    for v in smap:
        if not (0 <= v < target.size):
            raise IndexOutOfRange(f"state value {v} outside 0..{target.size - 1}")
    for s in range(len(source.parameters)):
        for a in range(source.size):
            if smap[source.steps[s][a]] != target.steps[pmap[s]][smap[a]]:
                raise NotEquivariant(s, a)
    return DynMorphism(source, target, pmap, smap)


def compose_dyn(outer: DynMorphism, inner: DynMorphism) -> DynMorphism:
    if inner.target != outer.source:
        raise ShapeMismatch("dynamics composition: inner target differs from outer source")
    return DynMorphism(
        inner.source,
        outer.target,
        tuple(outer.param_map[v] for v in inner.param_map),
        tuple(outer.state_map[v] for v in inner.state_map),
    )
