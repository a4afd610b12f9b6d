"""Randomized cross-checks between independent computation routes.

The checks here pit each replacement against its brute-force or
alternative-route twin on random inputs; the CLI oracle command and the
acceptance tests both drive them with pinned seeds.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .completion import group_completion
from .dynamics import (
    FunctionalGraph,
    cycle_type,
    eventual_image,
    linv_nat,
    rinv_nat,
    transition_monoid,
    zset_isomorphism,
)
from .fixtures import absorbing_pair, cyclic, monogenic, swap_pair
from .monoid import FiniteMonoid, enumerate_monoids, monoid_homs
from .mset import FinMSet, equivariant_maps, regular_mset, trivial_mset
from .replacements import (
    RinvResult,
    adjunction_check_left,
    adjunction_check_right,
    rinv,
    rinv_bruteforce,
)


def random_monoid(rng: random.Random, max_order: int = 3) -> FiniteMonoid:
    pool = [m for n in range(1, max_order + 1) for m in enumerate_monoids(n)]
    return pool[rng.randrange(len(pool))]


@lru_cache(maxsize=None)
def _transformation_monoid(size: int) -> tuple[FiniteMonoid, tuple[tuple[int, ...], ...]]:
    """All self-maps of a size-point set under composition."""
    maps = tuple(itertools.product(range(size), repeat=size))
    index = {m: i for i, m in enumerate(maps)}
    table = tuple(
        tuple(index[tuple(f[g[x]] for x in range(size))] for g in maps) for f in maps
    )
    return FiniteMonoid(table, index[tuple(range(size))]), maps


@lru_cache(maxsize=None)
def _all_actions(
    table: tuple[tuple[int, ...], ...], identity: int, size: int
) -> tuple[FinMSet, ...]:
    monoid = FiniteMonoid(table, identity)
    target, maps = _transformation_monoid(size)
    homs = monoid_homs(monoid, target, max_size=max(monoid.size, target.size))
    return tuple(
        FinMSet(monoid, size, tuple(maps[h.mapping[m]] for m in monoid.elements()))
        for h in homs
    )


def random_mset(monoid: FiniteMonoid, size: int, rng: random.Random) -> FinMSet:
    """Uniform over every action of the monoid on a size-point set.

    Actions are monoid homs into the full transformation monoid; the hom
    list is enumerated once per (monoid, size) and cached, so this only
    suits the small sizes the oracle corpus uses.
    """
    if size == 0:
        return FinMSet(monoid, 0, tuple(() for _ in monoid.elements()))
    pool = _all_actions(monoid.table, monoid.identity, size)
    return pool[rng.randrange(len(pool))]


def random_graph(rng: random.Random, max_states: int = 50) -> FunctionalGraph:
    n = rng.randint(1, max_states)
    return FunctionalGraph(n, tuple(rng.randrange(n) for _ in range(n)))


def replacements_agree(fast: RinvResult, oracle: RinvResult) -> bool:
    """Equivariantly isomorphic group actions with matching counits."""
    if fast.gset.size != oracle.gset.size:
        return False
    for f in equivariant_maps(oracle.gset, fast.gset):
        if len(set(f.mapping)) != oracle.gset.size:
            continue
        if all(
            fast.counit.mapping[f.mapping[i]] == oracle.counit.mapping[i]
            for i in range(oracle.gset.size)
        ):
            return True
    return False


def fixture_actions() -> list[FinMSet]:
    semilattice = monogenic(1, 1)
    capped = monogenic(1, 2)
    return [
        absorbing_pair(),
        swap_pair(),
        regular_mset(semilattice),
        regular_mset(capped),
        regular_mset(cyclic(2)),
        regular_mset(cyclic(3)),
        trivial_mset(semilattice, 2),
        trivial_mset(capped, 3),
        trivial_mset(cyclic(2), 1),
    ]


def check_replacement(mset: FinMSet) -> bool:
    gc = group_completion(mset.monoid)
    return replacements_agree(rinv(gc, mset), rinv_bruteforce(gc, mset))


def check_adjunctions(mset: FinMSet, gset_size: int, rng: random.Random) -> bool:
    gc = group_completion(mset.monoid)
    gset = random_mset(gc.group, gset_size, rng)
    return adjunction_check_right(gc, gset, mset) and adjunction_check_left(gc, gset, mset)


def check_dynamics_routes(fg: FunctionalGraph) -> bool:
    right = rinv_nat(fg)
    left = linv_nat(fg)
    if cycle_type(right) != cycle_type(left):
        return False
    return zset_isomorphism(right, left) is not None


def check_transition_bridge(fg: FunctionalGraph) -> bool:
    """rinv over the iterate monoid must carve out exactly the eventual image."""
    monoid, action = transition_monoid(fg)
    gc = group_completion(monoid)
    replaced = rinv(gc, action)
    subset, zset = eventual_image(fg)
    if replaced.counit.mapping != subset:
        return False
    one_step = gc.q.mapping[1] if monoid.size > 1 else gc.group.identity
    return replaced.gset.action[one_step] == zset.shift


@dataclass(frozen=True)
class OracleRecord:
    name: str
    passed: bool


def run_oracle(seed: int = 0, samples: int = 25) -> list[OracleRecord]:
    records: list[OracleRecord] = []
    rng = random.Random(seed)

    records.append(
        OracleRecord("replacement-fixtures", all(check_replacement(a) for a in fixture_actions()))
    )
    ok = True
    for _ in range(samples):
        monoid = random_monoid(rng, max_order=3)
        mset = random_mset(monoid, rng.randint(1, 4), rng)
        ok = ok and check_replacement(mset)
    records.append(OracleRecord("replacement-random", ok))

    ok = True
    for _ in range(max(1, samples // 5)):
        monoid = random_monoid(rng, max_order=3)
        mset = random_mset(monoid, rng.randint(1, 3), rng)
        ok = ok and check_adjunctions(mset, rng.randint(1, 3), rng)
    records.append(OracleRecord("adjunction-random", ok))

    ok = True
    bridge_ok = True
    for _ in range(samples):
        fg = random_graph(rng, max_states=50)
        ok = ok and check_dynamics_routes(fg)
        small = random_graph(rng, max_states=12)
        bridge_ok = bridge_ok and check_transition_bridge(small)
    records.append(OracleRecord("dynamics-routes", ok))
    records.append(OracleRecord("dynamics-bridge", bridge_ok))
    return records
