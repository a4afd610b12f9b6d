import random

from symact.completion import group_completion
from symact.fixtures import monogenic
from symact.mset import validate_mset
from symact.oracle import (
    check_adjunctions,
    check_dynamics_routes,
    check_replacement,
    check_transition_bridge,
    fixture_actions,
    random_graph,
    random_monoid,
    random_mset,
    replacements_agree,
    run_oracle,
)
from symact.replacements import rinv, rinv_bruteforce, RinvResult


def test_fixture_actions_validate():
    actions = fixture_actions()
    assert len(actions) >= 6
    for a in actions:
        validate_mset(a.monoid, a.size, a.action)


def test_random_generators_are_reproducible():
    first = random_monoid(random.Random(3))
    second = random_monoid(random.Random(3))
    assert first.table == second.table
    a = random_mset(first, 3, random.Random(5))
    b = random_mset(first, 3, random.Random(5))
    assert a.action == b.action
    validate_mset(a.monoid, a.size, a.action)
    g = random_graph(random.Random(1), max_states=10)
    assert g.size <= 10


def test_replacements_agree_rejects_wrong_counit():
    semilattice = monogenic(1, 1)
    gc = group_completion(semilattice)
    a = validate_mset(semilattice, 2, ((0, 1), (0, 0)))
    fast = rinv(gc, a)
    slow = rinv_bruteforce(gc, a)
    assert replacements_agree(fast, slow)
    # counit pointing at the wrong point must not be accepted
    from symact.mset import EqMap

    wrong = RinvResult(slow.gc, slow.gset, EqMap(slow.counit.source, a, (1,)))
    assert not replacements_agree(fast, wrong)


def test_individual_checks_pass_on_fixtures():
    rng = random.Random(0)
    for a in fixture_actions():
        assert check_replacement(a)
        assert check_adjunctions(a, 2, rng)
    from symact.fixtures import rho_graph, tower

    assert check_dynamics_routes(rho_graph())
    assert check_transition_bridge(tower(3))


def test_run_oracle_seed_zero():
    records = run_oracle(seed=0, samples=5)
    names = [r.name for r in records]
    assert names == [
        "replacement-fixtures",
        "replacement-random",
        "adjunction-random",
        "dynamics-routes",
        "dynamics-bridge",
    ]
    assert all(r.passed for r in records)
