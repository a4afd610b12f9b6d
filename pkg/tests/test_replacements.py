import pytest

from symact.completion import all_subgroups, group_completion
from symact.errors import FamilyInvalid, NotASubgroup
from symact.fixtures import absorbing_pair, cyclic, monogenic, swap_pair, sym3
from symact.monoid import all_submonoids, submonoid
from symact.mset import (
    equivariant_maps,
    find_isomorphism,
    identity_eq,
    is_symmetric,
    mset_congruence_closure,
    quotient_mset,
    regular_mset,
    trivial_mset,
    validate_eqmap,
)
from symact.replacements import (
    adjunction_check_left,
    adjunction_check_right,
    generating_object,
    left_equivalence,
    linv,
    linv_rel,
    make_family,
    qstar,
    right_equivalence,
    rinv,
    rinv_bruteforce,
    rinv_rel,
)

CAPPED = monogenic(1, 2)
SEMILATTICE = monogenic(1, 1)


def full_family(monoid):
    entries = []
    for sub in all_submonoids(monoid):
        gc = group_completion(sub.embedded)
        entries.append((sub, all_subgroups(gc.group).subgroups))
    return make_family(monoid, entries)


def test_qstar_restricts_along_q():
    gc = group_completion(CAPPED)
    b = regular_mset(gc.group)
    a = qstar(gc, b)
    assert a.monoid is gc.monoid
    # q identifies a^2 with the identity, so both act alike
    assert a.action[0] == a.action[2]
    assert is_symmetric(a)


def test_rinv_absorbing_pair():
    r = rinv(group_completion(SEMILATTICE), absorbing_pair())
    assert r.gset.size == 1
    assert r.counit.mapping == (0,)
    assert r.gset.monoid.size == 1


def test_rinv_swap_pair_is_everything():
    r = rinv(group_completion(CAPPED), swap_pair())
    assert r.gset.size == 2
    assert r.counit.mapping == (0, 1)
    assert r.gset.action == ((0, 1), (1, 0))


def test_rinv_regular_capped():
    r = rinv(group_completion(CAPPED), regular_mset(CAPPED))
    assert r.counit.mapping == (1, 2)
    assert r.gset.action == ((0, 1), (1, 0))


def test_rinv_counit_lands_in_single_valued_points():
    gc = group_completion(CAPPED)
    a = regular_mset(CAPPED)
    r = rinv(gc, a)
    for cls in gc.kernel.classes():
        for s in r.counit.mapping:
            assert len({a.act(m, s) for m in cls}) == 1


def test_rinv_matches_bruteforce_on_fixtures():
    cases = [
        (SEMILATTICE, absorbing_pair()),
        (CAPPED, swap_pair()),
        (CAPPED, regular_mset(CAPPED)),
        (SEMILATTICE, regular_mset(SEMILATTICE)),
        (cyclic(3), regular_mset(cyclic(3))),
    ]
    for monoid, a in cases:
        gc = group_completion(monoid)
        fast = rinv(gc, a)
        slow = rinv_bruteforce(gc, a)
        assert fast.gset.size == slow.gset.size
        assert sorted(fast.counit.mapping) == sorted(slow.counit.mapping)


def test_linv_absorbing_pair():
    l = linv(group_completion(SEMILATTICE), absorbing_pair())
    assert l.gset.size == 1
    assert l.unit.mapping == (0, 0)


def test_linv_swap_and_regular():
    gc = group_completion(CAPPED)
    ls = linv(gc, swap_pair())
    assert ls.unit.mapping == (0, 1)
    assert ls.gset.action == ((0, 1), (1, 0))
    lr = linv(gc, regular_mset(CAPPED))
    assert lr.gset.size == 2
    assert lr.unit.mapping == (0, 1, 0)


def test_unit_is_equivariant_into_qstar():
    gc = group_completion(CAPPED)
    a = regular_mset(CAPPED)
    l = linv(gc, a)
    validate_eqmap(a, qstar(gc, l.gset), l.unit.mapping)


def test_rel_over_trivial_submonoid_is_identity():
    a = absorbing_pair()
    sub = submonoid(SEMILATTICE, [0])
    r = rinv_rel(sub, a)
    assert r.counit.mapping == (0, 1)
    l = linv_rel(sub, a)
    assert sorted(l.unit.mapping) == [0, 1]


def test_rel_over_full_submonoid_matches_absolute():
    a = swap_pair()
    sub = submonoid(CAPPED, [0, 1, 2])
    rel = rinv_rel(sub, a)
    absolute = rinv(group_completion(CAPPED), a)
    assert rel.gset.size == absolute.gset.size
    assert sorted(rel.counit.mapping) == sorted(absolute.counit.mapping)


def test_idempotence_of_replacements():
    for monoid, a in [
        (SEMILATTICE, absorbing_pair()),
        (CAPPED, regular_mset(CAPPED)),
        (CAPPED, swap_pair()),
    ]:
        gc = group_completion(monoid)
        r = rinv(gc, a)
        again = rinv(gc, qstar(gc, r.gset))
        assert find_isomorphism(again.gset, r.gset) is not None
        l = linv(gc, a)
        lagain = linv(gc, qstar(gc, l.gset))
        assert find_isomorphism(lagain.gset, l.gset) is not None


def test_adjunction_checks_pinned():
    gc = group_completion(SEMILATTICE)
    point = trivial_mset(gc.group, 1)
    assert adjunction_check_right(gc, point, absorbing_pair())
    assert adjunction_check_left(gc, point, absorbing_pair())
    gc2 = group_completion(CAPPED)
    free = rinv(gc2, regular_mset(CAPPED)).gset
    assert adjunction_check_right(gc2, free, swap_pair())
    assert adjunction_check_left(gc2, free, swap_pair())


def test_make_family_validates():
    s3 = sym3()
    sub = submonoid(s3, range(6))
    two_element = [h for h in all_subgroups(s3).subgroups if len(h) == 2]
    with pytest.raises(FamilyInvalid):
        make_family(s3, [(sub, [two_element[0]])])  # not conjugacy closed
    with pytest.raises(NotASubgroup):
        make_family(s3, [(sub, [(1, 2)])])  # not a subgroup
    with pytest.raises(FamilyInvalid):
        make_family(s3, [(sub, [(0,)]), (sub, [(0,)])])  # duplicate submonoid
    fam = make_family(s3, [(sub, two_element)])
    assert len(fam.entries) == 1


def test_equivalence_verdict_on_isomorphism():
    a = swap_pair()
    fam = full_family(CAPPED)
    ident = identity_eq(a)
    verdict = right_equivalence(ident, fam)
    assert verdict.ok
    assert verdict.side == "right"
    assert all(entry.bijective for entry in verdict.entries)
    assert left_equivalence(ident, fam).ok


def test_collapse_discrimination_right():
    a = absorbing_pair()
    point = trivial_mset(SEMILATTICE, 1)
    collapse = validate_eqmap(a, point, (0, 0))
    full_sub = submonoid(SEMILATTICE, [0, 1])
    triv_sub = submonoid(SEMILATTICE, [0])
    gc_full = group_completion(full_sub.embedded)
    gc_triv = group_completion(triv_sub.embedded)
    fam_full = make_family(SEMILATTICE, [(full_sub, all_subgroups(gc_full.group).subgroups)])
    fam_triv = make_family(SEMILATTICE, [(triv_sub, all_subgroups(gc_triv.group).subgroups)])
    assert right_equivalence(collapse, fam_full).ok
    verdict = right_equivalence(collapse, fam_triv)
    assert not verdict.ok
    assert any(not entry.bijective for entry in verdict.entries)
    # the left-handed notion discriminates the same way here
    assert left_equivalence(collapse, fam_full).ok
    assert not left_equivalence(collapse, fam_triv).ok


def test_right_equivalence_two_out_of_three():
    fam = full_family(SEMILATTICE)
    sets = [
        absorbing_pair(),
        trivial_mset(SEMILATTICE, 1),
        trivial_mset(SEMILATTICE, 2),
        regular_mset(SEMILATTICE),
    ]
    for a in sets:
        for b in sets:
            for f in equivariant_maps(a, b):
                for c in sets:
                    for g in equivariant_maps(b, c):
                        vf = right_equivalence(f, fam).ok
                        vg = right_equivalence(g, fam).ok
                        composite = validate_eqmap(
                            a, c, tuple(g.mapping[f.mapping[x]] for x in a.points())
                        )
                        vgf = right_equivalence(composite, fam).ok
                        assert [vf, vg, vgf].count(True) != 2


def test_symmetric_quotient_is_quotient_of_left_replacement():
    a = regular_mset(CAPPED)
    cong = mset_congruence_closure(a, [(0, 2)])
    quotient, _ = quotient_mset(a, cong)
    assert is_symmetric(quotient)
    gc = group_completion(CAPPED)
    shadow = qstar(gc, linv(gc, a).gset)
    surjections = [
        f
        for f in equivariant_maps(shadow, quotient)
        if sorted(set(f.mapping)) == list(quotient.points())
    ]
    assert surjections


def test_generating_object_pinned():
    sub = submonoid(CAPPED, [0, 2])
    gen, base = generating_object(sub, (0,))
    assert gen.action == ((0, 1), (1, 0), (0, 1))
    assert base == 0


def test_generating_object_group_case():
    g = cyclic(2)
    sub = submonoid(g, [0, 1])
    gc = group_completion(sub.embedded)
    gen, base = generating_object(sub, tuple(range(gc.group.size)))
    assert gen.size == 1
    assert base == 0


def test_generating_object_trivial_case_is_regular():
    sub = submonoid(CAPPED, [0])
    gen, base = generating_object(sub, (0,))
    assert find_isomorphism(gen, regular_mset(CAPPED)) is not None


def test_generating_object_rejects_nonsubgroup():
    sub = submonoid(cyclic(4), [0, 1, 2, 3])
    with pytest.raises(NotASubgroup):
        generating_object(sub, (0, 1))
