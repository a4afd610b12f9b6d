import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symact.errors import (
    BadIdentity,
    IndexOutOfRange,
    NotAssociative,
    SizeBoundExceeded,
    SubmonoidMismatch,
)
from symact.fixtures import cyclic, monogenic, sym3, trivial_monoid
from symact.monoid import (
    MonoidHom,
    all_submonoids,
    compose_hom,
    congruence_closure,
    enumerate_monoids,
    idempotents,
    index_period,
    is_group,
    is_hom,
    monoid_homs,
    quotient_monoid,
    same_monoid,
    submonoid,
    submonoid_generated,
    validate_monoid,
)

CAPPED = monogenic(1, 2)  # 1, a, a^2 with a^3 = a
SEMILATTICE = monogenic(1, 1)  # 1, a with a^2 = a


def naive_homs(source, target):
    """Definitional enumeration, kept independent of monoid_homs."""
    found = []
    for image in itertools.product(range(target.size), repeat=source.size):
        if image[source.identity] != target.identity:
            continue
        if all(
            image[source.mul(a, b)] == target.mul(image[a], image[b])
            for a in range(source.size)
            for b in range(source.size)
        ):
            found.append(image)
    return sorted(found)


def test_validate_roundtrip():
    m = validate_monoid(((0, 1, 2), (1, 2, 1), (2, 1, 2)), 0)
    assert m.size == 3
    assert m.mul(1, 1) == 2
    assert m.power(1, 3) == 1
    assert same_monoid(m, CAPPED)


def test_validate_rejects_bad_tables():
    with pytest.raises(IndexOutOfRange):
        validate_monoid(((0, 1), (1,)), 0)
    with pytest.raises(IndexOutOfRange):
        validate_monoid(((0, 1), (1, 5)), 0)
    with pytest.raises(BadIdentity) as info:
        validate_monoid(((0, 0), (1, 1)), 0)
    assert info.value.element == 1
    # 1*1=2 but (1*1)*2 != 1*(1*2)
    with pytest.raises(NotAssociative) as info:
        validate_monoid(((0, 1, 2), (1, 2, 1), (2, 1, 1)), 0)
    a, b, c = info.value.triple
    m = ((0, 1, 2), (1, 2, 1), (2, 1, 1))
    assert m[m[a][b]][c] != m[a][m[b][c]]


def test_is_group():
    assert is_group(trivial_monoid())
    assert is_group(cyclic(2))
    assert is_group(sym3())
    assert not is_group(CAPPED)
    assert not is_group(SEMILATTICE)


def test_idempotents():
    assert idempotents(SEMILATTICE) == (0, 1)
    assert idempotents(CAPPED) == (0, 2)
    assert idempotents(cyclic(3)) == (0,)


def test_index_period_pinned():
    assert index_period(SEMILATTICE, 1) == (1, 1)
    assert index_period(CAPPED, 1) == (1, 2)
    assert index_period(cyclic(4), 1) == (0, 4)
    assert index_period(CAPPED, 0) == (0, 1)


@given(st.integers(0, 4), st.integers(1, 5))
def test_index_period_minimal(index, period):
    m = monogenic(index, period)
    k, p = index_period(m, 1 if m.size > 1 else 0)
    if m.size == 1:
        assert (k, p) == (0, 1)
        return
    assert (k, p) == (index, period)
    # minimality: x^k = x^(k+p) and no smaller exponent pair works
    assert m.power(1, k) == m.power(1, k + p)
    for smaller in range(1, p):
        assert m.power(1, k) != m.power(1, k + smaller)
    if k > 0:
        assert m.power(1, k - 1) != m.power(1, k - 1 + p)


def test_submonoid_accepts_closed_subsets():
    sub = submonoid(CAPPED, [0, 2])
    assert sub.elements == (0, 2)
    assert sub.embedded.size == 2
    assert sub.position(2) == 1
    assert is_hom(sub.inclusion)


def test_submonoid_rejects_bad_subsets():
    with pytest.raises(SubmonoidMismatch):
        submonoid(CAPPED, [0, 1])  # 1*1 = 2 escapes
    with pytest.raises(SubmonoidMismatch):
        submonoid(CAPPED, [2])  # identity missing


def test_submonoid_generated():
    assert submonoid_generated(CAPPED, [1]).elements == (0, 1, 2)
    assert submonoid_generated(CAPPED, [2]).elements == (0, 2)
    assert submonoid_generated(CAPPED, []).elements == (0,)


def test_all_submonoids_pinned():
    assert [s.elements for s in all_submonoids(CAPPED)] == [(0,), (0, 2), (0, 1, 2)]
    assert [s.elements for s in all_submonoids(SEMILATTICE)] == [(0,), (0, 1)]
    assert [s.elements for s in all_submonoids(cyclic(2))] == [(0,), (0, 1)]


def test_all_submonoids_are_closed_and_ordered():
    subs = all_submonoids(sym3())
    keys = [(len(s.elements), s.elements) for s in subs]
    assert keys == sorted(keys)
    for s in subs:
        for a in s.elements:
            for b in s.elements:
                assert sym3().mul(a, b) in s.elements


def test_congruence_closure_pinned():
    cong = congruence_closure(CAPPED, [(1, 2)])
    assert cong.classes() == ((0,), (1, 2))
    quotient, q = quotient_monoid(CAPPED, cong)
    assert quotient.table == ((0, 1), (1, 1))
    assert q.mapping == (0, 1, 1)
    assert is_hom(q)


def test_congruence_closure_empty_is_discrete():
    cong = congruence_closure(sym3(), [])
    assert cong.classes() == tuple((i,) for i in range(6))


def test_quotient_identity_class_first():
    cong = congruence_closure(cyclic(4), [(0, 2)])
    quotient, q = quotient_monoid(cyclic(4), cong)
    assert q.mapping[0] == 0
    assert quotient.identity == 0
    assert quotient.table == cyclic(2).table


@st.composite
def monoid_and_pairs(draw):
    monoids = enumerate_monoids(3)
    m = monoids[draw(st.integers(0, len(monoids) - 1))]
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, m.size - 1), st.integers(0, m.size - 1)),
            max_size=4,
        )
    )
    return m, pairs


@settings(max_examples=80, deadline=None)
@given(monoid_and_pairs())
def test_congruence_closure_is_a_congruence(case):
    m, pairs = case
    cong = congruence_closure(m, pairs)
    for a, b in pairs:
        assert cong.same(a, b)
    for a in range(m.size):
        for b in range(m.size):
            if not cong.same(a, b):
                continue
            for c in range(m.size):
                assert cong.same(m.mul(a, c), m.mul(b, c))
                assert cong.same(m.mul(c, a), m.mul(c, b))


@settings(max_examples=40, deadline=None)
@given(monoid_and_pairs(), monoid_and_pairs())
def test_congruence_closure_monotone(case_a, case_b):
    m, pairs = case_a
    _, more = case_b
    more = [(a % m.size, b % m.size) for a, b in more]
    small = congruence_closure(m, pairs)
    big = congruence_closure(m, pairs + more)
    for a in range(m.size):
        for b in range(m.size):
            if small.same(a, b):
                assert big.same(a, b)


def test_monoid_homs_pinned():
    assert [h.mapping for h in monoid_homs(cyclic(2), cyclic(2))] == [(0, 0), (0, 1)]
    assert [h.mapping for h in monoid_homs(SEMILATTICE, SEMILATTICE)] == [(0, 0), (0, 1)]
    assert [h.mapping for h in monoid_homs(CAPPED, cyclic(2))] == [(0, 0, 0), (0, 1, 0)]
    assert len(monoid_homs(sym3(), cyclic(2))) == 2  # trivial and sign


def test_monoid_homs_against_naive_oracle():
    small = [trivial_monoid(), SEMILATTICE, CAPPED, cyclic(2), cyclic(3)]
    for source in small:
        for target in small:
            expected = naive_homs(source, target)
            got = [h.mapping for h in monoid_homs(source, target)]
            assert got == expected


def test_hom_validation_and_composition():
    q = MonoidHom(CAPPED, cyclic(2), (0, 1, 0))
    assert is_hom(q)
    assert not is_hom(MonoidHom(CAPPED, cyclic(2), (0, 1, 1)))
    flip = MonoidHom(cyclic(2), cyclic(2), (0, 1))
    both = compose_hom(flip, q)
    assert both.mapping == (0, 1, 0)
    assert is_hom(both)


def test_enumerate_monoids_counts():
    assert len(enumerate_monoids(1)) == 1
    assert len(enumerate_monoids(2)) == 2
    assert len(enumerate_monoids(3)) == 11
    assert len(enumerate_monoids(4)) == 156


def test_enumerate_monoids_normal_form():
    tables = [m.table for m in enumerate_monoids(3)]
    assert tables == sorted(tables)
    assert len(set(tables)) == len(tables)
    for m in enumerate_monoids(3):
        assert m.identity == 0
        validate_monoid(m.table, 0)


def test_enumerate_monoids_bound():
    with pytest.raises(SizeBoundExceeded):
        enumerate_monoids(5)


def test_enumerate_group_table_counts():
    # labeled group tables with identity 0: 1, 1, 1, 4 for orders 1..4
    counts = [sum(1 for m in enumerate_monoids(n) if is_group(m)) for n in (1, 2, 3, 4)]
    assert counts == [1, 1, 1, 4]
