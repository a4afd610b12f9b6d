"""Named example monoids, actions, and graphs used in tests and docs."""

from __future__ import annotations

from itertools import permutations

from .dynamics import FunctionalGraph
from .monoid import FiniteMonoid
from .mset import FinMSet


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0)


def cyclic(n: int) -> FiniteMonoid:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteMonoid(table, 0)


def monogenic(index: int, period: int) -> FiniteMonoid:
    """One generator a with a**(index+period) = a**index.

    Elements are the powers 1, a, .., a**(index+period-1). index 1 and
    period 1 give the two-element semilattice; index 0 gives cyclic groups.
    """
    size = index + period

    def reduce(exponent: int) -> int:
        if exponent < size:
            return exponent
        return index + (exponent - index) % period

    table = tuple(tuple(reduce(i + j) for j in range(size)) for i in range(size))
    return FiniteMonoid(table, 0)


def sym3() -> FiniteMonoid:
    """Permutations of three letters in lexicographic order, composing left."""
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(3))] for q in perms) for p in perms
    )
    return FiniteMonoid(table, 0)


def absorbing_pair() -> FinMSet:
    """Two points x, y over the 1,a semilattice; a sends both to x."""
    return FinMSet(monogenic(1, 1), 2, ((0, 1), (0, 0)))


def swap_pair() -> FinMSet:
    """Two points over the index-1 period-2 monoid; the generator swaps them."""
    return FinMSet(monogenic(1, 2), 2, ((0, 1), (1, 0), (0, 1)))


def tower(n: int) -> FunctionalGraph:
    """States 0..n sliding down to the absorbing state 0."""
    step = (0,) + tuple(range(n))
    return FunctionalGraph(n + 1, step)


def rho_graph() -> FunctionalGraph:
    """Five states: a 3-cycle entered through a two-step tail."""
    return FunctionalGraph(5, (1, 2, 0, 2, 3))
