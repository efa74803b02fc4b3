import itertools

import pytest
from hypothesis import given, strategies as st

from gradfam.lattice import (
    count_degree_below,
    deglex_cmp,
    deglex_succ,
    exponents_below,
    exponents_of_degree,
    project,
    total_degree,
)
from oracles import deglex_compare_by_definition, sorted_exponents


@pytest.mark.parametrize("a, expected", [((0, 0), 0), ((2, 1), 3), ((1, 0, 4), 5)])
def test_total_degree(a, expected):
    assert total_degree(a) == expected


def test_degree_two_order_matches_enumeration():
    # the oracle sorts all degree-2 exponents of N^2 by the definition
    order = [a for a in sorted_exponents(2, 2) if sum(a) == 2]
    assert order == [(0, 2), (1, 1), (2, 0)]
    assert deglex_cmp((2, 0), (1, 1)) == 1
    assert deglex_cmp((0, 2), (1, 1)) == -1
    assert deglex_cmp((3, 0), (0, 2)) == 1
    assert deglex_cmp((1, 2), (1, 2)) == 0


def test_cmp_dimension_mismatch():
    with pytest.raises(ValueError):
        deglex_cmp((1, 2), (1, 2, 0))


@pytest.mark.parametrize("a, expected", [((0, 2), (1, 1)), ((2, 0), (0, 3)), ((5,), (6,))])
def test_successor_examples(a, expected):
    assert deglex_succ(a) == expected


def test_successor_examples_against_sorted_neighbours():
    order = sorted_exponents(2, 3)
    for a in [(0, 2), (2, 0)]:
        assert deglex_succ(a) == order[order.index(a) + 1]


exponents = st.integers(1, 4).flatmap(lambda d: st.tuples(*[st.integers(0, 6)] * d))


@given(exponents)
def test_successor_is_immediate(a):
    b = deglex_succ(a)
    assert deglex_cmp(a, b) == -1
    order = sorted_exponents(len(a), sum(a) + 1)
    assert order[order.index(a) + 1] == b


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(*[st.tuples(*[st.integers(0, 5)] * d)] * 3)))
def test_cmp_total_order(triple):
    a, b, c = triple
    assert deglex_cmp(a, b) == deglex_compare_by_definition(a, b)
    assert deglex_cmp(a, b) == -deglex_cmp(b, a)
    assert (deglex_cmp(a, b) == 0) == (a == b)
    if deglex_cmp(a, b) <= 0 and deglex_cmp(b, c) <= 0:
        assert deglex_cmp(a, c) <= 0


@pytest.mark.parametrize("dim, bound, expected", [(1, 5, 5), (2, 3, 6), (3, 1, 1), (2, 0, 0), (0, 4, 1)])
def test_count_degree_below_examples(dim, bound, expected):
    assert count_degree_below(dim, bound) == expected


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_count_degree_below_enumeration(dim):
    for bound in range(13):
        brute = sum(1 for p in itertools.product(range(bound), repeat=dim) if sum(p) < bound)
        assert count_degree_below(dim, bound) == brute


def test_exponent_generators_are_deglex_sorted():
    for dim in (1, 2, 3):
        got = list(exponents_below(dim, 4))
        assert got == sorted_exponents(dim, 3)
        assert list(exponents_of_degree(dim, 3)) == [a for a in got if sum(a) == 3]


def test_project():
    assert project((3, 1, 4)) == (3, 1)
