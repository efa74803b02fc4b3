from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from gradfam.families import (
    FamilyWindowError,
    Scale,
    check_axioms,
    jump_sequence,
    oscillating_family,
    power_family,
    scaled_power_family,
    table_family,
)
from gradfam.ideals import FIELD, ChainRing, MonomialIdeal, colength, minimalize
from oracles import naive_product

M = MonomialIdeal.maximal(FIELD, 2)
Q = minimalize(FIELD, 2, [(0, (2, 0)), (0, (1, 1)), (0, (0, 3))])


def tau_by_definition(n, jumps):
    # j with i_j <= n < i_{j+1}; 1-based j, as in the jump list
    for j in range(1, len(jumps)):
        if jumps[j - 1] <= n < jumps[j]:
            return j % 2
    return 0


# -- Scale -------------------------------------------------------------------


@pytest.mark.parametrize("text, value", [("2", Fraction(2)), ("3/4", Fraction(3, 4)), ("1*sqrt2/1", None),
                                         ("sqrt2", None), ("3*sqrt2/2", None)])
def test_scale_parse(text, value):
    s = Scale.parse(text)
    if value is not None:
        assert not s.surd and s.coeff == value
    else:
        assert s.surd
    assert Scale.parse(str(s)) == s


@pytest.mark.parametrize("bad", ["0", "-1/2", "sqrt3", "2*sqrt", "abc", "1/0"])
def test_scale_rejects(bad):
    with pytest.raises(ValueError):
        Scale.parse(bad)


def test_surd_ceiling_example():
    assert Scale.parse("sqrt2").ceil_mul(5) == 8


@given(st.integers(1, 50), st.integers(1, 20), st.integers(0, 500))
def test_surd_ceiling_against_search(p, q, n):
    k = 0
    while (k * q) ** 2 < 2 * p * p * n * n:
        k += 1
    assert Scale(Fraction(p, q), surd=True).ceil_mul(n) == k


@given(st.integers(1, 50), st.integers(1, 20), st.integers(0, 500))
def test_rational_ceiling(p, q, n):
    with mpmath.workdps(50):
        expected = int(mpmath.ceil(mpmath.mpf(p) * n / q))
    assert Scale(Fraction(p, q)).ceil_mul(n) == expected


# -- constructors ------------------------------------------------------------------


def test_power_family_examples():
    F = power_family(M)
    assert F.ideal_at(2) == MonomialIdeal.maximal_power(FIELD, 2, 2)
    G = power_family(Q)
    assert G.ideal_at(0) == MonomialIdeal.unit(FIELD, 2)
    gens = {(c, a) for c, a in Q.gens}
    cube = naive_product(naive_product(gens, gens, 1), gens, 1)
    assert {(c, a) for c, a in G.ideal_at(3).gens} == cube


def test_power_family_rejects_infinite_colength():
    with pytest.raises(ValueError):
        power_family(minimalize(FIELD, 2, [(0, (1, 0))]))


def test_scaled_power_examples():
    F = scaled_power_family(2, 2)
    assert F.ideal_at(3) == MonomialIdeal.maximal_power(FIELD, 2, 6)
    G = scaled_power_family("1*sqrt2/1", 1)
    assert G.ideal_at(5) == MonomialIdeal.maximal_power(FIELD, 1, 8)
    assert G.ideal_at(0) == MonomialIdeal.unit(FIELD, 1)
    with pytest.raises(ValueError):
        scaled_power_family(0, 2)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_integer_scale_matches_power_family(t):
    F = scaled_power_family(t, 2)
    G = power_family(MonomialIdeal.maximal_power(FIELD, 2, t))
    for n in range(12):
        assert F.ideal_at(n) == G.ideal_at(n)


def test_jump_sequence():
    assert jump_sequence(100) == (2, 6, 26, 210)
    for j, (a, b) in enumerate(zip((2, 6, 26), (6, 26, 210)), 1):
        assert b % 2 == 0 and b > 2 ** j * a
    with pytest.raises(ValueError):
        jump_sequence(100, rule=lambda j, i: 2 ** j * i)


def test_tau_examples():
    F = oscillating_family(1, 40)
    assert F.params.jumps[:3] == (2, 6, 26)
    assert F.params.tau(2) == 1
    assert F.params.tau(6) == 0
    assert F.params.tau(0) == F.params.tau(1) == 0


def test_tau_matches_definition():
    F = oscillating_family(2, 300)
    jumps = F.params.jumps
    for n in range(301):
        assert F.params.tau(n) in (0, 1)
        assert F.params.tau(n) == tau_by_definition(n, jumps)
    for a, b in zip(jumps, jumps[1:]):
        if b <= 300:
            assert len({F.params.tau(n) for n in range(a, b)}) == 1


def test_oscillating_lengths():
    t = 2
    F = oscillating_family(t, 40)
    assert F.ring == ChainRing(t + 1)
    assert F.krull_dim == 0
    for n in range(1, 41):
        assert colength(F.ideal_at(n)) == t + F.params.tau(n)


def test_table_family():
    m3 = MonomialIdeal.maximal_power(FIELD, 2, 3)
    F = table_family([M, MonomialIdeal.maximal_power(FIELD, 2, 2)])
    assert F.ideal_at(2) == MonomialIdeal.maximal_power(FIELD, 2, 2)
    assert F.ideal_at(0) == MonomialIdeal.unit(FIELD, 2)
    with pytest.raises(FamilyWindowError):
        F.ideal_at(3)
    bad = check_axioms(table_family([M, m3]), 2)
    assert not bad.graded and bad.graded_witness == (1, 1)


def test_table_family_rejects_mixed_rings():
    with pytest.raises(ValueError):
        table_family([M, MonomialIdeal.maximal(ChainRing(2), 2)])


# -- axioms ----------------------------------------------------------------


def test_power_family_axioms():
    report = check_axioms(power_family(Q), 12)
    assert report.graded and report.filtration


def test_oscillating_axioms_window_30():
    t = 1
    F = oscillating_family(t, 30)
    jumps = F.params.jumps
    # exhaustive check of the inequality behind the product containment
    expected = all(
        t + tau_by_definition(m, jumps) + t + tau_by_definition(n, jumps) >= t + tau_by_definition(m + n, jumps)
        or 2 * t + tau_by_definition(m, jumps) + tau_by_definition(n, jumps) >= t + 1
        for m in range(1, 31) for n in range(m, 31 - m)
    )
    report = check_axioms(F, 30)
    assert report.graded == expected is True
    assert not report.filtration and report.filtration_witness == 5


def test_sqrt2_axioms_window_40():
    report = check_axioms(scaled_power_family("sqrt2", 2), 40)
    assert report.graded and report.filtration


def test_family_cache_is_consistent():
    F = power_family(Q)
    assert F.ideal_at(5) is F.ideal_at(5)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(F.ideal_at, [7] * 8))
    assert all(g == got[0] for g in got)
