from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylpol.bruhat import arrow_from, arrow_pairs
from weylpol.shifts import ShiftMatrix, sigma_zero, term_set
from weylpol.util import InputError
from weylpol.verma import (VermaTriple, coefficient_identity_check, coefficient_sums, solve_lambda,
                           triple_from_arrow, vs_amplitude, vs_element, weight_check)
from weylpol.weyl_ops import PolarCombo
from weylpol.zelevinsky import zel_amplitude

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def test_verma_condition():
    assert VermaTriple(3, 1, 3, 1, (3, 5, 4)).is_verma()
    bad = VermaTriple(3, 1, 2, 2, (1, 1, 0))
    assert not bad.is_verma()
    with pytest.raises(InputError, match="l_i - l_j - i \\+ j = r"):
        vs_element(bad)
    assert vs_element(bad, check=False)
    with pytest.raises(InputError):
        VermaTriple(3, 2, 1, 1, (0, 0, 0))
    with pytest.raises(InputError):
        VermaTriple(3, 1, 2, 1, (0, 0))


def test_amplitude_examples():
    t = VermaTriple(3, 2, 3, 2, (0, 5, 4))
    assert t.is_verma()
    assert vs_amplitude(ShiftMatrix.unit(3, 3, 2, 2), t) == 2
    t = VermaTriple(3, 1, 3, 1, (3, 5, 4))
    assert vs_amplitude(ShiftMatrix.unit(3, 3, 1), t) == -1
    assert vs_amplitude(ShiftMatrix.from_dict(3, {(2, 1): 1, (3, 2): 1}), t) == 1
    assert vs_element(t) == PolarCombo(3, {ShiftMatrix.unit(3, 3, 1): -1,
                                           ShiftMatrix.from_dict(3, {(2, 1): 1, (3, 2): 1}): 1})
    with pytest.raises(InputError):
        vs_amplitude(ShiftMatrix.unit(3, 2, 1), t)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_simple_root_element(r):
    t = solve_lambda(3, 1, 2, r, [0, 0])
    assert vs_element(t) == PolarCombo.single(ShiftMatrix.unit(3, 2, 1, r)) * Fraction(1 * 2 * 3 if r == 3 else r)


@given(rationals, rationals, rationals)
@settings(max_examples=40, deadline=None)
def test_two_four_two_coefficients(l1, l2, l3):
    t = solve_lambda(4, 2, 4, 2, [l1, l2, l3])
    x = t.l(2) - t.l(3) + 1
    lo = ShiftMatrix.from_dict(4, {(3, 2): 2, (4, 3): 2})
    mid = ShiftMatrix.from_dict(4, {(3, 2): 1, (4, 3): 1, (4, 2): 1})
    hi = ShiftMatrix.from_dict(4, {(4, 2): 2})
    assert vs_element(t) == PolarCombo(4, {lo: 4, mid: 2 * x, hi: 2 * x * (x - 1)})


@given(st.sampled_from([(n, i, j, r) for n in range(2, 6) for i in range(1, n) for j in range(i + 1, n + 1)
                        for r in (1, 2, 3) if j - i <= 3]), st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=80, deadline=None)
def test_identities_and_sigma_zero(params, free):
    n, i, j, r = params
    t = solve_lambda(n, i, j, r, free[: n - 1])
    assert t.is_verma() and weight_check(t)
    from math import factorial
    assert vs_amplitude(sigma_zero(n, i, j, r), t) == factorial(r) ** (j - i)
    for p in range(i, j):
        assert coefficient_identity_check(t, p)
    lam = list(t.lam)
    lam[j - 1] += 1
    off = t.with_lambda(lam)
    for p in range(i, j - 1):
        assert coefficient_identity_check(off, p)
    assert not coefficient_identity_check(off, j - 1)


def test_integral_lambda_gives_integers():
    t = solve_lambda(5, 1, 5, 2, [3, -1, 4, 0])
    assert all(v.denominator == 1 for v in vs_element(t).terms.values())


@pytest.mark.parametrize("n", [3, 4])
def test_triple_from_arrow_matches_zel_amplitude(n):
    for a in arrow_pairs(n):
        for c in (0, Fraction(-7, 3), 5):
            t = triple_from_arrow(a, c)
            assert t.is_verma()
            for s in term_set(n, a.i, a.j, a.multiplicity):
                assert vs_amplitude(s, t) == zel_amplitude(s, a)


def test_block_coefficient_dictionary():
    t = triple_from_arrow(arrow_from((2, 3, 4, 1), 2, 4))
    assert t.lam == (3, 5, 7, 5)
    assert t.l(2) - t.l(3) + 1 == -1


def test_coefficient_sums_range():
    t = VermaTriple(3, 1, 3, 1, (3, 5, 4))
    with pytest.raises(InputError):
        coefficient_sums(t, 3)
    assert set(coefficient_sums(t, 2)) == {ShiftMatrix.from_dict(3, {(2, 1): 1, (3, 2): 1})}


def test_json_roundtrip():
    t = VermaTriple(3, 1, 3, 1, (Fraction(1, 2), Fraction(5, 2), Fraction(3, 2)))
    assert VermaTriple.from_json(t.to_json()) == t
    assert t.to_json()["lambda"] == ["1/2", "5/2", "3/2"]
