import random

import pytest
from hypothesis import given, settings

from weylpol.shifts import ShiftMatrix, reduced
from weylpol.symtensor import (SymTensor, apply_elementary, apply_weyl, apply_weyl_differential,
                               apply_weyl_letters, diagonal_reduction_factor, monomial_basis,
                               monomial_content, random_tensor)
from weylpol.util import InputError

from strategies import shift_and_tensor


@given(shift_and_tensor())
@settings(max_examples=150, deadline=None)
def test_three_actions_agree(case):
    s, t = case
    a = apply_weyl(s, t)
    assert a == apply_weyl_differential(s, t)
    assert a == apply_weyl_letters(s, t)


@given(shift_and_tensor())
@settings(max_examples=80, deadline=None)
def test_weight_shift_and_content(case):
    s, t = case
    out = apply_weyl(s, t)
    (deg,) = t.multidegrees()
    for mono in out.terms:
        moved = tuple(d + s.row_sum(k + 1) - s.col_sum(k + 1) for k, d in enumerate(deg))
        assert tuple(sum(r) for r in mono) == moved
        assert monomial_content(mono) in {monomial_content(m) for m in t.terms}


@given(shift_and_tensor())
@settings(max_examples=80, deadline=None)
def test_diagonal_factor(case):
    s, t = case
    (deg,) = t.multidegrees()
    assert apply_weyl(s, t) == apply_weyl(reduced(s), t) * diagonal_reduction_factor(s, deg)


def test_elementary_is_weight_one_polarization():
    rng = random.Random(0)
    for _ in range(30):
        t = random_tensor(rng, 3, 2, [rng.randint(0, 3) for _ in range(3)])
        i, j = rng.randint(1, 3), rng.randint(1, 3)
        assert apply_elementary(i, j, t) == apply_weyl(ShiftMatrix.unit(3, i, j), t)


def test_gl_v_equivariance():
    # polarizations commute with a simultaneous substitution in all slots
    rng = random.Random(1)
    g = [[1, 2], [0, -1]]
    for _ in range(10):
        t = random_tensor(rng, 2, 2, [rng.randint(0, 3), rng.randint(0, 3)])
        s = ShiftMatrix.from_rows([[rng.randint(0, 1), rng.randint(0, 2)], [rng.randint(0, 2), 0]])
        assert apply_weyl(s, t.substitute(g)) == apply_weyl(s, t).substitute(g)


def test_basis_and_json():
    assert len(monomial_basis((2, 1), 3)) == 6 * 3
    assert monomial_basis((1, -1), 2) == []
    t = SymTensor.monomial([[1, 0], [0, 2]], "3/2")
    assert SymTensor.from_json(t.to_json()) == t
    assert t.to_json()["terms"][0]["coeff"] == "3/2"


def test_shape_errors():
    with pytest.raises(InputError):
        SymTensor(2, 2, {((1,), (0,)): 1})
    t = SymTensor.monomial([[1], [0]])
    with pytest.raises(InputError):
        apply_weyl(ShiftMatrix.zero(3), t)
    with pytest.raises(InputError):
        apply_elementary(3, 1, t)
