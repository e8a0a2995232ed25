import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from weylpol.linalg import RationalMatrix, determinant, sparse_rank
from weylpol.util import InputError


@st.composite
def matrices(draw):
    rows, cols = draw(st.integers(0, 7)), draw(st.integers(0, 7))
    data = [[draw(st.sampled_from([0, 0, 0, 1, -1, 2, 3, Fraction(1, 2), Fraction(-5, 3)]))
             for _ in range(cols)] for _ in range(rows)]
    return rows, cols, data


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_rank_matches_sympy(case):
    rows, cols, data = case
    m = RationalMatrix(rows, cols, {(a, b): v for a, row in enumerate(data) for b, v in enumerate(row)})
    want = sympy.Matrix(rows, cols, [sympy.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else v
                                     for row in data for v in row]).rank() if rows and cols else 0
    assert m.rank() == want


def test_rank_of_low_rank_products():
    rng = random.Random(0)
    for r in range(5):
        a = RationalMatrix.from_dense([[rng.randint(-3, 3) for _ in range(r)] for _ in range(9)]) if r else None
        b = RationalMatrix.from_dense([[rng.randint(-3, 3) for _ in range(8)] for _ in range(r)]) if r else None
        prod = (a @ b) if r else RationalMatrix(9, 8)
        assert prod.rank() <= r


@given(st.integers(1, 5), st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_determinant_matches_sympy(n, seed):
    rng = random.Random(seed)
    data = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
    want = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in data]).det()
    assert determinant(data) == Fraction(int(want.p), int(want.q))


def test_matmul_and_shapes():
    a = RationalMatrix.from_dense([[1, 2], [0, 1]])
    b = RationalMatrix.from_dense([[1, -2], [0, 1]])
    assert a @ b == RationalMatrix.from_dense([[1, 0], [0, 1]])
    assert (RationalMatrix(3, 0) @ RationalMatrix(0, 4)).is_zero()
    with pytest.raises(InputError):
        a @ RationalMatrix(3, 3)
    with pytest.raises(InputError):
        RationalMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(InputError):
        determinant([[1, 2]])
    assert sparse_rank([]) == 0
