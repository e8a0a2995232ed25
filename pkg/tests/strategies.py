from hypothesis import strategies as st

from weylpol.shifts import ShiftMatrix
from weylpol.symtensor import SymTensor, monomial_basis


@st.composite
def shifts(draw, n=None, max_weight=3, lower=False):
    n = n or draw(st.integers(1, 3))
    rows = [[0] * n for _ in range(n)]
    for _ in range(draw(st.integers(0, max_weight))):
        if lower and n > 1:
            a = draw(st.integers(2, n))
            b = draw(st.integers(1, a - 1))
        else:
            a, b = draw(st.integers(1, n)), draw(st.integers(1, n))
        rows[a - 1][b - 1] += 1
    return ShiftMatrix.from_rows(rows)


@st.composite
def tensors(draw, n, m=None, max_deg=3):
    m = m or draw(st.integers(1, 3))
    degrees = [draw(st.integers(0, max_deg)) for _ in range(n)]
    basis = monomial_basis(degrees, m)
    picks = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(st.integers(-5, 5).filter(bool), min_size=len(picks), max_size=len(picks)))
    return SymTensor(n, m, dict(zip(picks, coeffs)))


@st.composite
def shift_and_tensor(draw, max_n=3, max_weight=3):
    s = draw(shifts(n=draw(st.integers(1, max_n)), max_weight=max_weight))
    return s, draw(tensors(s.n))
