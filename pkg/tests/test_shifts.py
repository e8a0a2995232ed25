import pytest
from hypothesis import given, settings, strategies as st

from weylpol.shifts import (ShiftMatrix, enumerate_selections, flow_amplitude, is_subordinate,
                            route_flow, selection_count, shift_factorial, sigma_zero, term_set,
                            total_weight, weight_vector)
from weylpol.util import InputError, binom0, frac, frac_str, gbinom

from strategies import shifts


def test_shift_rejects_negative_and_ragged():
    with pytest.raises(InputError):
        ShiftMatrix.from_rows([[0, -1], [0, 0]])
    with pytest.raises(InputError):
        ShiftMatrix.from_rows([[0, 1], [0]])


def test_shifted_returns_none_when_ineffective():
    s = ShiftMatrix.unit(3, 2, 1)
    assert s.shifted(minus=[(3, 1)]) is None
    assert s.shifted(plus=[(3, 1)], minus=[(2, 1)]) == ShiftMatrix.unit(3, 3, 1)


def test_str_and_json_roundtrip():
    s = ShiftMatrix.from_dict(4, {(3, 2): 2, (4, 3): 2})
    assert str(s) == "2E3,2+2E4,3"
    assert str(ShiftMatrix.zero(2)) == "0"
    assert ShiftMatrix.from_json(s.to_json()) == s
    with pytest.raises(InputError):
        ShiftMatrix.from_json({"n": 3, "entries": [[0, 0], [0, 0]]})


def test_term_set_small_cases():
    assert term_set(2, 1, 2, 3) == [ShiftMatrix.unit(2, 2, 1, 3)]
    assert len(term_set(4, 1, 4, 1)) == 4
    assert term_set(5, 2, 4, 1) == sorted(term_set(5, 2, 4, 1))


@pytest.mark.parametrize("args", [(3, 3, 1, 1), (3, 1, 1, 1), (3, 1, 4, 1), (3, 1, 2, 0)])
def test_term_set_bad_ranges(args):
    with pytest.raises(InputError):
        term_set(*args)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n - 1), st.integers(1, 3))).flatmap(
    lambda t: st.tuples(st.just(t[0]), st.just(t[1]), st.integers(t[1] + 1, t[0]), st.just(t[2]))))
@settings(max_examples=60, deadline=None)
def test_term_set_members_are_subordinate_and_weighted(args):
    n, i, j, r = args
    members = term_set(n, i, j, r)
    assert sigma_zero(n, i, j, r) in members
    for s in members:
        assert is_subordinate(s, i, j, r)
        w = [0] * n
        w[i - 1], w[j - 1] = -r, r
        assert list(weight_vector(s)) == w
    # brute-force count over all lower-triangular fillings with entries <= r
    cells = [(p, q) for q in range(i, j) for p in range(q + 1, j + 1)]
    count = 0
    from itertools import product
    for vals in product(range(r + 1), repeat=len(cells)):
        s = ShiftMatrix.from_dict(n, dict(zip(cells, vals)))
        count += is_subordinate(s, i, j, r)
    assert count == len(members)


def test_route_flow_and_amplitude_kernel():
    s = ShiftMatrix.from_dict(4, {(3, 2): 1, (4, 3): 1, (4, 2): 1})
    assert route_flow(s, 3) == 1
    with pytest.raises(ValueError):
        route_flow(s, 2)
    assert flow_amplitude(s, 2, 4, 2, lambda k: -1) == 2 * 1 * 1 * -1


@given(shifts(), st.lists(st.integers(0, 4), min_size=3, max_size=3))
@settings(max_examples=80, deadline=None)
def test_selection_count_matches_enumeration(s, alpha):
    alpha = alpha[: s.n]
    assert len(enumerate_selections(s, alpha)) == selection_count(s, alpha)


def test_weights_and_factorials():
    s = ShiftMatrix.from_rows([[0, 1, 2], [0, 0, 0], [0, 3, 0]])
    assert weight_vector(s) == (3, -4, 1)
    assert sum(weight_vector(s)) == 0
    assert shift_factorial(s) == 1 * 2 * 6
    assert total_weight(s) == 6


def test_scalar_helpers():
    assert gbinom(-1, 2) == 1
    assert gbinom(frac("1/2"), 2) == frac("-1/8")
    assert gbinom(5, -1) == 0
    assert binom0(3, 5) == 0 and binom0(-1, 0) == 0
    assert frac_str(frac("6/4")) == "3/2" and frac_str(4) == "4"
    with pytest.raises(TypeError):
        frac(0.5)
