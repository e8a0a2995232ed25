import random
from itertools import product

from hypothesis import given, settings, strategies as st

from weylpol.shifts import ShiftMatrix
from weylpol.symtensor import apply_elementary, apply_weyl, apply_word, random_tensor
from weylpol.weyl_ops import (ElementaryWord, PolarCombo, apply_combo, commutator, left_mul,
                              right_mul, word_to_combo)

from strategies import shifts

E = lambda n, i, j, v=1: ShiftMatrix.unit(n, i, j, v)  # noqa: E731


def P(*pairs, n=3):
    d = {}
    for i, j, *v in pairs:
        d[(i, j)] = d.get((i, j), 0) + (v[0] if v else 1)
    return PolarCombo.single(ShiftMatrix.from_dict(n, d))


def test_left_mul_examples():
    assert left_mul(3, 2, P((4, 3), n=4)) == P((3, 2), (4, 3), n=4)
    assert left_mul(2, 1, P((2, 1))) == P((2, 1, 2)) * 2
    assert left_mul(1, 1, P((1, 2))) == P((1, 1), (1, 2)) + P((1, 2))


def test_right_mul_examples():
    assert right_mul(PolarCombo.identity(3), 2, 1) == P((2, 1))
    # a factor to the right acts first
    assert right_mul(P((2, 1)), 3, 2) == P((2, 1), (3, 2))
    assert right_mul(P((3, 2)), 2, 1) == P((2, 1), (3, 2)) + P((3, 1))
    assert right_mul(P((2, 1)), 1, 1) == P((2, 1), (1, 1)) + P((2, 1))


def test_words():
    assert word_to_combo(ElementaryWord(3)) == PolarCombo.identity(3)
    assert word_to_combo(ElementaryWord(3, ((2, 1), (3, 2)))) == P((2, 1), (3, 2))
    assert word_to_combo(ElementaryWord(3, ((3, 2), (2, 1)))) == P((2, 1), (3, 2)) + P((3, 1))


def test_commutator_examples():
    s = ShiftMatrix.from_dict(3, {(1, 2): 1, (2, 1): 1})
    assert not commutator(1, 1, PolarCombo.single(s))
    assert not commutator(2, 1, P((2, 1)))


@given(shifts(n=3, max_weight=4), st.integers(1, 3), st.integers(1, 3), st.integers(0, 10 ** 6))
@settings(max_examples=100, deadline=None)
def test_products_match_tensor_action(s, i, j, seed):
    rng = random.Random(seed)
    t = random_tensor(rng, 3, 2, [rng.randint(0, 3) for _ in range(3)])
    c = PolarCombo.single(s)
    assert apply_combo(left_mul(i, j, c), t) == apply_elementary(i, j, apply_weyl(s, t))
    assert apply_combo(right_mul(c, i, j), t) == apply_weyl(s, apply_elementary(i, j, t))
    assert apply_combo(commutator(i, j, c), t) == (
        apply_elementary(i, j, apply_weyl(s, t)) - apply_weyl(s, apply_elementary(i, j, t)))
    for coeff in left_mul(i, j, c).terms.values():
        assert coeff.denominator == 1


def test_word_multiplicativity():
    rng = random.Random(5)
    for _ in range(40):
        u = ElementaryWord(3, tuple((rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))))
        v = ElementaryWord(3, tuple((rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))))
        c = word_to_combo(v)
        for i, j in reversed(u.factors):
            c = left_mul(i, j, c)
        assert word_to_combo(u * v) == c
        t = random_tensor(rng, 3, 2, [rng.randint(0, 2) for _ in range(3)])
        assert apply_combo(word_to_combo(u * v), t) == apply_word((u * v).factors, t)


def test_capelli_homomorphism_n3():
    gens = [(a, b) for a in range(1, 4) for b in range(1, 4)]
    for (a, b), (c, d) in product(gens, gens):
        lhs = word_to_combo(ElementaryWord(3, ((a, b), (c, d)))) - word_to_combo(ElementaryWord(3, ((c, d), (a, b))))
        rhs = PolarCombo(3)
        if b == c:
            rhs = rhs + word_to_combo(ElementaryWord(3, ((a, d),)))
        if d == a:
            rhs = rhs - word_to_combo(ElementaryWord(3, ((c, b),)))
        assert lhs == rhs


def test_json_roundtrip():
    c = P((2, 1)) * "1/3" - P((3, 1))
    assert PolarCombo.from_json(c.to_json()) == c
    w = ElementaryWord(3, ((2, 1), (3, 3)))
    assert ElementaryWord.from_json(w.to_json()) == w
