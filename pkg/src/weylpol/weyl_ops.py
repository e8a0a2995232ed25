"""Formal calculus of polarization combinations.

A ``PolarCombo`` is a finite rational combination of symbols P(sigma), with
P(0) the identity. Products with a single elementary polarization E_{i,j}
on either side are expanded by closed formulas, so a word in the E_{i,j}
can be rewritten as a combo without ever touching a tensor.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .shifts import ShiftMatrix
from .symtensor import SymTensor, apply_weyl
from .util import InputError, Scalar, frac, frac_str


class PolarCombo:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        clean: dict[ShiftMatrix, Fraction] = {}
        for sigma, c in (terms or {}).items():
            if sigma.n != n:
                raise InputError("shift size differs from combo size")
            c = frac(c)
            if c:
                clean[sigma] = clean.get(sigma, Fraction(0)) + c
                if clean[sigma] == 0:
                    del clean[sigma]
        self.terms = clean

    @classmethod
    def identity(cls, n: int) -> "PolarCombo":
        return cls(n, {ShiftMatrix.zero(n): 1})

    @classmethod
    def single(cls, sigma: ShiftMatrix, coeff: Scalar = 1) -> "PolarCombo":
        return cls(sigma.n, {sigma: coeff})

    def __add__(self, other: "PolarCombo") -> "PolarCombo":
        if self.n != other.n:
            raise InputError("combo sizes differ")
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return PolarCombo(self.n, out)

    def __sub__(self, other: "PolarCombo") -> "PolarCombo":
        return self + other * -1

    def __mul__(self, c: Scalar) -> "PolarCombo":
        c = frac(c)
        return PolarCombo(self.n, {s: v * c for s, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "PolarCombo":
        return self * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolarCombo):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[ShiftMatrix, Fraction]]:
        return iter(sorted(self.terms.items()))

    def coefficient(self, sigma: ShiftMatrix) -> Fraction:
        return self.terms.get(sigma, Fraction(0))

    def __repr__(self) -> str:
        return f"PolarCombo({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{frac_str(c)}*P({s})" for s, c in self)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [
            {"coeff": frac_str(c), "shift": [list(r) for r in s.entries]} for s, c in self]}

    @classmethod
    def from_json(cls, obj: dict) -> "PolarCombo":
        n = int(obj["n"])
        terms: dict = {}
        for t in obj["terms"]:
            s = ShiftMatrix.from_rows(t["shift"])
            terms[s] = terms.get(s, 0) + frac(t["coeff"])
        return cls(n, terms)


@dataclass(frozen=True)
class ElementaryWord:
    """E_{i1,j1} ... E_{iL,jL}; acts with the rightmost factor first."""

    n: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fs = tuple((int(i), int(j)) for i, j in self.factors)
        for i, j in fs:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"factor E{i},{j} out of range for n={self.n}")
        object.__setattr__(self, "factors", fs)

    def __mul__(self, other: "ElementaryWord") -> "ElementaryWord":
        if self.n != other.n:
            raise InputError("word sizes differ")
        return ElementaryWord(self.n, self.factors + other.factors)

    def __str__(self) -> str:
        return "".join(f"E{i},{j}" for i, j in self.factors) or "1"

    def to_json(self) -> dict:
        return {"n": self.n, "factors": [list(f) for f in self.factors]}

    @classmethod
    def from_json(cls, obj: dict) -> "ElementaryWord":
        return cls(int(obj["n"]), tuple(tuple(f) for f in obj["factors"]))


def _check(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise InputError(f"index ({i}, {j}) out of range for n={n}")


def _left_terms(i: int, j: int, sigma: ShiftMatrix) -> Iterator[tuple[ShiftMatrix, int]]:
    n = sigma.n
    yield sigma.shifted(plus=[(i, j)]), sigma[i, j] + 1
    if i == j:
        yield sigma, sigma.row_sum(i)
        return
    for k in range(1, n + 1):
        yield sigma.shifted(plus=[(i, k)], minus=[(j, k)]), sigma[i, k] + 1


def _right_terms(sigma: ShiftMatrix, i: int, j: int) -> Iterator[tuple[ShiftMatrix, int]]:
    n = sigma.n
    yield sigma.shifted(plus=[(i, j)]), sigma[i, j] + 1
    if i == j:
        yield sigma, sigma.col_sum(i)
        return
    for k in range(1, n + 1):
        yield sigma.shifted(plus=[(k, j)], minus=[(k, i)]), sigma[k, j] + 1


def _expand(c: PolarCombo, gen) -> PolarCombo:
    out: dict = defaultdict(Fraction)
    for sigma, coeff in c.terms.items():
        for new, w in gen(sigma):
            if new is not None and w:
                out[new] += coeff * w
    return PolarCombo(c.n, out)


def left_mul(i: int, j: int, c: PolarCombo) -> PolarCombo:
    """E_{i,j} * c."""
    _check(c.n, i, j)
    return _expand(c, lambda s: _left_terms(i, j, s))


def right_mul(c: PolarCombo, i: int, j: int) -> PolarCombo:
    """c * E_{i,j}."""
    _check(c.n, i, j)
    return _expand(c, lambda s: _right_terms(s, i, j))


def commutator(p: int, q: int, c: PolarCombo) -> PolarCombo:
    """[E_{p,q}, c]."""
    return left_mul(p, q, c) - right_mul(c, p, q)


def word_to_combo(w: ElementaryWord) -> PolarCombo:
    c = PolarCombo.identity(w.n)
    for i, j in reversed(w.factors):
        c = left_mul(i, j, c)
    return c


def apply_combo(c: PolarCombo, t: SymTensor) -> SymTensor:
    if c.n != t.n:
        raise InputError("combo size differs from tensor slot count")
    out = SymTensor.zero(t.n, t.m)
    for sigma, coeff in c.terms.items():
        out = out + apply_weyl(sigma, t) * coeff
    return out


def combo_from_word_list(n: int, words: Sequence[tuple[Scalar, Sequence[tuple[int, int]]]]) -> PolarCombo:
    """sum_s c_s * word_s, each word given as a list of (i, j) factors."""
    out = PolarCombo(n)
    for c, factors in words:
        out = out + word_to_combo(ElementaryWord(n, tuple(factors))) * c
    return out
