"""Exact arithmetic in S^{a_1}V (x) ... (x) S^{a_N}V, dim V = M.

A monomial is an N x M tuple of exponent rows: ``mono[i][k]`` is the power
of variable k+1 in tensor slot i+1. Polarizations act on the monomial basis
in three independent ways:

* ``apply_weyl`` counts letter moves with multinomial weights (fast path);
* ``apply_weyl_differential`` evaluates the derivative-first operator
  (1/sigma!) P0(sigma) term by term;
* ``apply_weyl_letters`` expands monomials into distinguishable letters and
  sums over sigma-selections (slow oracle, small degrees only).
"""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence

from .shifts import ShiftMatrix, enumerate_selections, shift_factorial
from .util import InputError, Scalar, falling, frac, frac_str

Monomial = tuple[tuple[int, ...], ...]


def monomial_degrees(mono: Monomial) -> tuple[int, ...]:
    return tuple(sum(row) for row in mono)


def monomial_content(mono: Monomial) -> tuple[int, ...]:
    """Total exponent of each variable across slots (the GL(V)-weight)."""
    return tuple(sum(col) for col in zip(*mono))


def _exponent_rows(degree: int, m: int) -> list[tuple[int, ...]]:
    if degree < 0:
        return []
    if m == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in _exponent_rows(degree - first, m - 1):
            out.append((first,) + rest)
    return out


def monomial_basis(degrees: Sequence[int], m: int) -> list[Monomial]:
    """Monomials of the given multidegree in lexicographic order; [] if any degree < 0."""
    if any(d < 0 for d in degrees):
        return []
    slots = [sorted(_exponent_rows(d, m)) for d in degrees]
    return [tuple(rows) for rows in product(*slots)]


class SymTensor:
    """A finite rational combination of monomials with a fixed (n, m)."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Optional[dict] = None):
        self.n, self.m = n, m
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = frac(c)
            if c == 0:
                continue
            if len(mono) != n or any(len(row) != m for row in mono):
                raise InputError("monomial shape does not match (n, m)")
            if any(e < 0 for row in mono for e in row):
                raise InputError("negative exponent")
            clean[mono] = clean.get(mono, Fraction(0)) + c
            if clean[mono] == 0:
                del clean[mono]
        self.terms = clean

    @classmethod
    def zero(cls, n: int, m: int) -> "SymTensor":
        return cls(n, m)

    @classmethod
    def monomial(cls, mono: Sequence[Sequence[int]], coeff: Scalar = 1) -> "SymTensor":
        mono = tuple(tuple(row) for row in mono)
        return cls(len(mono), len(mono[0]), {mono: coeff})

    @classmethod
    def from_letters(cls, slots: Sequence[Sequence[int]], m: int, coeff: Scalar = 1) -> "SymTensor":
        """Build a pure tensor from lists of 1-based variable indices per slot."""
        rows = []
        for letters in slots:
            row = [0] * m
            for k in letters:
                row[k - 1] += 1
            rows.append(tuple(row))
        return cls(len(rows), m, {tuple(rows): coeff})

    def _like(self, terms: dict) -> "SymTensor":
        return SymTensor(self.n, self.m, terms)

    def __add__(self, other: "SymTensor") -> "SymTensor":
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return self._like(out)

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return self + other * -1

    def __mul__(self, c: Scalar) -> "SymTensor":
        c = frac(c)
        return self._like({mono: v * c for mono, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "SymTensor":
        return self * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"SymTensor(n={self.n}, m={self.m}, terms={len(self.terms)})"

    def _check(self, other: "SymTensor") -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise InputError("tensor shapes differ")

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {monomial_degrees(mono) for mono in self.terms}

    def homogeneous_degree(self) -> Optional[tuple[int, ...]]:
        degs = self.multidegrees()
        if len(degs) == 1:
            return next(iter(degs))
        return None

    def substitute(self, matrix: Sequence[Sequence[Scalar]]) -> "SymTensor":
        """Apply x_k -> sum_l matrix[l][k] x_l in every slot simultaneously."""
        m = self.m
        out = SymTensor.zero(self.n, m)
        for mono, c in self.terms.items():
            acc = {tuple((0,) * m for _ in range(self.n)): Fraction(c)}
            for slot, row in enumerate(mono):
                for k, e in enumerate(row):
                    for _ in range(e):
                        nxt: dict = defaultdict(Fraction)
                        for mm, cc in acc.items():
                            for l in range(m):
                                a = frac(matrix[l][k])
                                if a == 0:
                                    continue
                                rows = [list(r) for r in mm]
                                rows[slot][l] += 1
                                nxt[tuple(tuple(r) for r in rows)] += cc * a
                        acc = nxt
            out = out + SymTensor(self.n, m, acc)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "terms": [
            {"coeff": frac_str(c), "exponents": [list(r) for r in mono]}
            for mono, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj: dict) -> "SymTensor":
        terms: dict = {}
        for t in obj["terms"]:
            mono = tuple(tuple(int(e) for e in row) for row in t["exponents"])
            terms[mono] = terms.get(mono, 0) + frac(t["coeff"])
        return cls(int(obj["n"]), int(obj["m"]), terms)


def random_tensor(rng: random.Random, n: int, m: int, degrees: Sequence[int],
                  nterms: int = 3, coeff_range: int = 5) -> SymTensor:
    """A random homogeneous tensor of the given multidegree with integer coefficients."""
    basis = monomial_basis(degrees, m)
    if not basis:
        return SymTensor.zero(n, m)
    picks = rng.sample(basis, min(nterms, len(basis)))
    terms = {}
    for mono in picks:
        c = 0
        while c == 0:
            c = rng.randint(-coeff_range, coeff_range)
        terms[mono] = c
    return SymTensor(n, m, terms)


# ---------------------------------------------------------------- elementary

def _elementary_on_monomial(i: int, j: int, mono: Monomial) -> Iterator[tuple[Monomial, int]]:
    if i == j:
        d = sum(mono[i])
        if d:
            yield mono, d
        return
    for k, e in enumerate(mono[j]):
        if e == 0:
            continue
        rows = [list(r) for r in mono]
        rows[j][k] -= 1
        rows[i][k] += 1
        yield tuple(tuple(r) for r in rows), e


def apply_elementary(i: int, j: int, t: SymTensor) -> SymTensor:
    """D_{i,j} = sum_k X_k^{(i)} d/dX_k^{(j)}; for i == j, multiply by slot degree."""
    if not (1 <= i <= t.n and 1 <= j <= t.n):
        raise InputError("index out of range")
    out: dict = defaultdict(Fraction)
    for mono, c in t.terms.items():
        for new, w in _elementary_on_monomial(i - 1, j - 1, mono):
            out[new] += c * w
    return SymTensor(t.n, t.m, out)


def apply_word(factors: Sequence[tuple[int, int]], t: SymTensor) -> SymTensor:
    """Composite E_{i1,j1} o ... o E_{iL,jL}; the rightmost factor acts first."""
    for i, j in reversed(list(factors)):
        t = apply_elementary(i, j, t)
    return t


# -------------------------------------------------------------- combinatorial

def _move_patterns(counts: Sequence[int], capacity: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ways to draw counts[i] letters for each target i from variables with
    the given capacities: yields mu[i][k] with sum_k mu[i][k] = counts[i]
    and sum_i mu[i][k] <= capacity[k]."""
    m = len(capacity)
    if not counts:
        yield ()
        return
    first, rest = counts[0], counts[1:]

    def split(total: int, k: int, cap: list[int]) -> Iterator[tuple[int, ...]]:
        if k == m - 1:
            if total <= cap[k]:
                yield (total,)
            return
        for x in range(min(total, cap[k]), -1, -1):
            for tail in split(total - x, k + 1, cap):
                yield (x,) + tail

    for row in split(first, 0, list(capacity)):
        left = [c - x for c, x in zip(capacity, row)]
        for tail in _move_patterns(rest, left):
            yield (row,) + tail


def _weyl_on_monomial(sigma: ShiftMatrix, mono: Monomial) -> dict[Monomial, int]:
    n, m = len(mono), len(mono[0])
    per_column = []
    for j in range(n):
        counts = [sigma.entries[i][j] for i in range(n)]
        if sum(counts) > sum(mono[j]):
            return {}
        options = []
        for mu in _move_patterns(counts, mono[j]):
            w = 1
            for k in range(m):
                moved = [mu[i][k] for i in range(n)]
                rest = mono[j][k] - sum(moved)
                w *= factorial(mono[j][k]) // (prod(factorial(x) for x in moved) * factorial(rest))
            options.append((mu, w))
        if not options:
            return {}
        per_column.append(options)

    out: dict[Monomial, int] = defaultdict(int)
    for choice in product(*per_column):
        rows = [list(r) for r in mono]
        weight = 1
        for j, (mu, w) in enumerate(choice):
            weight *= w
            for i in range(n):
                for k in range(m):
                    x = mu[i][k]
                    if x:
                        rows[j][k] -= x
                        rows[i][k] += x
        out[tuple(tuple(r) for r in rows)] += weight
    return out


def apply_weyl(sigma: ShiftMatrix, t: SymTensor) -> SymTensor:
    """Normalized Weyl polarization P(sigma): move sigma_{i,j} letters from
    slot j to slot i in all ways, no letter moved twice."""
    if sigma.n != t.n:
        raise InputError("shift size differs from tensor slot count")
    out: dict = defaultdict(Fraction)
    for mono, c in t.terms.items():
        for new, w in _weyl_on_monomial(sigma, mono).items():
            out[new] += c * w
    return SymTensor(t.n, t.m, out)


# ----------------------------------------------------------------- differential

def apply_weyl_differential(sigma: ShiftMatrix, t: SymTensor, normalized: bool = True) -> SymTensor:
    """(1/sigma!) P0(sigma), P0 = sum over variable assignments of all
    multiplications composed after all partial derivatives."""
    if sigma.n != t.n:
        raise InputError("shift size differs from tensor slot count")
    pairs = [(i - 1, j - 1) for i, j, v in sigma.items() for _ in range(v)]
    n, m = t.n, t.m
    out: dict = defaultdict(Fraction)
    for mono, c in t.terms.items():
        for ks in product(range(m), repeat=len(pairs)):
            d = [[0] * m for _ in range(n)]
            for (_, j), k in zip(pairs, ks):
                d[j][k] += 1
            coeff = 1
            for j in range(n):
                for k in range(m):
                    if d[j][k]:
                        coeff *= falling(mono[j][k], d[j][k])
            if coeff == 0:
                continue
            rows = [[mono[a][b] - d[a][b] for b in range(m)] for a in range(n)]
            for (i, _), k in zip(pairs, ks):
                rows[i][k] += 1
            out[tuple(tuple(r) for r in rows)] += c * coeff
    res = SymTensor(n, m, out)
    if normalized:
        res = res * Fraction(1, shift_factorial(sigma))
    return res


# ------------------------------------------------------------------ letter oracle

def apply_weyl_letters(sigma: ShiftMatrix, t: SymTensor) -> SymTensor:
    """P(sigma) by literal sigma-selections over distinguishable letters."""
    if sigma.n != t.n:
        raise InputError("shift size differs from tensor slot count")
    n, m = t.n, t.m
    out = SymTensor.zero(n, m)
    for mono, c in t.terms.items():
        letters = [[k + 1 for k, e in enumerate(row) for _ in range(e)] for row in mono]
        degrees = [len(x) for x in letters]
        acc: dict = defaultdict(Fraction)
        for fam in enumerate_selections(sigma, degrees):
            slots: list[list[int]] = []
            for i in range(1, n + 1):
                got = [letters[i - 1][p - 1] for p in fam.unmoved(i, degrees[i - 1])]
                for j in range(1, n + 1):
                    got += [letters[j - 1][p - 1] for p in fam.get(i, j)]
                slots.append(got)
            rows = []
            for got in slots:
                row = [0] * m
                for k in got:
                    row[k - 1] += 1
                rows.append(tuple(row))
            acc[tuple(rows)] += c
        out = out + SymTensor(n, m, acc)
    return out


def diagonal_reduction_factor(sigma: ShiftMatrix, alpha: Iterable[int]) -> int:
    """prod_i C(a_i - sum_{j != i} sigma_{j,i}, sigma_{i,i})."""
    from .util import binom0
    alpha = tuple(alpha)
    if len(alpha) != sigma.n:
        raise InputError("degree vector length must equal n")
    out = 1
    for i in range(1, sigma.n + 1):
        off = sigma.col_sum(i) - sigma[i, i]
        out *= binom0(alpha[i - 1] - off, sigma[i, i])
    return out
