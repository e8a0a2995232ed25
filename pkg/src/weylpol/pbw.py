"""PBW normal forms in U(gl_N) and the action on Verma modules.

Monomials are exponent tuples over a fixed ``GeneratorOrder``; the normal
form of a product lists generators in that order. Lowering generators come
first, then Cartan, then raising, so reducing a normal-form element modulo
the annihilator of a highest-weight vector is a single filter pass.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .shifts import ShiftMatrix, shift_factorial, sigma_zero, total_weight
from .symtensor import SymTensor, apply_word
from .util import InputError, Scalar, frac, frac_str
from .verma import VermaTriple
from .weyl_ops import ElementaryWord, PolarCombo, _left_terms

Gen = tuple[int, int]
Mono = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorOrder:
    n: int
    gens: tuple[Gen, ...]

    def __post_init__(self):
        gens = tuple((int(a), int(b)) for a, b in self.gens)
        expect = {(a, b) for a in range(1, self.n + 1) for b in range(1, self.n + 1)}
        if set(gens) != expect or len(gens) != len(expect):
            raise InputError("order must list every generator exactly once")
        kinds = [0 if a > b else 1 if a == b else 2 for a, b in gens]
        if kinds != sorted(kinds):
            raise InputError("order must list lowering, then Cartan, then raising generators")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def standard(cls, n: int, lowering: Optional[Sequence[Gen]] = None) -> "GeneratorOrder":
        """Lowering generators in the given order (lexicographic by default)."""
        low = sorted((a, b) for a in range(1, n + 1) for b in range(1, a))
        if lowering is not None:
            low = [tuple(g) for g in lowering]
        cartan = [(a, a) for a in range(1, n + 1)]
        high = sorted((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1))
        return cls(n, tuple(low) + tuple(cartan) + tuple(high))

    @classmethod
    def reversed_lowering(cls, n: int) -> "GeneratorOrder":
        low = sorted((a, b) for a in range(1, n + 1) for b in range(1, a))
        return cls.standard(n, low[::-1])

    def index(self, g: Gen) -> int:
        return self._index()[g]

    def _index(self) -> dict:
        return _index_map(self)

    @property
    def size(self) -> int:
        return len(self.gens)

    def is_lowering(self, k: int) -> bool:
        a, b = self.gens[k]
        return a > b

    def to_json(self) -> list:
        return [list(g) for g in self.gens]

    @classmethod
    def from_json(cls, n: int, obj: list) -> "GeneratorOrder":
        return cls(n, tuple(tuple(g) for g in obj))


@lru_cache(maxsize=None)
def _index_map(order: GeneratorOrder) -> dict:
    return {g: k for k, g in enumerate(order.gens)}


def _bracket(g: Gen, h: Gen) -> list[tuple[Gen, int]]:
    """[E_ab, E_cd] = delta_bc E_ad - delta_ad E_cb."""
    (a, b), (c, d) = g, h
    out = []
    if b == c:
        out.append(((a, d), 1))
    if a == d:
        out.append(((c, b), -1))
    return out


@lru_cache(maxsize=None)
def _mul_gen(order: GeneratorOrder, g: int, mono: Mono) -> tuple[tuple[Mono, Fraction], ...]:
    """Normal form of generator #g times the normal-form monomial ``mono``."""
    h = next((k for k, e in enumerate(mono) if e), None)
    if h is None or h >= g:
        new = list(mono)
        new[g] += 1
        return ((tuple(new), Fraction(1)),)
    rest = list(mono)
    rest[h] -= 1
    rest = tuple(rest)
    out: dict = defaultdict(Fraction)
    # g h rest = h (g rest) + [g, h] rest
    for m1, c1 in _mul_gen(order, g, rest):
        for m2, c2 in _mul_gen(order, h, m1):
            out[m2] += c1 * c2
    idx = _index_map(order)
    for gen, c in _bracket(order.gens[g], order.gens[h]):
        for m1, c1 in _mul_gen(order, idx[gen], rest):
            out[m1] += c * c1
    return tuple((m, c) for m, c in out.items() if c)


class UElement:
    __slots__ = ("order", "terms")

    def __init__(self, order: GeneratorOrder, terms: Optional[dict] = None):
        self.order = order
        clean = {}
        for m, c in (terms or {}).items():
            c = frac(c)
            if c:
                if len(m) != order.size or any(e < 0 for e in m):
                    raise InputError("bad monomial")
                clean[tuple(m)] = clean.get(tuple(m), 0) + c
                if not clean[tuple(m)]:
                    del clean[tuple(m)]
        self.terms = clean

    @property
    def n(self) -> int:
        return self.order.n

    @classmethod
    def one(cls, order: GeneratorOrder) -> "UElement":
        return cls(order, {(0,) * order.size: 1})

    @classmethod
    def generator(cls, order: GeneratorOrder, g: Gen) -> "UElement":
        m = [0] * order.size
        m[order.index(g)] = 1
        return cls(order, {tuple(m): 1})

    def monomial_of(self, shift: ShiftMatrix) -> Mono:
        """F_sigma: exponent sigma_{a,b} on every generator E_{a,b}."""
        return tuple(shift[a, b] for a, b in self.order.gens)

    def coefficient(self, mono: Mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other: "UElement") -> "UElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return UElement(self.order, out)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "UElement":
        c = frac(c)
        return UElement(self.order, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            self._check(other)
            out: dict = defaultdict(Fraction)
            for m, c in self.terms.items():
                for m2, c2 in left_mul_monomial(self.order, m, other.terms).items():
                    out[m2] += c * c2
            return UElement(self.order, out)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, UElement) and self.order == other.order and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "UElement") -> None:
        if self.order != other.order:
            raise InputError("elements use different generator orders")

    def degree(self, mono: Mono) -> int:
        return sum(mono)

    def words(self) -> list[tuple[Fraction, tuple[Gen, ...]]]:
        out = []
        for m, c in sorted(self.terms.items()):
            word = tuple(g for g, e in zip(self.order.gens, m) for _ in range(e))
            out.append((c, word))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, word in self.words():
            w = "".join(f"E{a},{b}" for a, b in word) or "1"
            parts.append(f"{frac_str(c)}*{w}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"n": self.n, "order": self.order.to_json(),
                "terms": [{"coeff": frac_str(c), "exponents": list(m)} for m, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj: dict) -> "UElement":
        order = GeneratorOrder.from_json(int(obj["n"]), obj["order"])
        terms: dict = {}
        for t in obj["terms"]:
            m = tuple(int(e) for e in t["exponents"])
            terms[m] = terms.get(m, 0) + frac(t["coeff"])
        return cls(order, terms)


def left_mul_monomial(order: GeneratorOrder, mono: Mono, terms: dict) -> dict:
    """mono * (sum of terms), mono given in normal form."""
    cur = dict(terms)
    for k in range(order.size - 1, -1, -1):
        for _ in range(mono[k]):
            nxt: dict = defaultdict(Fraction)
            for m, c in cur.items():
                for m2, c2 in _mul_gen(order, k, m):
                    nxt[m2] += c * c2
            cur = {m: c for m, c in nxt.items() if c}
    return cur


def straighten(word: ElementaryWord | Sequence[Gen], order: GeneratorOrder) -> UElement:
    factors = word.factors if isinstance(word, ElementaryWord) else tuple(word)
    idx = _index_map(order)
    cur = {(0,) * order.size: Fraction(1)}
    for g in reversed(factors):
        nxt: dict = defaultdict(Fraction)
        for m, c in cur.items():
            for m2, c2 in _mul_gen(order, idx[tuple(g)], m):
                nxt[m2] += c * c2
        cur = nxt
    return UElement(order, cur)


@lru_cache(maxsize=None)
def _polar_to_pbw(sigma: ShiftMatrix, order: GeneratorOrder) -> tuple[tuple[Mono, Fraction], ...]:
    if total_weight(sigma) == 0:
        return (((0,) * order.size, Fraction(1)),)
    i, j, v = next(iter(sigma.items()))
    prev = sigma.shifted(minus=[(i, j)])
    acc = UElement.generator(order, (i, j)) * UElement(order, dict(_polar_to_pbw(prev, order)))
    for tau, w in _left_terms(i, j, prev):
        if tau is None or tau == sigma or not w:
            continue
        acc = acc - UElement(order, dict(_polar_to_pbw(tau, order))).scale(w)
    return tuple(acc.scale(Fraction(1, v)).terms.items())


def polar_to_pbw(sigma: ShiftMatrix, order: GeneratorOrder) -> UElement:
    """P(sigma) as an element of U(gl_N), peeling the first nonzero entry."""
    if sigma.n != order.n:
        raise InputError("shift size differs from order size")
    return UElement(order, dict(_polar_to_pbw(sigma, order)))


def combo_to_pbw(c: PolarCombo, order: GeneratorOrder) -> UElement:
    out = UElement(order)
    for sigma, coeff in c.terms.items():
        out = out + polar_to_pbw(sigma, order).scale(coeff)
    return out


def apply_u(u: UElement, t: SymTensor) -> SymTensor:
    """Tensor action, expanding each PBW monomial back into a word."""
    out = SymTensor.zero(t.n, t.m)
    for c, word in u.words():
        out = out + apply_word(word, t) * c
    return out


# ------------------------------------------------------------------ Verma modules

class VermaVector:
    """Element of the Verma module M(lambda) as lowering monomials applied to v_lambda."""

    __slots__ = ("order", "lam", "terms")

    def __init__(self, order: GeneratorOrder, lam: Sequence[Scalar], terms: Optional[dict] = None):
        self.order = order
        self.lam = tuple(frac(x) for x in lam)
        if len(self.lam) != order.n:
            raise InputError("lambda length differs from n")
        clean = {}
        for m, c in (terms or {}).items():
            if any(e and not order.is_lowering(k) for k, e in enumerate(m)):
                raise InputError("Verma vector monomials must use lowering generators only")
            c = frac(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def highest(cls, order: GeneratorOrder, lam: Sequence[Scalar]) -> "VermaVector":
        return cls(order, lam, {(0,) * order.size: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, VermaVector) and self.order == other.order
                and self.lam == other.lam and self.terms == other.terms)

    def weights(self) -> set[tuple[int, ...]]:
        """Weights of the monomials, relative to lambda."""
        out = set()
        for m in self.terms:
            w = [0] * self.order.n
            for (a, b), e in zip(self.order.gens, m):
                w[a - 1] += e
                w[b - 1] -= e
            out.add(tuple(w))
        return out

    def __str__(self) -> str:
        return str(UElement(self.order, self.terms)).replace("*1", "") + " v" if self.terms else "0"


def act_on_verma(u: UElement, v: VermaVector) -> VermaVector:
    if u.order != v.order:
        raise InputError("orders differ")
    prod_ = u * UElement(v.order, v.terms)
    out: dict = defaultdict(Fraction)
    for m, c in prod_.terms.items():
        low = [0] * len(m)
        scalar = c
        for k, e in enumerate(m):
            if not e:
                continue
            a, b = v.order.gens[k]
            if a < b:
                scalar = Fraction(0)
                break
            if a == b:
                scalar *= v.lam[a - 1] ** e
            else:
                low[k] = e
        if scalar:
            out[tuple(low)] += scalar
    return VermaVector(v.order, v.lam, out)


def singular_check(c: PolarCombo, tau: VermaTriple, order: Optional[GeneratorOrder] = None) -> bool:
    """True iff c v_lambda is killed by every E_{p,p+1} and has weight lambda - r(e_i - e_j)."""
    order = order or GeneratorOrder.standard(tau.n)
    if not c:
        warnings.warn("singular_check on the zero combo is vacuous", RuntimeWarning, stacklevel=2)
        return True
    vec = act_on_verma(combo_to_pbw(c, order), VermaVector.highest(order, tau.lam))
    want = [0] * tau.n
    want[tau.i - 1] = -tau.r
    want[tau.j - 1] = tau.r
    if vec and vec.weights() != {tuple(want)}:
        return False
    return all(not raising_action(vec, p) for p in range(1, tau.n))


def raising_action(vec: VermaVector, p: int) -> VermaVector:
    return act_on_verma(UElement.generator(vec.order, (p, p + 1)), vec)


def shapovalov_coefficient(c: PolarCombo, i: int, j: int, r: int, order: GeneratorOrder) -> Fraction:
    u = combo_to_pbw(c, order)
    return u.coefficient(u.monomial_of(sigma_zero(c.n, i, j, r)))


def leading_coefficient_check(sigma: ShiftMatrix, order: GeneratorOrder) -> bool:
    """Coefficient 1/sigma! on F_sigma and lower filtration degree everywhere else."""
    if not sigma.is_lower_triangular() or total_weight(sigma) == 0:
        raise InputError("need a nonzero strictly lower-triangular shift")
    u = polar_to_pbw(sigma, order)
    lead = u.monomial_of(sigma)
    if u.coefficient(lead) != Fraction(1, shift_factorial(sigma)):
        return False
    w = total_weight(sigma)
    return all(sum(m) < w for m in u.terms if m != lead)
