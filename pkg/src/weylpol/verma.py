"""Verma triples and the amplitude-weighted singular-vector elements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bruhat import ArrowPair
from .shifts import ShiftMatrix, flow_amplitude, is_subordinate, term_set, weight_vector
from .util import InputError, Scalar, frac, frac_str
from .weyl_ops import PolarCombo


@dataclass(frozen=True)
class VermaTriple:
    """Root lambda_i - lambda_j, multiplicity r and weight lambda = (l_1..l_N).

    Construction does not enforce the integrality condition; use
    ``is_verma`` or ``require_verma``.
    """

    n: int
    i: int
    j: int
    r: int
    lam: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(frac(x) for x in self.lam))
        if len(self.lam) != self.n:
            raise InputError(f"lambda needs {self.n} entries, got {len(self.lam)}")
        if not (1 <= self.i < self.j <= self.n):
            raise InputError(f"need 1 <= i < j <= n, got i={self.i}, j={self.j}")
        if self.r < 1:
            raise InputError("r must be a positive integer")

    def l(self, k: int) -> Fraction:
        return self.lam[k - 1]

    def shift_value(self) -> Fraction:
        """l_i - l_j - i + j; equals r exactly for a Verma triple."""
        return self.l(self.i) - self.l(self.j) - self.i + self.j

    def is_verma(self) -> bool:
        return self.shift_value() == self.r

    def require_verma(self) -> None:
        if not self.is_verma():
            raise InputError(
                f"Verma condition l_i - l_j - i + j = r fails: "
                f"{frac_str(self.shift_value())} != {self.r}")

    def with_lambda(self, lam: Sequence[Scalar]) -> "VermaTriple":
        return VermaTriple(self.n, self.i, self.j, self.r, tuple(lam))

    def to_json(self) -> dict:
        return {"n": self.n, "i": self.i, "j": self.j, "r": self.r,
                "lambda": [frac_str(x) for x in self.lam]}

    @classmethod
    def from_json(cls, obj: dict) -> "VermaTriple":
        return cls(int(obj["n"]), int(obj["i"]), int(obj["j"]), int(obj["r"]),
                   tuple(frac(x) for x in obj["lambda"]))


def solve_lambda(n: int, i: int, j: int, r: int, free: Sequence[Scalar]) -> VermaTriple:
    """Fill l_j from the condition; ``free`` lists every other entry in order."""
    free = [frac(x) for x in free]
    if len(free) != n - 1:
        raise InputError(f"need {n - 1} free entries")
    lam = free[: j - 1] + [Fraction(0)] + free[j - 1:]
    lam[j - 1] = lam[i - 1] - i + j - r
    return VermaTriple(n, i, j, r, tuple(lam))


def vs_amplitude(sigma: ShiftMatrix, tau: VermaTriple) -> Fraction:
    """r! prod_{i<k<j} R_k! S_k! C(l_i - l_k - i + k, S_k)."""
    if not is_subordinate(sigma, tau.i, tau.j, tau.r):
        raise InputError(f"{sigma} is not in TERM({tau.i},{tau.j},{tau.r})")
    return flow_amplitude(sigma, tau.i, tau.j, tau.r,
                          lambda k: tau.l(tau.i) - tau.l(k) - tau.i + k)


def _amp_or_zero(sigma, tau: VermaTriple) -> Fraction:
    if sigma is None or not is_subordinate(sigma, tau.i, tau.j, tau.r):
        return Fraction(0)
    return vs_amplitude(sigma, tau)


def vs_element(tau: VermaTriple, check: bool = True) -> PolarCombo:
    if check:
        tau.require_verma()
    return PolarCombo(tau.n, {s: vs_amplitude(s, tau)
                              for s in term_set(tau.n, tau.i, tau.j, tau.r)})


def triple_from_arrow(a: ArrowPair, c: Scalar = 0) -> VermaTriple:
    """l_k = pi(k) + k + c, so that l_i - l_k - i + k = pi(i) - pi(k)."""
    c = frac(c)
    lam = tuple(p + k + c for k, p in enumerate(a.source, start=1))
    return VermaTriple(a.n, a.i, a.j, a.multiplicity, lam)


def coefficient_sums(tau: VermaTriple, p: int) -> dict[ShiftMatrix, Fraction]:
    """A_p + B_p + C_p for each sigma in TERM with sigma_{p+1,p} >= 1."""
    i, j = tau.i, tau.j
    if not i <= p <= j - 1:
        raise InputError(f"p must lie in [{i}, {j - 1}]")
    out = {}
    for s in term_set(tau.n, i, j, tau.r):
        if s[p + 1, p] < 1:
            continue
        amp = vs_amplitude(s, tau)
        a = (tau.l(p) - tau.l(p + 1) - s.col_sum(p) + s.col_sum(p + 1) + 1) * amp
        b = sum((s[p, k] * _amp_or_zero(s.shifted(plus=[(p + 1, k)], minus=[(p, k), (p + 1, p)]), tau)
                 for k in range(i, p)), Fraction(0))
        c = -sum((s[k, p + 1] * _amp_or_zero(s.shifted(plus=[(k, p)], minus=[(k, p + 1), (p + 1, p)]), tau)
                  for k in range(p + 2, j + 1)), Fraction(0))
        out[s] = a + b + c
    return out


def coefficient_identity_check(tau: VermaTriple, p: int) -> bool:
    return all(v == 0 for v in coefficient_sums(tau, p).values())


def weight_check(tau: VermaTriple) -> bool:
    want = [0] * tau.n
    want[tau.i - 1] = -tau.r
    want[tau.j - 1] = tau.r
    return all(list(weight_vector(s)) == want for s in term_set(tau.n, tau.i, tau.j, tau.r))
