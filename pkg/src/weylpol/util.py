"""Small shared helpers: exact scalars, binomials, input errors."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class InputError(ValueError):
    """Raised when an operation's precondition on its arguments fails."""


def frac(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def frac_str(x) -> str:
    """Serialize an exact scalar as "p/q" (or "p" when integral)."""
    x = frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def gbinom(x: Scalar, s: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-s+1)/s! for rational x; 0 for s < 0."""
    if s < 0:
        return Fraction(0)
    x = frac(x)
    num = Fraction(1)
    for t in range(s):
        num *= x - t
    return num / factorial(s)


def binom0(n: int, k: int) -> int:
    """Counting binomial: 0 unless 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def falling(n: int, k: int) -> int:
    """n(n-1)...(n-k+1); zero once the product passes through 0."""
    out = 1
    for t in range(k):
        out *= n - t
    return out
