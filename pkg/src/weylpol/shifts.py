"""N-shifts: nonnegative integer N x N matrices indexing Weyl polarizations.

All public indices are 1-based. Arithmetic that would create a negative
entry returns ``None`` instead of a matrix; callers treat ``None`` as the
zero operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .util import InputError, Scalar, frac, gbinom


@dataclass(frozen=True, order=True)
class ShiftMatrix:
    """An effective N-shift. ``entries`` is row-major, rows as tuples."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("shift matrix size must be >= 1")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise InputError(f"entries must be {self.n}x{self.n}")
        if any(x < 0 for row in self.entries for x in row):
            raise InputError("shift matrix entries must be nonnegative")

    @classmethod
    def zero(cls, n: int) -> "ShiftMatrix":
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ShiftMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(len(rows), rows)

    @classmethod
    def from_dict(cls, n: int, d: dict[tuple[int, int], int]) -> "ShiftMatrix":
        """Build from {(i, j): count}, 1-based."""
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in d.items():
            rows[i - 1][j - 1] += v
        return cls.from_rows(rows)

    @classmethod
    def unit(cls, n: int, i: int, j: int, mult: int = 1) -> "ShiftMatrix":
        return cls.from_dict(n, {(i, j): mult})

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero entries as (i, j, value), 1-based, row-major."""
        for a, row in enumerate(self.entries):
            for b, v in enumerate(row):
                if v:
                    yield a + 1, b + 1, v

    def __add__(self, other: "ShiftMatrix") -> "ShiftMatrix":
        if self.n != other.n:
            raise InputError("size mismatch")
        return ShiftMatrix(self.n, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def shifted(self, plus: Iterable[tuple[int, int]] = (),
                minus: Iterable[tuple[int, int]] = ()) -> Optional["ShiftMatrix"]:
        """self + sum E_p - sum E_m, or None if the result is ineffective."""
        rows = [list(r) for r in self.entries]
        for i, j in plus:
            rows[i - 1][j - 1] += 1
        for i, j in minus:
            rows[i - 1][j - 1] -= 1
        if any(x < 0 for r in rows for x in r):
            return None
        return ShiftMatrix(self.n, tuple(tuple(r) for r in rows))

    def row_sum(self, i: int) -> int:
        return sum(self.entries[i - 1])

    def col_sum(self, j: int) -> int:
        return sum(row[j - 1] for row in self.entries)

    def is_lower_triangular(self) -> bool:
        return all(i > j for i, j, _ in self.items())

    def __str__(self) -> str:
        parts = [f"{v}E{i},{j}" if v > 1 else f"E{i},{j}" for i, j, v in self.items()]
        return "+".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "ShiftMatrix":
        m = cls.from_rows(obj["entries"])
        if "n" in obj and obj["n"] != m.n:
            raise InputError("n does not match entries")
        return m


@dataclass(frozen=True)
class DegreeVector:
    """Multidegree (a_1, ..., a_N); negative entries stand for the zero space."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, k):
        return self.degrees[k]

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees)}

    @classmethod
    def from_json(cls, obj: dict) -> "DegreeVector":
        return cls(tuple(obj["degrees"]))


@dataclass(frozen=True)
class SelectionFamily:
    """One way of moving letters: ``sets[i][j]`` (0-based storage) holds the
    positions in slot j+1 that move to slot i+1."""

    sets: tuple[tuple[frozenset, ...], ...]

    def get(self, i: int, j: int) -> frozenset:
        return self.sets[i - 1][j - 1]

    def unmoved(self, j: int, a_j: int) -> frozenset:
        used = frozenset().union(*(row[j - 1] for row in self.sets))
        return frozenset(range(1, a_j + 1)) - used


def shift_factorial(sigma: ShiftMatrix) -> int:
    return prod(factorial(v) for _, _, v in sigma.items())


def weight_vector(sigma: ShiftMatrix) -> tuple[int, ...]:
    """Row sums minus column sums."""
    return tuple(sigma.row_sum(k) - sigma.col_sum(k) for k in range(1, sigma.n + 1))


def total_weight(sigma: ShiftMatrix) -> int:
    return sum(v for _, _, v in sigma.items())


def reduced(sigma: ShiftMatrix) -> ShiftMatrix:
    return ShiftMatrix(sigma.n, tuple(
        tuple(0 if a == b else v for b, v in enumerate(row))
        for a, row in enumerate(sigma.entries)))


def _check_range(n: int, i: int, j: int, r: int) -> None:
    if not (1 <= i < j <= n):
        raise InputError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if r < 1:
        raise InputError(f"r must be a positive integer, got {r}")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def term_set(n: int, i: int, j: int, r: int) -> list[ShiftMatrix]:
    """All shifts in TERM(i, j, r), sorted row-major lexicographically.

    The conditions are flow conservation on the path graph i -> ... -> j:
    column q distributes what arrived at node q over the later nodes.
    """
    _check_range(n, i, j, r)
    out: list[ShiftMatrix] = []
    rows = [[0] * n for _ in range(n)]

    def rec(q: int, inflow: list[int]) -> None:
        if q == j:
            out.append(ShiftMatrix(n, tuple(tuple(row) for row in rows)))
            return
        amount = inflow[q]
        targets = list(range(q + 1, j + 1))
        for comp in _compositions(amount, len(targets)):
            for t, v in zip(targets, comp):
                rows[t - 1][q - 1] = v
                inflow[t] += v
            rec(q + 1, inflow)
            for t, v in zip(targets, comp):
                rows[t - 1][q - 1] = 0
                inflow[t] -= v

    inflow = [0] * (n + 2)
    inflow[i] = r
    rec(i, inflow)
    out.sort(key=lambda s: s.entries)
    return out


def is_subordinate(sigma: ShiftMatrix, i: int, j: int, r: int) -> bool:
    """Membership test for TERM(i, j, r) without enumerating it."""
    if not (1 <= i < j <= sigma.n) or r < 1:
        return False
    for p, q, _ in sigma.items():
        if not (i <= q < p <= j):
            return False
    if sum(sigma[l, i] for l in range(i + 1, j + 1)) != r:
        return False
    return all(sigma.row_sum(k) == sigma.col_sum(k) for k in range(i + 1, j))


def route_flow(sigma: ShiftMatrix, k: int) -> int:
    """R_k: the common value of column-k and row-k sums."""
    c, rw = sigma.col_sum(k), sigma.row_sum(k)
    if c != rw:
        raise ValueError(f"route flow undefined at k={k}: column sum {c} != row sum {rw}")
    return c


def flow_amplitude(sigma: ShiftMatrix, i: int, j: int, r: int,
                   top: Callable[[int], Scalar]) -> Fraction:
    """r! * prod_{i<k<j} R_k! S_k! C(top(k), S_k), with S_k = r - R_k.

    Shared kernel of both amplitude formulas; they differ only in ``top``.
    """
    out = Fraction(factorial(r))
    for k in range(i + 1, j):
        rk = route_flow(sigma, k)
        sk = r - rk
        if sk < 0:
            return Fraction(0)
        out *= factorial(rk) * factorial(sk) * gbinom(frac(top(k)), sk)
    return out


def selection_count(sigma: ShiftMatrix, alpha: Sequence[int]) -> int:
    alpha = tuple(alpha)
    if len(alpha) != sigma.n:
        raise InputError("degree vector length must equal n")
    total = 1
    for c in range(1, sigma.n + 1):
        a = alpha[c - 1]
        col = [sigma[rw, c] for rw in range(1, sigma.n + 1)]
        rest = a - sum(col)
        if rest < 0:
            return 0
        total *= factorial(a) // (prod(factorial(x) for x in col) * factorial(rest))
    return total


def enumerate_selections(sigma: ShiftMatrix, alpha: Sequence[int]) -> list[SelectionFamily]:
    """Every sigma-selection from alpha: per column, disjoint position sets."""
    alpha = tuple(alpha)
    n = sigma.n
    if len(alpha) != n or any(a < 0 for a in alpha):
        raise InputError("alpha must have n nonnegative entries")

    def column_choices(c: int) -> list[tuple[frozenset, ...]]:
        sizes = [sigma[rw, c] for rw in range(1, n + 1)]
        found: list[tuple[frozenset, ...]] = []

        def rec(rw: int, free: frozenset, acc: list[frozenset]) -> None:
            if rw == n:
                found.append(tuple(acc))
                return
            for chosen in combinations(sorted(free), sizes[rw]):
                s = frozenset(chosen)
                rec(rw + 1, free - s, acc + [s])

        rec(0, frozenset(range(1, alpha[c - 1] + 1)), [])
        return found

    families: list[list[tuple[frozenset, ...]]] = [[]]
    for c in range(1, n + 1):
        families = [f + [col] for f in families for col in column_choices(c)]
    # families[...][c] is the column tuple; transpose to sets[i][j]
    out = []
    for f in families:
        sets = tuple(tuple(f[c][rw] for c in range(n)) for rw in range(n))
        out.append(SelectionFamily(sets))
    return out


def sigma_zero(n: int, i: int, j: int, r: int) -> ShiftMatrix:
    """r * (E_{i+1,i} + ... + E_{j,j-1}): the heaviest member of TERM(i, j, r)."""
    _check_range(n, i, j, r)
    return ShiftMatrix.from_dict(n, {(k + 1, k): r for k in range(i, j)})
