"""Sparse exact matrices: product, rank and determinant over Q."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .util import InputError, Scalar, frac


class RationalMatrix:
    """rows x cols matrix stored as {(row, col): Fraction}, 0-based."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows, self.cols = rows, cols
        clean = {}
        for (a, b), v in (entries or {}).items():
            if not (0 <= a < rows and 0 <= b < cols):
                raise InputError(f"entry ({a}, {b}) outside {rows}x{cols}")
            v = frac(v)
            if v:
                clean[(a, b)] = v
        self.entries = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(a, b): v for a, row in enumerate(data) for b, v in enumerate(row) if v})

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (a, b), v in self.entries.items():
            out[a][b] = v
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def column(self, b: int) -> dict[int, Fraction]:
        return {a: v for (a, c), v in self.entries.items() if c == b}

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
        for (a, b), v in other.entries.items():
            by_row[a].append((b, v))
        out: dict = defaultdict(Fraction)
        for (a, k), v in self.entries.items():
            for b, w in by_row.get(k, ()):
                out[(a, b)] += v * w
        return RationalMatrix(self.rows, other.cols, out)

    def rank(self) -> int:
        return sparse_rank(self.entries.items())


def _integer_rows(entries: Iterable[tuple[tuple[int, int], Fraction]]) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, Fraction]] = defaultdict(dict)
    for (a, b), v in entries:
        if v:
            rows[a][b] = v
    out = {}
    for a, row in rows.items():
        den = lcm(*(v.denominator for v in row.values()))
        out[a] = {b: int(v * den) for b, v in row.items()}
    return out


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {b: v // g for b, v in row.items()}


def _components(rows: dict[int, dict[int, int]]) -> list[list[int]]:
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, row in rows.items():
        ra = find(("r", a))
        for b in row:
            rb = find(("c", b))
            if ra != rb:
                parent[rb] = ra
    groups: dict = defaultdict(list)
    for a in rows:
        groups[find(("r", a))].append(a)
    return list(groups.values())


def _eliminate(rows: list[dict[int, int]]) -> int:
    """Fraction-free row reduction; returns the rank."""
    rank = 0
    active = [r for r in rows if r]
    while active:
        # pick the sparsest row and its smallest pivot to limit fill-in
        active.sort(key=len)
        pivot_row = active.pop(0)
        col = min(pivot_row, key=lambda b: (abs(pivot_row[b]), b))
        p = pivot_row[col]
        rank += 1
        nxt = []
        for row in active:
            q = row.get(col)
            if q is None:
                nxt.append(row)
                continue
            g = gcd(p, q)
            mp, mq = p // g, q // g
            new = {b: v * mp for b, v in row.items()}
            for b, v in pivot_row.items():
                w = new.get(b, 0) - mq * v
                if w:
                    new[b] = w
                else:
                    new.pop(b, None)
            if new:
                nxt.append(_normalize(new))
        active = nxt
    return rank


def sparse_rank(entries: Iterable[tuple[tuple[int, int], Fraction]]) -> int:
    """Exact rank, eliminating each connected block of the sparsity graph separately."""
    rows = _integer_rows(entries)
    return sum(_eliminate([_normalize(rows[a]) for a in comp]) for comp in _components(rows))


def determinant(data: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by Gaussian elimination over Fractions."""
    n = len(data)
    if any(len(row) != n for row in data):
        raise InputError("determinant needs a square matrix")
    a = [[frac(x) for x in row] for row in data]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det
