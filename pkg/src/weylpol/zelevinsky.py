"""The Zelevinsky complex of tensor products of symmetric powers.

Level k is the direct sum over permutations of length k of
S^{b_1}V (x) ... (x) S^{b_N}V with b_k = a_k - k + pi(k). Each arrow pair
contributes a block map, a signed amplitude-weighted sum of polarizations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, prod
from typing import Optional, Sequence

from .bruhat import ArrowPair, Permutation, SignatureTable, akin_signature, arrow_pairs, length
from .linalg import RationalMatrix, determinant
from .shifts import DegreeVector, ShiftMatrix, flow_amplitude, is_subordinate, term_set
from .symtensor import _weyl_on_monomial, monomial_basis
from .util import InputError
from .weyl_ops import PolarCombo


@dataclass(frozen=True)
class ZelTerm:
    perm: Permutation
    alpha: tuple[int, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a - k + p for k, (a, p) in enumerate(zip(self.alpha, self.perm), start=1))

    @property
    def is_zero(self) -> bool:
        return any(b < 0 for b in self.degrees)

    def dim(self, m: int) -> int:
        if self.is_zero:
            return 0
        return prod(comb(b + m - 1, m - 1) for b in self.degrees)

    def basis(self, m: int) -> list:
        return monomial_basis(self.degrees, m)

    def to_json(self, m: int) -> dict:
        return {"perm": list(self.perm), "degrees": list(self.degrees), "dim": self.dim(m)}


def zel_amplitude(sigma: ShiftMatrix, a: ArrowPair) -> int:
    """r! prod_{i<k<j} R_k! S_k! C(pi(i) - pi(k), S_k) for the source pi of ``a``."""
    i, j, r = a.i, a.j, a.multiplicity
    if not is_subordinate(sigma, i, j, r):
        raise InputError(f"{sigma} is not in TERM({i},{j},{r})")
    pi = a.source
    amp = flow_amplitude(sigma, i, j, r, lambda k: pi[i - 1] - pi[k - 1])
    assert amp.denominator == 1
    return int(amp)


def differential_block(a: ArrowPair, sgn: SignatureTable) -> PolarCombo:
    n = a.n
    terms = {s: zel_amplitude(s, a) for s in term_set(n, a.i, a.j, a.multiplicity)}
    return PolarCombo(n, terms) * sgn[a]


@dataclass
class ZelComplex:
    n: int
    alpha: tuple[int, ...]
    m: int
    signature: SignatureTable
    levels: list[list[ZelTerm]]
    blocks: dict[ArrowPair, PolarCombo] = field(default_factory=dict)
    _bases: dict = field(default_factory=dict, repr=False)

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def level_basis(self, k: int) -> list[tuple[int, object]]:
        """(term index within level, monomial) in canonical order."""
        if k not in self._bases:
            self._bases[k] = [(t, mono) for t, term in enumerate(self.levels[k])
                              for mono in term.basis(self.m)]
        return self._bases[k]

    def level_dim(self, k: int) -> int:
        return sum(t.dim(self.m) for t in self.levels[k])

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.level_dim(k) for k in range(len(self.levels)))

    def realize(self, k: int) -> RationalMatrix:
        return realize_matrix(self, k)


def build_complex(alpha: Sequence[int] | DegreeVector, m: int,
                  sgn: Optional[SignatureTable] = None) -> ZelComplex:
    alpha = tuple(alpha)
    n = len(alpha)
    if n < 1:
        raise InputError("alpha must be nonempty")
    if m < 1:
        raise InputError("dim V must be >= 1")
    if sgn is None:
        sgn = akin_signature(n) if n >= 2 else SignatureTable(n, {})
    if sgn.n != n:
        raise InputError("signature table size differs from len(alpha)")
    levels: list[list[ZelTerm]] = [[] for _ in range(n * (n - 1) // 2 + 1)]
    for p in sorted(permutations(range(1, n + 1))):
        levels[length(p)].append(ZelTerm(p, alpha))
    blocks = {a: differential_block(a, sgn) for a in arrow_pairs(n)}
    return ZelComplex(n, alpha, m, sgn, levels, blocks)


def realize_matrix(c: ZelComplex, k: int) -> RationalMatrix:
    """Matrix of d_k: level k -> level k-1 in the canonical monomial bases."""
    if not 1 <= k <= c.top:
        raise InputError(f"level must be in 1..{c.top}")
    src, tgt = c.levels[k], c.levels[k - 1]
    col_basis, row_basis = c.level_basis(k), c.level_basis(k - 1)
    row_index = {(tgt[t].perm, mono): a for a, (t, mono) in enumerate(row_basis)}
    by_source: dict[Permutation, list[tuple[ArrowPair, PolarCombo]]] = {}
    for a, block in c.blocks.items():
        by_source.setdefault(a.source, []).append((a, block))
    entries: dict = {}
    for col, (t, mono) in enumerate(col_basis):
        perm = src[t].perm
        for a, block in by_source.get(perm, ()):
            if ZelTerm(a.target, c.alpha).is_zero:
                continue
            for sigma, coeff in block.terms.items():
                for new, w in _weyl_on_monomial(sigma, mono).items():
                    key = (row_index[(a.target, new)], col)
                    entries[key] = entries.get(key, 0) + coeff * w
    return RationalMatrix(len(row_basis), len(col_basis), entries)


def check_dd(c: ZelComplex) -> bool:
    mats = [None] + [realize_matrix(c, k) for k in range(1, c.top + 1)]
    return all((mats[k] @ mats[k + 1]).is_zero() for k in range(1, c.top))


def ranks(c: ZelComplex) -> list[int]:
    """rank d_k for k = 0..top+1, with zeros at both ends."""
    return [0] + [realize_matrix(c, k).rank() for k in range(1, c.top + 1)] + [0]


def homology_dims(c: ZelComplex) -> list[int]:
    rk = ranks(c)
    return [c.level_dim(k) - rk[k] - rk[k + 1] for k in range(c.top + 1)]


def h_dim(d: int, m: int) -> int:
    """dim S^d of an m-dimensional space; 0 for d < 0."""
    return comb(d + m - 1, m - 1) if d >= 0 else 0


def schur_dimension_oracle(alpha: Sequence[int], m: int) -> int:
    """Jacobi-Trudi determinant det(h_{a_i - i + j}) at x = (1, ..., 1)."""
    n = len(alpha)
    mat = [[h_dim(alpha[i] - i + j, m) for j in range(n)] for i in range(n)]
    d = determinant(mat)
    assert d.denominator == 1
    return int(d)


def is_partition(alpha: Sequence[int]) -> bool:
    return all(x >= 0 for x in alpha) and all(x >= y for x, y in zip(alpha, alpha[1:]))


def hook_content_dimension(alpha: Sequence[int], m: int) -> int:
    """prod over boxes of (m + content) / hook, for a partition."""
    if not is_partition(alpha):
        raise InputError("hook-content formula needs a partition")
    rows = [x for x in alpha if x > 0]
    cols = [sum(1 for x in rows if x > c) for c in range(rows[0])] if rows else []
    out = Fraction(1)
    for i, ri in enumerate(rows):
        for j in range(ri):
            hook = (ri - j - 1) + (cols[j] - i - 1) + 1
            out *= Fraction(m + j - i, hook)
    assert out.denominator == 1
    return int(out)


def complex_report(c: ZelComplex, dd: Optional[bool] = None,
                   homology: Optional[list[int]] = None) -> dict:
    out: dict = {
        "n": c.n, "alpha": list(c.alpha), "dim": c.m,
        "levels": [{"terms": [t.to_json(c.m) for t in lvl], "dim": c.level_dim(k)}
                   for k, lvl in enumerate(c.levels)],
        "blocks": [{"arrow": str(a), "sign": c.signature[a], "combo": blk.to_json()}
                   for a, blk in sorted(c.blocks.items(), key=lambda x: (-length(x[0].source), x[0]))],
        "euler_characteristic": c.euler_characteristic(),
        "schur_dimension": schur_dimension_oracle(c.alpha, c.m),
    }
    if dd is not None:
        out["dd_zero"] = dd
    if homology is not None:
        out["homology"] = homology
    return out
