"""Permutations, Bruhat covers and the Akin-normalized BGG signature.

Permutations are tuples in one-line notation. An arrow pair (pi, pi') has
pi' equal to pi with two positions swapped and exactly one fewer
inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .util import InputError

Permutation = tuple[int, ...]


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"not a permutation of 1..{len(p)}: {list(p)}")
    return p


def parse_permutation(text: str) -> Permutation:
    """Accepts "2341", "[2341]" or "2,3,4,1"."""
    s = text.strip().strip("[]")
    parts = s.split(",") if "," in s else list(s)
    try:
        return check_permutation([int(x) for x in parts if x.strip()])
    except ValueError as e:
        raise InputError(f"bad permutation {text!r}") from e


def perm_str(p: Permutation) -> str:
    if len(p) < 10:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def length(p: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def swap(p: Permutation, i: int, j: int) -> Permutation:
    """Swap positions i and j (1-based), i.e. right multiplication by (i, j)."""
    q = list(p)
    q[i - 1], q[j - 1] = q[j - 1], q[i - 1]
    return tuple(q)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


@dataclass(frozen=True, order=True)
class ArrowPair:
    source: Permutation
    target: Permutation
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j <= len(self.source)):
            raise InputError("need i < j within range")
        if swap(self.source, self.i, self.j) != self.target:
            raise InputError("target is not source with positions i, j swapped")
        if self.source[self.i - 1] < self.source[self.j - 1]:
            raise InputError("need pi(i) > pi(j)")
        if length(self.target) != length(self.source) - 1:
            raise InputError("not a Bruhat cover: length must drop by exactly one")

    @property
    def n(self) -> int:
        return len(self.source)

    @property
    def transposition(self) -> tuple[int, int]:
        return (self.i, self.j)

    @property
    def multiplicity(self) -> int:
        return self.source[self.i - 1] - self.source[self.j - 1]

    def __str__(self) -> str:
        return f"[{perm_str(self.source)}]->({self.i},{self.j})[{perm_str(self.target)}]"

    def to_json(self) -> dict:
        return {"from": list(self.source), "to": list(self.target),
                "transposition": [self.i, self.j], "r": self.multiplicity}

    @classmethod
    def from_json(cls, obj: dict) -> "ArrowPair":
        src = check_permutation(obj["from"])
        i, j = obj["transposition"]
        a = cls(src, check_permutation(obj["to"]), int(i), int(j))
        if "r" in obj and int(obj["r"]) != a.multiplicity:
            raise InputError("stated multiplicity does not match")
        return a


def arrow_from(source: Sequence[int], i: int, j: int) -> ArrowPair:
    src = check_permutation(source)
    return ArrowPair(src, swap(src, i, j), i, j)


def arrows_down(p: Permutation) -> list[ArrowPair]:
    n, lp = len(p), length(p)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if p[i - 1] > p[j - 1]:
                q = swap(p, i, j)
                if length(q) == lp - 1:
                    out.append(ArrowPair(p, q, i, j))
    return out


@lru_cache(maxsize=None)
def _arrow_pairs(n: int) -> tuple[ArrowPair, ...]:
    if n < 1:
        raise InputError("n must be >= 1")
    out = [a for p in permutations(range(1, n + 1)) for a in arrows_down(p)]
    out.sort(key=lambda a: (-length(a.source), a.source, a.target))
    return tuple(out)


def arrow_pairs(n: int, ascending: bool = False) -> list[ArrowPair]:
    """All arrow pairs, by source length (descending unless ``ascending``), then lexicographic."""
    out = list(_arrow_pairs(n))
    if ascending:
        out.sort(key=lambda a: (length(a.source), a.source, a.target))
    return out


def squares(n: int) -> list[tuple[ArrowPair, ArrowPair, ArrowPair, ArrowPair]]:
    """Every (w1->w2, w2->w4, w1->w3, w3->w4) with w2 < w3."""
    out = []
    for p in permutations(range(1, n + 1)):
        down = arrows_down(p)
        below: dict[Permutation, list[tuple[ArrowPair, ArrowPair]]] = {}
        for a in down:
            for b in arrows_down(a.target):
                below.setdefault(b.target, []).append((a, b))
        for w4, paths in sorted(below.items()):
            paths.sort(key=lambda ab: ab[0].target)
            for x in range(len(paths)):
                for y in range(x + 1, len(paths)):
                    (a, b), (c, d) = paths[x], paths[y]
                    if a.target != c.target:
                        out.append((a, b, c, d))
    return out


def canonical_chain(n: int) -> list[Permutation]:
    """Identity up to the longest element through the blocks
    [s_{n-1}], [s_{n-2}, s_{n-1}], ..., [s_1, ..., s_{n-1}]."""
    if n < 2:
        raise InputError("canonical chain needs n >= 2")
    chain = [identity(n)]
    for start in range(n - 1, 0, -1):
        for k in range(start, n):
            chain.append(swap(chain[-1], k, k + 1))
    return chain


def chain_steps(n: int) -> list[int]:
    """q_p with w_{p+1} = w_p * (q_p, q_p + 1)."""
    return [k for start in range(n - 1, 0, -1) for k in range(start, n)]


def lower_interval(w: Permutation) -> frozenset:
    """Every permutation reachable from w by descending arrow pairs, w included."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for p in frontier:
            for a in arrows_down(p):
                if a.target not in seen:
                    seen.add(a.target)
                    nxt.append(a.target)
        frontier = nxt
    return frozenset(seen)


class SignatureTable:
    """Map from arrow pairs to +1 / -1."""

    def __init__(self, n: int, signs: dict[ArrowPair, int]):
        for a, s in signs.items():
            if s not in (1, -1):
                raise InputError(f"sign must be +1 or -1, got {s} on {a}")
        self.n = n
        self.signs = dict(signs)

    def __getitem__(self, a: ArrowPair) -> int:
        return self.signs[a]

    def sign(self, source: Sequence[int], target: Sequence[int]) -> int:
        src, tgt = tuple(source), tuple(target)
        for a in arrows_down(src):
            if a.target == tgt:
                return self.signs[a]
        raise KeyError(f"no arrow pair {src} -> {tgt}")

    def __eq__(self, other) -> bool:
        return isinstance(other, SignatureTable) and self.n == other.n and self.signs == other.signs

    def is_total(self) -> bool:
        return set(self.signs) == set(arrow_pairs(self.n))

    def flipped(self, a: ArrowPair) -> "SignatureTable":
        d = dict(self.signs)
        d[a] = -d[a]
        return SignatureTable(self.n, d)

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [dict(a.to_json(), sign=self.signs[a])
                                        for a in arrow_pairs(self.n) if a in self.signs]}

    @classmethod
    def from_json(cls, obj: dict) -> "SignatureTable":
        signs = {ArrowPair.from_json(x): int(x["sign"]) for x in obj["arrows"]}
        return cls(int(obj["n"]), signs)


class SignatureError(RuntimeError):
    """The inductive construction hit a missing value or broke a square."""


def akin_signature(n: int) -> SignatureTable:
    chain = canonical_chain(n)
    steps = chain_steps(n)
    signs: dict[tuple[Permutation, Permutation], int] = {}
    prev = lower_interval(chain[0])

    def lookup(a: Permutation, b: Permutation) -> int:
        try:
            return signs[(a, b)]
        except KeyError:
            raise SignatureError(f"missing sign for {a} -> {b}") from None

    for p in range(len(steps)):
        q = steps[p]
        cur = lower_interval(chain[p + 1])
        for w in sorted(cur - prev, key=length):
            for a in arrows_down(w):
                w2 = a.target
                if a.transposition == (q, q + 1):
                    signs[(w, w2)] = 1
                    continue
                ws, w2s = swap(w, q, q + 1), swap(w2, q, q + 1)
                if ws not in prev or w2s not in prev:
                    raise SignatureError(f"exchange lemma failed at {w} -> {w2}")
                if w2 not in prev:
                    signs[(w, w2)] = -lookup(ws, w2s)
                else:
                    signs[(w, w2)] = -lookup(ws, w2s) * lookup(w2, w2s)
        prev = cur

    table = SignatureTable(n, {a: signs[(a.source, a.target)] for a in arrow_pairs(n)})
    if not verify_square_property(table):
        raise SignatureError("square property violated")
    return table


def verify_square_property(t: SignatureTable) -> bool:
    for sq in squares(t.n):
        try:
            prod = 1
            for a in sq:
                prod *= t[a]
        except KeyError:
            return False
        if prod != -1:
            return False
    return True


def gauge_transform(t: SignatureTable, f: Callable[[Permutation], int]) -> SignatureTable:
    """s'(a) = s(a) f(source) f(target); preserves the square property."""
    return SignatureTable(t.n, {a: s * f(a.source) * f(a.target) for a, s in t.signs.items()})
