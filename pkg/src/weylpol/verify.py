"""Randomized and exhaustive invariant suites behind ``weylpol verify``."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Optional

from .bruhat import akin_signature, arrow_pairs, gauge_transform, verify_square_property
from .pbw import (GeneratorOrder, apply_u, leading_coefficient_check, polar_to_pbw,
                  raising_action, shapovalov_coefficient, singular_check, straighten,
                  act_on_verma, combo_to_pbw, VermaVector)
from .shifts import ShiftMatrix, reduced
from .symtensor import (SymTensor, apply_elementary, apply_weyl, apply_weyl_differential,
                        apply_word, diagonal_reduction_factor, random_tensor)
from .util import InputError
from .verma import (VermaTriple, coefficient_identity_check, solve_lambda, vs_element,
                    weight_check)
from .weyl_ops import ElementaryWord, PolarCombo, apply_combo, left_mul, right_mul, word_to_combo
from .zelevinsky import (build_complex, check_dd, homology_dims, hook_content_dimension,
                         is_partition, schur_dimension_oracle)

SUITES = ("equivalence", "recurrences", "signatures", "complex", "vs", "pbw")


@dataclass
class Verdict:
    name: str
    ok: bool
    cases: int = 0
    detail: str = ""


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs,
                "verdicts": [asdict(v) for v in self.verdicts], "ok": self.ok}


def max_threads() -> int:
    raw = os.environ.get("WEYLPOL_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return max(1, min(4, os.cpu_count() or 1))


# ---------------------------------------------------------------- generators

def random_shift(rng: random.Random, n: int, weight: int, lower: bool = False) -> ShiftMatrix:
    rows = [[0] * n for _ in range(n)]
    for _ in range(weight):
        if lower:
            a = rng.randint(2, n)
            b = rng.randint(1, a - 1)
        else:
            a, b = rng.randint(1, n), rng.randint(1, n)
        rows[a - 1][b - 1] += 1
    return ShiftMatrix.from_rows(rows)


def random_case(rng: random.Random, max_n: int = 3, max_m: int = 3, max_w: int = 3,
                max_deg: int = 3) -> tuple[ShiftMatrix, SymTensor]:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    sigma = random_shift(rng, n, rng.randint(0, max_w))
    t = random_tensor(rng, n, m, [rng.randint(0, max_deg) for _ in range(n)], nterms=rng.randint(1, 3))
    return sigma, t


def random_rational(rng: random.Random, span: int = 20, max_den: int = 7) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def verma_grid(max_n: int = 5) -> Iterator[tuple[int, int, int, int]]:
    for n in range(2, max_n + 1):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                for r in (1, 2, 3):
                    if j - i > 4 or (r == 3 and j - i > 3):
                        continue
                    yield n, i, j, r


def random_triples(rng: random.Random, per: int = 3, max_n: int = 5) -> list[VermaTriple]:
    out = []
    for n, i, j, r in verma_grid(max_n):
        for _ in range(per):
            out.append(solve_lambda(n, i, j, r, [random_rational(rng) for _ in range(n - 1)]))
    return out


# ---------------------------------------------------------------- suites

def suite_equivalence(rng: random.Random, cases: int = 200) -> list[Verdict]:
    bad = 0
    for _ in range(cases):
        sigma, t = random_case(rng)
        if apply_weyl(sigma, t) != apply_weyl_differential(sigma, t):
            bad += 1
    return [Verdict("combinatorial_equals_differential", bad == 0, cases, f"{bad} mismatches")]


def suite_recurrences(rng: random.Random, cases: int = 200) -> list[Verdict]:
    left_bad = right_bad = 0
    for _ in range(cases):
        n = rng.randint(2, 3)
        sigma = random_shift(rng, n, rng.randint(0, 4))
        t = random_tensor(rng, n, rng.randint(1, 3), [rng.randint(0, 3) for _ in range(n)])
        i, j = rng.randint(1, n), rng.randint(1, n)
        c = PolarCombo.single(sigma)
        if apply_combo(left_mul(i, j, c), t) != apply_elementary(i, j, apply_weyl(sigma, t)):
            left_bad += 1
        if apply_combo(right_mul(c, i, j), t) != apply_weyl(sigma, apply_elementary(i, j, t)):
            right_bad += 1
    diag_bad = 0
    for _ in range(cases // 2):
        n = rng.randint(1, 3)
        sigma = random_shift(rng, n, rng.randint(0, 4))
        alpha = [rng.randint(0, 4) for _ in range(n)]
        t = random_tensor(rng, n, rng.randint(1, 3), alpha)
        f = diagonal_reduction_factor(sigma, alpha)
        if apply_weyl(sigma, t) != apply_weyl(reduced(sigma), t) * f:
            diag_bad += 1
    lie_bad = lie_cases = 0
    for n in range(1, 5):
        gens = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
        for (a, b), (c, d) in product(gens, gens):
            lhs = word_to_combo(ElementaryWord(n, ((a, b), (c, d)))) - word_to_combo(ElementaryWord(n, ((c, d), (a, b))))
            rhs = PolarCombo(n)
            if b == c:
                rhs = rhs + word_to_combo(ElementaryWord(n, ((a, d),)))
            if d == a:
                rhs = rhs - word_to_combo(ElementaryWord(n, ((c, b),)))
            lie_cases += 1
            lie_bad += lhs != rhs
    comm_bad = 0
    for _ in range(cases // 4):
        n = rng.randint(1, 4)
        t = random_tensor(rng, n, rng.randint(1, 3), [rng.randint(0, 2) for _ in range(n)])
        (a, b), (c, d) = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(2)]
        lhs = apply_word([(a, b), (c, d)], t) - apply_word([(c, d), (a, b)], t)
        rhs = SymTensor.zero(t.n, t.m)
        if b == c:
            rhs = rhs + apply_elementary(a, d, t)
        if d == a:
            rhs = rhs - apply_elementary(c, b, t)
        comm_bad += lhs != rhs
    return [
        Verdict("left_product_formula", left_bad == 0, cases, f"{left_bad} mismatches"),
        Verdict("right_product_formula", right_bad == 0, cases, f"{right_bad} mismatches"),
        Verdict("diagonal_reduction_factor", diag_bad == 0, cases // 2, f"{diag_bad} mismatches"),
        Verdict("capelli_lie_homomorphism", lie_bad == 0, lie_cases, f"{lie_bad} mismatches"),
        Verdict("elementary_commutation_on_tensors", comm_bad == 0, cases // 4, f"{comm_bad} mismatches"),
    ]


N3_SIGNS = (1, 1, -1, 1, 1, -1, 1, 1)


def suite_signatures(rng: random.Random, ns=(2, 3, 4)) -> list[Verdict]:
    out = []
    for n in ns:
        t = akin_signature(n)
        out.append(Verdict(f"square_property_n{n}", verify_square_property(t) and t.is_total(),
                           len(t.signs)))
        if n == 3:
            got = tuple(t[a] for a in arrow_pairs(3, ascending=True))
            out.append(Verdict("n3_sign_table", got == N3_SIGNS, 8, str(got)))
        if n >= 3:
            f = {p: rng.choice((1, -1)) for p in {a.source for a in t.signs} | {a.target for a in t.signs}}
            out.append(Verdict(f"gauge_invariance_n{n}", verify_square_property(gauge_transform(t, f.__getitem__)),
                               len(t.signs)))
    return out


def suite_complex(rng: random.Random, full: bool = True) -> list[Verdict]:
    dd_cases = [(a, m) for m in (2, 3) for a in
                [(1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 2, 1), (3, 1, 1), (1, 1, 1),
                 (0, 2, 1), (0, 1, 2), (1, 3, 0), (-1, 2, 2), (2, 0, 3), (0, 0, 2)]]
    dd_cases.append(((2, 1, 1, 0), 2))
    dd_bad = [str(c) for c in dd_cases if not check_dd(build_complex(*c))]
    top = 4 if full else 2
    parts = [(a, b, c) for a in range(top + 1) for b in range(a + 1) for c in range(b + 1)]
    hom_bad, euler_bad = [], []
    for m in (2, 3):
        for alpha in parts:
            cx = build_complex(alpha, m)
            h = homology_dims(cx)
            want = schur_dimension_oracle(alpha, m)
            if want != hook_content_dimension(alpha, m) or h != [want] + [0] * (len(h) - 1):
                hom_bad.append(f"{alpha},M={m}:{h}")
            if cx.euler_characteristic() != want:
                euler_bad.append(f"{alpha},M={m}")
    non_part = [(a, m) for a, m in dd_cases if not is_partition(a)]
    for alpha, m in non_part:
        if build_complex(alpha, m).euler_characteristic() != schur_dimension_oracle(alpha, m):
            euler_bad.append(f"{alpha},M={m}")
    return [
        Verdict("dd_zero", not dd_bad, len(dd_cases), ";".join(dd_bad)),
        Verdict("partition_homology", not hom_bad, 2 * len(parts), ";".join(hom_bad)),
        Verdict("euler_characteristic", not euler_bad, 2 * len(parts) + len(non_part), ";".join(euler_bad)),
    ]


def suite_vs(rng: random.Random, per: int = 3) -> list[Verdict]:
    triples = random_triples(rng, per)
    w_bad = id_bad = s_bad = neg_bad = 0
    for tau in triples:
        w_bad += not weight_check(tau)
        id_bad += not all(coefficient_identity_check(tau, p) for p in range(tau.i, tau.j))
        s_bad += not singular_check(vs_element(tau), tau)
        lam = list(tau.lam)
        lam[tau.j - 1] += 1
        off = tau.with_lambda(lam)
        c = vs_element(off, check=False)
        vec = act_on_verma(combo_to_pbw(c, GeneratorOrder.standard(tau.n)),
                           VermaVector.highest(GeneratorOrder.standard(tau.n), off.lam))
        raised = any(raising_action(vec, p) for p in range(1, tau.n))
        early = all(coefficient_identity_check(off, p) for p in range(tau.i, tau.j - 1))
        neg_bad += not (raised and early)
    k = len(triples)
    return [
        Verdict("weight_lemma", w_bad == 0, k, f"{w_bad} failures"),
        Verdict("coefficient_identities", id_bad == 0, k, f"{id_bad} failures"),
        Verdict("singular_vectors", s_bad == 0, k, f"{s_bad} failures"),
        Verdict("negative_control", neg_bad == 0, k, f"{neg_bad} failures"),
    ]


def suite_pbw(rng: random.Random, cases: int = 50, per: int = 3) -> list[Verdict]:
    lead_bad = 0
    for _ in range(cases):
        n = rng.randint(2, 4)
        sigma = random_shift(rng, n, rng.randint(1, 5), lower=True)
        order = rng.choice([GeneratorOrder.standard(n), GeneratorOrder.reversed_lowering(n)])
        lead_bad += not leading_coefficient_check(sigma, order)
    shap_bad = 0
    triples = random_triples(rng, per)
    for tau in triples:
        c = vs_element(tau)
        for order in (GeneratorOrder.standard(tau.n), GeneratorOrder.reversed_lowering(tau.n)):
            shap_bad += shapovalov_coefficient(c, tau.i, tau.j, tau.r, order) != 1
    sound_bad = 0
    for _ in range(cases // 2):
        n = rng.randint(2, 3)
        order = rng.choice([GeneratorOrder.standard(n), GeneratorOrder.reversed_lowering(n)])
        t = random_tensor(rng, n, 2, [rng.randint(0, 3) for _ in range(n)])
        word = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 4))]
        sound_bad += apply_u(straighten(word, order), t) != apply_word(word, t)
        sigma = random_shift(rng, n, rng.randint(0, 3))
        sound_bad += apply_u(polar_to_pbw(sigma, order), t) != apply_weyl(sigma, t)
    return [
        Verdict("leading_coefficient", lead_bad == 0, cases, f"{lead_bad} failures"),
        Verdict("shapovalov_normalization", shap_bad == 0, 2 * len(triples), f"{shap_bad} failures"),
        Verdict("straightening_soundness", sound_bad == 0, cases, f"{sound_bad} failures"),
    ]


RUNNERS: dict[str, Callable[[random.Random], list[Verdict]]] = {
    "equivalence": suite_equivalence,
    "recurrences": suite_recurrences,
    "signatures": suite_signatures,
    "complex": suite_complex,
    "vs": suite_vs,
    "pbw": suite_pbw,
}


def run_suites(suite: str, seed: int, n: Optional[int] = None) -> list[Verdict]:
    """Each suite gets its own generator derived from ``seed`` so results do not
    depend on scheduling."""
    names = SUITES if suite == "all" else (suite,)
    if any(s not in RUNNERS for s in names):
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")

    def run(name: str) -> list[Verdict]:
        rng = random.Random(f"{seed}:{name}")
        if name == "signatures" and n is not None:
            return suite_signatures(rng, (n,))
        vs = RUNNERS[name](rng)
        for v in vs:
            v.name = f"{name}.{v.name}"
        return vs

    with ThreadPoolExecutor(max_workers=min(max_threads(), len(names))) as pool:
        results = list(pool.map(run, names))
    out = []
    for name, vs in zip(names, results):
        for v in vs:
            if not v.name.startswith(name + "."):
                v.name = f"{name}.{v.name}"
            out.append(v)
    return out
