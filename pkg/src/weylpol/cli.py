"""Command-line interface: ``weylpol <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .bruhat import akin_signature, arrow_from, parse_permutation, verify_square_property
from .pbw import GeneratorOrder, combo_to_pbw, shapovalov_coefficient, singular_check
from .shifts import ShiftMatrix, term_set
from .symtensor import SymTensor, apply_word
from .util import InputError, frac, frac_str
from .verify import RunReport, Verdict, run_suites
from .verma import VermaTriple, coefficient_identity_check, vs_amplitude, vs_element, weight_check
from .weyl_ops import ElementaryWord, PolarCombo, apply_combo
from .zelevinsky import build_complex, check_dd, complex_report, homology_dims, zel_amplitude


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _fracs(text: str) -> list[Fraction]:
    try:
        return [frac(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected comma-separated rationals, got {text!r}") from None


def _root(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise InputError("--root takes i,j")
    return vals[0], vals[1]


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def _order(n: int, text: Optional[str]) -> GeneratorOrder:
    if text in (None, "lex"):
        return GeneratorOrder.standard(n)
    if text == "reversed":
        return GeneratorOrder.reversed_lowering(n)
    pairs = []
    for tok in text.split(";"):
        a = _ints(tok)
        if len(a) != 2:
            raise InputError(f"bad generator {tok!r} in --order")
        pairs.append(tuple(a))
    return GeneratorOrder.standard(n, pairs)


# ---------------------------------------------------------------- commands

def cmd_term_set(args) -> RunReport:
    shifts = term_set(args.n, args.i, args.j, args.r)
    rep = RunReport("term-set", {"n": args.n, "i": args.i, "j": args.j, "r": args.r})
    rep.outputs = {"count": len(shifts), "shifts": [s.to_json() for s in shifts],
                   "labels": [str(s) for s in shifts]}
    return rep


def cmd_amplitude(args) -> RunReport:
    i, j = _root(args.root)
    rep = RunReport("amplitude", {"n": args.n, "root": [i, j], "r": args.r})
    rows = []
    if args.perm:
        a = arrow_from(parse_permutation(args.perm), i, j)
        if a.multiplicity != args.r and args.r is not None:
            raise InputError(f"arrow has multiplicity {a.multiplicity}, not {args.r}")
        rep.inputs["arrow"] = str(a)
        for s in term_set(a.n, i, j, a.multiplicity):
            rows.append({"shift": str(s), "amplitude": frac_str(zel_amplitude(s, a))})
    else:
        if args.lam is None:
            raise InputError("amplitude needs --perm or --lambda")
        tau = VermaTriple(args.n, i, j, args.r, tuple(_fracs(args.lam)))
        rep.inputs["lambda"] = [frac_str(x) for x in tau.lam]
        for s in term_set(args.n, i, j, args.r):
            rows.append({"shift": str(s), "amplitude": frac_str(vs_amplitude(s, tau))})
    rep.outputs = {"amplitudes": rows}
    return rep


def cmd_vs(args) -> RunReport:
    i, j = _root(args.root)
    tau = VermaTriple(args.n, i, j, args.r, tuple(_fracs(args.lam)))
    if not args.no_check:
        tau.require_verma()
    c = vs_element(tau, check=False)
    rep = RunReport("vs", {"triple": tau.to_json()})
    rep.outputs = {"combo": c.to_json(), "text": str(c)}
    order = _order(args.n, args.order)
    if args.pbw:
        u = combo_to_pbw(c, order)
        rep.outputs["pbw"] = u.to_json()
        rep.outputs["pbw_text"] = str(u)
    if args.check:
        rep.verdicts = [
            Verdict("verma_condition", tau.is_verma()),
            Verdict("weight", weight_check(tau)),
            Verdict("coefficient_identities", all(coefficient_identity_check(tau, p) for p in range(i, j))),
            Verdict("singular", singular_check(c, tau, order)),
            Verdict("shapovalov_one", shapovalov_coefficient(c, i, j, args.r, order) == 1),
        ]
    return rep


def cmd_zel(args) -> RunReport:
    alpha = _ints(args.alpha)
    if len(alpha) != args.n:
        raise InputError(f"--alpha has {len(alpha)} entries, --n is {args.n}")
    cx = build_complex(alpha, args.dim)
    dd = check_dd(cx) if args.check_dd else None
    hom = homology_dims(cx) if args.homology else None
    rep = RunReport("zel", {"n": args.n, "alpha": alpha, "dim": args.dim})
    rep.outputs = complex_report(cx, dd, hom)
    if dd is not None:
        rep.verdicts.append(Verdict("dd_zero", dd))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep.outputs, fh, indent=2, sort_keys=True)
    return rep


def cmd_signatures(args) -> RunReport:
    t = akin_signature(args.n)
    rep = RunReport("signatures", {"n": args.n})
    rep.outputs = t.to_json()
    rep.verdicts.append(Verdict("square_property", verify_square_property(t)))
    return rep


def cmd_pbw(args) -> RunReport:
    obj = _load_json(args.shift)
    try:
        if "terms" in obj:
            c = PolarCombo.from_json(obj)
        else:
            c = PolarCombo.single(ShiftMatrix.from_json(obj))
    except (KeyError, TypeError) as e:
        raise InputError(f"{args.shift}: expected a shift or combo JSON object") from e
    order = _order(c.n, args.order)
    u = combo_to_pbw(c, order)
    rep = RunReport("pbw", {"combo": c.to_json(), "order": order.to_json()})
    rep.outputs = {"pbw": u.to_json(), "text": str(u)}
    return rep


def cmd_apply(args) -> RunReport:
    try:
        t = SymTensor.from_json(_load_json(args.tensor))
        if args.combo:
            c = PolarCombo.from_json(_load_json(args.combo))
            res = apply_combo(c, t)
        elif args.word:
            w = ElementaryWord.from_json(_load_json(args.word))
            res = apply_word(w.factors, t)
        else:
            raise InputError("apply needs --combo or --word")
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed input JSON: {e}") from e
    rep = RunReport("apply", {"tensor": args.tensor})
    rep.outputs = {"result": res.to_json()}
    return rep


def cmd_verify(args) -> RunReport:
    rep = RunReport("verify", {"suite": args.suite, "seed": args.seed, "n": args.n})
    rep.verdicts = run_suites(args.suite, args.seed, args.n)
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylpol", description="Weyl polarizations, Zelevinsky complexes and Verma singular vectors.")
    p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("term-set", help="list TERM(i, j, r)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_term_set)

    s = sub.add_parser("amplitude", help="amplitudes of TERM members for an arrow or a Verma triple")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--root", required=True, help="i,j")
    s.add_argument("--r", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--perm", help="source permutation of the arrow pair, e.g. 231")
    g.add_argument("--lambda", dest="lam", help="l1,...,lN")
    s.set_defaults(func=cmd_amplitude)

    s = sub.add_parser("vs", help="singular-vector element of a Verma triple")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--root", required=True, help="i,j")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--lambda", dest="lam", required=True, help="l1,...,lN (rationals p/q allowed)")
    s.add_argument("--pbw", action="store_true")
    s.add_argument("--check", action="store_true")
    s.add_argument("--no-check", action="store_true", help="skip the Verma condition")
    s.add_argument("--order", help="lex, reversed, or 'a,b;c,d;...' lowering order")
    s.set_defaults(func=cmd_vs)

    s = sub.add_parser("zel", help="build the Zelevinsky complex")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--check-dd", action="store_true")
    s.add_argument("--homology", action="store_true")
    s.add_argument("--json", help="also write the report to this file")
    s.set_defaults(func=cmd_zel)

    s = sub.add_parser("signatures", help="Akin signature table")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_signatures)

    s = sub.add_parser("pbw", help="PBW normal form of a shift or combo")
    s.add_argument("--shift", required=True, help="JSON file with a shift matrix or polar combo")
    s.add_argument("--order")
    s.set_defaults(func=cmd_pbw)

    s = sub.add_parser("apply", help="apply a combo or word to a tensor")
    s.add_argument("--tensor", required=True)
    s.add_argument("--combo")
    s.add_argument("--word")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("verify", help="run invariant suites")
    s.add_argument("--suite", default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", type=int, help="restrict the signatures suite to one n")
    s.set_defaults(func=cmd_verify)
    return p


def _pretty(rep: RunReport) -> str:
    lines = [f"== {rep.command} {json.dumps(rep.inputs, sort_keys=True)}"]
    for key, val in rep.outputs.items():
        if isinstance(val, str):
            lines.append(f"{key}: {val}")
        elif key in ("labels",):
            lines.extend(f"  {x}" for x in val)
        elif key == "amplitudes":
            lines.extend(f"  {row['shift']:<30} {row['amplitude']}" for row in val)
        elif key in ("homology", "dd_zero", "count", "euler_characteristic", "schur_dimension"):
            lines.append(f"{key}: {val}")
    for v in rep.verdicts:
        lines.append(f"[{'PASS' if v.ok else 'FAIL'}] {v.name}" + (f"  ({v.detail})" if v.detail else ""))
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.pretty:
        print(_pretty(rep))
    else:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
