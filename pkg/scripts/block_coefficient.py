"""Adjudicate the P(2E42) coefficient of the [2341] -> (2,4) [2143] block.

Computes the three amplitudes, then scans candidate values for the last
coefficient and reports which ones give a singular vector in M(lambda).
"""

import argparse
from fractions import Fraction

from weylpol.bruhat import akin_signature, arrow_from
from weylpol.shifts import ShiftMatrix
from weylpol.verma import triple_from_arrow
from weylpol.pbw import singular_check
from weylpol.weyl_ops import PolarCombo
from weylpol.zelevinsky import zel_amplitude


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--candidates", default="-4,-2,0,1,2,3,4,6,8")
    args = ap.parse_args()

    arrow = arrow_from((2, 3, 4, 1), 2, 4)
    sign = akin_signature(4)[arrow]
    lo = ShiftMatrix.from_dict(4, {(3, 2): 2, (4, 3): 2})
    mid = ShiftMatrix.from_dict(4, {(3, 2): 1, (4, 3): 1, (4, 2): 1})
    hi = ShiftMatrix.from_dict(4, {(4, 2): 2})
    amps = [zel_amplitude(s, arrow) for s in (lo, mid, hi)]
    print(f"arrow {arrow}  multiplicity {arrow.multiplicity}  sign {sign:+d}")
    for s, a in zip((lo, mid, hi), amps):
        print(f"  {str(s):<18} amplitude {a}")

    for c in (0, Fraction(5, 2), -3):
        tau = triple_from_arrow(arrow, c)
        print(f"\nlambda = {[str(x) for x in tau.lam]}")
        for cand in (Fraction(x) for x in args.candidates.split(",")):
            combo = PolarCombo(4, {lo: amps[0], mid: amps[1], hi: cand})
            ok = singular_check(combo, tau)
            print(f"  last coefficient {str(cand):>3}: {'singular' if ok else 'not singular'}")


if __name__ == "__main__":
    main()
