"""Homology of the complex over a grid of integer alpha.

For partitions the homology should be the Weyl module in degree 0. For
other alpha, the script records where the homology lives and compares it
with the Jacobi-Trudi value.
"""

import argparse
import csv
import sys
import time
from itertools import product

from weylpol.zelevinsky import build_complex, check_dd, homology_dims, is_partition, schur_dimension_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--lo", type=int, default=-1)
    ap.add_argument("--hi", type=int, default=3)
    ap.add_argument("--dims", default="2,3")
    ap.add_argument("--csv", help="write rows here instead of stdout")
    ap.add_argument("--dd", action="store_true", help="also check d o d = 0")
    args = ap.parse_args()

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    writer = csv.writer(out)
    writer.writerow(["alpha", "M", "partition", "homology", "jacobi_trudi", "exact_above_0", "dd_zero", "seconds"])
    failures = 0
    for m in (int(x) for x in args.dims.split(",")):
        for alpha in product(range(args.lo, args.hi + 1), repeat=args.n):
            start = time.perf_counter()
            cx = build_complex(alpha, m)
            h = homology_dims(cx)
            dd = check_dd(cx) if args.dd else ""
            exact = all(x == 0 for x in h[1:])
            failures += not exact
            writer.writerow([" ".join(map(str, alpha)), m, is_partition(alpha), " ".join(map(str, h)),
                             schur_dimension_oracle(alpha, m), exact, dd, f"{time.perf_counter() - start:.3f}"])
    if args.csv:
        out.close()
    print(f"cases with homology above degree 0: {failures}", file=sys.stderr)


if __name__ == "__main__":
    main()
