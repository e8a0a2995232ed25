"""Run the singular-vector checks over a grid of Verma triples and time them."""

import argparse
import random
import time
from collections import defaultdict

from weylpol.pbw import GeneratorOrder, shapovalov_coefficient, singular_check
from weylpol.verify import random_triples
from weylpol.verma import coefficient_identity_check, vs_element, weight_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--per", type=int, default=3, help="random lambdas per (n, i, j, r)")
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    by_shape = defaultdict(lambda: [0, 0, 0.0])
    for tau in random_triples(rng, args.per, args.max_n):
        start = time.perf_counter()
        c = vs_element(tau)
        ok = (weight_check(tau)
              and all(coefficient_identity_check(tau, p) for p in range(tau.i, tau.j))
              and singular_check(c, tau)
              and all(shapovalov_coefficient(c, tau.i, tau.j, tau.r, o) == 1
                      for o in (GeneratorOrder.standard(tau.n), GeneratorOrder.reversed_lowering(tau.n))))
        row = by_shape[(tau.n, tau.j - tau.i, tau.r)]
        row[0] += 1
        row[1] += ok
        row[2] += time.perf_counter() - start
    print(f"{'n':>2} {'j-i':>3} {'r':>2} {'cases':>5} {'pass':>5} {'ms/case':>8}")
    for (n, span, r), (cases, passed, secs) in sorted(by_shape.items()):
        print(f"{n:>2} {span:>3} {r:>2} {cases:>5} {passed:>5} {1000 * secs / cases:>8.1f}")


if __name__ == "__main__":
    main()
