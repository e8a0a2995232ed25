"""Print the Akin signature table, grouped by source length."""

import argparse
import json

from weylpol.bruhat import akin_signature, arrow_pairs, canonical_chain, length, perm_str, verify_square_property


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--json", help="write the table to this file")
    args = ap.parse_args()

    table = akin_signature(args.n)
    print("chain:", " -> ".join(perm_str(p) for p in canonical_chain(args.n)))
    current = None
    for a in arrow_pairs(args.n, ascending=True):
        if length(a.source) != current:
            current = length(a.source)
            print(f"\nlength {current}")
        print(f"  {str(a):<28} r={a.multiplicity}  {table[a]:+d}")
    neg = sum(s < 0 for s in table.signs.values())
    print(f"\n{len(table.signs)} arrows, {neg} negative, square property: {verify_square_property(table)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(table.to_json(), fh, indent=1)


if __name__ == "__main__":
    main()
