#!/usr/bin/env python3
"""Decomposition numbers at q=1 checked against explicit Specht modules.

For every block of size d of the chosen charge this builds S(A) as an
induced module, reads off its formal character, and compares with the
characters predicted by the KL-side matrix d_{A,B}(1).
"""

import argparse

from fockbases.cli import parse_charge
from fockbases.fock import decomposition_matrix_q1
from fockbases.hecke import block_split, check_dimension, consistency_check
from fockbases.weights import IndexSet


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--charge", default="1,0")
    ap.add_argument("--d", type=int, default=3)
    args = ap.parse_args()
    charge = parse_charge(args.charge, IndexSet())

    ok, dim = check_dimension(charge.charges, args.d)
    print(f"dim H_{args.d} for charge {charge}: {dim} ({'matches' if ok else 'does not match'} l^d d!)")

    for alpha in block_split(charge, args.d):
        rows, cols, D = decomposition_matrix_q1(charge, alpha)
        rep = consistency_check(charge, alpha)
        print(f"\nblock {alpha.label()}: {'consistent' if rep.passed else rep.witness}")
        print("  d(1):  " + "  ".join(str(c) for c in cols))
        for a, row in zip(rows, D):
            print(f"  {str(a):>20}  {row}")
        for b, ch in rep.characters.items():
            print(f"  ch S({b}) = {ch.to_json()}")


if __name__ == "__main__":
    main()
