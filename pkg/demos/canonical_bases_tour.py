#!/usr/bin/env python3
"""Walk through the four bases of one small Fock-space weight space.

Run:  python3 demos/canonical_bases_tour.py [--charge 1,0] [--alpha 0:1,1:1]
"""

import argparse

from fockbases.cli import parse_alpha, parse_charge
from fockbases.fock import build_basis_bundle, check_maincb
from fockbases.weights import IndexSet, is_restricted, is_reverse_restricted


def show(name, m):
    width = max(len(str(m[r, c])) for r in m.rows for c in m.cols) + 2
    print(f"\n{name}  (column B = image of basis vector B)")
    for r in m.rows:
        print("  " + "".join(str(m[r, c]).rjust(width) for c in m.cols) + f"   {r}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--charge", default="1,0")
    ap.add_argument("--alpha", default="0:1,1:1")
    args = ap.parse_args()

    charge = parse_charge(args.charge, IndexSet())
    alpha = parse_alpha(args.alpha, charge)
    b = build_basis_bundle(charge, alpha)

    print(f"charge {charge}, block {alpha.label()}: {len(b.labels)} tableaux")
    for t in b.labels:
        flags = [f for f, ok in (("standard", is_restricted(t)), ("reverse", is_reverse_restricted(t))) if ok]
        print(f"  {t}  {' '.join(flags)}")

    # p comes from KL polynomials; everything else is triangular algebra on top
    show("parabolic KL p", b.p)
    show("dual-canonical L = p(-q)", b.L)
    show("d = L^-1", b.d)
    show("bar involution on monomials", b.bar.matrix)
    show("canonical T", b.T)

    rep = check_maincb(b)
    print(f"\nP_A = q^{b.a} T_(A up) for standard A: {'holds' if rep.passed else rep.witness}")


if __name__ == "__main__":
    main()
