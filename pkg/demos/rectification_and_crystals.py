#!/usr/bin/env python3
"""Rectification pairs for charge (3,2) and a small crystal graph.

Writes crystal.dot next to the script when --dot is given.
"""

import argparse
from pathlib import Path

from fockbases.crystal import crystal_component, rectify_down, rectify_up
from fockbases.suites import RECTIFICATION_GOLDENS
from fockbases.weights import Charge, IndexSet, Structure, columns, tableau_from_columns


def cols(t):
    return " | ".join(",".join(map(str, c)) for c in columns(t, 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--dot", action="store_true")
    args = ap.parse_args()

    charge = Charge((3, 2), IndexSet(1))
    print("reverse-standard A  ->  A down   (columns read top to bottom)")
    for src, _ in RECTIFICATION_GOLDENS:
        a = tableau_from_columns(charge, src, 1)
        down = rectify_down(a)
        back = rectify_up(down)
        print(f"  {cols(a):>14}  ->  {cols(down):<14}  round trip ok: {back == a}")

    small = Charge((1, 0))
    for structure in Structure:
        g = crystal_component(small, structure, args.depth)
        print(f"\n{structure.value} crystal of charge (1,0), depth {args.depth}: "
              f"{len(g.vertices)} vertices, {len(g.edges)} edges")
        for s, e, i in g.edges[:6]:
            print(f"  {g.vertices[s]} --{i}--> {g.vertices[e]}")
        if args.dot:
            out = Path(__file__).with_name(f"crystal_{structure.value}.dot")
            out.write_text(g.to_dot())
            print(f"  wrote {out}")


if __name__ == "__main__":
    main()
