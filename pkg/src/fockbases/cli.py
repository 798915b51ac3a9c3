"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 invalid configuration,
3 an internal invariant broke (never expected).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import export
from .crystal import NotReverseStandard, NotStandard, crystal_component, rectify_down, rectify_up
from .fock import BlockMismatch, build_basis_bundle, decomposition_matrix_q1
from .hecke import (
    DeskBoundExceeded,
    NonIntegerEigenvalue,
    RelationFailure,
    block_split,
    check_dimension,
    consistency_check,
)
from .kl import KLCache, kl_polynomial, r_polynomial
from .matrix import NoSolution, NotUnitriangular
from .suites import SUITES, run_suite
from .weights import (
    BlockFilter,
    Charge,
    CSTableau,
    IndexSet,
    RootElement,
    Structure,
    enumerate_block,
    is_restricted,
    is_reverse_restricted,
)

ENV_HELP = """environment:
  FOCKBASES_KL_CACHE    default path for --kl-cache
  FOCKBASES_DESK_BOUND  largest l*d!*l^d the Hecke desk will build (default 5000)
"""


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    charge: Charge
    alpha: RootElement | None
    max_height: int
    structure: Structure
    fmt: str
    cache: KLCache


def parse_charge(text: str, index_set: IndexSet) -> Charge:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"bad charge {text!r}; expected m1,m2,...")
    try:
        return Charge(values, index_set)
    except ValueError as e:
        raise ConfigError(str(e))


def parse_alpha(text: str, charge: Charge) -> RootElement:
    out = {}
    if text.strip():
        for item in text.split(","):
            try:
                r, c = item.split(":")
                r, c = int(r), int(c)
            except ValueError:
                raise ConfigError(f"bad alpha item {item!r}; expected res:mult")
            if c < 0:
                raise ConfigError("multiplicities must be nonnegative")
            out[r] = out.get(r, 0) + c
    alpha = RootElement(out)
    bad = [r for r in alpha if r not in charge.index_set]
    if bad:
        raise ConfigError(f"residues {bad} lie outside {charge.index_set}")
    return alpha


def _config(args) -> RunConfig:
    if getattr(args, "index_set", None) == "Z" and args.min_index is not None:
        raise ConfigError("give either --min-index or --index-set Z")
    if getattr(args, "index_set", None) not in (None, "Z"):
        raise ConfigError("--index-set only accepts Z")
    index_set = IndexSet(args.min_index) if args.min_index is not None else IndexSet()
    charge = parse_charge(args.charge, index_set)
    alpha = parse_alpha(args.alpha, charge) if getattr(args, "alpha", None) is not None else None
    path = args.kl_cache or os.environ.get("FOCKBASES_KL_CACHE")
    return RunConfig(
        charge=charge,
        alpha=alpha,
        max_height=getattr(args, "max_height", 3),
        structure=Structure(getattr(args, "structure", "standard")),
        fmt=getattr(args, "format", "json"),
        cache=KLCache(path),
    )


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need_alpha(cfg: RunConfig) -> RootElement:
    if cfg.alpha is None:
        raise ConfigError("--alpha is required")
    return cfg.alpha


# -- commands -----------------------------------------------------------------


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    alpha = _need_alpha(cfg)
    rows = []
    for t in enumerate_block(cfg.charge, alpha, BlockFilter.ALL):
        rows.append({"tableau": t.to_json(), "label": str(t), "weight": alpha.to_json(),
                     "standard": is_restricted(t), "reverse": is_reverse_restricted(t)})
    if cfg.fmt == "csv":
        lines = ["label,standard,reverse"]
        lines += [f"\"{r['label']}\",{int(r['standard'])},{int(r['reverse'])}" for r in rows]
        _emit("\n".join(lines) + "\n", args.output)
    elif cfg.fmt == "json":
        _emit(json.dumps(rows, sort_keys=True, indent=1) + "\n", args.output)
    else:
        raise ConfigError("enumerate supports csv and json")
    return 0


MATRICES = ("d", "p", "dtilde", "bar", "L", "T", "P", "decomp1")


def cmd_matrix(args) -> int:
    cfg = _config(args)
    alpha = _need_alpha(cfg)
    which = args.which
    if which == "decomp1":
        rows, cols, ints = decomposition_matrix_q1(cfg.charge, alpha, cfg.cache)
        m = export.int_matrix_to_polymatrix(rows, cols, ints)
    else:
        structure = Structure.REVERSE if which == "dtilde" else cfg.structure
        b = build_basis_bundle(cfg.charge, alpha, structure, cfg.cache)
        if not (b.bar.matrix @ b.bar.matrix.conj()).is_identity():
            raise NotUnitriangular("bar is not an involution")
        m = b.matrix("d" if which == "dtilde" else which)
    cfg.cache.flush()
    meta = {"charge": list(cfg.charge.charges), "alpha": alpha.to_json(), "matrix": which}
    _emit(export.render_matrix(m, cfg.fmt, meta), args.output)
    return 0


def cmd_crystal(args) -> int:
    cfg = _config(args)
    g = crystal_component(cfg.charge, cfg.structure, args.depth)
    if cfg.fmt == "dot":
        _emit(g.to_dot(), args.output)
    elif cfg.fmt == "json":
        _emit(json.dumps(g.to_json(), sort_keys=True, indent=1) + "\n", args.output)
    else:
        raise ConfigError("crystal supports dot and json")
    return 0


def cmd_rectify(args) -> int:
    try:
        with open(args.tableau) as fh:
            t = CSTableau.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise ConfigError(f"cannot read tableau: {e}")
    try:
        out = rectify_down(t) if args.direction == "down" else rectify_up(t)
    except (NotStandard, NotReverseStandard) as e:
        raise ConfigError(str(e))
    _emit(json.dumps(out.to_json(), sort_keys=True) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    reports = run_suite(args.suite, cfg.charge, cfg.max_height, cfg.cache)
    cfg.cache.flush()
    ok = all(r.passed for r in reports)
    body = {"suite": args.suite, "charge": list(cfg.charge.charges), "max_height": cfg.max_height,
            "passed": ok, "reports": [r.to_json() for r in reports]}
    _emit(json.dumps(body, sort_keys=True, indent=1) + "\n", args.output)
    return 0 if ok else 1


def _perm(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"bad permutation {text!r}")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ConfigError(f"{text!r} is not a permutation in one-line notation")
    return w


def cmd_kl(args) -> int:
    x, y = _perm(args.x), _perm(args.y)
    if len(x) != len(y):
        raise ConfigError("permutations must have the same size")
    path = args.kl_cache or os.environ.get("FOCKBASES_KL_CACHE")
    cache = KLCache(path)
    p = r_polynomial(x, y) if args.r else kl_polynomial(x, y, cache)
    cache.flush()
    _emit(f"{p}\n", args.output)
    return 0


def cmd_hecke_check(args) -> int:
    cfg = _config(args)
    if args.dimension is not None:
        ok, dim = check_dimension(cfg.charge.charges, args.dimension)
        _emit(json.dumps({"l": cfg.charge.level, "d": args.dimension, "dimension": dim, "passed": ok},
                         sort_keys=True) + "\n", args.output)
        return 0 if ok else 1
    if cfg.alpha is not None:
        alphas = [cfg.alpha]
    else:
        alphas = [a for d in range(1, args.max_height + 1) for a in block_split(cfg.charge, d)]
    reports = [consistency_check(cfg.charge, a, cfg.cache) for a in alphas]
    cfg.cache.flush()
    ok = all(r.passed for r in reports)
    _emit(json.dumps({"passed": ok, "blocks": [r.to_json() for r in reports]}, sort_keys=True, indent=1) + "\n",
          args.output)
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, alpha: bool = True, fmt=("json",)):
    p.add_argument("--charge", required=True, help="m1,m2,... weakly decreasing")
    p.add_argument("--min-index", type=int, default=None, help="use the index set Z>=k")
    p.add_argument("--index-set", default=None, help="Z (the default)")
    if alpha:
        p.add_argument("--alpha", default=None, help='block as "res:mult,res:mult"')
    p.add_argument("--format", choices=fmt, default=fmt[0])
    p.add_argument("--kl-cache", default=None, help="append-only KL cache file")
    p.add_argument("--structure", choices=[s.value for s in Structure], default="standard")
    p.add_argument("-o", "--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fockbases", description=__doc__.splitlines()[0],
                                 epilog=ENV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the tableaux of a block")
    _common(p, fmt=("json", "csv"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("matrix", help="emit a transition matrix of a block")
    p.add_argument("which", choices=MATRICES)
    _common(p, fmt=("csv", "json", "latex"))
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("crystal", help="crystal graph of the ground state")
    _common(p, alpha=False, fmt=("dot", "json"))
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("rectify", help="rectify a tableau given as JSON")
    p.add_argument("tableau")
    p.add_argument("--direction", choices=("down", "up"), default="down")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_rectify)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    _common(p, alpha=False)
    p.add_argument("--max-height", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,y}")
    p.add_argument("x", help="one-line permutation, e.g. 1,3,2,4")
    p.add_argument("y")
    p.add_argument("--r", action="store_true", help="print the R-polynomial instead")
    p.add_argument("--kl-cache", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("hecke-check", help="Specht characters against d(1), or the algebra dimension")
    _common(p)
    p.add_argument("--max-height", type=int, default=3)
    p.add_argument("--dimension", type=int, default=None, metavar="D", help="check dim H_D = l^D D!")
    p.set_defaults(func=cmd_hecke_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, BlockMismatch, DeskBoundExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (NotUnitriangular, NoSolution, RelationFailure, NonIntegerEigenvalue) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
