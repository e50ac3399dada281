"""Command-line interface.

Subcommands: reduce, expand, oracle, melnikov, zeros, simulate, scan,
verify.  Symbolic outputs serialize rationals as "num/den" strings;
floats appear only on oracle and simulation paths and are printed with
15 significant digits.  CUSPLOOP_TOL overrides the quadrature relative
tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PARAM_INDEX
from .melnikov import (PerturbationSet, coeff_list, melnikov_1, melnikov_2,
                       melnikov_3, theorem3_family, FirstOrderNonzero,
                       LowerOrderNonzero)
from .oracle import DEFAULT_REL_TOL, abelian_numeric, OutOfRange
from .picard_fuchs import BASIS, MINUS, PLUS, basis_expansion
from .reduction import reduce_monomial


@dataclass
class Config:
    rel_tol: float = DEFAULT_REL_TOL
    expansion_order: int = 4
    output_format: str = "json"
    params_file: str | None = None

    def __post_init__(self):
        if not 1e-13 <= self.rel_tol <= 1e-6:
            raise ValueError("rel_tol must lie in [1e-13, 1e-6]")
        if not 0 <= self.expansion_order <= 20:
            raise ValueError("expansion_order must lie in [0, 20]")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output_format must be json or csv")


def load_params(path: str) -> dict:
    """Parse a `name = value` parameter file with # comments."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected name = value")
            name, _, value = line.partition("=")
            name = name.strip()
            if name not in PARAM_INDEX:
                raise ValueError(f"{path}:{lineno}: unknown parameter {name}")
            out[name] = Fraction(value.strip())
    return out


def _side(flag: str) -> str:
    if flag in ("+", "plus"):
        return PLUS
    if flag in ("-", "minus"):
        return MINUS
    raise argparse.ArgumentTypeError(f"side must be + or -, got {flag!r}")


def _fmt_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 \
        else str(x.numerator)


def _cmd_reduce(args, _cfg) -> int:
    r = reduce_monomial(args.i, args.j)
    print(json.dumps({"p1": str(r.p1), "p2": str(r.p2), "p3": str(r.p3)}))
    return 0


def _cmd_expand(args, _cfg) -> int:
    exp = basis_expansion(args.which, args.side, args.order)
    terms = []
    for e, coeff in exp.terms:
        terms.append({"exponent": _fmt_frac(e),
                      "coefficient": {s: str(p) for s, p in coeff.items()}})
    print(json.dumps({"which": args.which, "side": exp.side, "terms": terms}))
    return 0


def _cmd_oracle(args, cfg) -> int:
    val = abelian_numeric(args.i, args.j, args.h, args.side, cfg.rel_tol)
    print(json.dumps({"i": args.i, "j": args.j, "h": args.h,
                      "side": args.side, "value": float(f"{val:.15g}")}))
    return 0


def _perturbations(args):
    ps = theorem3_family() if args.family == "thm3" \
        else PerturbationSet.generic()
    if args.params:
        ps = ps.substitute(load_params(args.params))
    return ps


def _cmd_melnikov(args, _cfg) -> int:
    ps = _perturbations(args)
    fn = {1: melnikov_1, 2: melnikov_2, 3: melnikov_3}[args.order]
    try:
        r = fn(ps)
    except (FirstOrderNonzero, LowerOrderNonzero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cl = coeff_list(r, args.side, args.coeffs)
    entries = [{"label": e.label, "exponent": _fmt_frac(e.exponent),
                "symbol": e.symbol, "value": str(e.poly)}
               for e in cl.entries]
    print(json.dumps({"order": args.order, "side": cl.side,
                      "coefficients": entries}))
    return 0


def _cmd_zeros(args, _cfg) -> int:
    from .cycles import count_zeros, numeric_coeffs
    ps = _perturbations(args)
    try:
        r = melnikov_3(ps)
    except (FirstOrderNonzero, LowerOrderNonzero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    params = load_params(args.params) if args.params else {}
    cl = coeff_list(r, args.side, args.coeffs)
    terms = numeric_coeffs(cl, {k: float(v) for k, v in params.items()})
    rep = count_zeros(terms, args.side, args.window)
    print(json.dumps(rep.as_dict()))
    return 0


def _cmd_simulate(args, _cfg) -> int:
    from .cycles import displacement, NoReturn
    params = load_params(args.params) if args.params else {}
    try:
        sample = displacement(params, args.eps, args.h, args.side)
    except (NoReturn, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(sample.as_dict()))
    return 0


def _cmd_scan(args, _cfg) -> int:
    from .cycles import displacement, NoReturn
    import numpy as np
    params = load_params(args.params) if args.params else {}
    print("h,displacement")
    status = 0
    for h in np.linspace(args.hmin, args.hmax, args.n):
        side = PLUS if h > 0 else MINUS
        try:
            d = displacement(params, args.eps, float(h), side).displacement
        except (NoReturn, OutOfRange) as exc:
            print(f"error at h={h}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"{h:.15g},{d:.15g}")
    return status


def _cmd_verify(_args, _cfg) -> int:
    from .verify import run_all
    return 0 if run_all() else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cusploop",
        description="Melnikov expansions near a cuspidal homoclinic loop")
    p.add_argument("--rel-tol", type=float, default=None,
                   help="quadrature relative tolerance")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("reduce", help="reduce I_{i,j} to the basis")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("expand", help="asymptotic expansion of a basis integral")
    sp.add_argument("--which", choices=BASIS, required=True)
    sp.add_argument("--side", type=_side, default=PLUS)
    sp.add_argument("--order", type=int, default=4)
    sp.set_defaults(fn=_cmd_expand)

    sp = sub.add_parser("oracle", help="quadrature value of I_{i,j}(h)")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--side", type=_side, default=PLUS)
    sp.set_defaults(fn=_cmd_oracle)

    sp = sub.add_parser("melnikov", help="symbolic Melnikov coefficients")
    sp.add_argument("--order", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--params", default=None)
    sp.add_argument("--side", type=_side, default=PLUS)
    sp.add_argument("--coeffs", type=int, default=7)
    sp.add_argument("--family", choices=("generic", "thm3"), default="generic")
    sp.set_defaults(fn=_cmd_melnikov)

    sp = sub.add_parser("zeros", help="zero report of the truncated expansion")
    sp.add_argument("--order", type=int, choices=(3,), default=3)
    sp.add_argument("--params", required=True)
    sp.add_argument("--window", type=float, default=1e-2)
    sp.add_argument("--side", type=_side, default=PLUS)
    sp.add_argument("--coeffs", type=int, default=7)
    sp.add_argument("--family", choices=("generic", "thm3"), default="thm3")
    sp.set_defaults(fn=_cmd_zeros)

    sp = sub.add_parser("simulate", help="one Poincare return displacement")
    sp.add_argument("--params", required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--side", type=_side, default=PLUS)
    sp.set_defaults(fn=_cmd_simulate)

    sp = sub.add_parser("scan", help="CSV displacement scan over h")
    sp.add_argument("--params", required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--hmin", type=float, required=True)
    sp.add_argument("--hmax", type=float, required=True)
    sp.add_argument("--n", type=int, default=20)
    sp.set_defaults(fn=_cmd_scan)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rel_tol = args.rel_tol
    if rel_tol is None:
        rel_tol = float(os.environ.get("CUSPLOOP_TOL", DEFAULT_REL_TOL))
    try:
        cfg = Config(rel_tol=rel_tol)
    except ValueError as exc:
        parser.error(str(exc))  # exits 2
    try:
        return args.fn(args, cfg)
    except (ValueError, OutOfRange, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
