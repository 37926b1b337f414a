"""Command-line front end.

Subcommands:
    jump      jump function of a single Seifert matrix
    pattern   pattern word -> coefficient sequence c_n
    solve     fold the coefficients and solve the circulant multiplicity system
    cover     covering-link Seifert matrix and its jump function
    obstruct  full pipeline ending in the period-2*pi verdict
    sigfn     CSV samples of the signature step function

Exit codes: 0 success (including a Periodic verdict), 1 NonPeriodic verdict,
2 input or usage error, 3 unresolved exact comparison.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .covering import CoveringSpec, build_covering, ltm_family
from .errors import CovsigError, ParseError, UnresolvedComparison
from .exact import DEFAULT_PRECISION_BITS, RatMatrix
from .jumps import (
    JumpFunction,
    jump_function,
    jump_to_obj,
    period_2pi_test,
    point_to_obj,
    scale_jump,
    theta_decimal,
)
from .pattern import fold, parse_word, pattern_coefficients, solve_multiplicities
from .seifert import SeifertData

TREFOIL = [[-1, 1], [0, -1]]

EXIT_OK = 0
EXIT_NONPERIODIC = 1
EXIT_USAGE = 2
EXIT_UNRESOLVED = 3


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise ParseError(f"expected an exact rational, got {x!r}")


def _matrix(obj) -> RatMatrix:
    if obj == "trefoil":
        obj = TREFOIL
    if isinstance(obj, str):
        obj = json.loads(obj)
    return RatMatrix([[_frac(x) for x in row] for row in obj])


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coeffs_from_args(args) -> dict:
    if getattr(args, "word", None):
        return pattern_coefficients(parse_word(args.word))
    if getattr(args, "coeffs", None):
        raw = json.loads(args.coeffs)
        return {int(k): int(v) for k, v in raw.items()}
    raise ParseError("need a pattern: --word or --coeffs")


def _seifert_from_args(args):
    eps = args.epsilon
    if args.family == "ltm":
        if args.V is None or args.m is None:
            raise ParseError("--family ltm needs --V and --m")
        return ltm_family(_matrix(args.V), args.m, eps)
    if args.A is None or args.B is None or args.C is None:
        raise ParseError("inline Seifert data needs --A, --B and --C")
    sd = SeifertData(_matrix(args.A), _matrix(args.B), _matrix(args.C), eps)
    return sd, None


def _spec_from_args(args, d=None) -> CoveringSpec:
    target = None
    if args.target:
        target = tuple(int(t) for t in args.target.split(","))
    return CoveringSpec(p=args.p, a=args.a, target=target)


def _jobspec_into_args(args):
    """Merge a JSON job document (file or '-' for stdin) into the parsed args."""
    if not getattr(args, "input", None):
        return
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    job = json.loads(text)
    sf = job.get("seifert", {})
    if "family" in sf:
        args.family = sf["family"]
        args.V = json.dumps(sf["V"]) if not isinstance(sf["V"], str) else sf["V"]
        args.m = int(sf["m"])
        args.epsilon = int(sf.get("epsilon", 1))
    elif sf:
        args.family = None
        args.A = json.dumps(sf["A"])
        args.B = json.dumps(sf["B"])
        args.C = json.dumps(sf["C"])
        args.epsilon = int(sf.get("epsilon", 1))
    pat = job.get("pattern", {})
    if "word" in pat:
        args.word = pat["word"]
    elif "coeffs" in pat:
        args.coeffs = json.dumps(pat["coeffs"])
    cov = job.get("covering", {})
    if cov:
        args.p = int(cov["p"])
        args.a = int(cov.get("a", 1))
        if cov.get("target") is not None:
            args.target = ",".join(str(t) for t in cov["target"])
    opt = job.get("options", {})
    if "precision_bits" in opt:
        args.precision_bits = int(opt["precision_bits"])
    if "window_periods" in opt:
        args.window = int(opt["window_periods"])
    if "output_format" in opt:
        args.format = opt["output_format"]


def _emit_jump_human(f: JumpFunction, out):
    print(f"period: {_frac_str(f.period)} * 2*pi", file=out)
    print(f"sigma just after 0: {f.sigma0}", file=out)
    if not f.points:
        print("no jumps", file=out)
    for pt in f.points:
        obj = point_to_obj(pt)
        if "pi_rational" in obj:
            desc = f"theta = {obj['pi_rational']} * pi"
        else:
            desc = "theta algebraic"
        print(f"  {desc}  (~{theta_decimal(pt.loc)})  jump {pt.value:+d}", file=out)


def _emit_jump(f: JumpFunction, args, out, extra=None):
    if args.format == "json":
        obj = jump_to_obj(f)
        if extra:
            obj.update(extra)
        print(json.dumps(obj, sort_keys=True), file=out)
    elif args.format == "csv":
        print("theta_decimal,value", file=out)
        for pt in f.points:
            print(f"{theta_decimal(pt.loc)},{pt.value}", file=out)
    else:
        _emit_jump_human(f, out)


def cmd_jump(args, out):
    f = jump_function(_matrix(args.V), args.epsilon)
    _emit_jump(f, args, out)
    return EXIT_OK


def cmd_pattern(args, out):
    c = pattern_coefficients(parse_word(args.word))
    print(json.dumps({str(k): v for k, v in sorted(c.items())}, sort_keys=True), file=out)
    return EXIT_OK


def cmd_solve(args, out):
    c = _coeffs_from_args(args)
    spec = _spec_from_args(args)
    row = fold(c, spec.d)
    x, s = solve_multiplicities(row, spec.target)
    obj = {
        "folded_row": list(row.values),
        "x": [_frac_str(xi) for xi in x],
        "s": s,
        "multiplicities": [int(xi * s) for xi in x],
    }
    if args.format == "human":
        print(f"folded row: {list(row.values)}", file=out)
        print(f"x = ({', '.join(_frac_str(xi) for xi in x)}), s = {s}", file=out)
        print(f"integer multiplicities s*x = {obj['multiplicities']}", file=out)
    else:
        print(json.dumps(obj, sort_keys=True), file=out)
    return EXIT_OK


def _run_pipeline(args):
    sd, family_coeffs = _seifert_from_args(args)
    try:
        c = _coeffs_from_args(args)
    except ParseError:
        if family_coeffs is None:
            raise
        c = family_coeffs
    spec = _spec_from_args(args)
    cm = build_covering(sd, c, spec)
    f = jump_function(cm.expanded_P, sd.epsilon)
    g = scale_jump(f, Fraction(1, cm.s))
    return cm, g


def cmd_cover(args, out):
    cm, g = _run_pipeline(args)
    extra = {
        "s": cm.s,
        "multiplicities": list(cm.multiplicities),
        "matrix_size": cm.expanded_P.nrows,
    }
    if args.format == "human":
        print(f"s = {cm.s}, multiplicities = {list(cm.multiplicities)}, "
              f"matrix size = {cm.expanded_P.nrows}", file=out)
        _emit_jump_human(g, out)
    else:
        _emit_jump(g, args, out, extra)
    return EXIT_OK


def cmd_obstruct(args, out):
    cm, g = _run_pipeline(args)
    verdict = period_2pi_test(g, args.precision_bits)
    if args.format == "json":
        obj = {
            "verdict": verdict.status,
            "s": cm.s,
            "multiplicities": list(cm.multiplicities),
            "jump": jump_to_obj(g),
        }
        if verdict.witness is not None:
            loc, wins, vals = verdict.witness
            obj["witness"] = {
                "theta_decimal": theta_decimal(loc),
                "windows": list(wins),
                "values": list(vals) if vals else None,
            }
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        print(f"verdict: {verdict.status}", file=out)
        if verdict.witness is not None:
            loc, wins, vals = verdict.witness
            print(f"witness: theta ~ {theta_decimal(loc)} differs between "
                  f"windows {wins[0]} and {wins[1]} (values {vals})", file=out)
        _emit_jump_human(g, out)
    if verdict.status == "NonPeriodic":
        return EXIT_NONPERIODIC
    if verdict.status == "Unresolved":
        return EXIT_UNRESOLVED
    return EXIT_OK


def cmd_sigfn(args, out):
    f = jump_function(_matrix(args.V), args.epsilon)
    print("theta_decimal,sigma", file=out)
    periods = max(1, args.window)
    sigma = f.sigma0
    print(f"0.0,{sigma}", file=out)
    from .jumps import _translate_point  # replicated display windows

    for k in range(periods):
        for pt in f.points:
            shown = _translate_point(pt, 2 * f.period * k)
            sigma += pt.value
            print(f"{theta_decimal(shown.loc)},{sigma}", file=out)
        sigma = f.sigma0  # sigma returns to its base value at each period end
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="covsig", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seifert=False, pattern=False, covering=False, matrix=False):
        p.add_argument("--format", choices=["human", "json", "csv"], default="human")
        p.add_argument("--precision-bits", dest="precision_bits", type=int,
                       default=DEFAULT_PRECISION_BITS)
        p.add_argument("--window", type=int, default=1,
                       help="periods shown in sampled output")
        p.add_argument("--input", help="JSON job document ('-' for stdin)")
        p.add_argument("--epsilon", type=int, choices=[1, -1], default=1)
        if matrix:
            p.add_argument("--V", help='matrix JSON or "trefoil"')
        if seifert:
            p.add_argument("--family", choices=["ltm"], default=None)
            p.add_argument("--V", help='pattern companion matrix JSON or "trefoil"')
            p.add_argument("--m", type=int)
            p.add_argument("--A")
            p.add_argument("--B")
            p.add_argument("--C")
        if pattern:
            p.add_argument("--word", help="pattern word over x X y Y with ^n powers")
            p.add_argument("--coeffs", help='JSON object {"0": 2, "1": -1}')
        if covering:
            p.add_argument("--p", type=int, help="prime")
            p.add_argument("--a", type=int, default=1, help="exponent: d = p^a")
            p.add_argument("--target", help="comma-separated integers, length d")

    p = sub.add_parser("jump", help="jump function of a Seifert matrix")
    common(p, matrix=True)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("pattern", help="pattern word -> coefficients c_n")
    common(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("solve", help="fold + circulant multiplicity solve")
    common(p, pattern=True, covering=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("cover", help="covering matrix and its jump function")
    common(p, seifert=True, pattern=True, covering=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("obstruct", help="full pipeline + periodicity verdict")
    common(p, seifert=True, pattern=True, covering=True)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("sigfn", help="CSV step-function samples")
    common(p, matrix=True)
    p.set_defaults(func=cmd_sigfn)

    return ap


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        _jobspec_into_args(args)
        if getattr(args, "command", None) in ("solve", "cover", "obstruct") \
                and getattr(args, "p", None) is None:
            raise ParseError("--p is required (or provide it via --input)")
        return args.func(args, out)
    except UnresolvedComparison as e:
        print(json.dumps({"error": str(e), "type": "UnresolvedComparison"},
                         sort_keys=True), file=out)
        return EXIT_UNRESOLVED
    except (CovsigError, ValueError, OSError, json.JSONDecodeError, KeyError) as e:
        print(json.dumps({"error": str(e), "type": type(e).__name__},
                         sort_keys=True), file=out)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())
