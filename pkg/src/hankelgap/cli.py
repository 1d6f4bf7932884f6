"""Command-line front end.

Exit codes: 0 success, 1 usage or malformed input, 2 input is not
real-rooted, 3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import pipeline
from .errors import HankelGapError, InternalInvariantError, NotRealRooted

EXIT_OK, EXIT_USAGE, EXIT_NOT_REAL, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rat_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _add_common(p: argparse.ArgumentParser):
    src = p.add_argument_group("input (exactly one)")
    src.add_argument("input_file", nargs="?", help="batch file: one coefficient list per line ('-' for stdin)")
    src.add_argument("--coeffs", help="ascending coefficients, e.g. '0,3,-4,1' for x^3-4x^2+3x; entries int or num/den")
    src.add_argument("--roots", help="roots (testing); repeat a value for multiplicity, e.g. '1,1,2'")
    src.add_argument("--matrix-file", help="symmetric matrix: first line n, then n rows of n rationals")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--multiplicities", action="store_true", help="also certify root multiplicities")
    p.add_argument("--tol", type=_rat_arg, default=pipeline.Params.tol, help="relative step tolerance (default 2^-40)")
    p.add_argument("--max-iter", type=int, default=pipeline.Params.max_iter)
    p.add_argument("--sqrt-prec", type=_rat_arg, default=pipeline.Params.sqrt_prec)
    p.add_argument("--denom-cap", type=int, default=pipeline.Params.denom_cap, help="0 disables rounding")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings in the report")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch mode")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hankelgap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name, helptext in (
        ("analyze", "Hankel ladder, minimal polynomial, gap sequences and localization"),
        ("gaps", "Hankel ladder and min/max gap sequences"),
        ("localize", "Hankel ladder and the root segment"),
    ):
        _add_common(sub.add_parser(name, help=helptext))
    w = sub.add_parser("wilkinson", help="equidistant-root recurrence and its rate bounds")
    w.add_argument("-m", type=int, required=True)
    w.add_argument("--mu", type=_rat_arg, default=Fraction(1))
    w.add_argument("--steps", type=int, default=None)
    w.add_argument("--delta", type=_rat_arg, default=None)
    w.add_argument("--denom-cap", type=int, default=pipeline.Params.denom_cap)
    w.add_argument("--max-iter", type=int, default=pipeline.Params.max_iter)
    w.add_argument("--json", action="store_true")
    return parser


def _params(args) -> pipeline.Params:
    return pipeline.Params(
        tol=args.tol,
        max_iter=args.max_iter,
        sqrt_prec=getattr(args, "sqrt_prec", pipeline.Params.sqrt_prec),
        denom_cap=args.denom_cap or None,
    )


def _one(command, line, params, with_mult, timing):
    """Batch worker: one coefficient line -> (report, exit code)."""
    try:
        poly = pipeline.parse_coeffs(line)
        rep = pipeline.run({"source": "coeffs", "text": line}, poly, None, command, params, with_mult, timing)
        return rep, EXIT_OK
    except NotRealRooted as exc:
        return {"input": {"source": "coeffs", "text": line}, "error": str(exc)}, EXIT_NOT_REAL
    except InternalInvariantError as exc:
        return {"input": {"source": "coeffs", "text": line}, "error": str(exc)}, EXIT_INTERNAL
    except (HankelGapError, ValueError, ZeroDivisionError) as exc:
        return {"input": {"source": "coeffs", "text": line}, "error": str(exc)}, EXIT_USAGE


def _batch(args, out) -> int:
    stream = sys.stdin if args.input_file == "-" else open(args.input_file)
    with stream:
        lines = [ln.strip() for ln in stream if ln.strip() and not ln.lstrip().startswith("#")]
    params = _params(args)
    work = [(args.command, ln, params, args.multiplicities, args.timing) for ln in lines]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_one, *zip(*work))) if work else []
    else:
        results = [_one(*w) for w in work]
    code = EXIT_OK
    for rep, rc in results:
        rep["exit_code"] = rc
        out.write(json.dumps(rep, sort_keys=True) + "\n")
        code = max(code, rc)
    return code


def _single_source(args):
    given = [x for x in (args.coeffs, args.roots, args.matrix_file) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --coeffs, --roots, --matrix-file or an input file")
    if args.coeffs is not None:
        return {"source": "coeffs", "text": args.coeffs}, pipeline.parse_coeffs(args.coeffs), None
    if args.roots is not None:
        return {"source": "roots", "text": args.roots}, pipeline.parse_roots(args.roots), None
    with open(args.matrix_file) as fh:
        mat = pipeline.parse_matrix(fh.read())
    return {"source": "matrix-file", "text": args.matrix_file}, None, mat


def _fmt_trail(t: dict, label: str) -> list[str]:
    its = t["iterates"]
    head = ", ".join(x["exact"] if len(x["exact"]) < 24 else f"{x['approx']:.12g}" for x in its[:3])
    return [
        f"{label}: {t['iterations']} steps ({t['stop_reason']}), squared iterates start {head}",
        f"  last = {its[-1]['approx']:.15g}  (sqrt ~ {its[-1]['approx'] ** 0.5:.15g})",
    ]


def render_text(rep: dict) -> str:
    lines = [
        f"degree n = {rep['n']}, distinct roots m = {rep['m']}",
        "Hankel determinants: " + ", ".join(f"D_{k}={d}" for k, d in enumerate(rep["dets"], 1)),
        f"minimal polynomial: {rep['minimal']['text']}",
    ]
    if "multiplicities" in rep:
        lines.append("multiplicities: " + ", ".join(
            f"{m['approx']:.6g}: {m['multiplicity']}" for m in rep["multiplicities"]))
    if rep.get("min_gap"):
        lines += _fmt_trail(rep["min_gap"], "min gap^2")
        lines += _fmt_trail(rep["max_gap"], "max gap^2")
    elif "min_gap" in rep:
        lines.append("gaps: single distinct root, no gap")
    if rep.get("segment"):
        s = rep["segment"]
        lines.append(f"segment [a, b] ~ [{float(Fraction(s['a'])):.12g}, {float(Fraction(s['b'])):.12g}]")
        lines.append(f"refined      ~ [{s['approx'][0]:.12g}, {s['approx'][1]:.12g}]")
    if "timing" in rep:
        lines.append("timing: " + ", ".join(f"{k}={v:.3f}s" for k, v in rep["timing"].items()))
    return "\n".join(lines)


def render_wilkinson(rep: dict) -> str:
    lines = [
        f"W_{rep['m']}(x) = {rep['polynomial']['text']}",
        "w^2 trail: " + ", ".join(w["exact"] if len(w["exact"]) < 24 else f"{w['approx']:.12g}"
                                  for w in rep["w_trail"][:6]) + (" ..." if len(rep["w_trail"]) > 6 else ""),
        f"steps: {len(rep['w_trail']) - 1}, last w^2 ~ {rep['w_trail'][-1]['approx']:.15g}, "
        f"eps ~ {rep['eps_trail'][-1]['approx']:.3g}",
        f"per-step rate bracket: {'pass' if rep['rate_checks_pass'] else 'FAIL'}",
        f"geometric majorant: strong {'pass' if rep['majorant_strong'] else 'FAIL'}, "
        f"weak {'pass' if rep['majorant_weak'] else 'FAIL'}",
    ]
    if "forecast" in rep:
        lines.append(f"delta = {rep['delta']}: forecast k = {rep['forecast']}, observed k = {rep['observed']}")
    return "\n".join(lines)


_VALUE_FLAGS = ("--coeffs", "--roots", "--tol", "--mu", "--delta", "--sqrt-prec")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--coeffs -2,5" as two options; fuse into "--coeffs=-2,5"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))

    if args.command == "wilkinson":
        if args.m < 3:
            print(f"hankelgap: error: wilkinson needs m >= 3, got {args.m}", file=sys.stderr)
            return EXIT_USAGE
        try:
            rep = pipeline.wilkinson_report(
                args.m, args.mu, args.steps, args.delta,
                pipeline.Params(max_iter=args.max_iter, denom_cap=args.denom_cap or None),
            )
        except (HankelGapError, ValueError) as exc:
            print(f"hankelgap: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        out.write((json.dumps(rep, sort_keys=True) if args.json else render_wilkinson(rep)) + "\n")
        return EXIT_OK

    if args.input_file is not None:
        if any(x is not None for x in (args.coeffs, args.roots, args.matrix_file)):
            print("hankelgap: error: an input file excludes --coeffs/--roots/--matrix-file", file=sys.stderr)
            return EXIT_USAGE
        try:
            return _batch(args, out)
        except OSError as exc:
            print(f"hankelgap: error: {exc}", file=sys.stderr)
            return EXIT_USAGE

    try:
        source, poly, mat = _single_source(args)
        rep = pipeline.run(source, poly, mat, args.command, _params(args), args.multiplicities, args.timing)
    except NotRealRooted as exc:
        print(str(exc), file=sys.stderr)
        if args.json:
            out.write(json.dumps({"error": str(exc), "exit_code": EXIT_NOT_REAL}) + "\n")
        return EXIT_NOT_REAL
    except InternalInvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, HankelGapError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"hankelgap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep["exit_code"] = EXIT_OK
    out.write((json.dumps(rep, sort_keys=True) if args.json else render_text(rep)) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
