"""End-to-end analysis producing JSON-ready reports.

Every exact rational is serialised as ``"num/den"``; ``approx`` fields are
floats for display only.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import gapcore, hankel, localize, oracle, wilkinson
from .gapcore import GapSequence
from .polyarith import Poly, format_poly, poly_from_roots
from .rational import DEFAULT_DENOM_CAP, DEFAULT_SQRT_PREC, fmt_rat, parse_rat


@dataclass(frozen=True)
class Params:
    tol: Fraction = gapcore.DEFAULT_TOL
    max_iter: int = gapcore.DEFAULT_MAX_ITER
    sqrt_prec: Fraction = DEFAULT_SQRT_PREC
    denom_cap: int | None = DEFAULT_DENOM_CAP


def parse_coeffs(text: str) -> Poly:
    """Ascending comma-separated rationals, e.g. ``"0,3,-4,1"`` for x^3 - 4x^2 + 3x."""
    parts = [s for s in text.replace(" ", "").split(",")]
    if not parts or any(s == "" for s in parts):
        raise ValueError(f"malformed coefficient list: {text!r}")
    p = Poly(parse_rat(s) for s in parts)
    if p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    return p


def parse_roots(text: str) -> Poly:
    """Comma-separated roots; repeating a value raises its multiplicity."""
    vals = [parse_rat(s) for s in text.replace(" ", "").split(",") if s]
    if not vals:
        raise ValueError("empty root list")
    counts = Counter(vals)
    roots = sorted(counts)
    return poly_from_roots(roots, [counts[r] for r in roots])


def parse_matrix(text: str) -> list[list[Fraction]]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    n = int(lines[0][0])
    rows = lines[1:]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} entries")
    return [[parse_rat(v) for v in r] for r in rows]


def rat(x: Fraction) -> dict:
    return {"exact": fmt_rat(x), "approx": float(x)}


def poly_json(p: Poly, var: str = "x") -> dict:
    return {"coeffs": p.to_strings(), "text": format_poly(p, var)}


def trail_json(seq: GapSequence) -> dict:
    return {
        "kind": seq.kind.value,
        "stop_reason": seq.stop_reason.value,
        "iterations": seq.steps,
        "iterates": [rat(x) for x in seq.iterates],
    }


def _hankel_part(rep: hankel.HankelReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "dets": [fmt_rat(d) for d in rep.dets],
        "minimal": poly_json(rep.minimal),
        "sigma": [fmt_rat(s) for s in rep.sigma],
    }


def _multiplicities(rep: hankel.HankelReport) -> list[dict]:
    h = rep.hankel()
    out = []
    for e in oracle.isolate_real_roots(rep.minimal, Fraction(1, 2**20)):
        r = hankel.multiplicity(e, h)
        out.append({"lo": fmt_rat(e.lo), "hi": fmt_rat(e.hi), "approx": float(e.mid), "multiplicity": r})
    return out


def _gaps_part(rep: hankel.HankelReport, params: Params) -> dict:
    if rep.m < 2:
        return {"min_gap": None, "max_gap": None, "diagnostics": None}
    gp = gapcore.gap_polynomial(rep.minimal)
    mu = gapcore.iterate_min_gap(gp, params.tol, params.max_iter, params.denom_cap)
    big = gapcore.iterate_max_gap(gp, rep.minimal, params.tol, params.max_iter, params.denom_cap)
    diag = None
    if rep.m >= 3:
        diag = {}
        if mu.steps:
            d = gapcore.stop_rule_min(rep.m, mu.iterates[-2], mu.iterates[-1])
            diag["min_last_growth"] = {
                "growth": fmt_rat(d.growth), "in_regime": d.in_regime, "above_floor": d.above_floor,
            }
        lo, hi = gapcore.stop_rule_max(rep.m, params.tol)
        dec = gapcore.relative_decrease(big)
        diag["max_bracket"] = [fmt_rat(lo), fmt_rat(hi)]
        diag["max_last_decrease"] = None if dec is None else fmt_rat(dec)
    return {
        "gap_polynomial": poly_json(gp.delta, "y"),
        "min_gap": trail_json(mu),
        "max_gap": trail_json(big),
        "diagnostics": diag,
    }


def _segment_part(rep: hankel.HankelReport, params: Params) -> dict:
    seg = localize.build_segment(
        rep.minimal, params.tol, params.max_iter, params.sqrt_prec, params.denom_cap
    )
    return {
        "mean": fmt_rat(seg.mean),
        "a": fmt_rat(seg.a),
        "b": fmt_rat(seg.b),
        "refined_lo": fmt_rat(seg.refined_lo),
        "refined_hi": fmt_rat(seg.refined_hi),
        "approx": [float(seg.refined_lo), float(seg.refined_hi)],
        "radius": trail_json(seg.radius_trail),
        "alpha": trail_json(seg.alpha_trail),
        "beta": trail_json(seg.beta_trail),
    }


STAGES = ("analyze", "gaps", "localize")


def run(
    source: dict,
    poly: Poly | None = None,
    matrix=None,
    command: str = "analyze",
    params: Params = Params(),
    with_multiplicities: bool = False,
    timing: bool = False,
) -> dict:
    """Run the pipeline on a polynomial or a symmetric matrix and return the report dict."""
    if command not in STAGES:
        raise ValueError(f"unknown command {command!r}")
    clock = {}
    t0 = time.perf_counter()
    rep = hankel.analyze_polynomial(poly) if matrix is None else hankel.analyze_matrix(matrix)
    clock["hankel"] = time.perf_counter() - t0
    out = {"command": command, "input": source}
    out.update(_hankel_part(rep))
    if with_multiplicities:
        out["multiplicities"] = _multiplicities(rep)
    if command in ("analyze", "gaps"):
        t0 = time.perf_counter()
        out.update(_gaps_part(rep, params))
        clock["gaps"] = time.perf_counter() - t0
    if command in ("analyze", "localize"):
        t0 = time.perf_counter()
        out["segment"] = _segment_part(rep, params)
        clock["localize"] = time.perf_counter() - t0
    if timing:
        out["timing"] = clock
    return out


def wilkinson_report(m: int, mu=1, steps: int | None = None, delta=None, params: Params = Params()) -> dict:
    mu = Fraction(mu)
    if delta is not None and steps is None:
        spec = wilkinson.w_until(m, delta, params.max_iter, params.denom_cap)
    else:
        spec = wilkinson.w_recurrence(m, 10 if steps is None else steps, mu, params.denom_cap)
    checks = wilkinson.rate_checks(spec)
    out = {
        "command": "wilkinson",
        "m": m,
        "mu": fmt_rat(mu),
        "polynomial": poly_json(wilkinson.wilkinson_poly(m, mu)),
        "w0_squared": fmt_rat(spec.w_trail[0]),
        "w_trail": [rat(w) for w in spec.w_trail],
        "eps_trail": [rat(e) for e in spec.eps_trail],
        "rate_checks": checks,
        "rate_checks_pass": all(checks),
        "majorant_strong": all(wilkinson.majorant_checks(spec, 0)),
        "majorant_weak": all(wilkinson.majorant_checks(spec, 1)),
    }
    if delta is not None:
        out["delta"] = fmt_rat(Fraction(delta))
        out["forecast"] = wilkinson.predicted_iterations(m, delta)
        out["observed"] = wilkinson.observed_iterations(m, delta, params.max_iter)
    return out
