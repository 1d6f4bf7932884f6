"""One test per acceptance criterion; each records a PASS/FAIL line."""
import io
import json
import random
from contextlib import contextmanager
from fractions import Fraction as F
from itertools import combinations
from math import prod

import pytest

from hankelgap import gapcore, localize, wilkinson as W
from hankelgap.cli import main
from hankelgap.errors import NotRealRooted
from hankelgap.hankel import analyze_polynomial, gram_orthogonality, multiplicity
from hankelgap.oracle import brute_force_gaps, isolate_real_roots, multiplicities_via_gcd, sturm_sequence
from hankelgap.pipeline import Params, run
from hankelgap.polyarith import Poly, evaluate, poly_from_roots, square_free_part

from conftest import ACCEPTANCE, brute_pair_sum, expand_roots, random_multi_rooted, random_simple_rooted


@contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE[n] = ("FAIL", title)
        print(f"criterion {n}: FAIL  {title}")
        raise
    ACCEPTANCE[n] = ("PASS", title)
    print(f"criterion {n}: PASS  {title}")


SIMPLE_CORPUS = [random_simple_rooted(random.Random(1000 + i)) for i in range(100)]


def test_c01_exact_hankel_ladder():
    with criterion(1, "exact Hankel ladder D=[3,14,36] and D=[3,2,0], m=2"):
        rep = analyze_polynomial(Poly([0, 3, -4, 1]))
        assert list(rep.dets) == [3, 14, 36] and rep.m == 3
        t = rep.sums
        assert rep.dets[1] == t[0] * t[2] - t[1] ** 2 == sum((b - a) ** 2 for a, b in combinations((0, 1, 3), 2))
        assert rep.dets[2] == prod((b - a) ** 2 for a, b in combinations((0, 1, 3), 2))
        rep = analyze_polynomial(Poly([-2, 5, -4, 1]))
        assert list(rep.dets) == [3, 2, 0] and rep.m == 2
        # r_1 r_2 (p_2 - p_1)^2 with roots 1 (double) and 2
        assert rep.dets[1] == 2 * 1 * (2 - 1) ** 2


def test_c02_minimal_polynomial_double_path():
    with criterion(2, "Hankel minors == square-free part on 200 random inputs"):
        rng = random.Random(2)
        for _ in range(200):
            roots, mults = random_multi_rooted(rng)
            p = poly_from_roots(roots, mults)
            rep = analyze_polynomial(p)
            assert rep.minimal == square_free_part(p) == expand_roots(roots)
            assert rep.m == len(roots) and rep.n == sum(mults)


def _complex_quadratic(rng):
    a = F(rng.randint(-20, 20), rng.randint(1, 5))
    b = F(rng.randint(1, 20), rng.randint(1, 5))
    return Poly([a * a + b * b, -2 * a, 1])


def test_c03_real_rootedness_certification():
    with criterion(3, "x^2+1 and 50 complex-rooted quadratics/quartics raise NotRealRooted"):
        with pytest.raises(NotRealRooted, match=r"D_2 = -4/1 < 0"):
            analyze_polynomial(Poly([1, 0, 1]))
        rng = random.Random(3)
        for i in range(50):
            p = _complex_quadratic(rng)
            if i % 2:
                other = _complex_quadratic(rng) if rng.random() < 0.5 else poly_from_roots(rng.sample(range(-9, 10), 2))
                p = p * other
            assert p.degree in (2, 4)
            with pytest.raises(NotRealRooted):
                analyze_polynomial(p)


def test_c04_multiplicity_certification():
    with criterion(4, "multiplicity path == gcd chain; Gram matrix == diag(1/r)"):
        rng = random.Random(4)
        for _ in range(60):
            roots, mults = random_multi_rooted(rng, max_degree=7)
            p = poly_from_roots(roots, mults)
            rep = analyze_polynomial(p)
            h = rep.hankel()
            chain = multiplicities_via_gcd(p, F(1, 2**20))
            encl = isolate_real_roots(p, F(1, 2**20))
            assert [r for _, r in chain] == [multiplicity(e, h) for e in encl]
            assert [r for _, r in chain] == [m for _, m in sorted(zip(roots, mults))]
            ordered = sorted(zip(roots, mults))
            gram = [[gram_orthogonality(F(a), F(b), h) for b, _ in ordered] for a, _ in ordered]
            assert gram == [[F(1, r) if i == j else 0 for j in range(len(ordered))]
                            for i, (_, r) in enumerate(ordered)]


def test_c05_gap_convergence():
    with criterion(5, "gap trails monotone, bracketing, within 1e-6; mu_0^2=36/49, M_1^2=556/49"):
        gp = gapcore.gap_polynomial(Poly([0, 3, -4, 1]))
        assert gapcore.iterate_min_gap(gp).iterates[0] == F(36, 49)
        assert gapcore.iterate_max_gap(gp, Poly([0, 3, -4, 1])).iterates[1] == F(556, 49)
        eps = F(1, 10**6)
        for roots in SIMPLE_CORPUS:
            p = poly_from_roots(roots)
            gp = gapcore.gap_polynomial(p)
            mu = gapcore.iterate_min_gap(gp)
            big = gapcore.iterate_max_gap(gp, p)
            lo_gap, hi_gap = brute_force_gaps(isolate_real_roots(p, F(1, 2**30)))
            true_min = min(b - a for a, b in zip(roots, roots[1:]))
            true_max = roots[-1] - roots[0]
            assert lo_gap.contains(true_min) and hi_gap.contains(true_max)
            assert mu.is_strictly_monotone() and big.is_strictly_monotone()
            assert mu.stop_reason is not gapcore.StopReason.MAX_ITERATIONS
            assert big.stop_reason is not gapcore.StopReason.MAX_ITERATIONS
            assert all(x <= lo_gap.hi**2 for x in mu.iterates)
            assert all(x >= hi_gap.lo**2 for x in big.iterates)
            assert all(x <= true_min**2 for x in mu.iterates)
            assert all(x >= true_max**2 for x in big.iterates)
            # |mu_K - mu| < eps and |M_K - M| < eps, compared on squares exactly
            assert mu.last > (true_min - eps) ** 2
            assert big.last < (true_max + eps) ** 2


def test_c06_two_root_closed_form():
    with criterion(6, "m=2 returns the exact gap with zero iterations"):
        rng = random.Random(6)
        for _ in range(50):
            a, b = sorted(rng.sample(range(-40, 41), 2))
            a, b = F(a, rng.randint(1, 4)), F(b, rng.randint(1, 4))
            if a == b:
                continue
            mults = [rng.randint(1, 3), rng.randint(1, 3)]
            rep = run({"source": "roots", "text": ""}, poly_from_roots([a, b], mults), command="gaps")
            for key in ("min_gap", "max_gap"):
                trail = rep[key]
                assert trail["stop_reason"] == "ClosedForm" and trail["iterations"] == 0
                assert F(trail["iterates"][0]["exact"]) == (b - a) ** 2


def test_c07_wilkinson_suite():
    with criterion(7, "Wilkinson exact values, rate bracket m=3..10, scaling identity, forecast m=3"):
        spec = W.w_recurrence(3, 1, denom_cap=None)
        assert spec.w_trail == (F(4, 9), F(436, 621))
        for m in range(3, 11):
            spec = W.w_recurrence(m, 80)
            tr = spec.w_trail
            assert all(x < y for x, y in zip(tr, tr[1:])) and tr[-1] < 1
            assert all(W.rate_checks(spec))
        for m in range(3, 7):
            for mu in (F(1), F(5), F(1, 3)):
                gp = gapcore.gap_polynomial(W.wilkinson_poly(m, mu))
                seq = gapcore.iterate_min_gap(gp, max_iter=4, denom_cap=None)
                assert seq.iterates == W.w_recurrence(m, 4, mu, denom_cap=None).mu_trail
        assert W.predicted_iterations(3, F(1, 100)) == 9
        assert W.observed_iterations(3, F(1, 100)) <= 9


def _tight_inside(e, lo, hi, p):
    """Tighten an enclosure until it fits in [lo, hi]; an exact hit on an end counts as inside."""
    for _ in range(600):
        if lo <= e.lo and e.hi <= hi:
            return True
        if e.hi == lo and evaluate(p, lo) == 0:
            return True
        e = e.refine(e.width / 2)
    return False


def test_c08_localization_soundness():
    with criterion(8, "oracle roots inside refined segment inside [a,b]; monotone trails; alpha limit"):
        for roots in SIMPLE_CORPUS:
            p = poly_from_roots(roots)
            seg = localize.build_segment(p)
            assert seg.a <= seg.refined_lo <= seg.refined_hi <= seg.b
            assert seg.radius_trail.is_strictly_monotone() and not seg.radius_trail.ascending
            for t in (seg.alpha_trail, seg.beta_trail):
                assert t.is_strictly_monotone() and t.ascending
            assert all(seg.contains(r) for r in roots)
            encl = isolate_real_roots(p, F(1, 2**40))
            assert all(_tight_inside(e, seg.refined_lo, seg.refined_hi, p) for e in encl)
            first = encl[0]
            oracle_lo, oracle_hi = (first.lo - seg.a) ** 2, (first.hi - seg.a) ** 2
            assert seg.alpha_trail.last <= oracle_hi
            assert oracle_lo - seg.alpha_trail.last < F(1, 10**6)


def test_c09_z_identity():
    with criterion(9, "(1/eps)(Z(eps) + m/(2 eps)) == S(eps^2) on 100 random pairs"):
        rng = random.Random(9)
        done = 0
        while done < 100:
            roots = random_simple_rooted(rng, 2, 6)
            gp = gapcore.gap_polynomial(poly_from_roots(roots))
            eps = F(rng.randint(1, 400), rng.randint(1, 60))
            if any((a - b) ** 2 == eps * eps for a, b in combinations(roots, 2)):
                continue
            m = len(roots)
            lhs = (gapcore.z_function(gp, eps) + F(m) / (2 * eps)) / eps
            assert lhs == gapcore.pair_sum_S(gp, eps * eps) == brute_pair_sum(roots, eps * eps)
            done += 1


def _cli(*argv):
    buf = io.StringIO()
    return main(list(argv), out=buf), buf.getvalue()


def test_c10_cli_contract(tmp_path):
    with criterion(10, "three analyze examples; 100-line batch deterministic and ordered"):
        code, out = _cli("analyze", "--coeffs", "0,3,-4,1", "--json")
        rep = json.loads(out)
        assert code == 0 and rep["m"] == 3 and rep["dets"] == ["3/1", "14/1", "36/1"]
        assert abs(F(rep["min_gap"]["iterates"][-1]["exact"]) - 1) < F(1, 10**9)
        assert abs(F(rep["max_gap"]["iterates"][-1]["exact"]) - 9) < F(1, 10**9)
        code, out = _cli("analyze", "--coeffs", "1,0,1", "--json")
        assert code == 2 and json.loads(out)["error"] == "not real-rooted: D_2 = -4/1 < 0"
        code, out = _cli("analyze", "--coeffs", "-2,5,-4,1", "--multiplicities", "--json")
        rep = json.loads(out)
        assert code == 0 and rep["m"] == 2 and rep["minimal"]["text"] == "x^2 - 3x + 2"
        assert [(round(e["approx"]), e["multiplicity"]) for e in rep["multiplicities"]] == [(1, 2), (2, 1)]

        rng = random.Random(10)
        lines = []
        for i in range(100):
            roots = rng.sample(range(-9, 10), rng.randint(1, 5))
            p = poly_from_roots(roots) if i % 7 else poly_from_roots(roots) * Poly([1, 0, 1])
            lines.append(",".join(str(c.numerator) for c in p.coeffs))
        src = tmp_path / "batch.txt"
        src.write_text("\n".join(lines) + "\n")
        first = _cli("analyze", str(src))
        again = _cli("analyze", str(src))
        parallel = _cli("analyze", str(src), "--jobs", "4")
        assert first == again == parallel
        reps = [json.loads(ln) for ln in first[1].splitlines()]
        assert [r["input"]["text"] for r in reps] == lines
        assert [r["exit_code"] for r in reps] == [0 if i % 7 else 2 for i in range(100)]
