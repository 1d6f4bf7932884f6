import io
import json
import random
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import jsonschema
import pytest

from hankelgap.cli import main
from hankelgap.polyarith import poly_from_roots

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report_schema.json").read_text())


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    rep = json.loads(text)
    jsonschema.validate(rep, SCHEMA)
    return code, rep


def all_rat_strings(obj):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, str) and "/" in v and k not in ("text",):
                yield v
            else:
                yield from all_rat_strings(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from all_rat_strings(v)
    elif isinstance(obj, str) and "/" in obj:
        yield obj


def close_to(ratpair, target, tol=F(1, 10**6)):
    return abs(F(ratpair["exact"]) - target) < tol


def test_analyze_cubic():
    code, rep = run_json("analyze", "--coeffs", "0,3,-4,1")
    assert code == 0 and rep["exit_code"] == 0
    assert rep["m"] == 3 and rep["dets"] == ["3/1", "14/1", "36/1"]
    assert close_to(rep["min_gap"]["iterates"][-1], 1)
    assert close_to(rep["max_gap"]["iterates"][-1], 9)
    assert rep["min_gap"]["iterates"][0]["exact"] == "36/49"
    assert rep["max_gap"]["iterates"][1]["exact"] == "556/49"
    assert rep["segment"]["refined_lo"] and "timing" not in rep


def test_analyze_not_real_rooted(capsys):
    code, _ = run("analyze", "--coeffs", "1,0,1")
    assert code == 2
    assert "not real-rooted: D_2 = -4/1 < 0" in capsys.readouterr().err
    code, rep = run_json("analyze", "--coeffs", "1,0,1")
    assert code == 2 and rep == {"error": "not real-rooted: D_2 = -4/1 < 0", "exit_code": 2}


def test_analyze_multiplicities():
    code, rep = run_json("analyze", "--coeffs", "-2,5,-4,1", "--multiplicities")
    assert code == 0 and rep["m"] == 2 and rep["minimal"]["text"] == "x^2 - 3x + 2"
    got = {round(e["approx"]): e["multiplicity"] for e in rep["multiplicities"]}
    assert got == {1: 2, 2: 1}
    code, text = run("analyze", "--coeffs", "-2,5,-4,1", "--multiplicities")
    assert "multiplicities: 1: 2, 2: 1" in text


def test_text_report():
    code, text = run("analyze", "--coeffs", "0,3,-4,1")
    assert code == 0
    assert "D_1=3/1, D_2=14/1, D_3=36/1" in text and "x^3 - 4x^2 + 3x" in text


def test_wilkinson_examples(capsys):
    code, rep = run_json("wilkinson", "-m", "3", "--steps", "2")
    assert code == 0
    assert [w["exact"] for w in rep["w_trail"][:2]] == ["4/9", "436/621"]
    assert rep["rate_checks_pass"]
    code, rep = run_json("wilkinson", "-m", "3", "--delta", "0.01")
    assert rep["forecast"] == 9 and rep["observed"] == 6
    code, text = run("wilkinson", "-m", "3", "--delta", "0.01")
    assert "forecast k = 9" in text and "observed k = 6" in text
    code, _ = run("wilkinson", "-m", "2")
    assert code == 1


def test_gaps_and_localize_examples():
    code, rep = run_json("gaps", "--coeffs", "0,3,-4,1", "--tol", "1e-9")
    assert code == 0 and "segment" not in rep
    mu = [F(x["exact"]) for x in rep["min_gap"]["iterates"]]
    big = [F(x["exact"]) for x in rep["max_gap"]["iterates"]]
    assert all(a < b for a, b in zip(mu, mu[1:])) and all(a > b for a, b in zip(big, big[1:]))

    code, rep = run_json("localize", "--coeffs", "-1,0,1")
    seg = rep["segment"]
    assert F(seg["a"]) == -F(seg["b"]) and F(seg["refined_lo"]) == -F(seg["refined_hi"])
    assert "min_gap" not in rep

    code, rep = run_json("gaps", "--coeffs", "2,-3,1")
    for key in ("min_gap", "max_gap"):
        assert rep[key]["stop_reason"] == "ClosedForm" and rep[key]["iterations"] == 0
        assert rep[key]["iterates"][0]["exact"] == "1/1"


def test_roots_and_matrix_inputs(tmp_path):
    code, rep = run_json("analyze", "--roots", "1,1,2")
    assert rep["n"] == 3 and rep["m"] == 2
    mat = tmp_path / "m.txt"
    mat.write_text("3\n2 1 0\n1 2 1\n0 1 2\n")
    code, rep = run_json("analyze", "--matrix-file", str(mat))
    assert code == 0 and rep["m"] == 3 and rep["input"]["source"] == "matrix-file"
    mat.write_text("2\n1 2\n3 1\n")
    code, _ = run("analyze", "--matrix-file", str(mat))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["analyze"],
    ["analyze", "--coeffs", "1,2", "--roots", "1"],
    ["analyze", "--coeffs", "1,,2"],
    ["analyze", "--coeffs", "7"],
    ["analyze", "--coeffs", "a,b"],
    ["analyze", "--matrix-file", "/nonexistent/file"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 1


def test_argparse_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"], out=io.StringIO())
    assert exc.value.code == 1


def test_json_round_trip():
    _, rep = run_json("analyze", "--coeffs", "0,3,-4,1", "--multiplicities")
    strings = list(all_rat_strings(rep))
    assert len(strings) > 20
    for s in strings:
        q = F(s)
        assert f"{q.numerator}/{q.denominator}" == s


def _corpus(n=100, seed=7):
    rng = random.Random(seed)
    lines = []
    for i in range(n):
        if i % 10 == 9:
            lines.append("1,0,1")
            continue
        k = rng.randint(2, 6)
        roots = rng.sample(range(-12, 13), k)
        lines.append(",".join(str(c.numerator) for c in poly_from_roots(roots).coeffs))
    return lines


def test_batch_is_deterministic_and_ordered(tmp_path):
    lines = _corpus()
    src = tmp_path / "batch.txt"
    src.write_text("\n".join(lines) + "\n")
    code1, out1 = run("analyze", str(src))
    code2, out2 = run("analyze", str(src), "--jobs", "2")
    assert out1 == out2 and code1 == code2 == 2
    reps = [json.loads(ln) for ln in out1.splitlines()]
    assert [r["input"]["text"] for r in reps] == lines
    for r in reps:
        jsonschema.validate(r, SCHEMA)
    assert [r["exit_code"] for r in reps].count(2) == 10


def test_batch_from_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "hankelgap.cli", "gaps", "-"],
        input="0,3,-4,1\n2,-3,1\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    reps = [json.loads(ln) for ln in proc.stdout.splitlines()]
    assert [r["m"] for r in reps] == [3, 2]
