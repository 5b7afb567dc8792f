import csv
import io
import json
import math
import subprocess
import sys

import pytest

from gammalcm.cli import OUTDIR_ENV, main

SQRT_PI = math.sqrt(math.pi)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


# --- eval / classify ----------------------------------------------------------------------


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "general-ratio:a=1,b=0.5,c=2sqrtpi", "--x", "1")
    assert code == 0 and float(out) == pytest.approx(4.0, rel=1e-15)
    code, out, _ = run(capsys, "eval", "general-ratio:a=2,b=2,c=1", "--x", "3")
    assert code == 0 and float(out) == 1.0
    code, out, _ = run(capsys, "eval", "psi-ratio:s=1,t=1", "--x", "0")
    assert code == 0 and float(out) == pytest.approx(0.5614594835668851, rel=1e-14)


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "general-ratio:a=1,b=0.5", "--x", "1")
    assert code == 2 and "needs parameter 'c'" in err
    code, _, err = run(capsys, "eval", "coding-gain", "--x", "-1")
    assert code == 2 and "domain" in err
    code, _, _ = run(capsys, "eval", "coding-gain")
    assert code == 2


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "qi-berg", "--x", "0.3", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["family"] == "qi-berg"
    from gammalcm.families import QiBerg

    assert payload["value"] == QiBerg().evaluate(0.3)


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "--a", "1", "--b", "0.5", "--c", "2sqrtpi")
    assert code == 0 and out.startswith("Case1LCM") and "threshold=1.7724538509055" in out
    code, out, _ = run(capsys, "classify", "--a", "2", "--b", "2", "--c", "1")
    assert code == 0 and out.startswith("Undetermined")
    code, out, _ = run(capsys, "classify", "--a", "0.5", "--b", "1", "--c", "0.5", "--format", "csv")
    row = parse_csv(out)[0]
    assert row["region"] == "Case2ReciprocalLCM"
    assert float(row["threshold"]) == pytest.approx(1.0 / SQRT_PI, rel=1e-15)
    code, _, _ = run(capsys, "classify", "--a", "-1", "--b", "1", "--c", "1")
    assert code == 2


# --- check ------------------------------------------------------------------------------


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "coding-gain")[0] == 0
    code, out, _ = run(capsys, "check", "general-ratio:a=1,b=0.5,c=1")
    assert code == 1 and "Violation(k=1" in out and "double-path" in out
    assert run(capsys, "check", "general-ratio:a=1,b=0.5,c=oops")[0] == 2
    assert run(capsys, "check", "coding-gain", "--x-min", "5", "--x-max", "1")[0] == 2
    assert run(capsys, "check", "p-alpha:alpha=1", "--x-min", "0.5", "--x-max", "2", "--points", "4",
               "--spacing", "linear")[0] == 2  # grid lands on the removable point


def test_check_csv_schema_and_precision(capsys):
    code, out, _ = run(capsys, "check", "coding-gain", "--points", "5", "--K", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "k,x,value,verdict"
    rows = parse_csv(out)
    assert len(rows) == 15
    from gammalcm.checker import GridSpec, lcm_sign_table
    from gammalcm.families import CodingGain

    table = lcm_sign_table(CodingGain(), GridSpec(0.01, 100.0, 5), 3)
    for row, (k, x, value, flag) in zip(rows, table.rows()):
        assert int(row["k"]) == k and float(row["x"]) == x and float(row["value"]) == value
        assert row["verdict"] == flag


def test_check_violation_csv_has_violation_rows(capsys):
    code, out, _ = run(capsys, "check", "general-ratio:a=1,b=0.5,c=1", "--format", "csv", "--points", "10")
    assert code == 1
    assert any(r["verdict"] == "violation" for r in parse_csv(out))


def test_check_json_is_self_describing(capsys):
    code, out, _ = run(capsys, "check", "shifted-root-ratio:alpha=-0.5", "--format", "json", "--points", "20",
                       "--K", "4", "--mode", "lcm")
    payload = json.loads(out)
    assert code == 1
    assert payload["grid"] == {"x_min": 0.01, "x_max": 100.0, "points": 20, "spacing": "log"}
    assert payload["tolerance_floor"] == 1e-10
    assert payload["verdict"]["status"] == "violation"
    assert payload["verdict"]["confirmation"] == "series-only"
    assert len(payload["entries"]) == 4 * 20
    assert all("tolerance" in e for e in payload["entries"])


def test_check_cm_mode(capsys):
    code, out, _ = run(capsys, "check", "stieltjes:a=0.5,b=0.1,atoms=2@1;7@3", "--mode", "cm", "--K", "8",
                       "--format", "csv")
    assert code == 0
    assert {r["k"] for r in parse_csv(out)} == {str(k) for k in range(9)}


def test_out_file_and_outdir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(OUTDIR_ENV, str(tmp_path / "reports"))
    code, out, _ = run(capsys, "check", "coding-gain", "--format", "csv", "--out", "table.csv", "--points", "4")
    assert code == 0 and out == ""
    text = (tmp_path / "reports" / "table.csv").read_text()
    assert text.startswith("k,x,value,verdict\n")
    absolute = tmp_path / "direct.json"
    assert run(capsys, "classify", "--a", "1", "--b", "2", "--c", "1", "--format", "json", "--out", str(absolute))[0] == 0
    assert json.loads(absolute.read_text())["region"] == "Case2ReciprocalLCM"


# --- find-violation / sweep / oracle ---------------------------------------------------------


def test_find_violation(capsys):
    code, out, _ = run(capsys, "find-violation", "--a", "1", "--b", "0.5", "--c", "1", "--k", "1")
    assert code == 1 and "violation at k=1" in out
    code, out, _ = run(capsys, "find-violation", "--a", "1", "--b", "0.5", "--c", "2sqrtpi", "--k", "5", "--up-to",
                       "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["verdict"]["status"] == "none" and payload["tolerance"] > 0
    code, out, _ = run(capsys, "find-violation", "--a", "1", "--b", "0.5", "--c", "1", "--format", "csv")
    row = parse_csv(out)[0]
    assert row["k"] == "1" and float(row["value"]) < 0


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "general-ratio:a=1,b=0.5", "--free", "c", "--from", "1", "--to", "2.5",
                       "--step", "0.05", "--format", "csv")
    assert code == 1
    assert out.splitlines()[0] == "param,verdict,k,x,value"
    rows = parse_csv(out)
    assert len(rows) == 31
    labels = [(float(r["param"]) < SQRT_PI, r["verdict"]) for r in rows]
    assert all(v == ("violation" if below else "consistent") for below, v in labels)
    assert rows[0]["k"] == "1" and rows[-1]["k"] == ""


def test_sweep_empty_and_errors(capsys):
    code, out, _ = run(capsys, "sweep", "general-ratio:a=1,b=0.5", "--free", "c", "--from", "2", "--to", "1",
                       "--step", "0.1", "--format", "csv")
    assert code == 0 and out == "param,verdict,k,x,value\n"
    code, out, _ = run(capsys, "sweep", "general-ratio:a=1,b=0.5", "--free", "c", "--from", "-0.5", "--to", "0.5",
                       "--step", "0.5", "--format", "json")
    payload = json.loads(out)
    assert code == 2
    assert [r["verdict"] for r in payload["rows"]] == ["error", "error", "violation"]
    assert "c must be positive" in payload["rows"][0]["error"]
    assert run(capsys, "sweep", "nope", "--free", "c", "--from", "1", "--to", "2", "--step", "1")[0] == 2


def test_sweep_iff_family(capsys):
    code, out, _ = run(capsys, "sweep", "shifted-root-ratio", "--free", "alpha", "--from", "-0.5", "--to", "0.5",
                       "--step", "1", "--format", "csv")
    assert code == 1
    assert [r["verdict"] for r in parse_csv(out)] == ["violation", "consistent"]


def test_oracles(capsys):
    code, out, _ = run(capsys, "oracle", "polygamma-quadrature", "--n", "1", "--x", "1", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["rel_err"] < 1e-8 and payload["verdict"] == "agree"
    assert run(capsys, "oracle", "gamma-quadrature", "--x", "7.5")[0] == 0
    assert run(capsys, "oracle", "finite-difference", "--family", "qi-berg", "--x", "1.5", "--k", "2")[0] == 0
    assert run(capsys, "oracle", "polygamma-quadrature", "--x", "1")[0] == 2
    assert run(capsys, "oracle", "polygamma-quadrature", "--n", "20", "--x", "1")[0] == 2
    assert run(capsys, "oracle", "gamma-quadrature", "--x", "80")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "--version")[0] == 0


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "gammalcm.cli", "classify", "--a", "1", "--b", "0.5", "--c", "sqrtpi"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.startswith("Case1LCM")
