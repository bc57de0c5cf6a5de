import csv
import io
import json
import math

import pytest

from resolvent_bounds.cli import main, parse_grid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_xnorm(capsys):
    code, out, _ = run(capsys, "xnorm", "--n", "3", "--r", "1", "--beta", "2")
    data = json.loads(out)
    assert code == 0
    assert data["norm_char_eq"] == pytest.approx(1 / math.tan(math.pi / 12))
    assert data["root_census"]["predicted_count"] == 6
    code, out, _ = run(capsys, "xnorm", "--n", "5", "--r", "0.5", "--beta", "0.75")
    assert code == 0 and json.loads(out)["norm_oracle"] == pytest.approx(1)
    code, out, _ = run(capsys, "xnorm", "--n", "8", "--r", "0.6", "--beta", "1.4")
    assert code == 0 and json.loads(out)["rel_gap"] < 1e-8


def test_usage_errors(capsys):
    code, _, err = run(capsys, "xnorm", "--n", "3", "--r", "1.5", "--beta", "1")
    assert code == 2 and "OutOfDomain" in err
    with pytest.raises(SystemExit) as exc:
        main(["xnorm", "--n", "3"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "bound", "--method", "theorem1", "--zeta", "0")
    assert code == 2 and "spectrum" in err
    code, _, err = run(capsys, "bound", "--method", "theorem3", "--zeta", "1",
                       "--spectrum", '[{"re":0.5,"im":0,"mult":1}]')
    assert code == 2 and "|zeta| < 1" in err


def test_bound(capsys, tmp_path):
    code, out, _ = run(capsys, "bound", "--method", "theorem3", "--zeta", "0",
                       "--spectrum", '[{"re":-0.5,"im":0,"mult":4}]')
    assert code == 0 and json.loads(out)["bound_value"] == pytest.approx(16)
    code, out, _ = run(capsys, "bound", "--method", "prop2", "--zeta", "2",
                       "--spectrum", '[{"re":1,"im":0,"mult":1},{"re":-1,"im":0,"mult":1}]')
    assert code == 0 and json.loads(out)["bound_value"] == pytest.approx(1)
    f = tmp_path / "s.json"
    f.write_text('[{"re":0.3,"im":0.4,"mult":2},{"re":-0.6,"im":0,"mult":1}]')
    code, out, _ = run(capsys, "bound", "--method", "theorem1", "--zeta", "0.9", "--spectrum-file", str(f))
    data = json.loads(out)
    assert code == 0 and data["reconstructed"] == pytest.approx(data["bound_value"], rel=1e-12)
    assert data["deg"] == 3 and data["method"] == "theorem1"


def test_certify(capsys, tmp_path):
    out_csv = tmp_path / "gaps.csv"
    code, _, err = run(capsys, "certify", "--kind", "all", "--ns", "1:4", "--output", str(out_csv))
    assert code == 0
    assert "skip theorem1" in err
    rows = list(csv.DictReader(out_csv.open()))
    assert rows and all(r["pass"] == "true" for r in rows)
    assert {r["check"] for r in rows} == {"theorem1", "theorem4", "prop5"}
    assert all(float(r["gap"]) == 0.0 or float(r["gap"]) < 1e-8 for r in rows if r["n"] == "1")


def test_audit_deterministic(capsys, tmp_path):
    hist = tmp_path / "h.csv"
    code, out1, _ = run(capsys, "audit", "--n", "4", "--trials", "30", "--seed", "42", "--histogram", str(hist))
    code2, out2, _ = run(capsys, "audit", "--n", "4", "--trials", "30", "--seed", "42", "--threads", "2")
    assert code == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["violations"] == 0
    assert hist.read_text().startswith("bound,lo,hi,count")


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--ns", "1:60")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 60
    assert float(rows[-1]["norm"]) == pytest.approx(2.0, abs=1e-6)
    assert float(rows[-1]["limit"]) == 2.0
    code, out, _ = run(capsys, "sweep", "--preset", "lemma")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert all(r["predicted_roots"] == r["found_roots"] for r in rows)
    code, out, _ = run(capsys, "sweep", "--ns", "1:20", "--rs", "1", "--betas", "2")
    for row in csv.DictReader(io.StringIO(out)):
        n = int(row["n"])
        assert float(row["norm"]) == pytest.approx(1 / math.tan(math.pi / (4 * n)), rel=1e-12)
        assert row["limit"] == ""
    code, out, _ = run(capsys, "sweep", "--preset", "sup", "--ns", "60", "--rs", "0.5", "--zetas", "0.5")
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["asymptotic_ratio"]) == pytest.approx(1, abs=1e-4)


def test_csv_is_lossless(capsys):
    code, out, _ = run(capsys, "sweep", "--ns", "7", "--rs", "0.3", "--betas", "1.1")
    row = next(csv.DictReader(io.StringIO(out)))
    from resolvent_bounds.toeplitz import ExtremalParams, xnorm_oracle

    assert float(row["norm"]) == xnorm_oracle(ExtremalParams(7, 0.3, 1.1))


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", "4", "--r", "0.5", "--beta", "1.5")
    data = json.loads(out)
    assert code == 0 and len(data["lambda_squares"]) == 4
    assert 2 * len(data["theta_trig"]) == data["predicted_count"]
    code, out, _ = run(capsys, "roots", "--n", "4", "--r", "0.5", "--beta", "0.75")
    assert json.loads(out)["degenerate"] is True
    code, _, err = run(capsys, "roots", "--n", "4", "--r", "0.5", "--beta", "1.5", "--grid", "8")
    assert code == 2 and "GridTooCoarse" in err


def test_parse_grid():
    assert parse_grid("-1:1:0.5") == [-1, -0.5, 0, 0.5, 1]
    assert parse_grid("0.1,0.2") == [0.1, 0.2]
    assert parse_grid("1:3", int) == [1, 2, 3]
