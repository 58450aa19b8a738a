import csv
import io
import json
import math
import subprocess
import sys

import pytest

from gammaft.cli import main
from gammaft.transform import TransformParams, eval_transform


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_transform_json(capsys):
    code, out, _ = run(capsys, "transform", "--alpha", "1", "--beta", "1", "--m", "0", "--lambda", "0", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert list(rec) == ["alpha", "beta", "m", "lambda", "value_re", "value_im", "method", "achieved_tol"]
    assert abs(rec["value_re"] - math.pi / 2) < 1e-15
    assert rec["method"] == "closed_form" and rec["achieved_tol"] is None


def test_transform_examples(capsys):
    _, out, _ = run(capsys, "transform", "--alpha", "0.5", "--beta", "0.5", "--m", "4", "--lambda", "0")
    assert abs(json.loads(out)["value_re"] - 0.9817477) < 1e-7
    _, out, _ = run(capsys, "transform", "--alpha", "1", "--beta", "1", "--m", "1", "--lambda", "0")
    rec = json.loads(out)
    assert rec["value_re"] == 0 and abs(rec["value_im"]) < 1e-12


def test_json_round_trip_is_bit_exact(capsys):
    _, out, _ = run(capsys, "transform", "--alpha", "0.37", "--beta", "1.91", "--m", "5", "--lambda", "-0.83")
    rec = json.loads(out)
    v = eval_transform(TransformParams(rec["alpha"], rec["beta"], rec["m"], rec["lambda"]))
    assert (rec["value_re"], rec["value_im"]) == (v.real, v.imag)


def test_grid_csv_order_and_oracle(capsys, monkeypatch):
    monkeypatch.setenv("GAMMAFT_WORKERS", "3")
    code, out, _ = run(capsys, "transform", "--alpha", "1.2", "--beta", "0.8", "--m", "2",
                       "--lambda-grid=-1:1:0.5", "--oracle", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert out.splitlines()[0] == "alpha,beta,m,lambda,value_re,value_im,method,achieved_tol"
    assert [float(r["lambda"]) for r in rows] == [-1, -1, -0.5, -0.5, 0, 0, 0.5, 0.5, 1, 1]
    assert [r["method"] for r in rows[:2]] == ["closed_form", "quadrature"]
    for cf, qd in zip(rows[::2], rows[1::2]):
        assert abs(float(cf["value_re"]) - float(qd["value_re"])) < 1e-9
        assert float(qd["achieved_tol"]) < 1e-9


def test_numbers(capsys):
    _, out, _ = run(capsys, "numbers", "bernoulli", "--max", "4", "--variant", "eq48")
    assert [r["value"] for r in csv.DictReader(io.StringIO(out))] == ["-1/2", "1/6", "0", "-1/30"]
    _, out, _ = run(capsys, "numbers", "euler", "--max", "4")
    assert [r["value"] for r in csv.DictReader(io.StringIO(out))] == ["1", "0", "-1", "0", "5"]
    _, out, _ = run(capsys, "numbers", "residue", "--m", "3")
    (row,) = csv.DictReader(io.StringIO(out))
    assert row["value"] == "-1/6" and row["numerator"] == "-1" and row["denominator"] == "6"
    _, out, _ = run(capsys, "numbers", "euler-poly", "--m", "2", "--beta", "1/2", "--format", "json")
    assert json.loads(out)["value"] == "-1/4"
    _, out, _ = run(capsys, "numbers", "bernoulli", "--max", "2", "--variant", "eq47")
    assert [r["index"] for r in csv.DictReader(io.StringIO(out))] == ["2", "3"]


def test_physics(capsys):
    _, out, _ = run(capsys, "physics", "expectation", "--q", "2", "--n", "0", "--l", "0")
    assert json.loads(out)["value_re"] == 1.5
    _, out, _ = run(capsys, "physics", "uncertainty", "--n", "0", "--l", "0")
    assert abs(json.loads(out)["value_re"] - 0.546755) < 1e-6
    _, out, _ = run(capsys, "physics", "uncertainty", "--n", "0", "--l-max", "50", "--format", "csv")
    col = [float(r["value_re"]) for r in csv.DictReader(io.StringIO(out))]
    assert len(col) == 51 and all(b < a for a, b in zip(col, col[1:])) and col[-1] > 0.5
    _, out, _ = run(capsys, "physics", "wigner", "--n", "1", "--l", "1", "--x", "0.3", "--p", "0.7", "--oracle")
    cf, qd = (json.loads(line) for line in out.splitlines())
    assert abs(cf["value_re"] - qd["value_re"]) < 1e-6 * abs(qd["value_re"])


def test_partitions(capsys):
    _, out, _ = run(capsys, "partitions", "--m", "3")
    assert out.splitlines() == ["M,multiplicities,weight", "3,3 0 0,1/6", "2,1 1 0,1/2", "1,0 0 1,1/6"]


@pytest.mark.parametrize("argv", [
    ["transform", "--alpha", "x", "--beta", "1", "--m", "0"],
    ["transform", "--alpha", "-1", "--beta", "1", "--m", "0"],
    ["transform", "--alpha", "1", "--beta", "1", "--m", "0", "--lambda-grid", "1:0:1"],
    ["numbers", "euler-poly", "--m", "2"],
    ["numbers", "euler-poly", "--m", "2", "--beta", "3/2"],
    ["numbers", "bernoulli", "--max", "3", "--variant", "eq49"],
    ["physics", "wigner", "--n", "0"],
    ["verify", "--tol", "-1"],
])
def test_bad_flags_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 2


def test_numeric_failure_exit_3(capsys):
    code, _, err = run(capsys, "transform", "--alpha", "100", "--beta", "100", "--m", "0")
    assert code == 3 and "overflow" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "gammaft", "numbers", "residue", "--m", "4"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.splitlines()[1] == "4,4,1/24,1,24"


def test_verify_loose_tolerance_exits_0(capsys):
    # raising every tolerance to 1e-6 should leave nothing failing
    code, out, _ = run(capsys, "verify", "--tol", "1e-6")
    print(out)
    assert "checks passed" in out.splitlines()[-1]
    assert code == 0
