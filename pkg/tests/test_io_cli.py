import json
import subprocess
import sys

import numpy as np
import pytest

from ricci4 import io as tio
from ricci4.cli import main
from ricci4.flow import FlowProblem, integrate
from ricci4.lie_algebra import GeometrySpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def a7_traj():
    return integrate(FlowProblem.build(GeometrySpec("A7"), (1, 2, 3, 4), t_end=100.0))


# --------------------------------------------------------------------------
# file formats
# --------------------------------------------------------------------------

def test_json_round_trip_is_exact(a7_traj):
    rec = tio.record_of(a7_traj, {"class": "A7"})
    back = tio.loads(tio.dumps(rec, "json"), "json")
    assert np.array_equal(back.samples, a7_traj.samples)
    assert back.columns == rec.columns and back.config == {"class": "A7"}
    assert back.termination == "reached_t_end" and back.T_est is None


def test_csv_round_trip(a7_traj):
    rec = tio.record_of(a7_traj)
    text = tio.dumps(rec, "csv")
    assert text.splitlines()[0] == "t,A,B,C,D,K_max,scalar,mon:BCD^2,mon:AD(B-C)"
    back = tio.loads(text)
    rel = np.abs(back.samples - rec.samples) / np.maximum(np.abs(rec.samples), 1e-300)
    assert np.max(rel) <= 1e-15
    np.testing.assert_array_equal(back.metric, a7_traj.metric)
    assert set(back.monitors) == {"BCD^2", "AD(B-C)"}


def test_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        tio.loads("t,A,B,C,D,K,scalar\n0,1,1,1,1,0,0\n")
    with pytest.raises(ValueError):
        tio.loads("")


# --------------------------------------------------------------------------
# list
# --------------------------------------------------------------------------

def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and len(out.strip().splitlines()) == 21
    code, out, _ = run(capsys, "list", "--class", "A7")
    assert "P6.i, P6.ii" in out
    code, out, _ = run(capsys, "list", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 20 and {r["class"] for r in rows} >= {"A1", "B10"}


# --------------------------------------------------------------------------
# flow
# --------------------------------------------------------------------------

def test_flow_a4(capsys, tmp_path):
    path = tmp_path / "a4.csv"
    code, _, _ = run(capsys, "flow", "--class", "A4", "--lambda", "1,1,1,1", "--t-end", "10",
                     "-o", str(path))
    assert code == 0
    rec = tio.loads(path.read_text())
    assert rec.times[-1] == 10.0
    assert rec.metric[-1, 0] == pytest.approx(31 ** (1 / 3), rel=1e-9)
    assert rec.config["class"] == "A4"


def test_flow_flat_constant(capsys):
    code, out, _ = run(capsys, "flow", "--class", "A1", "--lambda", "1,2,3,4", "--t-end", "5")
    rec = tio.loads(out)
    assert code == 0
    np.testing.assert_allclose(rec.metric, np.broadcast_to([1, 2, 3, 4], rec.metric.shape), rtol=4e-16)


def test_flow_blowup(capsys):
    code, out, err = run(capsys, "flow", "--class", "A10", "--branch", "P9.iii", "--lambda", "1,1,1,1",
                         "--a", "0.2,0.5,0.9", "--t-end", "5", "--format", "json")
    assert code == 2 and "T_est" in err
    rec = tio.loads(out, "json")
    assert rec.termination == "blowup_detected"
    assert rec.T_est == pytest.approx(1.0, abs=1e-3)


def test_flow_json_matches_library(capsys):
    code, out, _ = run(capsys, "flow", "--class", "A7", "--lambda", "1,2,3,4", "--t-end", "100",
                       "--format", "json")
    lib = integrate(FlowProblem.build(GeometrySpec("A7"), (1, 2, 3, 4), t_end=100.0))
    assert code == 0 and np.array_equal(tio.loads(out, "json").samples, lib.samples)


def test_flow_alpha_sets_family(capsys):
    code, out, _ = run(capsys, "flow", "--class", "A7", "--alpha", "0.5", "--lambda", "1,1.5,2,1",
                       "--t-end", "10", "--format", "json")
    assert code == 0
    cfg = tio.loads(out, "json").config
    assert cfg["branch"] == "P6.ii" and cfg["a"][1] == 0.5


@pytest.mark.parametrize("argv", [
    ["flow", "--bogus"],
    ["flow", "--lambda", "1,1,1,1"],
    ["flow", "--class", "A4"],
    ["flow", "--class", "A4", "--lambda", "1,1,1"],
    ["flow", "--class", "A4", "--lambda", "1,1,1,1", "--alpha", "0.3"],
    ["flow", "--class", "Z9", "--lambda", "1,1,1,1"],
    ["flow", "--class", "A7", "--branch", "P9.i", "--lambda", "1,1,1,1"],
    ["verify", "nonsense"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 64


def test_flow_offdiagonal_start_is_an_error(capsys):
    code, _, err = run(capsys, "flow", "--class", "A6", "--a", "0,0.4", "--lambda", "1,2,3,4",
                       "--t-end", "1")
    assert code in (1, 64) and err


# --------------------------------------------------------------------------
# config files
# --------------------------------------------------------------------------

def test_config_file_and_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# A4 run\nclass = A4\nlambda = 1,1,1,1\nt-end = 10\nformat = json\n")
    code, out, _ = run(capsys, "flow", "--config", str(cfg))
    rec = tio.loads(out, "json")
    assert code == 0 and rec.times[-1] == 10.0
    code, out, _ = run(capsys, "flow", "--config", str(cfg), "--t-end", "2")
    assert tio.loads(out, "json").times[-1] == 2.0


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("class = A4\ncolour = blue\n")
    assert main(["flow", "--config", str(cfg)]) == 64


# --------------------------------------------------------------------------
# decay, compare, verify
# --------------------------------------------------------------------------

def test_decay(capsys):
    code, out, _ = run(capsys, "decay", "--class", "A2", "--k", "2", "--lambda", "1,1,1,1",
                       "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["curvature_exponent"] == pytest.approx(-1.0, abs=0.05)
    code, out, _ = run(capsys, "decay", "--class", "A1", "--lambda", "1,1,1,1")
    assert code == 0 and "flat" in out
    code, out, _ = run(capsys, "decay", "--class", "A10", "--branch", "P9.i", "--lambda", "1,2,3,1")
    assert code == 3 and "TypeI" in out


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--class", "A6", "--lambda", "1,2,3,4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith(",rel_err")
    assert max(float(ln.split(",")[-1]) for ln in lines[1:]) <= 1e-8
    code, _, _ = run(capsys, "compare", "--class", "A5", "--lambda", "1,2,3,4")
    assert code == 3


def test_verify_class(capsys):
    code, out, _ = run(capsys, "verify", "--class", "A6")
    assert code == 0
    assert any("monitors" in ln and "ABC" in ln and "PASS" in ln for ln in out.splitlines())
    code, out, _ = run(capsys, "verify", "A1")
    assert code == 0 and "FAIL" not in out


def test_verify_all_deterministic(capsys):
    first = run(capsys, "verify", "all", "--no-flows", "--seed", "7")
    second = run(capsys, "verify", "all", "--no-flows", "--seed", "7")
    other = run(capsys, "verify", "all", "--no-flows", "--seed", "8")
    assert first == second
    assert first[0] == 0 and first[1] != other[1]
    table = first[1].split("\n\n")[-1].strip().splitlines()
    assert len(table) == 21


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "ricci4", "list", "--class", "B9"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "B9" in res.stdout
