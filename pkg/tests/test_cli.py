import json
import subprocess
import sys

import pytest

from grasscurve.cli import main
from grasscurve.laws import make_instance, run_instance, run_laws


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    doc = json.loads(out)
    assert doc["exit_code"] == code
    return code, doc


def test_analyze_morita(capsys, data_dir):
    code, doc = run_json(capsys, "analyze", str(data_dir / "morita_d2.json"))
    assert code == 0
    res = doc["result"]
    assert (res["degree"], res["splitting"], res["width"]) == (2, [1, 1], 0)
    assert res["delta_nonzero"] is True and res["sigma_zero"] is True
    assert doc["command"] == "analyze"
    assert doc["input_digest"].startswith("sha256:")


def test_analyze_unbalanced(capsys, data_dir):
    code, doc = run_json(capsys, "analyze", str(data_dir / "split_1_3.json"))
    assert code == 0
    assert doc["result"]["degree"] == 4 and doc["result"]["width"] == 2


def test_malformed_exit_2(capsys, data_dir):
    code, doc = run_json(capsys, "analyze", str(data_dir / "malformed.json"))
    assert code == 2
    assert "columns[0][0]" in doc["result"]["error"]
    code, _ = run_json(capsys, "decide", str(data_dir / "does_not_exist.json"))
    assert code == 2


def test_decide_accepts_moved_morita(capsys, data_dir):
    code, doc = run_json(capsys, "decide", str(data_dir / "moebius_d2.json"))
    assert code == 0
    assert doc["result"]["accepted"] and doc["result"]["reason"] == "OK"
    assert set(doc["result"]["witness"]) == {"A", "B", "C", "D"}


@pytest.mark.parametrize(
    "name, reason",
    [("split_1_3.json", "DEGREE_MISMATCH"), ("delta_zero.json", "DELTA_ZERO"), ("delta_zero_columns.json", "DELTA_ZERO")],
)
def test_decide_rejects(capsys, data_dir, name, reason):
    code, doc = run_json(capsys, "decide", str(data_dir / name))
    assert code == 1
    assert doc["result"]["reason"] == reason
    assert doc["result"]["witness"] is None


def test_klein(capsys, data_dir):
    code, doc = run_json(capsys, "klein", str(data_dir / "morita_d2.json"))
    assert code == 0
    res = doc["result"]
    assert list(res["coordinates"]) == ["z11,12", "z11,21", "z11,22", "z12,21", "z12,22", "z21,22"]
    assert res["coordinates"]["z12,21"] == "-s*t"
    assert res["quadric_residual"] == "0"
    assert res["plane_residuals"] == ["0", "0", "0"]
    code, doc = run_json(capsys, "klein", str(data_dir / "delta_zero.json"))
    assert doc["result"]["quadric_residual"] == "0"
    assert doc["result"]["plane_residuals"] != ["0", "0", "0"]


def test_klein_needs_d2(capsys, data_dir):
    code, _ = run_json(capsys, "klein", str(data_dir / "morita_d3.json"))
    assert code == 2


def test_laws_pass(capsys):
    code, doc = run_json(capsys, "laws", "--d", "2", "--trials", "10", "--seed", "7")
    assert code == 0
    assert doc["result"]["seed"] == 7
    assert all(v["failed"] == 0 for v in doc["result"]["suites"].values())


def test_laws_d1_includes_classical(capsys):
    code, doc = run_json(capsys, "laws", "--d", "1", "--trials", "50", "--seed", "0")
    assert code == 0
    assert doc["result"]["suites"]["d1_reduction"] == {"passed": 50, "failed": 0}


def test_laws_bad_arguments(capsys):
    code, _ = run_json(capsys, "laws", "--d", "0", "--trials", "1")
    assert code == 2
    assert run(capsys, "laws", "--d", "two")[0] == 2


def test_replay_matches_original(capsys, tmp_path):
    inst = make_instance("transformation", 2, 5, 3)
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, doc = run_json(capsys, "laws", "--replay", str(path))
    assert code == 0 and doc["result"]["passed"] is run_instance(inst) is True


def test_replay_of_broken_instance_fails(capsys, tmp_path):
    inst = make_instance("d1_reduction", 1, 0, 0)
    inst["f"] = "5"  # constant: no Schwarzian
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(inst))
    code, doc = run_json(capsys, "laws", "--replay", str(path))
    assert code == 1
    assert "error" in doc["result"]


def test_reports_are_deterministic(capsys, data_dir):
    outs = [run(capsys, "decide", str(data_dir / "moebius_d2.json"))[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "laws", "--d", "1", "--trials", "5", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert run_laws(2, 3, 1) == run_laws(2, 3, 1)


def test_plain_format(capsys, data_dir):
    code, out = run(capsys, "--format", "plain", "analyze", str(data_dir / "morita_d2.json"))
    assert code == 0
    assert "degree: 2" in out
    assert "splitting: [1, 1]" in out
    code, out = run(capsys, "decide", "--format", "plain", str(data_dir / "split_1_3.json"))
    assert code == 1 and "reason: DEGREE_MISMATCH" in out


def test_console_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "grasscurve", "decide", str(data_dir / "delta_zero.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["result"]["reason"] == "DELTA_ZERO"
