import json
import subprocess
import sys
from pathlib import Path

import pytest

from lexdepth.cli import main, read_ideal
from lexdepth.monomial import ideal

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden"
FINAL_FILE = str(ROOT / "data" / "final_example.ideal")
CRIT_FILE = str(ROOT / "data" / "critical_example.ideal")
FINAL_H = ["--n", "5", "--h", "1,5,11,18,26,35"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,golden", [
    (["lexify", *FINAL_H], "lexify_final.txt"),
    (["depth-set", *FINAL_H, "--verbose"], "depth_set_verbose.txt"),
    (["depth-set", *FINAL_H, "--json"], "depth_set_report.json"),
    (["betti", "--ideal", FINAL_FILE], "betti_final.txt"),
    (["series", "--ideal", FINAL_FILE], "series_final.txt"),
])
def test_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_small_outputs(capsys):
    assert run(capsys, "check-oseq", *FINAL_H)[:2] == (0, "PASS\n")
    assert run(capsys, "depth-set", *FINAL_H)[1] == "{0..2}\n"
    assert run(capsys, "classify", *FINAL_H)[1] == "noncritical delta=12\n"
    assert run(capsys, "classify", "--n", "4", "--h", "1,4,8,13,19")[1] == "critical delta=2 degrees=2,2\n"
    assert run(capsys, "depth-set", "--n", "4", "--h", "1,4,8,13,19")[1] == "{2}\n"
    assert run(capsys, "dim", "--ideal", FINAL_FILE)[1] == "3\n"
    assert run(capsys, "hilbert", "--ideal", CRIT_FILE, "--q", "4")[1] == "1,4,8,13,19\n"
    code, out, _ = run(capsys, "betti", "--ideal", CRIT_FILE)
    assert code == 0 and out.endswith("proj_dim=2 depth=2\n")


def test_check_oseq_failure(capsys):
    code, out, _ = run(capsys, "check-oseq", "--n", "2", "--h", "1,2,7", "--tail", "max")
    assert code == 1 and out == "FAIL at q=1: h(2) = 7 exceeds h(1)^<1> = 3\n"
    code, out, _ = run(capsys, "check-oseq", "--n", "2", "--h", "1,2,7", "--json")
    assert code == 1
    assert json.loads(out)["first_violation"] == {"kind": "growth", "q": 1, "value": 7, "bound": 3}


def test_lexify_hilbert_round_trip(capsys, tmp_path):
    out_file = tmp_path / "lex.ideal"
    code, out, _ = run(capsys, "lexify", "--n", "2", "--h", "1,2,2,1", "--tail", "zero", "--out", str(out_file))
    assert code == 0 and out.endswith("delta=3\n")
    assert read_ideal(str(out_file)) == ideal(2, "x1^2", "x1*x2^2", "x2^4")
    assert run(capsys, "hilbert", "--ideal", str(out_file), "--q", "4")[1] == "1,2,2,1,0\n"


def test_witness(capsys, tmp_path):
    out_file = tmp_path / "w.ideal"
    code, out, _ = run(capsys, "witness", *FINAL_H, "--depth", "2", "--out", str(out_file))
    assert code == 0
    assert run(capsys, "hilbert", "--ideal", str(out_file), "--q", "5")[1] == "1,5,11,18,26,35\n"
    assert run(capsys, "betti", "--ideal", str(out_file))[1].endswith("depth=2\n")
    code, _, err = run(capsys, "witness", *FINAL_H, "--depth", "3")
    assert code == 1 and "{0..2}" in err


def test_json_forms(capsys):
    for argv in (["check-oseq", *FINAL_H], ["lexify", *FINAL_H], ["classify", *FINAL_H],
                 ["witness", *FINAL_H, "--depth", "1"], ["hilbert", "--ideal", FINAL_FILE, "--q", "3"],
                 ["series", "--ideal", FINAL_FILE], ["dim", "--ideal", FINAL_FILE],
                 ["betti", "--ideal", FINAL_FILE]):
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0
        payload = json.loads(out)
        assert out == json.dumps(payload, sort_keys=True) + "\n"
    _, out, _ = run(capsys, "betti", "--ideal", FINAL_FILE, "--json")
    assert json.loads(out)["depth"] == 2


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "betti", "--ideal", FINAL_FILE, "--method", "ek")[0] == 1
    assert run(capsys, "lexify", "--n", "5", "--h", "1,x")[0] == 2
    assert run(capsys, "lexify", "--n", "5")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    bad = tmp_path / "bad.ideal"
    bad.write_text("x1*x2\n")
    assert run(capsys, "dim", "--ideal", str(bad))[0] == 2
    bad.write_text("n=2\nx3\n")
    assert run(capsys, "dim", "--ideal", str(bad))[0] == 2
    assert run(capsys, "hilbert", "--ideal", str(tmp_path / "missing"), "--q", "2")[0] == 2
    code, out, _ = run(capsys, "explore", "--n", "4", "--h", "1,4,8,13,19", "--degcap", "2", "--limit", "10")
    assert code == 3 and json.loads(out)["complete"] is False


def test_explore_complete(capsys):
    code, out, _ = run(capsys, "explore", "--n", "4", "--h", "1,4,8,13,19", "--degcap", "2")
    rep = json.loads(out)
    assert code == 0 and rep["complete"] and rep["consistent"]
    assert set(rep["observed_depths"]) == {"2"}


def test_hfile_input(capsys, tmp_path):
    f = tmp_path / "h.txt"
    f.write_text("1,5,11,18,26,35\n")
    assert run(capsys, "depth-set", "--n", "5", "--hfile", str(f))[1] == "{0..2}\n"


def test_ideal_file_comments(tmp_path):
    f = tmp_path / "c.ideal"
    f.write_text("# header\nn=4\nx1*x4  # first\n\nx3*x4\n")
    assert read_ideal(str(f)) == ideal(4, "x1*x4", "x3*x4")


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "lexdepth.cli", "depth-set", *FINAL_H, "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b == (GOLDEN / "depth_set_report.json").read_bytes()
