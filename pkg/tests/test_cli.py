"""Command-line behaviour: outputs, exit codes, JSON mode and determinism."""

import json
import shutil
import subprocess
import sys

from lchain.cli import run
from lchain.fixtures import fixture_dir


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lgroups_table(capsys):
    code, out, _ = cli(capsys, "lgroups", "--max", "11")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert [r[0] for r in rows] == [str(n) for n in range(12)]
    assert [r[1] for r in rows] == ["Z", "0", "Z/2", "0"] * 3
    assert [r[2] for r in rows] == ["Z", "Z/2", "0", "0"] * 3


def test_lgroups_json(capsys):
    code, out, _ = cli(capsys, "lgroups", "--max", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)[2] == {"n": 2, "quadratic": "Z/2", "symmetric": "0"}


def test_nonadditivity_demo(capsys):
    code, out, _ = cli(capsys, "spheres", "--p", "4", "--q", "4", "demo-nonadditivity", "--x", "1", "--y", "1")
    assert code == 0
    assert out.splitlines()[:2] == ["lhs 0", "rhs 2"]


def test_homology_of_cone_fixture(capsys):
    code, out, _ = cli(capsys, "homology", "fixtures/cone2.json")
    assert code == 0
    assert "H_0 = Z/2" in out.splitlines()


def test_sphere_verbs(capsys):
    base = ("spheres", "--p", "4", "--q", "4")
    assert cli(capsys, *base, "add", "--t", "1,2,3", "--u", "4,5,6")[1].strip() == "(5, 7, 9)"
    assert cli(capsys, *base, "whitney", "--t", "1,2,0", "--u", "3,4,5")[1].strip() == "(4, 6, 15)"
    assert cli(capsys, *base, "pairing", "--t", "1,2,0", "--u", "3,4,0")[1].strip() == "(0, 0, 10)"
    assert cli(capsys, *base, "compose", "--sf", "1,2", "--sg", "3,4")[1].strip() == "(4, 6)"
    code, out, _ = cli(capsys, *base, "reconcile", "--sf", "1,2", "--sg=-1,-2", "--format", "json")
    assert code == 0 and json.loads(out)["holds"] is True


def test_sphere_z2_slots(capsys):
    code, out, _ = cli(capsys, "spheres", "--p", "2", "--q", "4", "add", "--t", "1,2,1", "--u", "1,3,0")
    assert code == 0 and out.strip() == "(0, 5, 1)"
    code, _, err = cli(capsys, "spheres", "--p", "2", "--q", "4", "add", "--t", "2,2,1", "--u", "1,3,0")
    assert code == 2 and "error" in err


def test_l_classes(capsys):
    assert cli(capsys, "lclass", "e8")[1].startswith("1 in L_0(Z)")
    code, out, _ = cli(capsys, "lclass", "arf", "--format", "json")
    assert code == 0 and json.loads(out)["value"] == 1
    assert cli(capsys, "product", "e8", "e8")[1].startswith("8 in L_0(Z)")


def test_qgroup_and_dual(capsys):
    assert cli(capsys, "qgroup", "point", "--n", "3")[1].strip() == "Q_3(C) = Z/2"
    assert cli(capsys, "qgroup", "point", "--n", "1", "--flavor", "symmetric")[1].strip() == "Q^1(C) = 0"
    code, out, _ = cli(capsys, "dual", "cone2", "--n", "1")
    assert code == 0 and "H_0 = Z/2" in out


def test_zx_commands(capsys):
    code, out, _ = cli(capsys, "zx", "dual-cells", "sphere2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["counts"] == [4, 6, 4] and data["top_flag_total"] == 24
    assert cli(capsys, "zx", "cycle-check", "zx_cone")[0] == 0
    assert cli(capsys, "zx", "assemble", "zx_cone", "--format", "json")[0] == 0


def test_failed_checks_exit_one(capsys):
    code, _, err = cli(capsys, "lclass", "point2")
    assert code == 1
    assert "check failed" in err
    code, _, err = cli(capsys, "zx", "cycle-check", "zx_class")
    assert code == 1 and '"top_contractible": false' in err


def test_bad_input_exits_two(capsys, tmp_path):
    assert cli(capsys, "homology", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = cli(capsys, "homology", str(bad))
    assert code == 2 and "line 1" in err
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"min_degree": 0, "dims": [1, 1], "differentials": {"1": [["1"]], "2": [["1"]]}}))
    assert cli(capsys, "homology", str(wrong))[0] == 2
    assert cli(capsys, "spheres", "--p", "4", "--q", "4", "add", "--t", "1,2", "--u", "1,2,3")[0] == 2


def test_usage_error_exits_two(capsys):
    assert run(["no-such-command"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_splitting_check_random(capsys):
    code, out, _ = cli(capsys, "splitting-check", "--seed", "3", "--trials", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_json_output_is_byte_identical():
    argv = [sys.executable, "-m", "lchain", "splitting-check", "--seed", "7", "--trials", "10", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second


def test_fixture_dir_override(tmp_path, monkeypatch, capsys):
    shutil.copy(fixture_dir() / "cone2.json", tmp_path / "only.json")
    monkeypatch.setenv("LCHAIN_FIXTURES", str(tmp_path))
    assert cli(capsys, "homology", "only")[0] == 0
    assert cli(capsys, "homology", "e8")[0] == 2
