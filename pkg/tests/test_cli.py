import io
import json
import subprocess
import sys

import pytest

from ulamcodes import cli, spheres


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    res, code = cli.run(list(argv), out, err)
    return res, code, out.getvalue(), err.getvalue()


def test_distance_text():
    res, code, out, _ = call("distance", "6 2 5 4 1 3 7", "1 2 3 4 5 6 7")
    assert code == 0
    assert "cross-check: ok" in out
    assert res.outputs["distance"] == res.outputs["translocations"]


def test_sphere_identity_brute():
    res, code, out, _ = call("sphere", "--n", "5", "--r", "1", "--t", "1", "--method", "brute")
    assert code == 0 and res.outputs["size"] == 17
    assert "cross-check: ok" in out
    assert "closed-form" in res.methods


def test_sphere_from_file_ballcalc(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("1 1 1 2 3 2 3 2 4 4 3 4\n")
    res, code, _, _ = call("sphere", "--n", "12", "--r", "3", "--t", "1", "--center", str(f))
    assert code == 0 and res.outputs["size"] == 72
    assert "71" in res.outputs["note"]


def test_sphere_cap_and_usage_errors():
    _, code, _, err = call("sphere", "--n", "10", "--r", "1", "--t", "3", "--method", "brute")
    assert code == 3 and "max-brute-n" in err
    _, code, _, _ = call("sphere", "--n", "6", "--r", "4", "--t", "1")
    assert code == 2
    _, code, _, _ = call("sphere", "--n", "6")
    assert code == 2
    _, code, _, err = call("dupsets", "--m", "/nonexistent/file")
    assert code == 2 and "no such file" in err


def test_mismatch_exit_code(monkeypatch):
    monkeypatch.setattr(spheres, "sphere_size_identity", lambda n, r, t: 999)
    res, code, out, err = call("sphere", "--n", "5", "--r", "1", "--t", "1")
    assert code == 4
    assert res.cross_check.startswith("MISMATCH")
    assert "cross-check failed" in err


def test_table5_csv():
    _, code, out, _ = call("table5", "--tmax", "10", "--csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "t,min_n"
    assert lines[1:] == ["1,none", "2,8", "3,8", "4,10", "5,11", "6,13",
                         "7,14", "8,16", "9,18", "10,20"]


def test_table6_json_is_stable():
    _, _, a, _ = call("table6", "--json")
    _, _, b, _ = call("table6", "--json")
    assert a == b
    data = json.loads(a)
    assert data["columns"] == ["r", "max_sphere", "U", "ratio"]
    assert [row[1] for row in data["rows"]] == ["148", "18101", "1937753"]


def test_maxsphere():
    res, code, _, _ = call("maxsphere", "--r", "10")
    assert code == 0 and res.outputs["max_sphere"] == 148
    assert res.methods == ["closed-form", "ballcalc", "brute"]


def test_dupsets(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("# worked example\n1 1 1 2 3 2 3 2 4 4 3 4\n")
    res, code, out, _ = call("dupsets", "--m", str(f), "--r", "3")
    assert code == 0
    assert (res.outputs["SD"], res.outputs["AD"]) == (48, 2)


def test_bounds_and_feasible():
    res, code, _, _ = call("bounds", "--n", "6", "--r", "1", "--d", "3", "--json")
    assert code == 0
    assert {"singleton-upper", "sphere-packing-upper", "gv-lower"} <= set(res.outputs)
    res, code, _, _ = call("feasible", "--n", "6", "--t", "1")
    assert code == 0 and res.outputs["verdict"] != "not-excluded"


def test_greedy_simulate_round_trip(tmp_path):
    path = tmp_path / "code.txt"
    res, code, _, _ = call("greedy", "--n", "6", "--r", "2", "--d", "3", "--out", str(path))
    assert code == 0 and res.outputs["size"] >= res.outputs["gv_lower"]
    res, code, out, _ = call("simulate", "--code", str(path), "--t", "1",
                             "--trials", "2000", "--seed", "7", "--workers", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["outputs"]["failures"] == "0"
    assert data["cross_check"] == "ok"


def test_simulate_rejects_bad_codebook(tmp_path):
    path = tmp_path / "code.txt"
    path.write_text("4 1 3\n1 2 3 4\n2 1 3 4\n")
    _, code, _, err = call("simulate", "--code", str(path), "--t", "1", "--trials", "5", "--seed", "1")
    assert code == 2 and "distance" in err


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "ulamcodes.cli", "feasible", "--n", "8", "--t", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "verdict" in out.stdout
