import json
import os
import subprocess

import pytest

CLI = os.environ.get("TSRFORGE_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="TSRFORGE_CLI not set")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_search_json_and_exit_codes(tmp_path):
    r = run("search-tsr", "--q", "2", "--m", "2", "--n", "3")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["replay"] == "ok"
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps(out["spec"]))
    t = run("test-primitive", "--spec", str(spec))
    assert t.returncode == 0
    back = json.loads(t.stdout)
    assert back["spec"] == out["spec"]
    assert back["charpoly"] == out["charpoly"]
    assert back["primitive"] is True

    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(out["certificate"]))
    assert run("verify", "--certificate", str(cert)).returncode == 0
    broken = dict(out["certificate"])
    broken["group_order"] = 62
    cert.write_text(json.dumps(broken))
    assert run("verify", "--certificate", str(cert)).returncode == 1

    assert run("search-tsr", "--q", "3", "--m", "2", "--n", "2").returncode == 2
    assert run("search-tsr", "--q", "2", "--m", "2", "--n", "3", "--budget", "0").returncode == 3
    assert run("search-tsr", "--q", "2").returncode == 2


def test_enumerate_lines_round_trip():
    r = run("enumerate", "--q", "2", "--m", "2", "--n", "3", "--form", "P_mnq")
    lines = r.stdout.strip().splitlines()
    assert lines[-1] == "count 2"
    for line in lines[:-1]:
        t = run("test-primitive", "--p", "2", "--k", "2", "--poly", line, "--emit", "json")
        assert json.loads(t.stdout)["poly"] == line


def test_count_r_csv():
    r = run("count-r", "--to", "6")
    assert r.stdout.splitlines() == ["m,r,P2m2", "2,1,2", "3,1,3", "4,1,4", "5,2,10", "6,3,18"]


def test_guard_env():
    env = dict(os.environ, TSRFORGE_GUARD_BITS="4")
    r = run("enumerate", "--q", "2", "--m", "2", "--n", "3", "--form", "tsrp", env=env)
    assert r.returncode == 2
    assert "exceeds guard" in r.stderr


def test_verify_quick_and_negative_control():
    ok = run("verify", "--level", "quick")
    assert ok.returncode == 0, ok.stdout
    bad = run("verify", "--level", "quick", "--inject-fault")
    assert bad.returncode == 1
    assert "first failed check: charpoly-formula" in bad.stdout


def test_tables_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("--threads", "1", "tables", "--id", "t1", "t5", "--out", str(a)).returncode == 0
    assert run("--threads", "4", "tables", "--id", "t1", "t5", "--out", str(b)).returncode == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes()
