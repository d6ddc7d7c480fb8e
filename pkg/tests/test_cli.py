import json
import subprocess
import sys

import pytest

from isoset import cycle_graph, disjoint_union, path_graph
from isoset.formats import write_edge_list, write_graph6


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "isoset", *args],
        capture_output=True,
        text=True,
    )


@pytest.fixture()
def c7_file(tmp_path):
    p = tmp_path / "c7.txt"
    write_edge_list(cycle_graph(7), p)
    return str(p)


def test_compute(c7_file):
    r = run_cli("compute", "--k", "1", c7_file, "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["records"][0]["size"] == 2


def test_compute_disjoint_additivity(tmp_path):
    p = tmp_path / "two.txt"
    write_edge_list(disjoint_union([path_graph(3), path_graph(3)]), p)
    r = run_cli("compute", "--k", "1", str(p), "--json")
    assert json.loads(r.stdout)["records"][0]["size"] == 2


def test_compute_k2(tmp_path):
    p = tmp_path / "k2.txt"
    write_edge_list(path_graph(2), p)
    r = run_cli("compute", "--k", "1", str(p), "--json")
    assert json.loads(r.stdout)["records"][0]["size"] == 0


def test_verify_exit_codes(c7_file, tmp_path):
    assert run_cli("verify", "--k", "1", "--witness", "0,4", c7_file).returncode == 0
    p = tmp_path / "c3.txt"
    write_edge_list(cycle_graph(3), p)
    r = run_cli("verify", "--k", "1", "--witness", "", str(p), "--json")
    assert r.returncode == 1
    assert json.loads(r.stdout)["records"][0]["residual_max_degree"] == 2
    r = run_cli("verify", "--k", "1", "--witness", "9", c7_file)
    assert r.returncode == 2


def test_construct_tracks(tmp_path, c7_file):
    p = tmp_path / "p7.txt"
    write_edge_list(path_graph(7), p)
    r = run_cli("construct", "--track", "thm16", str(p), "--json", "--trace")
    assert r.returncode == 0
    rec = json.loads(r.stdout)["records"][0]
    assert rec["size"] == 1 and rec["verified"] and rec["trace"]

    c6 = tmp_path / "c6.txt"
    write_edge_list(cycle_graph(6), c6)
    r = run_cli("construct", "--track", "thm16", str(c6), "--json")
    assert r.returncode == 0
    rec = json.loads(r.stdout)["records"][0]
    assert "rejected" in rec and rec["cycle"]

    # C7 itself is excluded from both tracks
    r = run_cli("construct", "--track", "thm17", c7_file, "--json")
    rec = json.loads(r.stdout)["records"][0]
    assert "rejected" in rec


def test_construct_graph6_multi(tmp_path):
    p = tmp_path / "many.g6"
    write_graph6([path_graph(8), cycle_graph(9)], p)
    r = run_cli("construct", "--track", "thm17", str(p), "--json")
    doc = json.loads(r.stdout)
    assert [rec["size"] for rec in doc["records"]] == [2, 2]
    assert doc["aggregate"]["violations"] == 0


def test_extremal_cmd(tmp_path):
    out = tmp_path / "g4.txt"
    r = run_cli(
        "extremal", "--t", "4", "--kinds", "p3,p3,c7,c11", "--out", str(out),
        "--json",
    )
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["records"][0]["order"] == 28
    assert doc["records"][0]["size"] == 7
    check = run_cli("compute", "--k", "1", str(out), "--json")
    assert json.loads(check.stdout)["records"][0]["size"] == 7

    bad = run_cli("extremal", "--t", "1", "--kinds", "q9", "--out", str(out))
    assert bad.returncode == 2


def test_scan_cmd():
    r = run_cli("scan", "--nmax", "6", "--assert", "thm16", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["aggregate"]["violations"] == 0
    assert doc["aggregate"]["checked"] > 0
    for extra in (("--assert", "thm11", "--k", "2"), ("--assert", "thm15"),
                  ("--assert", "thm17")):
        r = run_cli("scan", "--nmax", "5", *extra)
        assert r.returncode == 0


def test_search_cmd(tmp_path):
    out = tmp_path / "best.txt"
    r = run_cli(
        "search", "--class", "induced6free", "--nmin", "4", "--nmax", "8",
        "--budget", "60", "--seed", "5", "--json", "--out", str(out),
    )
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    num, den = doc["aggregate"]["best_ratio"].split("/")
    assert int(num) * 4 >= int(den)  # seeded family already reaches 1/4
    assert out.exists()


def test_search_budget_zero_returns_seed():
    r = run_cli(
        "search", "--nmin", "4", "--nmax", "12", "--budget", "0", "--seed", "9",
        "--json",
    )
    doc = json.loads(r.stdout)
    assert doc["aggregate"]["best_ratio"] == "1/4"
    assert doc["records"][0]["order"] == 12


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert run_cli("compute", bad.as_posix()).returncode == 2
