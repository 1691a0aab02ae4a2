from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from pwlab.cli import main
from pwlab.constructions import hamming_parity_check
from pwlab.matrixio import format_dense, parse_matrix


def run(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def ones3(tmp_path):
    p = tmp_path / "ones.txt"
    p.write_text("1 3\n1 1 1\n")
    return str(p)


def test_pw_single_check(ones3):
    code, out = run("pw", ones3)
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["command", "input_digest", "results"]
    assert doc["results"]["minima"] == {"bec": "2/1", "awgnc": "2/1", "bsc": "2/1", "maxfrac": "2/1"}


def test_pw_hamming_awgnc(tmp_path):
    p = tmp_path / "h.txt"
    p.write_text(format_dense(hamming_parity_check(3)))
    code, out = run("pw", str(p), "--channel", "awgnc")
    assert code == 0
    assert json.loads(out)["results"]["minima"] == {"awgnc": "3/1"}


def test_pw_text_format(ones3):
    code, out = run("pw", ones3, "--format", "text", "--channel", "bsc")
    assert code == 0 and "minima.bsc: 2/1" in out


def test_pw_empty_cone_renders_inf(tmp_path):
    p = tmp_path / "eye.txt"
    p.write_text("2 2\n1 0\n0 1\n")
    assert json.loads(run("pw", str(p))[1])["results"]["minima"]["awgnc"] == "inf"


def test_exit_codes(tmp_path, ones3):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\n1 1\n")
    assert run("pw", str(bad))[0] == 2
    assert run("pw", str(tmp_path / "missing.txt"))[0] == 2
    assert run("pw")[0] == 2
    assert run("redundancy", "hamming", "zz")[0] == 2
    assert run("pw", ones3, "--guard", "2")[0] == 3
    assert run("redundancy", "hamming", "3", "--channel", "maxfrac", "--budget", "5")[0] == 3


def test_redundancy_commands():
    code, out = run("redundancy", "hamming", "3", "--channel", "maxfrac")
    assert code == 0 and json.loads(out)["results"]["redundancy"]["maxfrac"]["rho"] == 7
    code, out = run("redundancy", "extended_hamming 3", "--channel", "maxfrac")
    assert json.loads(out)["results"]["redundancy"]["maxfrac"]["rho"] == "inf"
    code, out = run("redundancy", "simplex", "3", "--channel", "bsc")
    assert json.loads(out)["results"]["redundancy"]["bsc"]["rho"] == 5


def test_bounds_golay():
    code, out = run("bounds", "golay23")
    sec = json.loads(out)["results"]["distance_bounds"]
    assert code == 0
    assert sec["bsc_upper_bound"] == "6/1" and sec["D"] == 7 and sec["rho_bsc"] == "inf"
    assert sec["awgnc_upper_bound"] == "841/71" and sec["rho_awgnc"] == "undecided"


def test_bounds_on_matrices(tmp_path):
    p = tmp_path / "dual.txt"
    assert run("construct", "all-dual", "hamming", "3", "--out", str(p))[0] == 0
    res = json.loads(run("bounds", "--matrix", str(p))[1])["results"]
    assert res["design"]["kind"] == "bibd"
    assert (res["design"]["n"], res["design"]["w_r"], res["design"]["lambda"]) == (7, 4, 2)
    assert res["design"]["lower_bound"] == "3/1"
    assert abs(res["eigenvalue_bound"]["bound"] - 3) < 1e-9
    q = tmp_path / "h.txt"
    run("construct", "hamming", "3", "--out", str(q))
    code, out = run("bounds", "--matrix", str(q))
    res = json.loads(out)["results"]
    assert code == 0
    assert res["eigenvalue_bound"] == {"error": "NotRegular"}
    assert res["distance_bounds"]["D"] == 3


def test_cyclic_scan(tmp_path):
    code, out = run("cyclic-scan", "--nmax", "0")
    assert code == 0 and out == "n,k,D,w,connected,mu1,mu2,bound,meets_bound\n"
    code, out = run("cyclic-scan", "--nmax", "7", "--workers", "1")
    rows = [r.split(",") for r in out.splitlines()[1:]]
    meets = [r for r in rows if r[-1] == "true"]
    # two parameter sets, each reached by both reciprocal generator polynomials
    assert {tuple(r[:3]) for r in meets if r[1] != "1"} == {("7", "4", "3"), ("7", "3", "4")}
    path = tmp_path / "scan.csv"
    run("cyclic-scan", "--nmax", "21", "--workers", "1", "--csv", str(path))
    lines = path.read_text().splitlines()
    assert any(line.startswith("21,11,6,") and line.endswith(",true") for line in lines)


def test_construct_outputs(tmp_path):
    for name, shape in ((["hamming", "3"], (3, 7)), (["all-dual", "hamming", "3"], (7, 7)),
                        (["weight3-dual", "simplex", "3"], (7, 7))):
        code, out = run("construct", *name)
        assert code == 0
        assert parse_matrix(out).shape == shape
    assert run("construct", "bogus")[0] == 2


def test_round_trip_dense_alist_dense(tmp_path):
    dense = run("construct", "weight3-dual", "simplex", "3")[1]
    src = tmp_path / "m.txt"
    src.write_text(dense)
    alist = run("construct", "weight3-dual", "simplex", "3", "--format", "alist")[1]
    assert parse_matrix(alist, "alist") == parse_matrix(dense, "dense")
    assert format_dense(parse_matrix(alist)) == dense


def test_reports_are_byte_identical(ones3):
    assert run("pw", ones3) == run("pw", ones3)
    assert run("bounds", "golay24") == run("bounds", "golay24")
    assert run("cyclic-scan", "--nmax", "9") == run("cyclic-scan", "--nmax", "9", "--workers", "2")


def test_module_entry_point(ones3):
    proc = subprocess.run([sys.executable, "-m", "pwlab.cli", "pw", ones3, "--channel", "bec"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["minima"] == {"bec": "2/1"}
