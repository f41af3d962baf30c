import io
import json
import re
import subprocess
import sys

import pytest

from fusionring.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    env = json.loads(out)
    assert list(env) == ["command", "group", "level", "payload", "version"]
    return env["payload"]


def test_fuse_examples():
    assert payload("fuse", "--group", "A1", "--level", "1", "--lhs", "1", "--rhs", "1")["components"] == [[[0], 1]]
    assert payload("fuse", "--group", "A1", "--level", "0", "--lhs", "0", "--rhs", "0")["components"] == [[[0], 1]]


def test_spin_input():
    p = payload("fuse", "--group", "A1", "--level", "4", "--lhs", "1/2", "--rhs", "1", "--spin")
    assert p["lhs"] == [1] and p["rhs"] == [2]
    assert p["components"] == [[[1], 1], [[3], 1]]


def test_levels():
    assert payload("levels", "--group", "A1/Z2") == {"basic": 2, "multiplicative": 4, "fundamental": 2}
    assert payload("levels", "--group", "A2/Z3") == {"basic": 1, "multiplicative": 3, "fundamental": None}


def test_tensor_and_weights():
    p = payload("tensor", "--group", "A2", "--lhs", "1,0", "--rhs", "0,1")
    assert p["components"] == [[[0, 0], 1], [[1, 1], 1]]
    assert payload("weights", "--group", "A2", "--level", "1")["basis"] == [[0, 0], [0, 1], [1, 0]]
    dom = payload("weights", "--group", "A2", "--highest", "1,1")["dominant_weights"]
    assert dom == [[[0, 0], 2], [[1, 1], 1]]


def test_table_and_smatrix():
    t = payload("table", "--group", "A2", "--level", "1")
    assert t["basis"] == [[0, 0], [0, 1], [1, 0]]
    assert [1, 1, 2, 1] in t["N"]
    s = payload("smatrix", "--group", "A1", "--level", "2")
    assert s["S_re"][0][0] == pytest.approx(0.5)
    assert s["c"] == "3/2"
    assert all(re.fullmatch(r"-?\d+/\d+", x) for x in s["T_phase"])


def test_orbits_classify_invariant():
    orbs = payload("orbits", "--group", "A2/Z3", "--level", "3", "--char", "0")
    assert [o["orbit"] for o in orbs] == [[[0, 0], [0, 3], [3, 0]], [[1, 1]]]
    assert [len(o["stabilizer"]) for o in orbs] == [1, 3]
    cls = payload("classify", "--group", "A1/Z2", "--level", "4", "--char", "0")
    assert [(c["orbit"], c["stabilizer_order"], c["rho"]) for c in cls] == [
        ([[0], [4]], 1, 0), ([[2]], 2, 0), ([[2]], 2, 1)
    ]
    assert cls[0]["virasoro"] == [[[0], 1], [[4], 1]]
    inv = payload("invariant", "--group", "A1/Z2", "--level", "4")
    assert inv["M"][2][2] == 2 and inv["commutes_S"] and inv["commutes_T"]


def test_brane():
    p = payload("brane", "--group", "A2", "--level", "2", "--weight", "1,0", "--rhs", "1,0")
    assert p["product"] == [[[0, 1], 1], [[2, 0], 1]]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["fuse", "--group", "Q7", "--level", "1", "--lhs", "0", "--rhs", "0"], 2),
        (["fuse", "--group", "A1", "--level", "-1", "--lhs", "0", "--rhs", "0"], 2),
        (["fuse", "--group", "A1", "--level", "1", "--lhs", "x", "--rhs", "0"], 2),
        (["fuse", "--group", "A1", "--level", "1", "--lhs", "3", "--rhs", "0"], 2),
        (["classify", "--group", "A1/Z2", "--level", "3"], 3),
        (["classify", "--group", "D4/Z2xZ2,-", "--level", "2"], 3),
        (["invariant", "--group", "A1/Z2", "--level", "6"], 3),
        (["smatrix", "--group", "E6", "--level", "1"], 4),
        (["bogus"], 2),
        ([], 2),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    assert err.count("\n") == 1 and err.startswith("fusionring: ")


def test_resource_cap_env(monkeypatch):
    monkeypatch.setenv("FUSIONRING_MAX_BASIS", "3")
    code, _, err = call("table", "--group", "A2", "--level", "2")
    assert code == 4 and "resource" in err


NUM = re.compile(r"-?\d+(?:/\d+)?(?:\.\d+)?(?:e-?\d+)?|true|false|null")


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--group", "A2", "--level", "2"],
        ["smatrix", "--group", "A1", "--level", "3"],
        ["classify", "--group", "A2/Z3", "--level", "3", "--char", "0"],
        ["invariant", "--group", "A2/Z3", "--level", "3"],
        ["levels", "--group", "A1/Z2"],
    ],
)
def test_table_format_carries_same_numbers(argv):
    _, js, _ = call(*argv)
    code, tab, _ = call(*argv, "--format", "table")
    assert code == 0
    assert NUM.findall(tab) == NUM.findall(js)


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "fusionring", "classify", "--group", "A2/Z3", "--level", "6", "--char", "1"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
