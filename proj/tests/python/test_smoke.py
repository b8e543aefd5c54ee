import json
import pathlib

import pytest

import frobclass

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_zeta3_case():
    r = frobclass.classify(load("zeta3_l3_p13.json"))
    assert r["count"] == 18
    assert r["trace_mod_l"] == 2
    assert r["torsion_degree"] == 3
    assert r["pairing_local"] == "3"
    assert r["sl_class"] == "[[1,1],[0,1]]"


def test_sqrt5_case_accept_reject():
    r = frobclass.classify(load("sqrt5_l5_p31.json"))
    assert r["global_reduced"] == "x^2+13x+1"
    verdicts = {c["pairing"]: c["accepted"] for c in r["candidates"]}
    assert verdicts == {"8": False, "2": True}
    assert r["sl_class"] == "[[1,2],[0,1]]"


def test_errors_raise():
    with pytest.raises(frobclass.FrobclassError, match="BadReduction"):
        frobclass.classify(load("bad_reduction.json"))
    with pytest.raises(frobclass.FrobclassError, match=r"curve\.short\[1\]"):
        frobclass.classify(load("malformed_curve.json"))


def test_classtable_sizes():
    rows = frobclass.classtable(5)
    assert len(rows) == 9
    assert sum(r["size"] for r in rows) == 120
    with pytest.raises(frobclass.FrobclassError):
        frobclass.classtable(2)


def test_count_points_against_enumeration():
    for a, b, p in [(1, 1, 13), (2, 3, 101), (0, 2, 7)]:
        affine = sum(1 for x in range(p) for y in range(p) if (y * y - x ** 3 - a * x - b) % p == 0)
        assert frobclass.count_points(a, b, p) == affine + 1


def test_selftest_and_fault():
    assert all(not f for f in frobclass.selftest().values())
    assert frobclass.selftest(inject_fault=True)["pairing"]


def test_scan_rows():
    rows = frobclass.scan({"short": [1, 1]}, [3], 8)
    assert len(rows) == 8
    assert all(r["q_mod_l"] == "1" and r["status"] == "ok" for r in rows)
