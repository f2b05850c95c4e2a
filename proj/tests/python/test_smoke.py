"""Smoke tests for the python bindings."""

import json

import pytest

try:
    import d4quad as m
except ImportError:  # running against the build tree, package not installed
    import _d4quad as m


def test_fundamental_pairs():
    assert m.fundamental_pair(2) == (6, 4)
    assert m.fundamental_pair(3) == (4, 2)
    assert m.fundamental_pair(6) == (10, 4)


def test_pair_at_returns_python_ints():
    pr = m.pair_at(2, 7)
    assert pr["a"] == 161564
    assert pr["r"] * pr["r"] - 2 * pr["a"] * pr["a"] == 4
    assert isinstance(pr["a"], int)


def test_family_element():
    fam = m.c_family(2, 2, "c2+")
    assert fam["c"] == 161704
    assert fam["s"] == 1970
    assert fam["t"] == 2786


def test_extension_arithmetic():
    assert m.d_pm(1, 5, 12) == (0, 96)
    assert m.check_tuple([1, 5, 12, 96])
    assert m.is_regular([1, 5, 12, 96])
    assert not m.check_tuple([1, 5, 13])
    assert m.extend_triple(1, 5, 12, 10**6) == [96]
    assert m.extend_triple(24, 48, 140, 10**10) == [161704]


def test_big_integers_cross_the_boundary():
    fam = m.c_family(2, 12, "c3+")
    assert fam["c"] > 10**30
    assert fam["s"] * fam["s"] == m.pair_at(2, 12)["a"] * fam["c"] + 4


def test_trivial_solution():
    ts = m.trivial_solution(2, 2, 2, 1)
    assert ts["c"] == 161704
    assert (ts["x"] ** 2 - 4) == 24 * ts["d"]


def test_errors_are_raised():
    with pytest.raises(m.Error):
        m.fundamental_pair(5)
    with pytest.raises(m.Error):
        m.d_pm(1, 5, 13)


def test_verify_family_report():
    report = json.loads(m.verify_family(2, "c1+", p_max=2))
    assert report["verdict"] == "REGULAR_CONFIRMED"
    assert report["k"] == "2"
    assert len(report["records"]) == 2


def test_p_bound():
    p_max, cap = m.p_bound(2, 2, "b")
    assert p_max == 28
    assert cap > 10**20


def test_side_identities():
    assert m.fibonacci_check(10)
    assert m.k4_check(10**5)
