"""Axiom battery, report stream, and the restriction cache."""

import json
import os

import pytest

from csmflag.cache import RestrictionCache
from csmflag.flags import Shape, enumerate_index_tuples, full_euler
from csmflag.polynomial import Polynomial
from csmflag.verify import (check_degree, check_diagonal, check_divisibility,
                            check_euler_top, check_sum_rule, check_vanishing,
                            compute_restrictions, verify_all)
from csmflag.weights import restriction


@pytest.mark.parametrize("lam", [(1, 1), (2,), (1, 2), (1, 1, 1), (2, 2)])
def test_all_checks_pass(lam):
    reports = verify_all(Shape(lam))
    assert reports
    assert all(r.passed for r in reports)


def test_report_count_and_order():
    sh = Shape((1, 1))
    reports = verify_all(sh)
    # 2 tuples: 2*(diagonal+euler_top) + 4 divisibility + 2 degree
    # + 4 vanishing + 2 sum_rule
    assert [r.check for r in reports] == [
        "diagonal", "euler_top", "diagonal", "euler_top",
        "divisibility", "vanishing",
        "divisibility", "degree", "vanishing",
        "divisibility", "degree", "vanishing",
        "divisibility", "vanishing",
        "sum_rule", "sum_rule",
    ]


def test_reports_are_deterministic_json_lines():
    sh = Shape((1, 1, 1))
    lines1 = [r.to_json_line() for r in verify_all(sh)]
    lines2 = [r.to_json_line() for r in verify_all(sh)]
    assert lines1 == lines2
    for line in lines1:
        obj = json.loads(line)
        assert obj["verdict"] == "pass"
        assert set(obj) <= {"shape", "check", "I", "J", "verdict", "witness"}


def test_failures_carry_witnesses():
    sh = Shape((1, 1))
    a, b = enumerate_index_tuples(sh)
    wrong = Polynomial.constant(7)
    r = check_diagonal(a, value=wrong)
    assert not r.passed and "difference" in r.witness
    r = check_divisibility(b, b, value=wrong)
    assert not r.passed and "remainder" in r.witness
    r = check_vanishing(a, b, value=wrong)
    assert not r.passed and "nonzero" in r.witness
    r = check_euler_top(a, value=wrong)
    assert not r.passed
    r = check_sum_rule(a, values={(I, a): wrong for I in (a, b)})
    assert not r.passed
    with pytest.raises(ValueError):
        check_degree(a, a)


def test_degree_check_uses_strict_bound():
    sh = Shape((1, 1))
    a, b = enumerate_index_tuples(sh)
    # a degree-dim polynomial must fail the off-diagonal bound
    r = check_degree(b, a, value=full_euler(a))
    assert not r.passed


def test_compute_restrictions_matches_direct():
    sh = Shape((1, 1, 1))
    values = compute_restrictions(sh)
    tuples = enumerate_index_tuples(sh)
    assert list(values) == [(I, J) for I in tuples for J in tuples]
    for (I, J), poly in values.items():
        assert poly == restriction(I, J)


def test_cache_round_trip(tmp_path):
    sh = Shape((1, 1))
    cache = RestrictionCache(str(tmp_path))
    first = compute_restrictions(sh, cache=cache)
    assert any(name.startswith("restr-") for name in os.listdir(tmp_path))
    second = compute_restrictions(sh, cache=cache)
    assert first == second


def test_cache_survives_corruption(tmp_path):
    sh = Shape((1, 1))
    cache = RestrictionCache(str(tmp_path))
    clean = compute_restrictions(sh, cache=cache)
    for name in os.listdir(tmp_path):
        with open(tmp_path / name, "w") as fh:
            fh.write("{not json")
    again = compute_restrictions(sh, cache=cache)
    assert again == clean


def test_parallel_restrictions_match_serial():
    sh = Shape((1, 1, 1))
    assert compute_restrictions(sh, jobs=2) == compute_restrictions(sh)


def test_shape_mismatch_rejected():
    a = enumerate_index_tuples(Shape((1, 1)))[0]
    b = enumerate_index_tuples(Shape((2,)))[0]
    with pytest.raises(ValueError):
        restriction(a, b)
