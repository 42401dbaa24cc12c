"""Acceptance gate: every numbered criterion runs and reports one line.

Run with `pytest -v` (the -rA default in pyproject surfaces the printed
pass/fail lines in the summary).
"""
import pytest

from seljac import acceptance


def _check(res):
    print(res.line())
    assert res.passed, res.line()
    if res.budget is not None:
        assert res.elapsed <= res.budget, res.line()


def test_criterion_01_genus_routes_agree():
    _check(acceptance.criterion_1())


def test_criterion_02_multiplicity_identities():
    _check(acceptance.criterion_2())


def test_criterion_03_multiplier_scan():
    _check(acceptance.criterion_3())


def test_criterion_04_feasibility_screen():
    _check(acceptance.criterion_4())


def test_criterion_05_endomorphism_table():
    _check(acceptance.criterion_5())


def test_criterion_06_j_invariants():
    _check(acceptance.criterion_6())


def test_criterion_07_prescribed_j_family():
    _check(acceptance.criterion_7())


def test_criterion_08_galois_classification():
    _check(acceptance.criterion_8())


def test_criterion_09_heart_commutants():
    _check(acceptance.criterion_9())


def test_criterion_10_chart_identity_trials():
    _check(acceptance.criterion_10())


def test_criterion_11_cyclotomic_ledger():
    _check(acceptance.criterion_11())


def test_run_all_covers_every_criterion():
    numbers = [res.number for res in acceptance.run_all()]
    assert numbers == list(range(1, 12))
