"""Acceptance gate: one test and one printed pass/fail line per criterion.

Each criterion delegates to the matching named check in cusploop.verify,
which pins its own tolerances; the printed line mirrors the CLI `verify`
table so the two reports stay in sync.
"""

import pytest

from cusploop.verify import CHECKS

_BY_NAME = dict(CHECKS)


def _criterion(number: int, name: str):
    ok, detail = _BY_NAME[name]()
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {number} ({name}): {detail}")
    assert ok, f"criterion {number} ({name}): {detail}"


def test_criterion_01_lemma1_reductions():
    _criterion(1, "lemma1-reductions")


def test_criterion_02_picard_fuchs_expansions():
    _criterion(2, "picard-fuchs-expansions")


def test_criterion_03_oracle_baseline():
    _criterion(3, "oracle-baseline")


def test_criterion_04_series_oracle_agreement():
    _criterion(4, "series-oracle-agreement")


def test_criterion_05_melnikov_coefficients():
    _criterion(5, "melnikov-coefficients")


def test_criterion_06_vanishing_solutions():
    _criterion(6, "vanishing-solutions")


def test_criterion_07_m2_vanishing_families():
    _criterion(7, "m2-vanishing-families")


def test_criterion_08_ten_zero_configuration():
    _criterion(8, "ten-zero-configuration")


def test_criterion_09_ode_displacement_sign():
    _criterion(9, "ode-displacement-sign")


def test_criterion_10_mirror_relation():
    _criterion(10, "mirror-relation")
