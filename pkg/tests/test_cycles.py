import math
from fractions import Fraction as F

import pytest

from cusploop.cycles import (DegenerateBase, ZeroReport, alternate_params,
                             count_zeros, displacement, melnikov_1_numeric,
                             numeric_coeffs)
from cusploop.melnikov import (PerturbationSet, coeff_list, melnikov_1,
                               melnikov_3, theorem3_family)
from cusploop.oracle import symbol_values
from cusploop.picard_fuchs import MINUS, PLUS
from cusploop.verify import first_order_sign_point, theorem3_base_point


def thm3_coeffs(side, count=7):
    return coeff_list(melnikov_3(theorem3_family()), side, count)


def test_alternate_params_identity_at_ratio_zero():
    cl, unk, base = theorem3_base_point()
    assert alternate_params(cl, base, unk, F(0)) == base


def test_alternate_params_sets_alternating_signs():
    cl, unk, base = theorem3_base_point()
    pt = alternate_params(cl, base, unk, F(1, 8))
    vals = numeric_coeffs(cl, pt)
    signs = [math.copysign(1.0, v) for _, v in vals]
    for a, b in zip(signs, signs[1:]):
        assert a == -b
    # magnitudes strictly increase toward the tail coefficient
    mags = [abs(v) for _, v in vals]
    assert all(a < b for a, b in zip(mags, mags[1:]))


def test_alternate_params_rejects_degenerate_base():
    cl, unk, base = theorem3_base_point()
    dead = {k: F(0) for k in base}
    with pytest.raises(DegenerateBase):
        alternate_params(cl, dead, unk, F(1, 8))
    with pytest.raises(ValueError):
        alternate_params(cl, base, unk, F(3, 2))


def test_count_zeros_simple_series():
    # c0 + c1 |h|^(5/6) with opposite signs has exactly one zero
    terms = [(F(0), -1e-10), (F(5, 6), 1.0)]
    rep = count_zeros(terms, PLUS, 1e-2)
    assert rep.count == 1
    loc, sign = rep.zeros[0]
    assert abs(loc - 1e-12) < 1e-14
    assert sign == 1
    # the same coefficients with equal signs never cross
    rep2 = count_zeros([(F(0), 1e-10), (F(5, 6), 1.0)], PLUS, 1e-2)
    assert rep2.count == 0


def test_count_zeros_minus_side_reports_negative_h():
    terms = [(F(0), -1e-10), (F(5, 6), 1.0)]
    rep = count_zeros(terms, MINUS, 1e-2)
    assert rep.count == 1
    assert rep.zeros[0][0] < 0
    assert rep.window == (-1e-2, 0.0)


def test_count_zeros_validates_window():
    with pytest.raises(ValueError):
        count_zeros([(F(0), 1.0)], PLUS, -1.0)


def test_zero_report_serialization():
    rep = ZeroReport(PLUS, (0.0, 1.0), [(0.5, 1)], 1)
    d = rep.as_dict()
    assert d["count"] == 1 and d["zeros"][0]["h"] == 0.5


def test_ten_zeros_split_six_four():
    plus, unk, base = theorem3_base_point()
    minus = thm3_coeffs(MINUS)
    pt = alternate_params(plus, base, unk, F(1, 8))
    rep_p = count_zeros(numeric_coeffs(plus, pt), PLUS, 1e-2)
    rep_m = count_zeros(numeric_coeffs(minus, pt), MINUS, 1e-2)
    assert rep_p.count == 6
    assert rep_m.count == 4


def test_displacement_matches_first_order_melnikov():
    point = first_order_sign_point(0.004)
    eps = 1e-4
    h = 0.8 * 0.004  # off the tuned M1 zero at h = 0.004
    d = displacement(point, eps, h, PLUS).displacement
    m1 = eps * melnikov_1_numeric(
        PerturbationSet.generic(),
        {k: float(v) for k, v in point.items()}, h, PLUS)
    assert d * m1 > 0
    assert abs(d - m1) < 0.05 * abs(m1)


def test_displacement_is_conservative_at_eps_zero():
    d = displacement({}, 0.0, 0.004, PLUS).displacement
    assert abs(d) < 1e-10
    with pytest.raises(ValueError):
        displacement({}, 0.5, 0.004, PLUS)
