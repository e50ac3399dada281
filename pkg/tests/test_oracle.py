import math

import pytest

from cusploop.oracle import (H_MIN, OutOfRange, abelian_numeric,
                             basis_vector_numeric, constants, oval_endpoints,
                             symbol_values)
from cusploop.picard_fuchs import MINUS, PLUS


def test_endpoints_bracket_the_oval():
    xl, xr = oval_endpoints(0.01, PLUS)
    assert xl < 0 < 1 < xr
    xl, xr = oval_endpoints(-0.01, MINUS)
    assert 0 < xl < 1 < xr


def test_out_of_range():
    with pytest.raises(OutOfRange):
        oval_endpoints(-0.2, MINUS)
    with pytest.raises(OutOfRange):
        abelian_numeric(0, 1, -0.01, PLUS)
    with pytest.raises(OutOfRange):
        abelian_numeric(0, 1, 0.01, MINUS)


def test_even_j_integrals_vanish():
    assert abelian_numeric(1, 2, 0.01, PLUS) == 0.0
    assert abelian_numeric(2, 0, -0.01, MINUS) == 0.0


def test_orientation_makes_area_positive():
    assert abelian_numeric(0, 1, 0.01, PLUS) > 0
    assert abelian_numeric(0, 1, -0.01, MINUS) > 0


def test_reduction_identity_numerically():
    # I_{3,1} = I_{2,1} on both families
    for h, side in ((0.02, PLUS), (-0.02, MINUS)):
        a = abelian_numeric(3, 1, h, side)
        b = abelian_numeric(2, 1, h, side)
        assert abs(a - b) <= 1e-10 * abs(b)


def test_constants_values():
    c = constants()
    assert abs(c.b0_plus + 5.1479) < 1e-3
    assert abs(c.b0_minus - 2.9722) < 1e-3
    assert abs(c.b1_plus + 3.2616) < 1e-3
    assert abs(c.b1_minus - 1.8831) < 1e-3
    assert abs(c.rho1 - math.sqrt(3)) < 1e-6
    assert abs(c.rho3 - math.sqrt(3)) < 1e-6


def test_symbol_values_keys():
    sv = symbol_values(PLUS)
    assert set(sv) == {"1", "sqrt2*pi", "b0", "b1"}
    assert abs(sv["sqrt2*pi"] - math.sqrt(2) * math.pi) < 1e-14
    assert sv["b0"] < 0 < symbol_values(MINUS)["b0"]


def test_basis_vector_matches_scalars():
    vec = basis_vector_numeric(0.01, PLUS)
    for k, (i, j) in enumerate(((0, 1), (1, 1), (2, 1))):
        one = abelian_numeric(i, j, 0.01, PLUS)
        assert abs(vec[k] - one) <= 1e-10 * abs(one)


def test_h_min_is_the_center_level():
    assert abs(H_MIN + 1.0 / 12.0) == 0.0
