from fractions import Fraction as F

import pytest

from cusploop.algebra import HPoly, OneForm, PlanePoly
from cusploop.reduction import reduce_form, reduce_monomial


def _hp(*coeffs):
    return HPoly([F(c) for c in coeffs])


def test_basis_is_fixed():
    assert reduce_monomial(0, 1).triple() == (_hp(1), _hp(), _hp())
    assert reduce_monomial(1, 1).triple() == (_hp(), _hp(1), _hp())
    assert reduce_monomial(2, 1).triple() == (_hp(), _hp(), _hp(1))
    assert reduce_monomial(3, 1).triple() == (_hp(), _hp(), _hp(1))


def test_even_powers_of_y_vanish():
    for i in range(5):
        for j in (0, 2, 4):
            assert reduce_monomial(i, j).is_zero()


def test_first_rung_of_the_ladder():
    assert reduce_monomial(4, 1).triple() == \
        (_hp(0, F(4, 7)), _hp(), _hp(F(22, 21)))
    assert reduce_monomial(5, 1).triple() == \
        (_hp(0, F(13, 21)), _hp(0, 1), _hp(F(143, 126)))


def test_j_three_family():
    assert reduce_monomial(0, 3).triple() == \
        (_hp(0, F(12, 7)), _hp(), _hp(F(1, 7)))
    assert reduce_monomial(1, 3).triple() == \
        (_hp(0, F(1, 14)), _hp(0, F(3, 2)), _hp(F(11, 84)))
    assert reduce_monomial(3, 3).triple() == reduce_monomial(2, 3).triple()


def test_deep_entry():
    assert reduce_monomial(0, 5).triple() == \
        (_hp(0, F(65, 6237), F(240, 77)), _hp(0, F(5, 297)),
         _hp(F(65, 3402), F(320, 693)))


def test_reduced_integral_algebra():
    a = reduce_monomial(0, 3)
    assert (a - a).is_zero()
    s = (a + a).scale(F(1, 2))
    assert s.triple() == a.triple()
    shifted = a.shift_h()
    assert shifted.p3 == _hp(0, F(1, 7))


def test_reduce_form_matches_monomial():
    om = OneForm(q_part=PlanePoly({(0, 3): 1}), p_part=PlanePoly({}))
    assert reduce_form(om).triple() == reduce_monomial(0, 3).triple()
    # -P dy with P = x y^2 equals the loop integral of (1/3) y^3 dx
    om2 = OneForm(q_part=PlanePoly({}), p_part=PlanePoly({(1, 2): 1}))
    want = reduce_monomial(0, 3).scale(F(1, 3)).triple()
    assert reduce_form(om2).triple() == want


def test_rejects_negative_indices():
    with pytest.raises(ValueError):
        reduce_monomial(-1, 1)
    with pytest.raises(ValueError):
        reduce_monomial(0, -2)
