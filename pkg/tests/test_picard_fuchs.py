from fractions import Fraction as F

import pytest

from cusploop.algebra import SYM_B0, SYM_B1, SYM_SQRT2PI, HPoly, ParamPoly
from cusploop.picard_fuchs import (BASIS, MINUS, PLUS, Expansion,
                                   basis_expansion, expand_reduced,
                                   initial_coeffs, mirror, pf_system,
                                   recurse_coeffs)
from cusploop.reduction import ReducedIntegral, reduce_monomial


def _const(coeff, sym):
    poly = coeff.get(sym)
    assert poly is not None, f"missing symbol {sym}"
    return poly.evaluate({})


def test_pf_system_shape():
    sys_ = pf_system()
    assert sys_.A0[2] == (0, 0, 0)
    assert sys_.A1[0][0] == 108
    assert str(sys_.P_of_h) == "12 h + 144 h^2"


def test_initial_coeffs_match_both_sides():
    for side in (PLUS, MINUS):
        t = initial_coeffs(side)
        assert t.a[0].coeff_sqrt2pi == F(4, 27)
        assert t.a[1].coeff_sqrt2pi == F(4, 27) * F(5, 6)
        assert t.b[0].coeff_b0 == -2
        assert t.c[1].coeff_b1 == 2
    with pytest.raises(ValueError):
        initial_coeffs("both")


def test_recursion_first_order():
    trips = recurse_coeffs(1, PLUS)
    assert trips[1].a[1].coeff_sqrt2pi == 2
    assert trips[1].a[2].coeff_sqrt2pi == F(4, 3)
    assert trips[1].a[0].coeff_sqrt2pi == 0
    # sign of the fractional recursion flips between sides
    minus = recurse_coeffs(1, MINUS)
    assert trips[1].b[0].coeff_b0 == -minus[1].b[0].coeff_b0


def test_basis_expansion_leading_terms():
    e = basis_expansion("I01", PLUS, 1)
    assert _const(e.coeff_at(0), SYM_SQRT2PI) == F(4, 27)
    assert _const(e.coeff_at(F(5, 6)), SYM_B0) == -2
    assert _const(e.coeff_at(F(7, 6)), SYM_B1) == 1
    e2 = basis_expansion("I21", PLUS, 1)
    assert _const(e2.coeff_at(0), SYM_SQRT2PI) == F(28, 243)
    assert e2.coeff_at(F(5, 6)) == {}
    assert e2.coeff_at(F(7, 6)) == {}


def test_expansion_class_purity_enforced():
    bad = {F(5, 6): {SYM_SQRT2PI: ParamPoly.const(1)}}
    with pytest.raises(ValueError):
        Expansion(PLUS, [(F(5, 6), bad[F(5, 6)])])
    with pytest.raises(ValueError):
        Expansion(PLUS, [(F(1, 3), {SYM_B0: ParamPoly.const(1)})])


def test_expand_reduced_shifts_exponents():
    r = reduce_monomial(0, 3)  # 12/7 h I01 + 1/7 I21
    e = expand_reduced(r, PLUS, 2)
    assert _const(e.coeff_at(0), SYM_SQRT2PI) == F(1, 7) * F(28, 243)
    # h * I01 alone: the 5/6 term of I01 shifts up to 11/6
    single = ReducedIntegral(HPoly([F(0), F(1)]), HPoly.zero(), HPoly.zero())
    es = expand_reduced(single, PLUS, 2)
    assert _const(es.coeff_at(F(11, 6)), SYM_B0) == -2
    # on the minus side the same product flips sign: h = -|h|
    em = expand_reduced(single, MINUS, 2)
    assert _const(em.coeff_at(F(11, 6)), SYM_B0) == 2


def test_mirror_equals_direct_minus_expansion():
    for which in BASIS:
        direct = basis_expansion(which, MINUS, 3)
        mirrored = mirror(basis_expansion(which, PLUS, 3))
        assert mirrored.side == MINUS
        assert [t[0] for t in mirrored.terms] == [t[0] for t in direct.terms]
        for (e1, c1), (e2, c2) in zip(mirrored.terms, direct.terms):
            assert c1 == c2, f"{which} at exponent {e1}"
    with pytest.raises(ValueError):
        mirror(basis_expansion("I01", MINUS, 1))


def test_evaluate_uses_signed_integer_powers():
    e = Expansion(MINUS, [
        (F(0), {SYM_SQRT2PI: ParamPoly.const(2)}),
        (F(5, 6), {SYM_B0: ParamPoly.const(3)}),
        (F(1), {"1": ParamPoly.var("p_101")}),
    ])
    syms = {SYM_SQRT2PI: 1.5, SYM_B0: -0.5, SYM_B1: 0.0, "1": 1.0}
    h = -1e-2
    want = 2 * 1.5 + 3 * (-0.5) * abs(h) ** (5.0 / 6.0) + 4.0 * h
    got = e.evaluate(h, {"p_101": 4.0}, syms)
    assert abs(got - want) < 1e-15
