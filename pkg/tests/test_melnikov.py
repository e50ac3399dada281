from fractions import Fraction as F

import pytest

from cusploop.algebra import ParamPoly, PlanePoly, hamiltonian
from cusploop.melnikov import (CoeffList, FirstOrderNonzero, Inconsistent,
                               LowerOrderNonzero, NotLinear,
                               PerturbationSet, coeff_exponent, coeff_list,
                               coeff_symbol, first_order_vanishing,
                               francoise_decompose, first_order_form,
                               jacobian_det, melnikov_1, melnikov_2,
                               melnikov_3, second_order_vanishing,
                               solve_vanishing, theorem3_family)
from cusploop.picard_fuchs import MINUS, PLUS
from cusploop.reduction import reduce_form


def _v(name):
    return ParamPoly.var(name)


def first_order_family():
    return PerturbationSet.generic().substitute(first_order_vanishing())


def test_generic_set_has_all_cubic_terms():
    ps = PerturbationSet.generic()
    assert ps.P[0].coeff(1, 0) == _v("p_101")
    assert ps.Q[2].coeff(0, 3) == _v("q_033")
    assert ps.P[1].coeff(2, 1) == _v("p_212")


def test_melnikov_1_generic_structure():
    r = melnikov_1(PerturbationSet.generic())
    # the only contributions come from odd powers of y
    assert not r.is_zero()
    assert r.p2.coeffs[0] == _v("q_111") + _v("p_201") * 2


def test_first_order_vanishing_kills_m1():
    assert melnikov_1(first_order_family()).is_zero()


def test_melnikov_2_requires_vanishing_m1():
    with pytest.raises(FirstOrderNonzero):
        melnikov_2(PerturbationSet.generic())
    with pytest.raises(LowerOrderNonzero):
        melnikov_3(PerturbationSet.generic())


def test_second_order_families_kill_m2():
    for which in ("S1", "S2", "S3"):
        ps = first_order_family().substitute(second_order_vanishing(which))
        assert melnikov_2(ps).is_zero(), which


def test_francoise_decomposition_identity():
    ps = first_order_family()
    om = first_order_form(ps)
    assert reduce_form(om).is_zero()
    step = francoise_decompose(om)
    # omega = r dH + dR coefficient-wise:
    # Q = r H_x + R_x and -P = r H_y + R_y
    H = hamiltonian()
    assert (step.r * H.dx() + step.R.dx() - om.q_part).is_zero()
    assert (step.r * H.dy() + step.R.dy() + om.p_part).is_zero()
    # the continued form is r * omega
    assert (step.next_form.q_part - step.r * om.q_part).is_zero()
    assert (step.next_form.p_part - step.r * om.p_part).is_zero()


def test_coeff_grid():
    assert coeff_exponent(0) == 0
    assert coeff_exponent(1) == F(5, 6)
    assert coeff_exponent(2) == 1
    assert coeff_exponent(3) == F(7, 6)
    assert coeff_exponent(4) == F(11, 6)
    assert coeff_symbol(0) == "sqrt2*pi"
    assert coeff_symbol(1) == "b0"
    assert coeff_symbol(3) == "b1"
    assert coeff_symbol(5) == "sqrt2*pi"


def test_coeff_list_first_order():
    r = melnikov_1(PerturbationSet.generic())
    cl = coeff_list(r, PLUS, 4)
    assert len(cl) == 4
    assert cl[0].label == "c0"
    # q_031 y^3 dx reduces to 12/7 h I01 + 1/7 I21, and only the I21
    # constant term 28/243 lands at exponent 0
    c0 = cl.poly(0)
    assert c0.derivative("q_031").evaluate({}) == F(28, 243) * F(1, 7)
    with pytest.raises(ValueError):
        coeff_list(r, PLUS, 0)


def test_solve_vanishing_recovers_relations():
    r = melnikov_1(PerturbationSet.generic())
    cl = coeff_list(r, PLUS, 4)
    sol = solve_vanishing(cl, ["p_121", "q_011", "q_111", "q_211"])
    want = first_order_vanishing()
    for name, rat in sol.items():
        assert rat.as_poly() == want[name]


def test_solve_vanishing_rejects_nonlinear():
    r = melnikov_1(PerturbationSet.generic())
    cl = coeff_list(r, PLUS, 4)
    squared = cl.substitute({"q_031": _v("q_031") * _v("q_031")})
    with pytest.raises(NotLinear):
        solve_vanishing(squared, ["q_031", "q_011", "q_111", "q_211"])


def test_jacobian_det_first_order():
    r = melnikov_1(PerturbationSet.generic())
    cl = coeff_list(r, PLUS, 4)
    det = jacobian_det(cl, ["p_121", "q_011", "q_111", "q_211"], {})
    assert float(det) != 0.0
    assert det.pi_pow == 2  # two integer-class rows
    assert det.sqrt2 == 0


def test_theorem3_family_passes_the_gates():
    ps = theorem3_family()
    assert melnikov_1(ps).is_zero()
    r3 = melnikov_3(ps)
    assert not r3.is_zero()
    cl_plus = coeff_list(r3, PLUS, 7)
    cl_minus = coeff_list(r3, MINUS, 7)
    assert [e.exponent for e in cl_plus.entries] == \
        [F(0), F(5, 6), F(1), F(7, 6), F(11, 6), F(2), F(13, 6)]
    # integer-class rational parts agree on the two sides
    assert cl_plus.poly(0) == cl_minus.poly(0)
    assert cl_plus.poly(2) == cl_minus.poly(2)
