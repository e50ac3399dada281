from fractions import Fraction as F

import pytest

from cusploop.algebra import (PARAM_NAMES, HPoly, OneForm, ParamPoly,
                              ParamRat, PlanePoly, SingularMatrix, SymScalar,
                              SymbolProductError, hamiltonian, linear_solve,
                              plane_poly_d)


def test_alphabet():
    assert len(PARAM_NAMES) == 54
    assert "p_121" in PARAM_NAMES and "q_031" in PARAM_NAMES
    with pytest.raises(KeyError):
        ParamPoly.var("p_999")


def test_parampoly_arithmetic():
    a = ParamPoly.var("p_101")
    b = ParamPoly.var("q_011")
    p = (a + b) * (a - b)
    assert p == a * a - b * b
    assert p.degree() == 2
    assert (p - p).is_zero()
    assert (a * 0).is_zero()
    assert ParamPoly.const(F(3, 4)) + ParamPoly.const(F(1, 4)) == 1


def test_parampoly_substitute_and_evaluate():
    a = ParamPoly.var("p_101")
    b = ParamPoly.var("q_011")
    p = a * b * 2 + a
    assert p.substitute({"q_011": F(1, 2)}) == a * 2
    assert p.substitute({"q_011": -a}) == a * a * (-2) + a
    assert p.evaluate({"p_101": F(3), "q_011": F(1, 3)}) == F(5)
    # missing parameters default to zero
    assert p.evaluate({}) == 0


def test_parampoly_derivative_and_degree_in():
    a = ParamPoly.var("p_101")
    b = ParamPoly.var("q_011")
    p = a * a * b + b * 3
    assert p.derivative("p_101") == a * b * 2
    assert p.degree_in(["p_101"]) == 2
    assert p.degree_in(["q_011"]) == 1


def test_exact_div():
    a = ParamPoly.var("p_101")
    b = ParamPoly.var("q_011")
    p = (a + b) * (a - b * 2)
    assert p.exact_div(a + b) == a - b * 2
    with pytest.raises(ValueError):
        (a * a + 1).exact_div(a + b)


def test_paramrat():
    a = ParamPoly.var("p_101")
    b = ParamPoly.var("q_011")
    r = ParamRat((a + b) * a, a + b).simplify()
    assert r.as_poly() == a
    r2 = ParamRat(a, b)
    assert (r2 * b).simplify().as_poly() == a
    with pytest.raises(ZeroDivisionError):
        ParamRat(a, ParamPoly.zero())


def test_symscalar():
    s = SymScalar.of("sqrt2*pi", F(2, 3))
    t = SymScalar.of("b0", 1)
    assert (s + t).coeff_sqrt2pi == F(2, 3)
    assert s.scale(3).coeff_sqrt2pi == 2
    with pytest.raises(SymbolProductError):
        s * t


def test_planepoly_calculus():
    f = PlanePoly({(2, 1): 1, (0, 3): F(1, 3)})
    assert f.dx() == PlanePoly({(1, 1): 2})
    assert f.dy() == PlanePoly({(2, 0): 1, (0, 2): 1})
    assert f.dy().int_y() == f
    assert f.degree() == 3


def test_hamiltonian_and_differential():
    H = hamiltonian()
    dH = plane_poly_d(H)
    assert dH.dx_coeff() == PlanePoly({(3, 0): 1, (2, 0): -1})
    assert dH.dy_coeff() == PlanePoly({(0, 1): 1})
    assert plane_poly_d(H).is_zero() is False
    assert (dH - dH).is_zero()


def test_oneform_sign_convention():
    Q = PlanePoly({(1, 0): 1})
    P = PlanePoly({(0, 1): 1})
    om = OneForm(q_part=Q, p_part=P)
    assert om.dx_coeff() == Q
    assert om.dy_coeff() == -P


def test_hpoly():
    p = HPoly([1, F(12, 7)])
    assert str(p) == "1 + 12/7 h"
    assert p.shift().coeffs[0].is_zero()
    assert p.evaluate(F(7)) == ParamPoly.const(13)
    assert (p - p).is_zero()


def test_linear_solve():
    m = [[F(2), F(0)], [F(1), F(3)]]
    x = linear_solve(m, [F(4), F(5)])
    assert x == [F(2), F(1)]
    with pytest.raises(SingularMatrix):
        linear_solve([[F(1), F(1)], [F(2), F(2)]], [F(0), F(0)])
