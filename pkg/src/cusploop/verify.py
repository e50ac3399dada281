"""Named end-to-end checks backing the acceptance suite and `cusploop verify`.

Each check returns (passed: bool, detail: str) and is intentionally
self-contained; the CLI prints one table row per check and the test
suite asserts each one separately.

Where a published formula failed independent numerical adjudication
(quadrature oracle), the checks assert the corrected value; the
corrections are confined to three spots in the third-order chain and are
re-derived here from scratch, not hard-coded from the source text.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction as F

from .algebra import ParamPoly as PP
from .algebra import ParamRat, PlanePoly
from .melnikov import (CoeffList, PerturbationSet, coeff_list,
                       first_order_form, first_order_vanishing,
                       francoise_decompose, jacobian_det, melnikov_1,
                       melnikov_2, melnikov_3, second_order_vanishing,
                       solve_vanishing, theorem3_family)
from .oracle import abelian_numeric, basis_vector_numeric, constants, symbol_values
from .picard_fuchs import (BASIS, MINUS, PLUS, basis_expansion, mirror)
from .reduction import HPoly, ReducedIntegral, reduce_monomial


def _hp(*coeffs) -> HPoly:
    return HPoly([F(c) if not isinstance(c, F) else c for c in coeffs])


def _v(name):
    return PP.var(name)


# ---------------------------------------------------------------------------

def check_reductions():
    """Criterion 1: Lemma-1 reductions of the nine tabulated monomials."""
    expected = {
        (4, 1): (_hp(0, F(4, 7)), _hp(), _hp(F(22, 21))),
        (0, 3): (_hp(0, F(12, 7)), _hp(), _hp(F(1, 7))),
        # corrected h-coefficient 13/21 = (13/12)(4/7); adjudicated
        (5, 1): (_hp(0, F(13, 21)), _hp(0, 1), _hp(F(143, 126))),
        (1, 3): (_hp(0, F(1, 14)), _hp(0, F(3, 2)), _hp(F(11, 84))),
        (6, 1): (_hp(0, F(130, 189)), _hp(0, F(10, 9)),
                 _hp(F(715, 567), F(4, 3))),
        (2, 3): (_hp(0, F(13, 189)), _hp(0, F(1, 9)),
                 _hp(F(143, 1134), F(4, 3))),
        # corrected entries (adjudicated against quadrature; see ledger):
        (3, 3): (_hp(0, F(13, 189)), _hp(0, F(1, 9)),
                 _hp(F(143, 1134), F(4, 3))),
        (4, 3): (_hp(0, F(442, 6237), F(48, 77)), _hp(0, F(34, 297)),
                 _hp(F(221, 1701), F(988, 693))),
        (0, 5): (_hp(0, F(65, 6237), F(240, 77)), _hp(0, F(5, 297)),
                 _hp(F(65, 3402), F(320, 693))),
    }
    bad = []
    for (i, j), want in expected.items():
        got = reduce_monomial(i, j)
        if got.triple() != want:
            bad.append(f"I_{i},{j}: got {got}")
    return (not bad, "; ".join(bad) or f"{len(expected)} reductions exact")


def check_expansions():
    """Criterion 2: every tabulated term of the basis expansions."""
    want = {
        "I01": {F(0): ("sqrt2*pi", F(4, 27)), F(5, 6): ("b0", F(-2)),
                F(7, 6): ("b1", F(1)), F(11, 6): ("b0", F(35, 44)),
                F(13, 6): ("b1", F(-385, 208))},
        "I11": {F(0): ("sqrt2*pi", F(10, 81)), F(1): ("sqrt2*pi", F(2)),
                F(7, 6): ("b1", F(2)), F(11, 6): ("b0", F(21, 22)),
                F(13, 6): ("b1", F(-55, 26))},
        "I21": {F(0): ("sqrt2*pi", F(28, 243)), F(1): ("sqrt2*pi", F(4, 3)),
                F(11, 6): ("b0", F(12, 11)), F(13, 6): ("b1", F(-30, 13))},
    }
    bad = []
    for which, table in want.items():
        for side in (PLUS, MINUS):
            exp = basis_expansion(which, side, 2)
            for e, (sym, val) in table.items():
                if side == MINUS and e % 1 != 0:
                    j = e - (F(5, 6) if e % 1 == F(5, 6) else F(7, 6))
                    if j % 2 == 1:
                        val = -val
                got = exp.coeff_at(e).get(sym)
                if got != PP.const(val):
                    bad.append(f"{which} {side} h^{e}")
            # absence of low fractional terms where the table has none
            for e in (F(5, 6), F(7, 6)):
                if e not in table and exp.coeff_at(e):
                    bad.append(f"{which} {side} spurious h^{e}")
    return (not bad, "; ".join(bad) or "all tabulated terms exact")


def check_oracle_baseline():
    """Criterion 3: cusp-limit value of I01 and the I31 = I21 identity.

    At |h| = 1e-6 the fractional terms contribute ~1e-4 relative, so the
    bare quadrature cannot sit within 1e-8 of the limit; the check
    removes the tabulated fractional corrections (constants from the
    independent boundary integrals) before comparing.  See ledger.
    """
    c = constants()
    target = 4.0 * math.sqrt(2.0) * math.pi / 27.0
    bad = []
    for h, side in ((1e-6, PLUS), (-1e-6, MINUS)):
        val = abelian_numeric(0, 1, h, side, 1e-12)
        t = abs(h)
        sgn = 1.0 if side == PLUS else -1.0
        corr = (-2.0 * c.b0(side) * t ** (5 / 6)
                + c.b1(side) * t ** (7 / 6)
                + sgn * 35 / 44 * c.b0(side) * t ** (11 / 6)
                - sgn * 385 / 208 * c.b1(side) * t ** (13 / 6))
        rel = abs((val - corr) - target) / target
        if rel > 1e-8:
            bad.append(f"I01({h:+.0e}) rel {rel:.2e}")
    for n in range(6):
        h = 0.002 * (n + 1) * (1 if n % 2 == 0 else -2.0 / 3.0)
        side = PLUS if h > 0 else MINUS
        i3 = abelian_numeric(3, 1, h, side, 1e-12)
        i2 = abelian_numeric(2, 1, h, side, 1e-12)
        if abs(i3 - i2) > 1e-10 * abs(i2):
            bad.append(f"I31!=I21 at h={h}")
    return (not bad, "; ".join(bad) or "limit and I31=I21 within tolerance")


def check_series_oracle():
    """Criterion 4: order-4 truncations vs quadrature at 4 levels."""
    bad = []
    for which in BASIS:
        for h in (1e-3, -1e-3, 1e-2, -1e-2):
            side = PLUS if h > 0 else MINUS
            exp = basis_expansion(which, side, 4)
            sv = symbol_values(side)
            approx = exp.evaluate(h, {}, sv)
            truth = abelian_numeric(BASIS.index(which), 1, h, side, 1e-12)
            rel = abs(approx - truth) / abs(truth)
            if rel > 1e-5:
                bad.append(f"{which} h={h}: rel {rel:.1e}")
    return (not bad, "; ".join(bad) or "12 comparisons within 1e-5")


def _m1_artifacts():
    ps = PerturbationSet.generic()
    m1 = melnikov_1(ps)
    A = [_v("p_101") + _v("q_011"), _v("p_201") * 2 + _v("q_111"),
         _v("p_301") * 3 + _v("q_211"), _v("p_121") * F(1, 3) + _v("q_031")]
    return ps, m1, A


def _m2_artifacts():
    ps0 = PerturbationSet.generic().substitute(first_order_vanishing())
    om2_q = ps0.Q[1] + francoise_decompose(first_order_form(ps0)).r * ps0.Q[0]
    m2 = melnikov_2(ps0)
    s = _v("p_111") + _v("q_021") * 2
    t2 = _v("p_211") * 2 + _v("q_121") * 2
    B = [None,
         _v("p_102") + _v("q_012"),
         _v("p_202") * 2 + _v("q_112") - s * _v("p_101"),
         _v("p_302") * 3 + _v("q_212") - s * _v("p_201") - t2 * _v("p_101"),
         -s * _v("p_301") - t2 * _v("p_201"),
         (_v("p_211") + _v("q_121")) * _v("p_301") * (-2),
         _v("p_122") * F(1, 3) + _v("q_032") - s * _v("p_021") * F(1, 3),
         s * _v("q_031") - (_v("p_211") + _v("q_121")) * _v("p_021") * F(2, 3),
         (_v("p_211") + _v("q_121")) * _v("q_031") * 2]
    return ps0, m2, B


def check_coefficients():
    """Criterion 5: expansion coefficient identities and the multipliers."""
    bad = []
    _ps, m1, A = _m1_artifacts()
    cl1 = coeff_list(m1, PLUS, 4)
    want1 = [(A[0] * 18 + A[1] * 15 + A[2] * 14 + A[3] * 2) * F(2, 243),
             A[0] * (-2),
             (A[1] * 9 + A[2] * 6 + A[3] * 2) * F(2, 9),
             A[0] + A[1] * 2]
    for n, w in enumerate(want1):
        if cl1.poly(n) != w:
            bad.append(f"first-order c{n}")

    ps0, m2, B = _m2_artifacts()
    r1 = francoise_decompose(first_order_form(ps0)).r
    r1_want = PlanePoly({(1, 0): -(_v("p_111") + _v("q_021") * 2),
                         (2, 0): -(_v("p_211") + _v("q_121"))})
    if r1 != r1_want:
        bad.append("r1")
    cl2 = coeff_list(m2, PLUS, 6)
    want2 = [(B[1] * 2916 + B[2] * 2430 + B[3] * 2268 + B[4] * 2268
              + B[5] * 2376 + B[6] * 324 + B[7] * 297 + B[8] * 286) * F(1, 19683),
             B[1] * (-2),
             (B[2] * 81 + B[3] * 54 + B[4] * 54 + B[5] * 60 + B[6] * 18
              + B[7] * 15 + B[8] * 14) * F(2, 81),
             B[1] + B[2] * 2,
             (B[1] * 35 + B[2] * 42 + B[3] * 48 + B[4] * 48
              - B[6] * 144) * F(1, 44),
             B[7] * 3 + B[8] * 2]
    for n, w in enumerate(want2):
        if cl2.poly(n) != w:
            bad.append(f"second-order c{n}")

    ps3 = theorem3_family()
    from .melnikov import second_order_form
    r2 = francoise_decompose(second_order_form(ps3)).r
    s = _v("q_021") * 2 + _v("p_111")
    r2_want = PlanePoly({
        (5, 0): _v("p_031") * s * F(2, 5),
        (4, 0): _v("p_031") * s * F(-1, 2),
        (3, 0): _v("p_211") * s * F(1, 3),
        (2, 0): _v("p_111") ** 2 + _v("p_111") * _v("q_021") * 3
                + _v("q_021") ** 2 * 2 - _v("p_212"),
        (1, 2): _v("p_031") * s})
    if r2 != r2_want:
        bad.append("r2")

    m3 = melnikov_3(ps3)
    # third-order B coefficients; the p_031-coupled pieces of B2, B5,
    # B6, B7 are the corrected values (see ledger)
    q = _v("p_021")
    T = {"B1": _v("p_103") + _v("q_013"),
         "B2": (q * _v("p_111") * _v("p_031") * F(65, 18711)
                + q * _v("p_111") * _v("p_211") * F(13, 567)
                - q * _v("p_111") * _v("q_021") * F(1, 21)
                + q * _v("p_031") * _v("q_021") * F(130, 18711)
                + q * _v("p_211") * _v("q_021") * F(26, 567)
                - q * _v("q_021") ** 2 * F(2, 21)
                - q * _v("p_212") * F(1, 21)
                + _v("p_123") * F(4, 7) + _v("q_033") * F(12, 7)),
         "B3": _v("p_031") * s * q * F(80, 77),
         "B4": _v("p_203") * 2 + _v("q_113"),
         "B5": (q * _v("p_111") * _v("p_031") * F(5, 891)
                + q * _v("p_111") * _v("p_211") * F(1, 27)
                - q * _v("p_111") * _v("q_021")
                + q * _v("p_031") * _v("q_021") * F(10, 891)
                + q * _v("p_211") * _v("q_021") * F(2, 27)
                - q * _v("q_021") ** 2 * 2 - q * _v("p_212")),
         "B6": (q * _v("p_111") * _v("p_031") * F(65, 10206)
                + q * _v("p_111") * _v("p_211") * F(143, 3402)
                - q * _v("p_111") * _v("q_021") * F(11, 126)
                + q * _v("p_031") * _v("q_021") * F(65, 5103)
                + q * _v("p_211") * _v("q_021") * F(143, 1701)
                - q * _v("q_021") ** 2 * F(11, 63)
                - q * _v("p_212") * F(11, 126)
                + _v("p_123") * F(1, 21) + _v("p_303") * 3
                + _v("q_033") * F(1, 7) + _v("q_213")),
         "B7": ((_v("q_021") * 2 + _v("p_111"))
                * (_v("p_031") * F(320, 2079) + _v("p_211") * F(4, 9)) * q)}
    got = {"B1": m3.p1.coeffs[0], "B2": m3.p1.coeffs[1],
           "B3": m3.p1.coeffs[2], "B4": m3.p2.coeffs[0],
           "B5": m3.p2.coeffs[1], "B6": m3.p3.coeffs[0],
           "B7": m3.p3.coeffs[1]}
    for name, w in T.items():
        if got[name] != w:
            bad.append(f"third-order {name}")
    cl3 = coeff_list(m3, PLUS, 7)
    B1, B2, B3 = got["B1"], got["B2"], got["B3"]
    B4, B5, B6, B7 = got["B4"], got["B5"], got["B6"], got["B7"]
    want3 = [(B1 * 18 + B4 * 15 + B6 * 14) * F(2, 243),
             B1 * (-2),
             (B2 * 18 + B4 * 243 + B5 * 15 + B6 * 162 + B7 * 14) * F(2, 243),
             B1 + B4 * 2,
             (B1 * 35 - B2 * 88 + B4 * 42 + B6 * 48) * F(1, 44),
             # corrected: includes the B3 contribution of B3 h^2 I01
             (B5 * 3 + B7 * 2) * F(2, 3) + B3 * F(4, 27),
             (B1 * 385 - B2 * 208 + B4 * 440 - B5 * 416
              + B6 * 480) * F(-1, 208)]
    for n, w in enumerate(want3):
        if cl3.poly(n) != w:
            bad.append(f"third-order c{n}")
    return (not bad, "; ".join(bad) or "all coefficient identities exact")


def check_vanishing_solutions():
    """Criterion 6: solved vanishing conditions, residuals, Jacobians."""
    bad = []
    _ps, m1, _A = _m1_artifacts()
    cl1 = coeff_list(m1, PLUS, 4)
    sol1 = solve_vanishing(cl1, ["q_011", "q_111", "q_211"])
    tail1 = _v("p_121") + _v("q_031") * 3
    want1 = {"q_011": -_v("p_101"),
             "q_111": _v("p_201") * (-2) - tail1 * F(4, 27),
             "q_211": _v("p_301") * (-3) + tail1 * F(1, 9)}
    for k, w in want1.items():
        if sol1[k].as_poly() != w:
            bad.append(f"first-order {k}")
    res1 = cl1.poly(3).substitute({k: v.as_poly() for k, v in sol1.items()})
    if res1 != tail1 * F(-8, 27):
        bad.append("first-order residual c3")

    _ps0, m2, _B = _m2_artifacts()
    cl2 = coeff_list(m2, PLUS, 6)
    unk2 = ["p_122", "q_012", "q_112", "q_212", "p_021"]
    sol2 = solve_vanishing(CoeffList(PLUS, cl2.entries[:5]), unk2)
    p021 = sol2["p_021"]
    num = _v("q_031") * (_v("p_111") * 135 + _v("p_211") * 244
                         + _v("q_021") * 270 + _v("q_121") * 244)
    den = (_v("q_121") + _v("p_211")) * 90
    if not (p021.num * den - num * p021.den).is_zero():
        bad.append("(second-order) p_021 solution")
    res2 = cl2.poly(5).substitute_rat(sol2).simplify()
    want_res2 = _v("q_031") * (_v("q_121") + _v("p_211")) * F(-64, 45)
    if res2 != ParamRat.from_poly(want_res2):
        bad.append("second-order residual c5")
    for pt in _rational_points(2):
        full = dict(pt)
        full["p_021"] = p021.num.evaluate(pt) / p021.den.evaluate(pt)
        det = jacobian_det(CoeffList(PLUS, cl2.entries[:5]), unk2, full)
        want = F(2560, 19683) * (pt["q_121"] + pt["p_211"])
        if (det.value, det.sqrt2, det.pi_pow) != (want, 0, 2):
            bad.append(f"second-order det at {pt}")

    m3 = melnikov_3(theorem3_family())
    cl3 = coeff_list(m3, PLUS, 7)
    unk3 = ["p_123", "q_013", "q_113", "q_213", "p_212", "p_211"]
    sol3 = solve_vanishing(CoeffList(PLUS, cl3.entries[:6]), unk3)
    pp = _v("p_021") * _v("p_031")
    want3 = {
        # corrected p_123 and p_211 (see ledger); others as published
        "p_123": pp * _v("p_111") * F(5, 891)
                 + pp * _v("q_021") * F(10, 891) - _v("q_033") * 3,
        "q_013": -_v("p_103"),
        "q_113": _v("p_203") * (-2),
        "q_213": pp * _v("p_111") * F(5, 891)
                 + pp * _v("q_021") * F(10, 891) - _v("p_303") * 3,
        "p_212": _v("p_031") * _v("p_111") * F(85, 297)
                 + _v("p_031") * _v("q_021") * F(170, 297)
                 - _v("p_111") * _v("q_021") - _v("q_021") ** 2 * 2,
        "p_211": _v("p_031") * F(10, 33),
    }
    for k, w in want3.items():
        if sol3[k].as_poly() != w:
            bad.append(f"third-order {k}")
    res3 = cl3.poly(6).substitute_rat(sol3).simplify()
    want_res3 = ((_v("q_021") * 2 + _v("p_111")) * _v("p_031")
                 * _v("p_021") * F(-160, 297))
    if res3 != ParamRat.from_poly(want_res3):
        bad.append("third-order residual c6")
    for pt in _rational_points(3, third=True):
        full = dict(pt)
        for k, v in sol3.items():
            full[k] = v.num.evaluate(pt) / v.den.evaluate(pt)
        det = jacobian_det(CoeffList(PLUS, cl3.entries[:6]), unk3, full)
        want = F(-16384, 531441) * (2 * pt["q_021"] + pt["p_111"]) \
            * pt["p_021"] ** 2
        if (det.value, det.sqrt2, det.pi_pow) != (want, 1, 3):
            bad.append(f"third-order det at {pt}")
    return (not bad, "; ".join(bad) or "solutions, residuals, determinants exact")


def _rational_points(seed: int, third: bool = False):
    import random
    rng = random.Random(seed)
    names = (["p_031", "p_021", "p_111", "q_021", "p_103", "p_203",
              "p_303", "q_033"] if third else
             ["p_101", "p_201", "p_301", "p_111", "p_211", "q_021",
              "q_121", "q_031", "p_031", "q_032", "p_102", "p_202",
              "p_302"])
    pts = []
    for _ in range(3):
        pt = {n: F(rng.randint(-8, 8), rng.randint(1, 5)) for n in names}
        for key in ("p_031", "p_021"):
            if key in pt and pt[key] == 0:
                pt[key] = F(1, 2)
        if "q_121" in pt and pt["q_121"] + pt["p_211"] == 0:
            pt["q_121"] += 1
        pts.append(pt)
    return pts


def check_m2_families():
    """Criterion 7: the S1/S2/S3 families annihilate M2."""
    ps0 = PerturbationSet.generic().substitute(first_order_vanishing())
    bad = []
    for fam in ("S1", "S2", "S3"):
        if not melnikov_2(ps0.substitute(second_order_vanishing(fam))).is_zero():
            bad.append(fam)
    return (not bad, "; ".join(bad) or "all three families give the zero triple")


def theorem3_base_point():
    """The exact Theorem-3 base: free values 1, the six solved exactly."""
    m3 = melnikov_3(theorem3_family())
    cl = coeff_list(m3, PLUS, 7)
    unk = ["p_123", "q_013", "q_113", "q_213", "p_212", "p_211"]
    sol = solve_vanishing(CoeffList(PLUS, cl.entries[:6]), unk)
    base = {"p_021": F(1), "p_031": F(1), "p_111": F(1), "q_021": F(1),
            "p_103": F(0), "p_203": F(0), "p_303": F(0), "q_033": F(0)}
    for k, v in sol.items():
        base[k] = v.num.evaluate(base) / v.den.evaluate(base)
    return cl, unk, base


def check_ten_zeros(ratio=F(1, 8), density: int = 200):
    """Criterion 8: 6 + 4 zeros of the truncated third-order expansions."""
    from .cycles import alternate_params, count_zeros, numeric_coeffs
    cl, unk, base = theorem3_base_point()
    point = alternate_params(cl, base, unk, ratio)
    m3 = melnikov_3(theorem3_family())
    reports = {}
    for side in (PLUS, MINUS):
        cls = cl if side == PLUS else coeff_list(m3, side, 7)
        terms = numeric_coeffs(cls, point)
        rep = count_zeros(terms, side, 1e-2, points_per_decade=density)
        rep2 = count_zeros(terms, side, 1e-2, points_per_decade=2 * density)
        stable = len(rep.zeros) == len(rep2.zeros) and all(
            abs(abs(a[0]) - abs(b[0])) <= 0.01 * abs(b[0])
            for a, b in zip(rep.zeros, rep2.zeros))
        reports[side] = (rep, stable)
    plus_n = reports[PLUS][0].count
    minus_n = reports[MINUS][0].count
    ok = (plus_n == 6 and minus_n == 4
          and reports[PLUS][1] and reports[MINUS][1])
    return (ok, f"plus {plus_n}, minus {minus_n}, total {plus_n + minus_n}"
            + ("" if reports[PLUS][1] and reports[MINUS][1]
               else " (unstable under density doubling)"))


def first_order_sign_point(h0: float = 0.004):
    """A point where M1+ = (a + 12/7 h) I01 + (1/7) I21 crosses zero at h0."""
    i01, _i11, i21 = basis_vector_numeric(h0, PLUS, 1e-12)
    a = -(F(12, 7) * F(h0).limit_denominator(10 ** 9)
          + F(1, 7) * F(i21 / i01).limit_denominator(10 ** 9))
    return {"p_101": a, "q_031": F(1)}


def check_displacement(h0: float = 0.004, epsilon: float = 1e-4):
    """Criterion 9: ODE displacement changes sign across the M1 zero."""
    from .cycles import displacement, melnikov_1_numeric
    params = first_order_sign_point(h0)
    ps = PerturbationSet.generic()
    fpt = {k: float(v) for k, v in params.items()}
    lo, hi = 0.8 * h0, 1.2 * h0
    d_lo = displacement(params, epsilon, lo, PLUS).displacement
    d_hi = displacement(params, epsilon, hi, PLUS).displacement
    m_lo = epsilon * melnikov_1_numeric(ps, fpt, lo, PLUS)
    m_hi = epsilon * melnikov_1_numeric(ps, fpt, hi, PLUS)
    ok = (d_lo * d_hi < 0 and d_lo * m_lo > 0 and d_hi * m_hi > 0)
    return (ok, f"d({lo:.4g}) = {d_lo:.3e}, d({hi:.4g}) = {d_hi:.3e}; "
                f"eps*M1 = {m_lo:.3e}, {m_hi:.3e}")


def check_mirror():
    """Criterion 10: symbolic mirror identity and numeric rho scaling."""
    bad = []
    for which in BASIS:
        ep = basis_expansion(which, PLUS, 3)
        em = basis_expansion(which, MINUS, 3)
        mm = mirror(ep)
        same = len(mm.terms) == len(em.terms) and all(
            e1 == e2 and {s: p.terms for s, p in c1.items()}
            == {s: p.terms for s, p in c2.items()}
            for (e1, c1), (e2, c2) in zip(mm.terms, em.terms))
        if not same:
            bad.append(f"mirror({which})")
    # numeric rho check: fit the b0/b1 coefficients of I01 from
    # quadrature on each side and compare their ratios with rho1, rho3
    c = constants()
    a0 = 4.0 * math.sqrt(2.0) * math.pi / 27.0
    fitted = {}
    for side, sgn in ((PLUS, 1.0), (MINUS, -1.0)):
        rows, rhs = [], []
        for t in (1e-3, 2e-3):
            h = t * (1 if side == PLUS else -1)
            val = abelian_numeric(0, 1, h, side, 1e-13) - a0
            rows.append([-2 * t ** (5 / 6) + sgn * 35 / 44 * t ** (11 / 6),
                         t ** (7 / 6) - sgn * 385 / 208 * t ** (13 / 6)])
            rhs.append(val)
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        b0f = (rhs[0] * rows[1][1] - rhs[1] * rows[0][1]) / det
        b1f = (rows[0][0] * rhs[1] - rows[1][0] * rhs[0]) / det
        fitted[side] = (b0f, b1f)
    r1 = -fitted[PLUS][0] / fitted[MINUS][0]
    r3 = -fitted[PLUS][1] / fitted[MINUS][1]
    if abs(r1 - c.rho1) > 1e-3 * c.rho1:
        bad.append(f"rho1 fit {r1:.6f} vs {c.rho1:.6f}")
    if abs(r3 - c.rho3) > 1e-3 * c.rho3:
        bad.append(f"rho3 fit {r3:.6f} vs {c.rho3:.6f}")
    return (not bad, "; ".join(bad)
            or f"mirror exact; rho1 fit {r1:.6f}, rho3 fit {r3:.6f}")


CHECKS = [
    ("lemma1-reductions", check_reductions),
    ("picard-fuchs-expansions", check_expansions),
    ("oracle-baseline", check_oracle_baseline),
    ("series-oracle-agreement", check_series_oracle),
    ("melnikov-coefficients", check_coefficients),
    ("vanishing-solutions", check_vanishing_solutions),
    ("m2-vanishing-families", check_m2_families),
    ("ten-zero-configuration", check_ten_zeros),
    ("ode-displacement-sign", check_displacement),
    ("mirror-relation", check_mirror),
]


def run_all(stream=None):
    """Run every check; returns True when all pass."""
    import sys
    out = stream or sys.stdout
    all_ok = True
    for name, fn in CHECKS:
        t0 = time.time()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name:<28} {time.time() - t0:6.1f}s  {detail}",
              file=out)
    return all_ok
