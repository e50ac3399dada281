"""Symbolic Melnikov functions of order 1-3 and their vanishing analysis.

The first-order function is the reduction of Q1 dx - P1 dy.  When an
order vanishes identically, the integrand is relatively exact and splits
as omega = r dH + dR; the multiplier r feeds the next order
(Q3 + r1 Q2 + r2 Q1) dx - (P3 + r1 P2 + r2 P1) dy, etc.

Expansion coefficients are extracted as ParamPoly expressions, vanishing
conditions are solved exactly over the parameter ring (fraction-free
Bareiss elimination, so polynomial solutions come out as polynomials),
and the square-subsystem Jacobian determinants evaluate to rational
multiples of powers of sqrt(2) and pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (SYM_B0, SYM_B1, SYM_ONE, SYM_SQRT2PI, OneForm,
                      ParamPoly, ParamRat, PlanePoly, hamiltonian,
                      plane_poly_d)
from .picard_fuchs import PLUS, Expansion, expand_reduced
from .reduction import ReducedIntegral, reduce_form


class FirstOrderNonzero(Exception):
    """melnikov_2 requested while M1 is not identically zero."""


class LowerOrderNonzero(Exception):
    """melnikov_3 requested while M1 or M2 is not identically zero."""


class NotRelativelyExact(Exception):
    """Decomposition omega = r dH + dR requested for a non-vanishing integral."""


class NotLinear(Exception):
    """Vanishing system is not linear in the requested unknowns."""


class Inconsistent(Exception):
    """Vanishing system has no solution."""


# ---------------------------------------------------------------------------
# Perturbations
# ---------------------------------------------------------------------------

def _generic_plane(letter: str, k: int) -> PlanePoly:
    terms = {}
    for s in (1, 2, 3):
        for i in range(s + 1):
            j = s - i
            terms[(i, j)] = ParamPoly.var(f"{letter}_{i}{j}{k}")
    return PlanePoly(terms)


@dataclass
class PerturbationSet:
    """The cubic perturbation polynomials (P1, Q1), (P2, Q2), (P3, Q3)."""

    P: tuple  # (PlanePoly, PlanePoly, PlanePoly)
    Q: tuple

    @classmethod
    def generic(cls) -> "PerturbationSet":
        return cls(P=tuple(_generic_plane("p", k) for k in (1, 2, 3)),
                   Q=tuple(_generic_plane("q", k) for k in (1, 2, 3)))

    def substitute(self, assignment: dict) -> "PerturbationSet":
        return PerturbationSet(
            P=tuple(p.substitute(assignment) for p in self.P),
            Q=tuple(q.substitute(assignment) for q in self.Q))


def first_order_vanishing() -> dict:
    """Parameter relations making M1 identically zero."""
    return {
        "p_121": ParamPoly.var("q_031") * (-3),
        "q_011": -ParamPoly.var("p_101"),
        "q_111": ParamPoly.var("p_201") * (-2),
        "q_211": ParamPoly.var("p_301") * (-3),
    }


def _v(name):
    return ParamPoly.var(name)


def second_order_vanishing(which: str) -> dict:
    """One of the three solution families S1/S2/S3 killing M2.

    Each is returned as a substitution on top of the M1-vanishing
    relations (apply ``first_order_vanishing`` first).
    """
    if which == "S1":
        return {
            "p_111": _v("q_021") * (-2),
            "p_122": _v("q_032") * (-3),
            "q_012": -_v("p_102"),
            "q_112": _v("p_202") * (-2),
            "q_121": -_v("p_211"),
            "q_212": _v("p_302") * (-3),
        }
    if which == "S2":
        s = _v("p_111") + _v("q_021") * 2
        return {
            "p_122": _v("p_021") * s - _v("q_032") * 3,
            "q_012": -_v("p_102"),
            "q_031": ParamPoly.zero(),
            "q_112": _v("p_101") * s - _v("p_202") * 2,
            "q_121": -_v("p_211"),
            "q_212": (_v("p_201") + _v("p_301")) * s - _v("p_302") * 3,
        }
    if which == "S3":
        s = _v("p_111") + _v("q_021") * 2
        t = _v("p_211") + _v("q_121")
        return {
            "p_021": ParamPoly.zero(),
            "p_122": _v("p_301") * t * 2 - _v("q_032") * 3,
            "q_012": -_v("p_102"),
            "q_031": ParamPoly.zero(),
            "q_112": _v("p_101") * s - _v("p_202") * 2,
            "q_212": (_v("p_101") * t * 2
                      + (_v("p_201") + _v("p_301"))
                      * (_v("p_211") + _v("q_021") + _v("q_121")) * 2
                      + _v("p_111") * (_v("p_201") + _v("p_301"))
                      - _v("p_302") * 3),
        }
    raise ValueError(f"unknown family {which!r}")


def theorem3_family() -> PerturbationSet:
    """The restricted perturbation family used for the 10-cycle construction.

    P1 = y (p_031 y^2 + p_211 x^2 + p_021 y + p_111 x),
    Q1 = -y^2 (p_211 x - q_021),
    P2 = x y (p_021 (2 q_021 + p_111) y + p_212 x),  Q2 = 0,
    with P3, Q3 fully general.
    """
    sub = {}
    keep_p1 = {"p_031", "p_211", "p_021", "p_111"}
    for s in (1, 2, 3):
        for i in range(s + 1):
            j = s - i
            p1 = f"p_{i}{j}1"
            if p1 not in keep_p1:
                sub[p1] = ParamPoly.zero()
            q1 = f"q_{i}{j}1"
            if q1 == "q_121":
                sub[q1] = -_v("p_211")
            elif q1 != "q_021":
                sub[q1] = ParamPoly.zero()
            p2 = f"p_{i}{j}2"
            if p2 == "p_122":
                sub[p2] = _v("p_021") * (_v("q_021") * 2 + _v("p_111"))
            elif p2 != "p_212":
                sub[p2] = ParamPoly.zero()
            sub[f"q_{i}{j}2"] = ParamPoly.zero()
    return PerturbationSet.generic().substitute(sub)


# ---------------------------------------------------------------------------
# Melnikov functions via Francoise's algorithm
# ---------------------------------------------------------------------------

@dataclass
class FrancoiseStep:
    """One decomposition omega = r dH + dR.

    ``next_form`` is the continuation r * omega of the decomposed form; the
    melnikov_k drivers assemble the full next-order integrand from it and
    the higher-order perturbation terms.
    """

    r: PlanePoly
    R: PlanePoly
    next_form: OneForm


def _solve_rect(rows, cols, matrix, rhs):
    """Solve an overdetermined consistent Frac system with ParamPoly rhs.

    ``matrix`` is dense (len(rows) x len(cols)) over Fraction.  Free
    columns get zero.  Returns the solution list or None if inconsistent.
    """
    nr, nc = len(rows), len(cols)
    m = [list(row) for row in matrix]
    b = list(rhs)
    pivots = []  # (row, col)
    prow = 0
    for col in range(nc):
        piv = next((r for r in range(prow, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[prow], m[piv] = m[piv], m[prow]
        b[prow], b[piv] = b[piv], b[prow]
        pv = m[prow][col]
        for r in range(nr):
            if r == prow or m[r][col] == 0:
                continue
            f = m[r][col] / pv
            for c in range(nc):
                m[r][c] -= f * m[prow][c]
            b[r] = b[r] - b[prow] * f
        pivots.append((prow, col))
        prow += 1
        if prow == nr:
            break
    for r in range(prow, nr):
        if not b[r].is_zero():
            return None
    x = [ParamPoly.zero()] * nc
    for r, c in pivots:
        x[c] = b[r] * (Fraction(1) / m[r][c])
    return x


def _apply_bracket(r: PlanePoly) -> PlanePoly:
    """r_y H_x - r_x H_y for the fixed Hamiltonian."""
    hx = PlanePoly({(3, 0): 1, (2, 0): -1})
    hy = PlanePoly({(0, 1): 1})
    return r.dy() * hx - r.dx() * hy


def _strip_h_powers(r: PlanePoly) -> PlanePoly:
    """Remove the psi(H) ambiguity: kill all pure even-y monomials.

    H^k contributes the unique pure-y monomial y^(2k)/2^k, so eliminating
    y^(2k) coefficients top-down subtracts a well-defined polynomial in H
    and leaves a canonical representative.
    """
    H = hamiltonian()
    out = r
    max_k = max((j // 2 for (i, j) in out.terms if i == 0), default=-1)
    for k in range(max_k, -1, -1):
        c = out.coeff(0, 2 * k)
        if not c.is_zero():
            Hk = PlanePoly({(0, 0): 1})
            for _ in range(k):
                Hk = Hk * H
            out = out - Hk * (c * Fraction(2 ** k))
    return out


def francoise_decompose(omega: OneForm) -> FrancoiseStep:
    """Split omega = r dH + dR for a relatively exact one-form.

    r solves the linear equation r_y H_x - r_x H_y = d(omega)/dx^dy
    coefficient; it is made unique by zeroing its pure even-y monomials
    (equivalently, by removing any added polynomial in H).  R then follows
    by exact integration and is normalized to zero constant term.
    """
    if not reduce_form(omega).is_zero():
        raise NotRelativelyExact(
            "oint omega does not vanish identically; no decomposition")
    A = omega.q_part            # dx coefficient
    B = -omega.p_part           # dy coefficient
    W = B.dx() - A.dy()
    # r_x H_y - r_y H_x = W  <=>  bracket(r) = -W
    target = -W
    deg = max(omega.degree() - 2, 0)
    max_deg = omega.degree() + 3
    r = None
    while deg <= max_deg:
        cols = [(a, b) for a in range(deg + 1) for b in range(deg + 1 - a)]
        images = [_apply_bracket(PlanePoly.monomial(a, b)) for a, b in cols]
        rows = sorted({m for img in images for m in img.terms}
                      | set(target.terms))
        matrix = [[images[c].coeff(*row).constant_value()
                   for c in range(len(cols))] for row in rows]
        rhs = [target.coeff(*row) for row in rows]
        sol = _solve_rect(rows, cols, matrix, rhs)
        if sol is not None:
            r = PlanePoly({cols[c]: sol[c] for c in range(len(cols))})
            break
        deg += 2
    if r is None:
        raise NotRelativelyExact("no polynomial multiplier r found")
    r = _strip_h_powers(r)

    # integrate omega - r dH to get R
    hy = PlanePoly({(0, 1): 1})
    hx = PlanePoly({(3, 0): 1, (2, 0): -1})
    Ry = B - r * hy
    R = Ry.int_y()
    gx = (A - r * hx) - R.dx()
    if any(j != 0 for (_i, j) in gx.terms):
        raise AssertionError("integration residue depends on y; r is wrong")
    R = R + gx.int_x()

    residual = omega - OneForm(q_part=r * hx, p_part=-(r * hy)) - plane_poly_d(R)
    if not residual.is_zero():
        raise AssertionError("decomposition identity failed")
    next_form = OneForm(q_part=r * omega.q_part, p_part=r * omega.p_part)
    return FrancoiseStep(r=r, R=R, next_form=next_form)


def first_order_form(ps: PerturbationSet) -> OneForm:
    return OneForm(q_part=ps.Q[0], p_part=ps.P[0])


def second_order_form(ps: PerturbationSet) -> OneForm:
    r1 = francoise_decompose(first_order_form(ps)).r
    return OneForm(q_part=ps.Q[1] + r1 * ps.Q[0],
                   p_part=ps.P[1] + r1 * ps.P[0])


def third_order_form(ps: PerturbationSet) -> OneForm:
    r1 = francoise_decompose(first_order_form(ps)).r
    omega2 = OneForm(q_part=ps.Q[1] + r1 * ps.Q[0],
                     p_part=ps.P[1] + r1 * ps.P[0])
    r2 = francoise_decompose(omega2).r
    return OneForm(q_part=ps.Q[2] + r1 * ps.Q[1] + r2 * ps.Q[0],
                   p_part=ps.P[2] + r1 * ps.P[1] + r2 * ps.P[0])


def melnikov_1(ps: PerturbationSet) -> ReducedIntegral:
    return reduce_form(first_order_form(ps))


def melnikov_2(ps: PerturbationSet) -> ReducedIntegral:
    if not melnikov_1(ps).is_zero():
        raise FirstOrderNonzero("M1 is not identically zero")
    return reduce_form(second_order_form(ps))


def melnikov_3(ps: PerturbationSet) -> ReducedIntegral:
    if not melnikov_1(ps).is_zero():
        raise LowerOrderNonzero("M1 is not identically zero")
    if not reduce_form(second_order_form(ps)).is_zero():
        raise LowerOrderNonzero("M2 is not identically zero")
    return reduce_form(third_order_form(ps))


# ---------------------------------------------------------------------------
# Coefficient lists
# ---------------------------------------------------------------------------

def coeff_exponent(n: int) -> Fraction:
    """Exponent of the n-th expansion coefficient (c0, c1, ...)."""
    if n == 0:
        return Fraction(0)
    j, k = divmod(n - 1, 3)
    return Fraction(j) + (Fraction(5, 6), Fraction(1), Fraction(7, 6))[k]


def coeff_symbol(n: int) -> str:
    """Symbol class of the n-th coefficient (sqrt2pi / b0 / b1)."""
    if n == 0:
        return SYM_SQRT2PI
    k = (n - 1) % 3
    return (SYM_B0, SYM_SQRT2PI, SYM_B1)[k]


@dataclass
class CoeffEntry:
    label: str
    index: int
    exponent: Fraction
    symbol: str       # implied transcendental factor of the printed value
    poly: ParamPoly   # rational part


@dataclass
class CoeffList:
    side: str
    entries: list

    def __getitem__(self, n: int) -> CoeffEntry:
        return self.entries[n]

    def __len__(self):
        return len(self.entries)

    def poly(self, n: int) -> ParamPoly:
        return self.entries[n].poly

    def substitute(self, assignment: dict) -> "CoeffList":
        out = []
        for e in self.entries:
            out.append(CoeffEntry(e.label, e.index, e.exponent, e.symbol,
                                  e.poly.substitute(assignment)))
        return CoeffList(self.side, out)

    def substitute_rat(self, assignment: dict):
        """Rational-function substitution; returns label -> ParamRat."""
        return {e.label: e.poly.substitute_rat(assignment)
                for e in self.entries}


def coeff_list(r: ReducedIntegral, side: str, count: int) -> CoeffList:
    """First ``count`` expansion coefficients of the reduced integral.

    Integer-exponent entries carry an implied sqrt(2) pi factor, the
    5/6-class entries an implied b0, the 7/6-class entries an implied b1
    (per side); the stored polynomials are the rational parts.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    top = coeff_exponent(count - 1)
    order = int(top) + 1
    exp = expand_reduced(r, side, order)
    entries = []
    for n in range(count):
        e = coeff_exponent(n)
        sym = coeff_symbol(n)
        coeff = exp.coeff_at(e)
        stray = {s: p for s, p in coeff.items()
                 if s != sym and not p.is_zero()}
        if stray:
            raise AssertionError(
                f"unexpected symbols {sorted(stray)} at exponent {e}")
        entries.append(CoeffEntry(f"c{n}", n, e, sym,
                                  coeff.get(sym, ParamPoly.zero())))
    return CoeffList(side, entries)


# ---------------------------------------------------------------------------
# Vanishing conditions and Jacobians
# ---------------------------------------------------------------------------

def _bareiss_det(m):
    """Fraction-free determinant of a square ParamPoly matrix."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = ParamPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not a[r][k].is_zero()),
                       None)
            if piv is None:
                return ParamPoly.zero()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = ParamPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def solve_vanishing(coeffs: CoeffList, unknowns, fixed: dict | None = None):
    """Solve c_0 = ... = c_{n-1} = 0 exactly for n = len(unknowns).

    The system must be linear in the unknowns after substituting
    ``fixed``.  Returns a map unknown -> ParamRat (simplifying to a
    polynomial whenever the quotient divides out, which covers every
    published solution here).
    """
    fixed = fixed or {}
    unknowns = list(unknowns)
    n = len(unknowns)
    if len(coeffs) < n:
        raise ValueError("need at least as many coefficients as unknowns")
    polys = [coeffs.poly(i).substitute(fixed) for i in range(n)]
    zero_unknowns = {u: Fraction(0) for u in unknowns}
    A, b = [], []
    for p in polys:
        if p.degree_in(unknowns) > 1:
            raise NotLinear(f"coefficient not linear in unknowns: {p}")
        row = []
        for u in unknowns:
            d = p.derivative(u)
            if d.degree_in(unknowns) > 0:
                raise NotLinear(f"cross term in unknowns: {p}")
            row.append(d)
        A.append(row)
        b.append(-p.substitute(zero_unknowns))
    det = _bareiss_det(A)
    if det.is_zero():
        raise Inconsistent("vanishing system is singular")
    out = {}
    for c in range(n):
        m = [[A[r][cc] if cc != c else b[r] for cc in range(n)]
             for r in range(n)]
        out[unknowns[c]] = ParamRat(_bareiss_det(m), det).simplify()
    return out


@dataclass(frozen=True)
class PiScalar:
    """value * sqrt(2)^sqrt2 * pi^pi_pow with exact rational value."""

    value: Fraction
    sqrt2: int = 0
    pi_pow: int = 0

    def __float__(self):
        import math
        return (float(self.value) * (math.sqrt(2.0) ** self.sqrt2)
                * math.pi ** self.pi_pow)

    def __str__(self):
        parts = [str(self.value)]
        if self.sqrt2:
            parts.append("sqrt2")
        if self.pi_pow:
            parts.append("pi" if self.pi_pow == 1 else f"pi^{self.pi_pow}")
        return " * ".join(parts)


def jacobian_det(coeffs: CoeffList, unknowns, point: dict) -> PiScalar:
    """det d(c_0..c_{n-1})/d(unknowns) at a rational parameter point.

    Each integer-class row carries its implied sqrt(2) pi factor, so the
    result is a rational multiple of a power of pi (times sqrt 2 for odd
    counts).
    """
    unknowns = list(unknowns)
    n = len(unknowns)
    rows = []
    sqrt2pi_rows = 0
    for i in range(n):
        entry = coeffs[i]
        if entry.symbol == SYM_SQRT2PI:
            sqrt2pi_rows += 1
        row = []
        for u in unknowns:
            d = entry.poly.derivative(u)
            row.append(d.evaluate(point))
        rows.append(row)
        lin_check = entry.poly
        for u in unknowns:
            if lin_check.derivative(u).degree_in(unknowns) > 0:
                raise NotLinear(f"{entry.label} not linear in unknowns")
    # determinant over Fraction
    det = Fraction(1)
    m = [row[:] for row in rows]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return PiScalar(Fraction(0), sqrt2pi_rows % 2, sqrt2pi_rows)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            for c in range(k, n):
                m[r][c] -= f * m[k][c]
    value = det * (Fraction(2) ** (sqrt2pi_rows // 2))
    return PiScalar(value, sqrt2pi_rows % 2, sqrt2pi_rows)
