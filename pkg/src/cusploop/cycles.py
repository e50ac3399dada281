"""Zero counting for truncated Melnikov expansions and ODE cross-checks.

The construction behind the 10-cycle count: starting from a parameter
point where c_0 = ... = c_{k-1} = 0 and c_k != 0, perturb the solved
parameters so the coefficients alternate in sign with magnitudes chosen
so that consecutive terms of the truncated series exchange dominance at
well-separated levels of h.  Each exchange produces one simple zero.

Magnitude schedule: a plain geometric decay of |c_j| cannot produce k
zeros here, because consecutive exponent gaps of 1/6 would then place
several dominance exchanges at the same h (the points (e_j, j) must be
vertices of an upper convex hull, which fails for equal ratios).  The
schedule is instead geometric in v = |h|^(1/6): term j and term j+1 are
balanced at v_j = ratio^(k-j), which keeps every exchange point rational
(all exponent gaps are multiples of 1/6) and separates consecutive
exchanges by a factor ratio^(-6) in h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from fractions import Fraction

import numpy as np
from scipy.integrate import solve_ivp

from .algebra import ParamPoly
from .melnikov import CoeffList, Inconsistent
from .oracle import H_MIN, OutOfRange, constants, oval_endpoints, symbol_values
from .picard_fuchs import MINUS, PLUS


class DegenerateBase(Exception):
    """alternate_params called where c_k vanishes or the Jacobian is singular."""


class NoReturn(Exception):
    """Poincare return not reached within the integration budget."""


# ---------------------------------------------------------------------------
# Alternating parameter construction
# ---------------------------------------------------------------------------

def _frac_approx(x: float) -> Fraction:
    return Fraction(x).limit_denominator(10 ** 6)


def alternate_params(coeffs: CoeffList, base: dict, order_labels,
                     ratio: Fraction) -> dict:
    """Perturb the parameters in ``order_labels`` off the base point.

    ``coeffs`` must hold at least k+1 = len(order_labels)+1 entries that
    are linear in the order_labels parameters.  The result is an exact
    rational point where the evaluated coefficients alternate in sign
    against c_k and consecutive series terms exchange dominance at
    |h|^(1/6) = ratio^(k-j), j = 0..k-1.

    ratio = 0 returns the base unchanged.
    """
    unknowns = list(order_labels)
    k = len(unknowns)
    ratio = Fraction(ratio)
    if ratio == 0:
        return dict(base)
    if not 0 < ratio < 1:
        raise ValueError("ratio must lie in [0, 1)")
    if len(coeffs) < k + 1:
        raise ValueError("need k+1 coefficients for k unknowns")
    sv = symbol_values(coeffs.side)

    tail = coeffs[k]
    tail_val = tail.poly.evaluate(base)
    if tail_val == 0:
        raise DegenerateBase(f"{tail.label} vanishes at the base point")

    # Jacobian of the first k coefficients in the unknowns, at base.
    rows = []
    for j in range(k):
        rows.append([coeffs[j].poly.derivative(u).evaluate(base)
                     for u in unknowns])

    # actual-value magnitudes: Gamma_k from the base, then downward so
    # that Gamma_j |h|^(e_j) = Gamma_{j+1} |h|^(e_{j+1}) at v = v_j
    sym_mag = {s: abs(_frac_approx(v)) for s, v in sv.items()}
    sym_sgn = {s: (1 if v > 0 else -1) for s, v in sv.items()}
    gamma = [Fraction(0)] * (k + 1)
    gamma[k] = abs(tail_val) * sym_mag[tail.symbol]
    sigma = [0] * (k + 1)
    sigma[k] = (1 if tail_val > 0 else -1) * sym_sgn[tail.symbol]
    for j in range(k - 1, -1, -1):
        gap6 = int(6 * (coeffs[j + 1].exponent - coeffs[j].exponent))
        v_j = ratio ** (k - j)
        gamma[j] = gamma[j + 1] * v_j ** gap6
        sigma[j] = -sigma[j + 1]

    # rational-part targets and the exact linear solve
    rhs = []
    for j in range(k):
        tau = sigma[j] * gamma[j] / (sym_mag[coeffs[j].symbol]
                                     * sym_sgn[coeffs[j].symbol])
        offset = coeffs[j].poly.evaluate(
            {**base, **{u: Fraction(0) for u in unknowns}})
        rhs.append(tau - offset)
    sol = _frac_solve(rows, rhs)
    if sol is None:
        raise DegenerateBase("coefficient Jacobian is singular at the base")
    out = dict(base)
    for u, v in zip(unknowns, sol):
        out[u] = v
    return out


def _frac_solve(matrix, rhs):
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        for r in range(n):
            if r == col or m[r][col] == 0:
                continue
            f = m[r][col] / pv
            for c in range(col, n + 1):
                m[r][c] -= f * m[col][c]
    return [m[i][n] / m[i][i] for i in range(n)]


# ---------------------------------------------------------------------------
# Zero counting
# ---------------------------------------------------------------------------

@dataclass
class ZeroReport:
    side: str
    window: tuple
    zeros: list          # (location, sign_change) pairs, ordered by |h|
    count: int

    def as_dict(self) -> dict:
        return {"side": self.side, "window": list(self.window),
                "zeros": [{"h": z, "sign_change": s} for z, s in self.zeros],
                "count": self.count}


def numeric_coeffs(coeffs: CoeffList, point: dict):
    """(exponent, float value) pairs of a CoeffList at a parameter point.

    The value includes the implied transcendental factor for the list's
    side; exponents stay exact Fractions.  Rational polynomial parts are
    evaluated exactly before the single float conversion: the alternating
    construction tunes them many orders of magnitude below the individual
    monomials, where float-evaluated sums are pure cancellation noise.
    """
    sv = symbol_values(coeffs.side)
    exact_pt = {}
    exact = True
    for k, v in point.items():
        if isinstance(v, float) and not float(Fraction(v)) == v:
            exact = False
            break
        exact_pt[k] = Fraction(v)
    out = []
    for e in coeffs.entries:
        val = float(e.poly.evaluate(exact_pt)) if exact \
            else e.poly.evaluate_float(point)
        out.append((e.exponent, val * sv[e.symbol]))
    return out


def _series_value(terms, side, t: float) -> float:
    """Truncated series at |h| = t on the given side (t > 0)."""
    total = 0.0
    for e, v in terms:
        if side == MINUS and e % 1 == 0 and int(e) % 2 == 1:
            v = -v
        total += v * t ** float(e)
    return total


def count_zeros(terms, side: str, h_star: float,
                points_per_decade: int = 200) -> ZeroReport:
    """Sign-scan zeros of the truncated expansion on one side.

    ``terms`` is a sequence of (exponent, float coefficient) pairs, e.g.
    from numeric_coeffs.  The scan grid is log-spaced with at least 200
    points per decade; its lower end extends below every consecutive-term
    balance point so that no dominance exchange can hide under the grid
    (floor 1e-40).
    """
    if h_star <= 0:
        raise ValueError("h_star must be positive")
    if side == MINUS and h_star >= -H_MIN:
        h_star = -H_MIN * 0.999
    terms = [(Fraction(e), float(v)) for e, v in terms if v != 0.0]
    terms.sort(key=lambda t: t[0])
    lo = 1e-12
    for (e1, v1), (e2, v2) in zip(terms, terms[1:]):
        bal = (abs(v1) / abs(v2)) ** (1.0 / float(e2 - e1))
        if math.isfinite(bal) and bal > 0:
            lo = min(lo, bal / 1e3)
    lo = max(lo, 1e-40)
    decades = math.log10(h_star) - math.log10(lo)
    n = max(int(decades * points_per_decade) + 2, 10)
    grid = np.logspace(math.log10(lo), math.log10(h_star), n)
    vals = [_series_value(terms, side, t) for t in grid]
    zeros = []
    for a, b, fa, fb in zip(grid, grid[1:], vals, vals[1:]):
        if fa == 0.0 or fa * fb >= 0.0:
            continue
        # bisection to 1e-14 relative
        while (b - a) > 1e-14 * b:
            mid = math.sqrt(a * b)
            fm = _series_value(terms, side, mid)
            if fm == 0.0:
                a = b = mid
                break
            if fa * fm < 0.0:
                b = mid
            else:
                a, fa = mid, fm
        loc = math.sqrt(a * b)
        zeros.append((loc, 1 if fb > fa else -1))
    window = (0.0, h_star) if side == PLUS else (-h_star, 0.0)
    if side == MINUS:
        zeros = [(-z, s) for z, s in zeros]
    return ZeroReport(side=side, window=window, zeros=zeros,
                      count=len(zeros))


# ---------------------------------------------------------------------------
# Displacement map by direct integration
# ---------------------------------------------------------------------------

@dataclass
class DisplacementSample:
    h: float
    epsilon: float
    displacement: float

    def as_dict(self) -> dict:
        return asdict(self)


def _hamiltonian_value(x: float, y: float) -> float:
    return 0.5 * y * y - x ** 3 / 3.0 + x ** 4 / 4.0


def displacement(params: dict, epsilon: float, h: float, side: str,
                 perturbations=None, rel_tol: float = 1e-12,
                 t_max: float = 500.0) -> DisplacementSample:
    """One Poincare return on the section {y = 0, x > 1}; returns dH.

    The flow is dx/dt = y + eps*p, dy/dt = x^2 - x^3 + eps*q with
    p = P1 + eps P2 + eps^2 P3 and q likewise, all evaluated at the given
    rational parameter point.  Both oval families intersect the section
    at their right endpoint x_hi > 1.
    """
    if abs(epsilon) > 0.01:
        raise ValueError("|epsilon| must be <= 0.01")
    if perturbations is None:
        from .melnikov import PerturbationSet
        perturbations = PerturbationSet.generic()
    fpt = {k: float(Fraction(v)) for k, v in params.items()}
    pw = [epsilon ** (k + 1) for k in range(3)]

    def poly_val(pp, x, y):
        tot = 0.0
        for (i, j), c in pp.terms.items():
            tot += c.evaluate_float(fpt) * x ** i * y ** j
        return tot

    def rhs(_t, s):
        x, y = s
        p = sum(w * poly_val(pp, x, y)
                for w, pp in zip(pw, perturbations.P)) / epsilon \
            if epsilon else 0.0
        q = sum(w * poly_val(qq, x, y)
                for w, qq in zip(pw, perturbations.Q)) / epsilon \
            if epsilon else 0.0
        return (y + epsilon * p, x * x - x ** 3 + epsilon * q)

    _x_lo, x_hi = oval_endpoints(h, side)
    start = (x_hi, 0.0)

    # warm up past the section so the return event is the full revolution
    warm = solve_ivp(rhs, (0.0, t_max), start, method="DOP853",
                     rtol=rel_tol, atol=1e-14, max_step=0.5, dense_output=False,
                     events=_quarter_turn_event())
    if not warm.t_events[0].size:
        raise NoReturn("orbit never left the starting quadrant")
    t0 = warm.t_events[0][0]
    s0 = warm.y_events[0][0]

    def section(_t, s):
        return s[1]
    section.terminal = True
    section.direction = -1.0

    run = solve_ivp(rhs, (t0, t0 + t_max), s0, method="DOP853",
                    rtol=rel_tol, atol=1e-14, max_step=0.5, events=section)
    if not run.t_events[0].size:
        raise NoReturn(f"no Poincare return within t = {t_max}")
    xe, ye = run.y_events[0][0]
    d = _hamiltonian_value(xe, ye) - _hamiltonian_value(*start)
    return DisplacementSample(h=h, epsilon=epsilon, displacement=d)


def _quarter_turn_event():
    """Event marking y minimum (y' = 0 with y < 0), safely off the section."""
    def ev(_t, s):
        x, _y = s
        return x * x - x ** 3
    ev.terminal = True
    ev.direction = 1.0
    return ev


def melnikov_1_numeric(ps, point: dict, h: float, side: str,
                       rel_tol: float = 1e-10) -> float:
    """Direct quadrature value of M1 at a parameter point."""
    from .oracle import abelian_numeric
    G = ps.Q[0] + ps.P[0].dx().int_y()
    tot = 0.0
    for (i, j), c in G.terms.items():
        if j % 2 == 0:
            continue
        tot += c.evaluate_float(point) * abelian_numeric(i, j, h, side, rel_tol)
    return tot
