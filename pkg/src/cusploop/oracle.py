"""Floating-point ground truth for the Abelian integrals.

Level ovals of H = y^2/2 - x^3/3 + x^4/4 are parameterized by
y^2 = f(x) = 2h + (2/3) x^3 - (1/2) x^4 between two simple roots of f.
Integrals oint x^i y^j dx are evaluated by adaptive quadrature after the
substitution x = x_lo + (x_hi - x_lo) sin^2(theta), which removes the
square-root vanishing at both endpoints exactly.

The boundary constants B00/B10 (and the derived b0, b1, rho1, rho3) come
from one-dimensional improper integrals evaluated with mpmath's
tanh-sinh quadrature, which absorbs the endpoint singularities and the
infinite limit directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from functools import lru_cache

import mpmath
from scipy import integrate, optimize

from .picard_fuchs import MINUS, PLUS

DEFAULT_REL_TOL = 1e-10

#: h range of the inner (minus) oval family.
H_MIN = -1.0 / 12.0


class OutOfRange(Exception):
    """h outside the valid range of the requested oval family."""


class RootNotFound(Exception):
    """Endpoint bracketing failed; signals numerical misconfiguration."""


class NonConvergent(Exception):
    """Adaptive refinement exceeded its budget."""


def _f(x: float, h: float) -> float:
    return 2.0 * h + (2.0 / 3.0) * x ** 3 - 0.5 * x ** 4


def _check_h(h: float, side: str):
    if side == PLUS:
        if not h > 0.0:
            raise OutOfRange(f"plus side requires h > 0, got {h}")
    elif side == MINUS:
        if not (H_MIN < h < 0.0):
            raise OutOfRange(f"minus side requires -1/12 < h < 0, got {h}")
    else:
        raise ValueError(f"unknown side {side!r}")


def oval_endpoints(h: float, side: str):
    """The two x-axis intersections (x_lo, x_hi) of the oval at level h."""
    _check_h(h, side)

    def bracket_root(a: float, b: float) -> float:
        try:
            return optimize.brentq(_f, a, b, args=(h,), xtol=1e-300,
                                   rtol=4 * math.ulp(1.0), maxiter=200)
        except ValueError as exc:
            raise RootNotFound(f"no sign change on [{a}, {b}]") from exc

    if side == PLUS:
        # f(0) = 2h > 0; walk left and right until f < 0
        a = -max(1.0, (6.0 * h) ** (1.0 / 3.0))
        while _f(a, h) > 0.0:
            a *= 2.0
            if a < -1e8:
                raise RootNotFound("left endpoint bracket diverged")
        x_lo = bracket_root(a, 0.0)
        b = 1.5
        while _f(b, h) > 0.0:
            b *= 2.0
            if b > 1e8:
                raise RootNotFound("right endpoint bracket diverged")
        x_hi = bracket_root(4.0 / 3.0, b)
    else:
        # f(0) = 2h < 0 < f(1); f(4/3) = 2h < 0
        x_lo = bracket_root(0.0, 1.0)
        x_hi = bracket_root(1.0, 4.0 / 3.0)
    return x_lo, x_hi


def abelian_numeric(i: int, j: int, h: float, side: str,
                    rel_tol: float = DEFAULT_REL_TOL) -> float:
    """oint x^i y^j dx over the oval at level h (clockwise, so I01 > 0).

    Even j gives exactly 0 without quadrature; odd j is twice the top-half
    integral.
    """
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    if rel_tol < 1e-13:
        raise ValueError("rel_tol must be >= 1e-13")
    if j % 2 == 0:
        _check_h(h, side)
        return 0.0
    x_lo, x_hi = oval_endpoints(h, side)
    span = x_hi - x_lo

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        x = x_lo + span * s * s
        fx = _f(x, h)
        if fx < 0.0:
            fx = 0.0
        y = math.sqrt(fx)
        return (x ** i) * (y ** j) * span * math.sin(2.0 * theta)

    val, _err = integrate.quad(integrand, 0.0, math.pi / 2.0,
                               epsabs=0.0, epsrel=rel_tol, limit=400)
    return 2.0 * val


@dataclass(frozen=True)
class Constants:
    """Boundary constants of the fractional expansion terms.

    Sign structure: B00_plus, B10_plus < 0 < B00_minus, B10_minus, hence
    rho1 = -B00_plus/B00_minus and rho3 = -B10_plus/B10_minus are
    positive.
    """

    B00_plus: float
    B00_minus: float
    B10_plus: float
    B10_minus: float
    b0_plus: float
    b0_minus: float
    b1_plus: float
    b1_minus: float
    rho1: float
    rho3: float

    def b0(self, side: str) -> float:
        return self.b0_plus if side == PLUS else self.b0_minus

    def b1(self, side: str) -> float:
        return self.b1_plus if side == PLUS else self.b1_minus

    def as_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def constants(rel_tol: float = 1e-12) -> Constants:
    """Evaluate the four boundary integrals and derived constants.

    The B10_plus expression is implemented exactly as printed, with the
    reversed-limit integral oriented as int_1^{-1} = -int_{-1}^1; its
    value is cross-validated elsewhere against series fits of the
    quadrature oracle.
    """
    if rel_tol < 1e-12:
        raise ValueError("rel_tol must be >= 1e-12")
    with mpmath.workdps(30):
        one = mpmath.mpf(1)

        def q(fn, a, b):
            val, err = mpmath.quad(fn, [a, b], error=True)
            if err > max(abs(val), 1.0) * rel_tol * 10:
                raise NonConvergent(
                    f"quadrature error {err} beyond budget for [{a}, {b}]")
            return val

        B00m = mpmath.mpf(3) / 5 * q(
            lambda x: 1 / mpmath.sqrt(x * (1 - x ** 3)), 0, 1)
        B00p = -mpmath.mpf(3) / 5 * q(
            lambda x: 1 / mpmath.sqrt(1 - x ** 3), -mpmath.inf, 1)
        int_rev = -q(lambda x: x / mpmath.sqrt(1 - x ** 3), -1, 1)
        int_pos = q(lambda x: x ** mpmath.mpf(1.5)
                    / (mpmath.sqrt(1 + x ** 3) + 1 + x ** 3), 0, 1)
        B10p = mpmath.mpf(3) / 7 * (int_rev - int_pos - 2)
        int_neg = q(lambda x: x ** mpmath.mpf(1.5)
                    / (mpmath.sqrt(1 - x ** 3) + 1 - x ** 3), 0, 1)
        B10m = -mpmath.mpf(3) / 7 * (int_neg - 2)

        r72 = mpmath.root(72, 6)
        r648 = mpmath.root(648, 6)
        vals = dict(
            B00_plus=float(B00p), B00_minus=float(B00m),
            B10_plus=float(B10p), B10_minus=float(B10m),
            b0_plus=float(r72 * B00p), b0_minus=float(r72 * B00m),
            b1_plus=float(r648 * B10p), b1_minus=float(r648 * B10m),
            rho1=float(-B00p / B00m), rho3=float(-B10p / B10m),
        )
    return Constants(**vals)


def symbol_values(side: str, consts: Constants | None = None) -> dict:
    """Float values of the expansion symbols for one side."""
    if consts is None:
        consts = constants()
    return {"1": 1.0, "sqrt2*pi": math.sqrt(2.0) * math.pi,
            "b0": consts.b0(side), "b1": consts.b1(side)}


def basis_vector_numeric(h: float, side: str,
                         rel_tol: float = DEFAULT_REL_TOL):
    """(I01, I11, I21) at level h, by quadrature."""
    return tuple(abelian_numeric(i, 1, h, side, rel_tol) for i in range(3))
