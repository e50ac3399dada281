"""Picard-Fuchs system and asymptotic expansions of the basis integrals.

The vector X(h) = (I01, I11, I21)^T satisfies P(h) X' = (A1 h + A0) X with
P(h) = 12h(12h+1).  Near h = 0 the solutions expand as

    X = sum_j a_j h^j + sum_j (b_j |h|^(5/6) + c_j |h|^(7/6)) |h|^j

and the vector coefficients obey a three-term matrix recursion; the
initial data fixes the expansions of Lemma-5 type with boundary constants
b0, b1 kept as opaque per-side symbols.

Sign convention for minus-side expansions: integer-exponent terms are
stored as coefficients of the *signed* power h^j, fractional-exponent
terms as coefficients of |h|^(j+5/6) and |h|^(j+7/6).  With this
convention the integer coefficients coincide on the two sides and the
mirror map is a pure sign flip on the fractional classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (SYM_B0, SYM_B1, SYM_ONE, SYM_SQRT2PI, HPoly, ParamPoly,
                      SymScalar, linear_solve)
from .reduction import ReducedIntegral

PLUS = "plus"
MINUS = "minus"
SIDES = (PLUS, MINUS)

#: Basis integral labels.
I01, I11, I21 = "I01", "I11", "I21"
BASIS = (I01, I11, I21)


@dataclass(frozen=True)
class PFSystem:
    """Constant data of the Picard-Fuchs equation P(h) X' = (A1 h + A0) X."""

    A0: tuple
    A1: tuple
    P_of_h: HPoly


def pf_system() -> PFSystem:
    A0 = ((Fraction(10), Fraction(2), Fraction(-15)),
          (Fraction(0), Fraction(14), Fraction(-15)),
          (Fraction(0), Fraction(0), Fraction(0)))
    A1 = ((Fraction(108), Fraction(0), Fraction(0)),
          (Fraction(-12), Fraction(144), Fraction(0)),
          (Fraction(-12), Fraction(-24), Fraction(180)))
    return PFSystem(A0, A1, HPoly([0, 12, 144]))


@dataclass(frozen=True)
class CoeffTriple:
    """Expansion coefficient vectors at one order j.

    a entries are multiples of sqrt(2)*pi, b entries of b0, c entries of
    b1 (per side).
    """

    a: tuple  # 3 SymScalars
    b: tuple
    c: tuple


def initial_coeffs(side: str) -> CoeffTriple:
    """Order-0 vectors; identical on both sides.

    a0 = (4 sqrt2 pi / 27) (1, 5/6, 7/9), b0-vector = b0 (-2, 0, 0),
    c0-vector = b1 (1, 2, 0).
    """
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    a10 = Fraction(4, 27)
    a = tuple(SymScalar.of(SYM_SQRT2PI, a10 * f)
              for f in (Fraction(1), Fraction(5, 6), Fraction(7, 9)))
    b = tuple(SymScalar.of(SYM_B0, f) for f in (Fraction(-2), 0, 0))
    c = tuple(SymScalar.of(SYM_B1, f) for f in (Fraction(1), Fraction(2), 0))
    return CoeffTriple(a, b, c)


def _mat_shift(mat, lam: Fraction):
    return [[mat[r][c] - (lam if r == c else 0) for c in range(3)]
            for r in range(3)]


def _mat_vec(mat, vec):
    return [vec[0].scale(mat[r][0]) + vec[1].scale(mat[r][1])
            + vec[2].scale(mat[r][2]) for r in range(3)]


def recurse_coeffs(order: int, side: str):
    """CoeffTriples for j = 0..order via the matrix recursion.

    a_j = -(A0 - 12j E)^-1 (A1 - 144(j-1) E) a_{j-1};
    the b and c recursions carry the sign -/+ for side plus/minus and the
    shifted eigenvalue offsets 10 and 14.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    sys_ = pf_system()
    sign = Fraction(-1) if side == PLUS else Fraction(1)
    out = [initial_coeffs(side)]
    for j in range(1, order + 1):
        prev = out[-1]
        a_rhs = _mat_vec(_mat_shift(sys_.A1, Fraction(144 * (j - 1))), prev.a)
        a = linear_solve(_mat_shift(sys_.A0, Fraction(12 * j)),
                         [v.scale(-1) for v in a_rhs])
        b_rhs = _mat_vec(_mat_shift(sys_.A1, Fraction(144 * j - 24)), prev.b)
        b = linear_solve(_mat_shift(sys_.A0, Fraction(12 * j + 10)),
                         [v.scale(sign) for v in b_rhs])
        c_rhs = _mat_vec(_mat_shift(sys_.A1, Fraction(144 * j + 24)), prev.c)
        c = linear_solve(_mat_shift(sys_.A0, Fraction(12 * j + 14)),
                         [v.scale(sign) for v in c_rhs])
        out.append(CoeffTriple(tuple(a), tuple(b), tuple(c)))
    return out


# ---------------------------------------------------------------------------
# Expansions
# ---------------------------------------------------------------------------

FRAC_B0 = Fraction(5, 6)   # exponent class carrying b0
FRAC_B1 = Fraction(1, 6)   # 7/6 mod 1; carries b1

_ALLOWED = {Fraction(0): {SYM_ONE, SYM_SQRT2PI},
            FRAC_B0: {SYM_B0},
            FRAC_B1: {SYM_B1}}


def _check_class(exponent: Fraction, coeff: dict):
    cls = exponent % 1
    allowed = _ALLOWED.get(cls)
    if allowed is None:
        raise ValueError(f"exponent {exponent} outside the three classes")
    for sym, poly in coeff.items():
        if poly.is_zero():
            continue
        if sym not in allowed:
            raise ValueError(
                f"symbol {sym} not allowed at exponent {exponent}")


@dataclass
class Expansion:
    """Asymptotic series in |h| on one side of the cuspidal loop.

    ``terms`` is an ordered list of (exponent, coeff) with strictly
    increasing rational exponents; coeff maps a symbol to a ParamPoly.
    Integer exponents are powers of the signed h, fractional ones powers
    of |h| (see module docstring).
    """

    side: str
    terms: list = field(default_factory=list)

    def __post_init__(self):
        last = None
        for e, coeff in self.terms:
            if last is not None and e <= last:
                raise ValueError("exponents must be strictly increasing")
            last = e
            _check_class(e, coeff)

    def coeff_at(self, exponent: Fraction) -> dict:
        exponent = Fraction(exponent)
        for e, coeff in self.terms:
            if e == exponent:
                return coeff
        return {}

    def is_zero(self) -> bool:
        return all(p.is_zero() for _, c in self.terms for p in c.values())

    def evaluate(self, h: float, point: dict, symbol_values: dict) -> float:
        """Numeric value at h; symbol_values maps each symbol to a float."""
        total = 0.0
        for e, coeff in self.terms:
            base = h if e % 1 == 0 else abs(h)
            pw = base ** float(e) if e else 1.0
            cval = 0.0
            for sym, poly in coeff.items():
                cval += symbol_values[sym] * poly.evaluate_float(point)
            total += cval * pw
        return total

    def substitute(self, assignment: dict) -> "Expansion":
        terms = []
        for e, coeff in self.terms:
            sub = {s: p.substitute(assignment) for s, p in coeff.items()}
            sub = {s: p for s, p in sub.items() if not p.is_zero()}
            if sub:
                terms.append((e, sub))
        return Expansion(self.side, terms)


def _accumulate(acc: dict, exponent: Fraction, sym: str, poly: ParamPoly):
    if poly.is_zero():
        return
    slot = acc.setdefault(exponent, {})
    slot[sym] = slot.get(sym, ParamPoly.zero()) + poly


def _finish(acc: dict, side: str) -> Expansion:
    terms = []
    for e in sorted(acc):
        coeff = {s: p for s, p in acc[e].items() if not p.is_zero()}
        if coeff:
            terms.append((e, coeff))
    return Expansion(side, terms)


def basis_expansion(which: str, side: str, order: int) -> Expansion:
    """Expansion of one basis integral, keeping exponents <= order + 7/6."""
    comp = BASIS.index(which)
    limit = Fraction(order) + Fraction(7, 6)
    triples = recurse_coeffs(order + 1, side)
    acc = {}
    for j, trip in enumerate(triples):
        if Fraction(j) <= limit:
            for sym, val in trip.a[comp].items():
                if val:
                    _accumulate(acc, Fraction(j), sym, ParamPoly.const(val))
        if Fraction(j) + FRAC_B0 <= limit:
            for sym, val in trip.b[comp].items():
                if val:
                    _accumulate(acc, Fraction(j) + FRAC_B0, sym,
                                ParamPoly.const(val))
        if Fraction(j) + Fraction(7, 6) <= limit:
            for sym, val in trip.c[comp].items():
                if val:
                    _accumulate(acc, Fraction(j) + Fraction(7, 6), sym,
                                ParamPoly.const(val))
    return _finish(acc, side)


def expand_reduced(r: ReducedIntegral, side: str, order: int) -> Expansion:
    """Expansion of p1(h) I01 + p2(h) I11 + p3(h) I21 on one side.

    Multiplying a fractional-class term |h|^e by h flips its sign on the
    minus side (h = -|h|); integer-class terms multiply as signed powers.
    """
    limit = Fraction(order) + Fraction(7, 6)
    acc = {}
    for which, hp in zip(BASIS, r.triple()):
        if hp.is_zero():
            continue
        base = basis_expansion(which, side, order)
        for k, weight in enumerate(hp.coeffs):
            if weight.is_zero():
                continue
            for e, coeff in base.terms:
                e2 = e + k
                if e2 > limit:
                    continue
                flip = (side == MINUS and e % 1 != 0 and k % 2 == 1)
                for sym, poly in coeff.items():
                    contrib = poly * weight
                    if flip:
                        contrib = -contrib
                    _accumulate(acc, e2, sym, contrib)
    return _finish(acc, side)


def mirror(e: Expansion) -> Expansion:
    """Minus-side expansion from a plus-side one.

    Integer-class coefficients are unchanged; the b0/b1 coefficient at
    exponent j + 5/6 or j + 7/6 picks up (-1)^j, with the b0/b1 symbols
    reinterpreted as the minus-side boundary constants.
    """
    if e.side != PLUS:
        raise ValueError("mirror expects a plus-side expansion")
    terms = []
    for exp, coeff in e.terms:
        cls = exp % 1
        if cls == 0:
            terms.append((exp, dict(coeff)))
        else:
            # series index j of the term b_j |h|^(j+5/6) or c_j |h|^(j+7/6)
            j = exp - (FRAC_B0 if cls == FRAC_B0 else Fraction(7, 6))
            sgn = -1 if j % 2 else 1
            terms.append((exp, {s: p * sgn for s, p in coeff.items()}))
    return Expansion(MINUS, terms)
