"""Exact scalar, polynomial and one-form arithmetic.

Everything in this module is exact: scalars are arbitrary-precision
rationals (``fractions.Fraction``), polynomials are sparse dictionaries of
monomials with rational coefficients, and no floating point ever enters.

Three polynomial flavours are used throughout the library:

* ``ParamPoly`` -- multivariate polynomials in the 54 perturbation
  parameters ``p_ijk`` / ``q_ijk`` (1 <= i+j <= 3, k in {1,2,3}).  These
  carry all symbolic Melnikov coefficients.
* ``PlanePoly`` -- polynomials in the plane variables (x, y) whose
  coefficients are ``ParamPoly``.
* ``HPoly`` -- polynomials in the energy level h whose coefficients are
  ``ParamPoly``.

``OneForm`` stores a polynomial one-form with the sign convention
``omega = Q dx - P dy`` used for Melnikov integrands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SingularMatrix(Exception):
    """Raised when a linear system has a singular coefficient matrix."""


class SymbolProductError(Exception):
    """Raised when an operation would need a product of distinct symbols."""


# ---------------------------------------------------------------------------
# Parameter alphabet
# ---------------------------------------------------------------------------

def _build_alphabet():
    names = []
    for letter in ("p", "q"):
        for k in (1, 2, 3):
            for s in (1, 2, 3):
                for i in range(s + 1):
                    j = s - i
                    names.append(f"{letter}_{i}{j}{k}")
    return tuple(names)


#: Fixed, ordered parameter alphabet (54 names: p_ijk, q_ijk).
PARAM_NAMES = _build_alphabet()
PARAM_INDEX = {name: idx for idx, name in enumerate(PARAM_NAMES)}


def _as_frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------

def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for idx, e in m2:
        acc[idx] = acc.get(idx, 0) + e
    return tuple(sorted(acc.items()))


def _mono_key(mono):
    """Graded-lex sort key (ascending); reverse for leading-term order."""
    deg = sum(e for _, e in mono)
    vec = [0] * len(PARAM_NAMES)
    for idx, e in mono:
        vec[idx] = e
    # graded, then lex on the exponent vector: larger exponent on an
    # earlier variable means a *later* monomial in ascending order
    return (deg, tuple(vec))


def _mono_divides(m1, m2):
    d2 = dict(m2)
    return all(d2.get(idx, 0) >= e for idx, e in m1)


def _mono_div(m1, m2):
    """m1 / m2, assuming m2 divides m1."""
    acc = dict(m1)
    for idx, e in m2:
        acc[idx] -= e
    return tuple(sorted((i, e) for i, e in acc.items() if e))


class ParamPoly:
    """Sparse multivariate polynomial over Fraction in the fixed alphabet.

    Monomials are tuples of (parameter index, exponent) pairs sorted by
    index; the empty tuple is the constant monomial.  Zero coefficients are
    never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = _as_frac(c)
                if c != 0:
                    self.terms[m] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value) -> "ParamPoly":
        value = _as_frac(value)
        return cls({(): value}) if value else cls()

    @classmethod
    def var(cls, name: str) -> "ParamPoly":
        if name not in PARAM_INDEX:
            raise KeyError(f"unknown parameter {name!r}")
        return cls({((PARAM_INDEX[name], 1),): Fraction(1)})

    @classmethod
    def zero(cls) -> "ParamPoly":
        return cls()

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        out = ParamPoly()
        out.terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ParamPoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        out = ParamPoly()
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def degree_in(self, names) -> int:
        idxs = {PARAM_INDEX[n] for n in names}
        if not self.terms:
            return -1
        return max(sum(e for i, e in m if i in idxs) for m in self.terms)

    def derivative(self, name: str) -> "ParamPoly":
        idx = PARAM_INDEX[name]
        acc = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(idx, 0)
            if not e:
                continue
            d[idx] = e - 1
            mono = tuple(sorted((i, k) for i, k in d.items() if k))
            acc[mono] = acc.get(mono, Fraction(0)) + c * e
        out = ParamPoly()
        out.terms = {m: c for m, c in acc.items() if c}
        return out

    def substitute(self, assignment: dict) -> "ParamPoly":
        """Substitute parameters by Fractions or ParamPolys."""
        idx_map = {PARAM_INDEX[n]: v for n, v in assignment.items()}
        out = ParamPoly()
        for m, c in self.terms.items():
            term = ParamPoly.const(c)
            for i, e in m:
                if i in idx_map:
                    v = idx_map[i]
                    if not isinstance(v, ParamPoly):
                        v = ParamPoly.const(v)
                    term = term * v ** e
                else:
                    term = term * ParamPoly({((i, e),): Fraction(1)})
            out = out + term
        return out

    def substitute_rat(self, assignment: dict) -> "ParamRat":
        """Substitute parameters by ParamRat / ParamPoly / Fraction values."""
        out = ParamRat.zero()
        for m, c in self.terms.items():
            term = ParamRat.from_poly(ParamPoly.const(c))
            for i, e in m:
                name = PARAM_NAMES[i]
                if name in assignment:
                    v = assignment[name]
                    if not isinstance(v, ParamRat):
                        v = ParamRat.from_poly(
                            v if isinstance(v, ParamPoly) else ParamPoly.const(v))
                    term = term * v ** e
                else:
                    term = term * ParamRat.from_poly(
                        ParamPoly({((i, e),): Fraction(1)}))
            out = out + term
        return out

    def evaluate(self, point: dict) -> Fraction:
        """Exact evaluation at a full rational parameter point.

        Parameters missing from ``point`` are taken to be 0.
        """
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for i, e in m:
                v *= _as_frac(point.get(PARAM_NAMES[i], 0)) ** e
            total += v
        return total

    def evaluate_float(self, point: dict) -> float:
        total = 0.0
        for m, c in self.terms.items():
            v = float(c)
            for i, e in m:
                v *= float(point.get(PARAM_NAMES[i], 0.0)) ** e
            total += v
        return total

    def leading(self):
        """Leading (monomial, coeff) in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def exact_div(self, divisor: "ParamPoly") -> "ParamPoly":
        """Exact polynomial division; raises ValueError if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            c = divisor.constant_value()
            out = ParamPoly()
            out.terms = {m: v / c for m, v in self.terms.items()}
            return out
        rem = self
        quo = ParamPoly()
        dm, dc = divisor.leading()
        while not rem.is_zero():
            rm, rc = rem.leading()
            if not _mono_divides(dm, rm):
                raise ValueError("not exactly divisible")
            qm = _mono_div(rm, dm)
            qterm = ParamPoly({qm: rc / dc})
            quo = quo + qterm
            rem = rem - qterm * divisor
        return quo

    # -- printing ----------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order (deterministic printing)."""
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                PARAM_NAMES[i] if e == 1 else f"{PARAM_NAMES[i]}^{e}"
                for i, e in m)
            if not mono:
                chunk = str(c)
            elif c == 1:
                chunk = mono
            elif c == -1:
                chunk = f"-{mono}"
            else:
                chunk = f"{c}*{mono}"
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out

    def __repr__(self):
        return f"ParamPoly({self})"


class ParamRat:
    """Quotient of two ParamPolys; used by vanishing-condition solving.

    No multivariate gcd is attempted; ``simplify`` only tries exact
    division, which covers every quotient the computations here produce.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: ParamPoly) -> "ParamRat":
        return cls(p, ParamPoly.const(1))

    @classmethod
    def zero(cls) -> "ParamRat":
        return cls(ParamPoly.zero(), ParamPoly.const(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def simplify(self) -> "ParamRat":
        if self.num.is_zero():
            return ParamRat.zero()
        if self.den.is_constant():
            return ParamRat(self.num.exact_div(self.den), ParamPoly.const(1))
        try:
            return ParamRat(self.num.exact_div(self.den), ParamPoly.const(1))
        except ValueError:
            return self

    def as_poly(self) -> ParamPoly:
        s = self.simplify()
        if not s.den.is_constant():
            raise ValueError(f"not a polynomial: ({s.num}) / ({s.den})")
        return s.num.exact_div(s.den)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = ParamRat.from_poly(
                other if isinstance(other, ParamPoly) else ParamPoly.const(other))
        return ParamRat(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    def __neg__(self):
        return ParamRat(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = ParamRat.from_poly(
                other if isinstance(other, ParamPoly) else ParamPoly.const(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = ParamRat.from_poly(
                other if isinstance(other, ParamPoly) else ParamPoly.const(other))
        return ParamRat(self.num * other.num, self.den * other.den)

    def __pow__(self, n: int):
        return ParamRat(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = ParamRat.from_poly(
                other if isinstance(other, ParamPoly) else ParamPoly.const(other))
        if not isinstance(other, ParamRat):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __str__(self):
        s = self.simplify()
        if s.den.is_constant() and s.den.constant_value() == 1:
            return str(s.num)
        return f"({s.num})/({s.den})"

    def __repr__(self):
        return f"ParamRat({self})"


# ---------------------------------------------------------------------------
# SymScalar
# ---------------------------------------------------------------------------

#: Symbol basis for transcendental factors in the expansions.
SYM_ONE = "1"
SYM_SQRT2PI = "sqrt2*pi"
SYM_B0 = "b0"
SYM_B1 = "b1"
SYMBOLS = (SYM_ONE, SYM_SQRT2PI, SYM_B0, SYM_B1)


@dataclass(frozen=True)
class SymScalar:
    """Frac-linear combination over the basis {1, sqrt(2)*pi, b0, b1}.

    The b0/b1 symbols are opaque side-dependent boundary constants; they
    resolve to floats only through the numerical oracle.  Products of
    distinct symbols are deliberately unsupported: no expansion formula
    needs them, and requesting one flags a bug.
    """

    coeff_one: Fraction = Fraction(0)
    coeff_sqrt2pi: Fraction = Fraction(0)
    coeff_b0: Fraction = Fraction(0)
    coeff_b1: Fraction = Fraction(0)

    @classmethod
    def of(cls, symbol: str, value) -> "SymScalar":
        value = _as_frac(value)
        kw = {SYM_ONE: "coeff_one", SYM_SQRT2PI: "coeff_sqrt2pi",
              SYM_B0: "coeff_b0", SYM_B1: "coeff_b1"}[symbol]
        return cls(**{kw: value})

    def is_zero(self) -> bool:
        return not (self.coeff_one or self.coeff_sqrt2pi
                    or self.coeff_b0 or self.coeff_b1)

    def __add__(self, other: "SymScalar") -> "SymScalar":
        return SymScalar(self.coeff_one + other.coeff_one,
                         self.coeff_sqrt2pi + other.coeff_sqrt2pi,
                         self.coeff_b0 + other.coeff_b0,
                         self.coeff_b1 + other.coeff_b1)

    def __sub__(self, other: "SymScalar") -> "SymScalar":
        return self + (-other)

    def __neg__(self) -> "SymScalar":
        return self.scale(-1)

    def scale(self, c) -> "SymScalar":
        c = _as_frac(c)
        return SymScalar(self.coeff_one * c, self.coeff_sqrt2pi * c,
                         self.coeff_b0 * c, self.coeff_b1 * c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SymScalar):
            if self.pure_rational() is not None:
                return other.scale(self.coeff_one)
            if other.pure_rational() is not None:
                return self.scale(other.coeff_one)
            raise SymbolProductError(
                f"product of symbols required: ({self}) * ({other})")
        return NotImplemented

    __rmul__ = __mul__

    def pure_rational(self):
        """The Fraction value if this is a multiple of 1, else None."""
        if self.coeff_sqrt2pi or self.coeff_b0 or self.coeff_b1:
            return None
        return self.coeff_one

    def items(self):
        return ((SYM_ONE, self.coeff_one), (SYM_SQRT2PI, self.coeff_sqrt2pi),
                (SYM_B0, self.coeff_b0), (SYM_B1, self.coeff_b1))

    def __str__(self):
        parts = [f"{c}*{s}" if s != SYM_ONE else f"{c}"
                 for s, c in self.items() if c]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# PlanePoly / OneForm
# ---------------------------------------------------------------------------

class PlanePoly:
    """Polynomial in (x, y) with ParamPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (i, j), c in terms.items():
                if not isinstance(c, ParamPoly):
                    c = ParamPoly.const(c)
                if not c.is_zero():
                    self.terms[(i, j)] = c

    @classmethod
    def zero(cls) -> "PlanePoly":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "PlanePoly":
        c = coeff if isinstance(coeff, ParamPoly) else ParamPoly.const(coeff)
        return cls({(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, PlanePoly) and self.terms == other.terms

    def __add__(self, other: "PlanePoly") -> "PlanePoly":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, ParamPoly.zero()) + c
            if s.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = s
        out = PlanePoly()
        out.terms = acc
        return out

    def __neg__(self) -> "PlanePoly":
        out = PlanePoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "PlanePoly") -> "PlanePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            c = other if isinstance(other, ParamPoly) else ParamPoly.const(other)
            out = PlanePoly()
            out.terms = {m: v * c for m, v in self.terms.items()
                         if not (v * c).is_zero()}
            return out
        if not isinstance(other, PlanePoly):
            return NotImplemented
        acc = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                s = acc.get(m, ParamPoly.zero()) + c1 * c2
                if s.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = s
        out = PlanePoly()
        out.terms = acc
        return out

    __rmul__ = __mul__

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def dx(self) -> "PlanePoly":
        out = PlanePoly()
        for (i, j), c in self.terms.items():
            if i:
                out.terms[(i - 1, j)] = c * i
        return out

    def dy(self) -> "PlanePoly":
        out = PlanePoly()
        for (i, j), c in self.terms.items():
            if j:
                out.terms[(i, j - 1)] = c * j
        return out

    def int_y(self) -> "PlanePoly":
        """Antiderivative in y with zero integration constant."""
        out = PlanePoly()
        for (i, j), c in self.terms.items():
            out.terms[(i, j + 1)] = c * Fraction(1, j + 1)
        return out

    def int_x(self) -> "PlanePoly":
        out = PlanePoly()
        for (i, j), c in self.terms.items():
            out.terms[(i + 1, j)] = c * Fraction(1, i + 1)
        return out

    def coeff(self, i: int, j: int) -> ParamPoly:
        return self.terms.get((i, j), ParamPoly.zero())

    def substitute(self, assignment: dict) -> "PlanePoly":
        out = PlanePoly()
        for m, c in self.terms.items():
            s = c.substitute(assignment)
            if not s.is_zero():
                out.terms[m] = s
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        def mono(i, j):
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            return "*".join(t for t in (xs, ys) if t) or "1"
        chunks = [f"({c})*{mono(i, j)}"
                  for (i, j), c in sorted(self.terms.items())]
        return " + ".join(chunks)

    def __repr__(self):
        return f"PlanePoly({self})"


#: The fixed Hamiltonian H(x, y) = y^2/2 - x^3/3 + x^4/4.
def hamiltonian() -> PlanePoly:
    return PlanePoly({(0, 2): Fraction(1, 2), (3, 0): Fraction(-1, 3),
                      (4, 0): Fraction(1, 4)})


@dataclass
class OneForm:
    """Polynomial one-form omega = Q dx - P dy (q_part = Q, p_part = P)."""

    q_part: PlanePoly
    p_part: PlanePoly

    @classmethod
    def zero(cls) -> "OneForm":
        return cls(PlanePoly.zero(), PlanePoly.zero())

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.q_part + other.q_part, self.p_part + other.p_part)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.q_part - other.q_part, self.p_part - other.p_part)

    def is_zero(self) -> bool:
        return self.q_part.is_zero() and self.p_part.is_zero()

    def dx_coeff(self) -> PlanePoly:
        return self.q_part

    def dy_coeff(self) -> PlanePoly:
        return -self.p_part

    def degree(self) -> int:
        return max(self.q_part.degree(), self.p_part.degree())


def plane_poly_d(f: PlanePoly) -> OneForm:
    """Total differential df = f_x dx + f_y dy as a OneForm."""
    return OneForm(q_part=f.dx(), p_part=-f.dy())


# ---------------------------------------------------------------------------
# HPoly
# ---------------------------------------------------------------------------

class HPoly:
    """Polynomial in h with ParamPoly coefficients (index = power of h)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = []
        norm = []
        for c in coeffs:
            if not isinstance(c, ParamPoly):
                c = ParamPoly.const(c)
            norm.append(c)
        while norm and norm[-1].is_zero():
            norm.pop()
        self.coeffs = norm

    @classmethod
    def zero(cls) -> "HPoly":
        return cls()

    @classmethod
    def const(cls, value) -> "HPoly":
        return cls([value])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(other)
        return isinstance(other, HPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "HPoly") -> "HPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(n):
            a = self.coeffs[k] if k < len(self.coeffs) else ParamPoly.zero()
            b = other.coeffs[k] if k < len(other.coeffs) else ParamPoly.zero()
            out.append(a + b)
        return HPoly(out)

    def __neg__(self) -> "HPoly":
        return HPoly([-c for c in self.coeffs])

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def scale(self, c) -> "HPoly":
        if not isinstance(c, ParamPoly):
            c = ParamPoly.const(c)
        return HPoly([v * c for v in self.coeffs])

    def shift(self, k: int = 1) -> "HPoly":
        """Multiplication by h^k."""
        if self.is_zero():
            return HPoly.zero()
        return HPoly([ParamPoly.zero()] * k + self.coeffs)

    def evaluate(self, h: Fraction) -> ParamPoly:
        total = ParamPoly.zero()
        hp = Fraction(1)
        for c in self.coeffs:
            total = total + c * hp
            hp *= h
        return total

    def evaluate_float(self, h: float, point: dict) -> float:
        total = 0.0
        hp = 1.0
        for c in self.coeffs:
            total += c.evaluate_float(point) * hp
            hp *= h
        return total

    def substitute(self, assignment: dict) -> "HPoly":
        return HPoly([c.substitute(assignment) for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            if k == 0:
                chunks.append(cs)
            else:
                hp = "h" if k == 1 else f"h^{k}"
                chunks.append(hp if cs == "1" else f"{cs} {hp}")
        return " + ".join(chunks) if chunks else "0"

    def __repr__(self):
        return f"HPoly({self})"


# ---------------------------------------------------------------------------
# Linear algebra over Frac
# ---------------------------------------------------------------------------

def linear_solve(matrix, rhs):
    """Solve M x = rhs for a square nonsingular Fraction matrix M.

    rhs entries may be Fractions, ParamPolys or SymScalars; the solution
    vector has the same type.  Raises SingularMatrix when det(M) = 0.
    """
    n = len(matrix)
    m = [[_as_frac(v) for v in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    b = list(rhs)

    def _scaled(v, c):
        if isinstance(v, ParamPoly):
            return v * c
        if isinstance(v, SymScalar):
            return v.scale(c)
        return _as_frac(v) * c

    def _sub(u, v):
        return u - v

    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"singular matrix (column {col})")
        m[col], m[pivot] = m[pivot], m[col]
        b[col], b[pivot] = b[pivot], b[col]
        pv = m[col][col]
        for r in range(n):
            if r == col or m[r][col] == 0:
                continue
            factor = m[r][col] / pv
            for c2 in range(col, n):
                m[r][c2] -= factor * m[col][c2]
            b[r] = _sub(b[r], _scaled(b[col], factor))
    return [_scaled(b[i], 1 / m[i][i]) for i in range(n)]
