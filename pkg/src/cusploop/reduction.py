"""Reduction of Abelian integrals to the basis I01, I11, I21.

Every integral I_{i,j}(h) = oint x^i y^j dx over a closed level oval of
H = y^2/2 - x^3/3 + x^4/4 satisfies, on both oval families:

* I_{i,j} = 0 for even j (the ovals are symmetric in y);
* (i+1) I_{i,j} = j (I_{i+4,j-2} - I_{i+3,j-2})  for i >= -1, j >= 1;
* I_{3,1} = I_{2,1} and, for i >= 4,
  I_{i,1} = (4i+6)/(3i+9) I_{i-1,1} + (4i-12)/(i+3) h I_{i-4,1}.

Iterating these rewrites any I_{i,j} as p1(h) I01 + p2(h) I11 + p3(h) I21
with polynomial coefficients.  The triple is side-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import HPoly, OneForm, ParamPoly


@dataclass
class ReducedIntegral:
    """p1(h) * I01(h) + p2(h) * I11(h) + p3(h) * I21(h)."""

    p1: HPoly
    p2: HPoly
    p3: HPoly

    @classmethod
    def zero(cls) -> "ReducedIntegral":
        return cls(HPoly.zero(), HPoly.zero(), HPoly.zero())

    @classmethod
    def basis(cls, which: int) -> "ReducedIntegral":
        trip = [HPoly.zero(), HPoly.zero(), HPoly.zero()]
        trip[which] = HPoly.const(1)
        return cls(*trip)

    def is_zero(self) -> bool:
        return self.p1.is_zero() and self.p2.is_zero() and self.p3.is_zero()

    def __add__(self, other: "ReducedIntegral") -> "ReducedIntegral":
        return ReducedIntegral(self.p1 + other.p1, self.p2 + other.p2,
                               self.p3 + other.p3)

    def __sub__(self, other: "ReducedIntegral") -> "ReducedIntegral":
        return ReducedIntegral(self.p1 - other.p1, self.p2 - other.p2,
                               self.p3 - other.p3)

    def scale(self, c) -> "ReducedIntegral":
        return ReducedIntegral(self.p1.scale(c), self.p2.scale(c),
                               self.p3.scale(c))

    def shift_h(self, k: int = 1) -> "ReducedIntegral":
        return ReducedIntegral(self.p1.shift(k), self.p2.shift(k),
                               self.p3.shift(k))

    def substitute(self, assignment: dict) -> "ReducedIntegral":
        return ReducedIntegral(self.p1.substitute(assignment),
                               self.p2.substitute(assignment),
                               self.p3.substitute(assignment))

    def triple(self):
        return (self.p1, self.p2, self.p3)

    def __str__(self):
        return f"({self.p1}) I01 + ({self.p2}) I11 + ({self.p3}) I21"


@lru_cache(maxsize=None)
def reduce_monomial(i: int, j: int) -> ReducedIntegral:
    """Exact reduction of I_{i,j} to the basis triple.

    Strategy: lower j to 1 first (even j short-circuits to zero), then
    bring i below 3.  This order reproduces the published triples term
    for term, so exact-match tests are meaningful.
    """
    if i < 0 or j < 0:
        raise ValueError(f"monomial exponents must be nonnegative: ({i},{j})")
    if j % 2 == 0:
        return ReducedIntegral.zero()
    if j >= 3:
        # I_{i,j} = j/(i+1) * (I_{i+4,j-2} - I_{i+3,j-2})
        f = Fraction(j, i + 1)
        return (reduce_monomial(i + 4, j - 2)
                - reduce_monomial(i + 3, j - 2)).scale(f)
    # j == 1
    if i <= 2:
        return ReducedIntegral.basis(i)
    if i == 3:
        return ReducedIntegral.basis(2)
    lower = reduce_monomial(i - 1, 1).scale(Fraction(4 * i + 6, 3 * i + 9))
    wrapped = reduce_monomial(i - 4, 1).shift_h().scale(Fraction(4 * i - 12, i + 3))
    return lower + wrapped


def reduce_form(omega: OneForm) -> ReducedIntegral:
    """Reduce oint Q dx - P dy over an oval to the basis triple.

    The dy-part is first converted to dx-monomials via
    oint Q dx - P dy = oint (Q + int P_x dy) dx, then each monomial is
    reduced and summed with its ParamPoly coefficient carried through.
    """
    integrand = omega.q_part + omega.p_part.dx().int_y()
    total = ReducedIntegral.zero()
    for (a, b), coeff in integrand.terms.items():
        r = reduce_monomial(a, b)
        if not r.is_zero():
            total = total + r.scale(coeff)
    return total
