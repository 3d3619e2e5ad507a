"""
Rational functions in one variable over the rationals, stored as coprime
integer polynomials with denominator constant term 1, plus polynomials with
cyclotomic coefficients for intermediate trace computations.

The canonical form (num, den coprime over Q, den(0) = 1, both integral) is
unique, so dataclass equality is true equality of rational functions.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .cycnum import CycNum
from .errors import (DenominatorVanishesAtZero, NonNormalizableDenominator,
                     NonRationalCollapse, ZeroDenominator, ZeroFunction,
                     ZeroPolynomial)
from .intpoly import (IntPoly, cyclotomic_poly, is_cyclotomic_product,
                      poly_gcd_q)

_FACTOR_DEGREE_LIMIT = 400  # beyond this, skip the cyclotomic fast path


@dataclasses.dataclass(frozen=True)
class RatFunc:
    num: IntPoly
    den: IntPoly

    # -- construction --------------------------------------------------

    @staticmethod
    def make(num: IntPoly, den: IntPoly) -> "RatFunc":
        """Reduce num/den to canonical form."""
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        if den[0] == 0:
            raise DenominatorVanishesAtZero("denominator has no constant term")
        if num.is_zero():
            return RatFunc(IntPoly(), IntPoly((1,)))
        num, den = _cancel(num, den)
        c = math.gcd(num.content(), den.content())
        num = IntPoly(x // c for x in num.coeffs)
        den = IntPoly(x // c for x in den.coeffs)
        if den[0] < 0:
            num, den = -num, -den
        if den[0] != 1:
            raise NonNormalizableDenominator(
                f"reduced denominator has constant term {den[0]}")
        return RatFunc(num, den)

    @staticmethod
    def from_frac_polys(num, den) -> "RatFunc":
        """Build from two sequences of Fractions, clearing denominators."""
        num = [Fraction(c) for c in num]
        den = [Fraction(c) for c in den]
        scale = 1
        for c in num + den:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        return RatFunc.make(IntPoly(int(c * scale) for c in num),
                            IntPoly(int(c * scale) for c in den))

    @staticmethod
    def constant(value) -> "RatFunc":
        value = Fraction(value)
        return RatFunc.from_frac_polys([value], [Fraction(1)])

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.den - other.num * self.den,
                            self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.num, self.den * other.den)

    def scale(self, factor) -> "RatFunc":
        factor = Fraction(factor)
        return RatFunc.from_frac_polys(
            [c * factor for c in self.num.coeffs], self.den.coeffs)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- analytic views ------------------------------------------------

    def series_coeffs(self, count: int) -> list[Fraction]:
        """First `count` Taylor coefficients at t = 0."""
        b = self.den.coeffs
        out: list[Fraction] = []
        for k in range(count):
            c = Fraction(self.num[k])
            for j in range(1, min(k, len(b) - 1) + 1):
                c -= b[j] * out[k - j]
            out.append(c)
        return out

    def pole_order_at_one(self) -> int:
        """Order of the pole at t = 1 (negative for a zero there)."""
        return _vanishing_order_at_one(self.den) - _vanishing_order_at_one(self.num)

    def laurent_leading_at_infinity(self) -> tuple[int, Fraction]:
        """Exponent and coefficient of the leading term as t -> infinity."""
        if self.num.is_zero():
            raise ZeroFunction("zero function has no leading term at infinity")
        return (self.num.deg() - self.den.deg(),
                Fraction(self.num.lead(), self.den.lead()))

    def __str__(self):
        return f"({self.num!r}) / ({self.den!r})"


def ratfunc_make(num: IntPoly, den: IntPoly) -> RatFunc:
    return RatFunc.make(num, den)


def _vanishing_order_at_one(p: IntPoly) -> int:
    order = 0
    while not p.is_zero() and p(1) == 0:
        # synthetic division by (1 - t)
        coeffs = list(p.coeffs)
        out = [0] * (len(coeffs) - 1)
        acc = 0
        for i in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[i]
            out[i - 1] = -acc
        p = IntPoly(out)
        order += 1
    return order


def _cancel(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide out the polynomial gcd of num and den over Q."""
    if den.deg() <= _FACTOR_DEGREE_LIMIT:
        fact = is_cyclotomic_product(den)
        if fact is not None:
            # Cancel shared cyclotomic factors without a big-gcd computation.
            remaining = []
            for d, mult in fact.factors:
                phi_d = cyclotomic_poly(d)
                while mult and phi_d.divides(num):
                    num, _ = num.divmod_exact(phi_d)
                    mult -= 1
                if mult:
                    remaining.append((d, mult))
            den = IntPoly((fact.unit,))
            for d, mult in remaining:
                den = den * cyclotomic_poly(d) ** mult
            return num, den
    g = poly_gcd_q(num, den)
    if g.deg() > 0:
        num, _ = num.divmod_exact(g)
        den, _ = den.divmod_exact(g)
    return num, den


def stanley_gorenstein_test(f: RatFunc):
    """
    Check the functional equation f(1/t) = sigma * t^l * f(t) with
    sigma in {+1, -1}; return (sigma, l) if it holds, None otherwise.
    """
    if f.is_zero():
        raise ZeroFunction("the zero series cannot satisfy the functional equation")
    l = f.den.deg() - f.num.deg()
    lhs = f.num.reverse() * f.den
    rhs = f.num * f.den.reverse()
    if lhs == rhs:
        return (1, l)
    if lhs == -rhs:
        return (-1, l)
    return None


# ---------------------------------------------------------------------------
# polynomials with cyclotomic coefficients
# ---------------------------------------------------------------------------

class CycPoly:
    """
    Dense polynomial in t whose coefficients are CycNums.  Used to expand
    products like prod (1 - lambda_i t^d_i) before checking that a result
    that ought to be rational really is.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, CycNum) else CycNum.from_rat(c)
                  for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def one() -> "CycPoly":
        return CycPoly([CycNum.one()])

    @staticmethod
    def binomial(scalar: CycNum, degree: int) -> "CycPoly":
        """The factor 1 - scalar * t^degree."""
        return CycPoly([CycNum.one()] + [CycNum.zero()] * (degree - 1) + [-scalar])

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        if not self.coeffs or not other.coeffs:
            return CycPoly([])
        out = [CycNum.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CycPoly(out)

    def __add__(self, other: "CycPoly") -> "CycPoly":
        longer, shorter = self.coeffs, other.coeffs
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        out = list(longer)
        for i, c in enumerate(shorter):
            out[i] = out[i] + c
        return CycPoly(out)

    def to_fractions(self) -> list[Fraction]:
        """Collapse to rational coefficients; error if any coefficient is not."""
        out = []
        for i, c in enumerate(self.coeffs):
            if not c.is_rational():
                raise NonRationalCollapse(
                    f"coefficient of t^{i} is irrational: {c!r}")
            out.append(c.rational_part())
        return out
