"""
Integer polynomials in one variable and cyclotomic factorization.

A polynomial is a dense tuple of integer coefficients starting with the
constant term, so 1 - 2t + t^3 is IntPoly((1, -2, 0, 1)).  Everything here
is exact; rational intermediate values use fractions.Fraction.

All functions are pure and the caches are idempotent, so the module is safe
to use from several threads.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from fractions import Fraction

from .errors import ZeroPolynomial


@dataclasses.dataclass(frozen=True, init=False)
class IntPoly:
    """
    Dense integer polynomial, lowest coefficient first.

    >>> IntPoly((1, 0, 1)) * IntPoly((1, 1))
    IntPoly('t^3 + t^2 + t + 1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    # -- basic queries -------------------------------------------------

    def deg(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(a + b for a, b in
                       itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(a - b for a, b in
                       itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """
        Quotient and remainder over the integers.  Each elimination step must
        divide exactly (always true for divisors with leading coefficient
        +-1, e.g. cyclotomic polynomials); otherwise ValueError is raised.
        """
        if d.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dl = d.lead()
        dd = d.deg()
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            top = rem[i + dd]
            if top == 0:
                continue
            q, r = divmod(top, dl)
            if r:
                raise ValueError(f"{top} not divisible by leading coefficient {dl}")
            quo[i] = q
            for j, c in enumerate(d.coeffs):
                rem[i + j] -= q * c
        return IntPoly(quo), IntPoly(rem)

    def divides(self, other: "IntPoly") -> bool:
        try:
            _, rem = other.divmod_exact(self)
        except ValueError:
            return False
        return rem.is_zero()

    # -- structure -----------------------------------------------------

    def content(self) -> int:
        import math
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the content; the leading coefficient becomes positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lead() < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)

    def reverse(self) -> "IntPoly":
        """Coefficients reversed with respect to the degree: t^deg * p(1/t)."""
        return IntPoly(reversed(self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        return IntPoly((0,) * k + self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) \
                else "" if c > 0 else "-"
            term = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            coeff = f"{abs(c)}" if (i == 0 or abs(c) != 1) else ""
            parts.append(sign + coeff + term)
        return f"IntPoly('{''.join(parts)}')"


ZERO = IntPoly()
ONE = IntPoly((1,))


def x_pow(k: int) -> IntPoly:
    return IntPoly((0,) * k + (1,))


def one_minus_t_pow(k: int) -> IntPoly:
    """The polynomial 1 - t^k."""
    return IntPoly((1,) + (0,) * (k - 1) + (-1,))


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, multiplicity), ...)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def radical(n: int) -> int:
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPoly:
    """
    The d-th cyclotomic polynomial.

    >>> cyclotomic_poly(6)
    IntPoly('t^2 - t + 1')
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    r = radical(d)
    if r != d:
        # Phi_d(t) = Phi_rad(d)(t^(d/rad(d))): spread the coefficients out.
        base = cyclotomic_poly(r)
        k = d // r
        out = [0] * (base.deg() * k + 1)
        for i, c in enumerate(base.coeffs):
            out[i * k] = c
        return IntPoly(out)
    # Squarefree case: divide t^d - 1 by the cyclotomics of proper divisors.
    poly = IntPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in divisors(d):
        if e < d:
            poly, rem = poly.divmod_exact(cyclotomic_poly(e))
            assert rem.is_zero()
    return poly


@dataclasses.dataclass(frozen=True)
class CycFactorization:
    """A factorization unit * prod Phi_d^multiplicity with unit in {+1, -1}."""

    factors: tuple[tuple[int, int], ...]
    unit: int

    def expand(self) -> IntPoly:
        out = IntPoly((self.unit,))
        for d, m in self.factors:
            out = out * cyclotomic_poly(d) ** m
        return out


def is_cyclotomic_product(p: IntPoly):
    """
    Decide whether p equals +-(a product of cyclotomic polynomials); return
    the CycFactorization if so, None otherwise.

    Candidate indices d are scanned up to 2*deg^2 + 2, which covers every d
    with phi(d) <= deg.  An exact integer evaluation at t = 2 filters out
    almost all non-divisors before the full trial division.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if abs(p.lead()) != 1 or abs(p[0]) != 1:
        return None
    residue = p
    val2 = residue(2)
    factors: list[tuple[int, int]] = []
    d = 0
    while residue.deg() > 0:
        d += 1
        if d > 2 * residue.deg() ** 2 + 2:
            return None
        if totient(d) > residue.deg():
            continue
        phi_d = cyclotomic_poly(d)
        mult = 0
        while phi_d.deg() <= residue.deg():
            pval = phi_d(2)
            if pval != 0 and val2 % pval != 0:
                break
            quo, rem = residue.divmod_exact(phi_d)
            if not rem.is_zero():
                break
            residue, val2 = quo, quo(2)
            mult += 1
        if mult:
            factors.append((d, mult))
    unit = residue[0]
    if unit not in (1, -1):
        return None
    return CycFactorization(tuple(factors), unit)


# ---------------------------------------------------------------------------
# rational-coefficient helpers (used for gcds; inputs/outputs stay integral)
# ---------------------------------------------------------------------------

def _ftrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fdivmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        q = num[i + len(den) - 1] * inv_lead
        if q:
            quo[i] = q
            for j, c in enumerate(den):
                num[i + j] -= q * c
    return quo, _ftrim(num[: len(den) - 1])


def poly_gcd_q(p: IntPoly, q: IntPoly) -> IntPoly:
    """
    Greatest common divisor of p and q as polynomials over the rationals,
    returned as a primitive integer polynomial with positive leading
    coefficient (1 when the polynomials are coprime).
    """
    a = _ftrim([Fraction(c) for c in p.coeffs])
    b = _ftrim([Fraction(c) for c in q.coeffs])
    while b:
        _, r = _fdivmod(a, b)
        # Keep the remainder monic so coefficient sizes stay tame.
        if r:
            inv = 1 / r[-1]
            r = [c * inv for c in r]
        a, b = b, r
    if not a:
        return ZERO
    import math
    lcm_den = 1
    for c in a:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in a]
    return IntPoly(ints).primitive()
