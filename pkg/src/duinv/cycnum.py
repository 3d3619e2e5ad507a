"""
Exact arithmetic in cyclotomic fields Q(zeta_n).

A CycNum carries its own conductor n and a coefficient vector of length
phi(n) over the rationals, expressing the value in the power basis
1, zeta_n, ..., zeta_n^(phi(n)-1) reduced modulo the n-th cyclotomic
polynomial.  Binary operations promote both sides to the least common
multiple of the two conductors; promotion is the field embedding
zeta_n -> zeta_m^(m/n), so values compare equal independently of how they
were built.

No floating point enters any result.  A complex embedding is available as
a *hint* for discrete logarithms of roots of unity; every hint is verified
exactly and a brute-force exact search is the fallback.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import DivisionByZero, PromotionOverflow, ZeroConductor
from .intpoly import _fdivmod, cyclotomic_poly, divisors, factorize, totient

CONDUCTOR_CAP = 10 ** 6

_RatLike = (int, Fraction)


def _reduce(coeffs, n: int) -> tuple[Fraction, ...]:
    """Reduce a rational polynomial in zeta_n modulo the n-th cyclotomic.

    The arithmetic runs on the values as given (plain ints stay ints, which
    is much faster than Fraction); the result is converted to Fractions.
    """
    phi = totient(n)
    work = list(coeffs)
    while work and work[-1] == 0:
        work.pop()
    if len(work) > phi:
        if all(type(c) is not Fraction or c.denominator == 1 for c in work):
            work = [int(c) for c in work]
        mod = cyclotomic_poly(n).coeffs
        for i in range(len(work) - 1, phi - 1, -1):
            top = work[i]
            if top:
                for j, c in enumerate(mod[:-1]):
                    work[i - phi + j] -= top * c
            work.pop()
    work += [0] * (phi - len(work))
    return tuple(c if type(c) is Fraction else Fraction(c) for c in work)


class CycNum:
    """An element of Q(zeta_n) with exact rational coordinates."""

    __slots__ = ("conductor", "coeffs", "_hash", "_promos")

    def __init__(self, conductor: int, coeffs, _reduced: bool = False):
        if conductor < 1:
            raise ZeroConductor(f"conductor must be >= 1, got {conductor}")
        if conductor > CONDUCTOR_CAP:
            raise PromotionOverflow(f"conductor {conductor} exceeds cap {CONDUCTOR_CAP}")
        if _reduced:
            vec = tuple(c if type(c) is Fraction else Fraction(c)
                        for c in coeffs)
        else:
            vec = _reduce(coeffs, conductor)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", vec)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_promos", {})

    def __setattr__(self, *_):
        raise AttributeError("CycNum is immutable")

    # -- construction --------------------------------------------------

    @staticmethod
    def from_rat(value) -> "CycNum":
        return CycNum(1, (Fraction(value),), _reduced=True)

    @staticmethod
    def zero() -> "CycNum":
        return CycNum.from_rat(0)

    @staticmethod
    def one() -> "CycNum":
        return CycNum.from_rat(1)

    # -- promotion -----------------------------------------------------

    def promoted(self, m: int) -> "CycNum":
        """Re-express the value in Q(zeta_m); m must be a multiple of the conductor."""
        n = self.conductor
        if m == n:
            return self
        cached = self._promos.get(m)
        if cached is not None:
            return cached
        if m % n:
            raise ValueError(f"{m} is not a multiple of conductor {n}")
        if m > CONDUCTOR_CAP:
            raise PromotionOverflow(f"conductor {m} exceeds cap {CONDUCTOR_CAP}")
        k = m // n
        spread = [Fraction(0)] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            spread[i * k] = c
        lifted = CycNum(m, spread)
        self._promos[m] = lifted
        return lifted

    def _pair(self, other: "CycNum"):
        m = self.conductor * other.conductor \
            // math.gcd(self.conductor, other.conductor)
        if m > CONDUCTOR_CAP:
            raise PromotionOverflow(f"conductor {m} exceeds cap {CONDUCTOR_CAP}")
        return self.promoted(m), other.promoted(m)

    @staticmethod
    def _coerce(value):
        if isinstance(value, CycNum):
            return value
        if isinstance(value, _RatLike):
            return CycNum.from_rat(value)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return CycNum(a.conductor,
                      tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
                      _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, tuple(-c for c in self.coeffs), _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycNum(a.conductor, out)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        n = self.conductor
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        # Extended Euclid against Phi_n, which is irreducible, so the last
        # nonzero remainder is a constant.  Invariant: r1 = s1*self mod Phi_n.
        r0 = [Fraction(c) for c in cyclotomic_poly(n).coeffs]
        r1 = a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _fdivmod(r0, r1)
            s_new = list(s0) + [Fraction(0)] * max(0, len(quo) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(quo):
                if qc:
                    for j, sc in enumerate(s1):
                        s_new[i + j] -= qc * sc
            r0, s0, r1, s1 = r1, s1, rem, s_new
        c = r1[0]
        return CycNum(n, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inv() ** (-k)
        result = CycNum.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates and views ------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_part(self) -> Fraction:
        """The value as a Fraction; only meaningful when is_rational()."""
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Weak but conductor-independent: hash the normalized field trace
        # Tr(x)/phi(n), which is preserved by promotion.  Memoized, since
        # matrices of CycNums are used as dictionary keys in hot paths.
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._normalized_trace()))
        return self._hash

    def _normalized_trace(self) -> Fraction:
        n = self.conductor
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                g = math.gcd(i, n) if i else n
                m = n // g
                total += c * Fraction(_mobius(m), totient(m))
        return total

    def approx(self) -> complex:
        """Float embedding with zeta_n -> exp(2*pi*i/n).  Hint/test use only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        return f"CycNum({self.conductor}, {[str(c) for c in self.coeffs]})"


def _mobius(n: int) -> int:
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def zeta(n: int, k: int = 1) -> CycNum:
    """The root of unity zeta_n^k, with zeta_n = exp(2*pi*i/n)."""
    if n < 1:
        raise ZeroConductor(f"conductor must be >= 1, got {n}")
    k %= n
    return CycNum(n, [Fraction(0)] * k + [Fraction(1)])


def cyc_make(conductor: int, coeffs) -> CycNum:
    """Build a CycNum from a coefficient sequence in powers of zeta_conductor."""
    return CycNum(conductor, coeffs)


def root_of_unity_order(x: CycNum):
    """
    The multiplicative order of x if it is a root of unity, else None.

    The torsion units of Q(zeta_n) form the cyclic group generated by
    -zeta_n, so every candidate order divides lcm(2, n).
    """
    bound = x.conductor if x.conductor % 2 == 0 else 2 * x.conductor
    for m in divisors(bound):
        if (x ** m) == 1:
            return m
    return None


def root_power_exponent(x: CycNum, m: int) -> int:
    """
    The discrete logarithm e with x == zeta_m^e, for x a root of unity whose
    order divides m.  A float argument supplies the first guess; the answer
    is verified exactly, with an exhaustive exact search as fallback.
    """
    guess = round(cmath.phase(x.approx()) * m / (2 * math.pi)) % m
    z = zeta(m)
    if z ** guess == x:
        return guess
    for e in range(m):
        if z ** e == x:
            return e
    raise ValueError(f"value is not an m-th root of unity for m={m}")
