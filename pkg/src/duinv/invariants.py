"""
Trace series, Molien averages, homological determinants and bireflection
structure for finite group actions on graded down-up algebras, quantum and
Jordan planes, and (for auxiliary checks) weighted polynomial rings.

The down-up algebra A(alpha, beta) with generators in degree 1 has Hilbert
series 1/((1-t)^2 (1-t^2)); a graded automorphism given by a 2x2 matrix with
eigenvalues lambda, mu has trace series

    1 / ((1 - lambda t)(1 - mu t)(1 - lambda mu t^2))

and homological determinant det(g)^2.  Molien averages of such traces over a
finite group are computed exactly with a common-denominator expansion: every
factor (1 - lambda t^d) with lambda^M = 1 satisfies

    (1 - t^(dM)) / (1 - lambda t^d) = sum_j lambda^j t^(dj),

so each element contributes an integer combination of powers of zeta_M, which
is accumulated in the group ring Z[C_M] (a vector of integer coefficients
indexed by the exponent) and only reduced and rationality-checked at the end.
"""
from __future__ import annotations

import dataclasses
import enum
import math
from fractions import Fraction

from .cycnum import CycNum, root_of_unity_order, root_power_exponent, zeta
from .errors import (InfiniteOrderSuspected, NonMonomialMatrix,
                     NonRationalCollapse, NotAnAutomorphism,
                     UnsupportedAutomorphism, ZeroFunction)
from .intpoly import IntPoly, one_minus_t_pow
from .matgroup import (DEFAULT_CAP, Mat2, MatGroup, close_group, classify,
                       eigenvalues)
from .ratfunc import CycPoly, RatFunc, stanley_gorenstein_test


class AutShape(enum.Enum):
    """Which matrices act on a given down-up algebra as graded automorphisms."""

    FULL_GL2 = "full_gl2"
    U = "diag_or_antidiag"
    O = "diag_only"


@dataclasses.dataclass(frozen=True)
class AlgebraCtx:
    """A graded algebra a 2x2 (or monomial) matrix group can act on."""

    kind: str  # "down_up" | "skew_plane" | "jordan_plane" | "weighted_poly"
    alpha: Fraction | None = None
    beta: Fraction | None = None
    q: CycNum | None = None
    weights: tuple[int, ...] | None = None

    @staticmethod
    def down_up(alpha, beta) -> "AlgebraCtx":
        beta = Fraction(beta)
        if beta == 0:
            raise ValueError("down-up algebra requires beta != 0")
        return AlgebraCtx("down_up", alpha=Fraction(alpha), beta=beta)

    @staticmethod
    def skew_plane(q: CycNum) -> "AlgebraCtx":
        return AlgebraCtx("skew_plane", q=q)

    @staticmethod
    def jordan_plane() -> "AlgebraCtx":
        return AlgebraCtx("jordan_plane")

    @staticmethod
    def weighted_poly(weights) -> "AlgebraCtx":
        return AlgebraCtx("weighted_poly", weights=tuple(int(w) for w in weights))

    @property
    def gkdim(self) -> int:
        if self.kind == "down_up":
            return 3
        if self.kind == "weighted_poly":
            return len(self.weights)
        return 2

    @property
    def aut_shape(self) -> AutShape:
        if self.kind != "down_up":
            raise ValueError("aut_shape is defined for down-up algebras")
        if (self.alpha, self.beta) in ((Fraction(0), Fraction(1)),
                                       (Fraction(2), Fraction(-1))):
            return AutShape.FULL_GL2
        if self.beta == -1 and self.alpha != 2:
            return AutShape.U
        return AutShape.O

    def check_automorphism(self, g: Mat2) -> None:
        """Raise NotAnAutomorphism unless g acts on this algebra."""
        if self.kind == "down_up":
            shape = self.aut_shape
            if shape is AutShape.FULL_GL2:
                return
            if shape is AutShape.U and (g.is_diagonal() or g.is_antidiagonal()):
                return
            if shape is AutShape.O and g.is_diagonal():
                return
            raise NotAnAutomorphism(
                f"matrix shape not allowed for down-up({self.alpha}, {self.beta})")
        # The plane/polynomial contexts accept anything here; expansion of the
        # trace may still refuse shapes it cannot diagonalize.


# ---------------------------------------------------------------------------
# trace series in factored form
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class TraceForm:
    """
    A trace series prod(1 - lam t^d) [numerator] / prod(1 - lam t^d)
    [denominator], with cyclotomic scalars.  Factors are (degree, scalar).
    """

    den_factors: tuple[tuple[int, CycNum], ...]
    num_factors: tuple[tuple[int, CycNum], ...] = ()

    def pole_order_at_one(self) -> int:
        """Each factor 1 - lam t^d has a simple zero at t=1 iff lam == 1."""
        den = sum(1 for _, lam in self.den_factors if lam == 1)
        num = sum(1 for _, lam in self.num_factors if lam == 1)
        return den - num

    def laurent_leading_at_infinity(self) -> tuple[int, CycNum]:
        exponent = (sum(d for d, _ in self.num_factors)
                    - sum(d for d, _ in self.den_factors))
        coeff = CycNum.one()
        for _, lam in self.num_factors:
            coeff = coeff * (-lam)
        for _, lam in self.den_factors:
            coeff = coeff / (-lam)
        if coeff.is_zero():
            raise ZeroFunction("trace has a zero factor")
        return exponent, coeff

    def to_ratfunc(self) -> RatFunc:
        """
        Expand both products and collapse to an integer rational function;
        NonRationalCollapse if the coefficients are not rational.
        """
        num = CycPoly.one()
        for d, lam in self.num_factors:
            num = num * CycPoly.binomial(lam, d)
        den = CycPoly.one()
        for d, lam in self.den_factors:
            den = den * CycPoly.binomial(lam, d)
        return RatFunc.from_frac_polys(num.to_fractions(), den.to_fractions())


def downup_trace(ctx: AlgebraCtx, g: Mat2) -> TraceForm:
    """Trace series of g acting on a down-up algebra."""
    if ctx.kind != "down_up":
        raise ValueError("downup_trace requires a down-up context")
    ctx.check_automorphism(g)
    lam, mu = eigenvalues(g)
    return TraceForm(((1, lam), (1, mu), (2, lam * mu)))


def plane_trace(ctx: AlgebraCtx, g: Mat2) -> TraceForm:
    """Trace series of g on a quantum plane (diagonal g) or Jordan plane
    (scalar g)."""
    if ctx.kind == "skew_plane":
        if not g.is_diagonal():
            raise UnsupportedAutomorphism("quantum plane traces need diagonal matrices")
        return TraceForm(((1, g.a), (1, g.d)))
    if ctx.kind == "jordan_plane":
        if not (g.is_diagonal() and g.a == g.d):
            raise UnsupportedAutomorphism("Jordan plane traces need scalar matrices")
        return TraceForm(((1, g.a), (1, g.a)))
    raise ValueError("plane_trace requires a plane context")


def normal_sequence_trace(steps) -> TraceForm:
    """
    Trace of an automorphism acting by scalar lam_i on the i-th member of a
    regular normal sequence of degrees d_i: 1 / prod (1 - lam_i t^(d_i)).
    `steps` is a sequence of (degree, scalar) pairs.
    """
    return TraceForm(tuple((int(d), _cyc(lam)) for d, lam in steps))


def hypersurface_trace(steps, relation) -> TraceForm:
    """
    Trace on a graded hypersurface: generators as in normal_sequence_trace,
    with one relation of degree d scaled by lam, contributing the numerator
    factor (1 - lam t^d).  `relation` is a (degree, scalar) pair.
    """
    d, lam = relation
    return TraceForm(tuple((int(dd), _cyc(ll)) for dd, ll in steps),
                     ((int(d), _cyc(lam)),))


def _cyc(x) -> CycNum:
    return x if isinstance(x, CycNum) else CycNum.from_rat(x)


# ---------------------------------------------------------------------------
# homological determinant
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class HdetResult:
    value: CycNum
    laurent_exponent: int


def hdet_matrix(g: Mat2) -> CycNum:
    """Homological determinant of g on a down-up algebra: det(g)^2."""
    d = g.det()
    return d * d


def hdet_from_trace(tr, injective_dim: int) -> HdetResult:
    """
    Read the homological determinant off the trace series: at infinity,
    Tr(g, t) = (-1)^d * hdet(g)^-1 * t^l + lower order terms.
    Accepts a TraceForm or an integer RatFunc.
    """
    if isinstance(tr, TraceForm):
        exponent, coeff = tr.laurent_leading_at_infinity()
    else:
        exponent, lead = tr.laurent_leading_at_infinity()
        coeff = CycNum.from_rat(lead)
    sign = CycNum.from_rat((-1) ** injective_dim)
    return HdetResult(sign / coeff, exponent)


# ---------------------------------------------------------------------------
# exact Molien averages
# ---------------------------------------------------------------------------

_molien_cache: dict = {}


def _average_inverse_products(shape: tuple[int, ...], eigen_lists) -> RatFunc:
    """
    Average of 1 / prod_i (1 - lam_i t^(d_i)) over the given eigenvalue
    tuples, as an exact rational function.  All scalars must be roots of
    unity.  Results must have rational coefficients (NonRationalCollapse
    otherwise).
    """
    orders = []
    for eig in eigen_lists:
        for lam in eig:
            o = root_of_unity_order(lam)
            if o is None:
                raise InfiniteOrderSuspected("eigenvalue is not a root of unity")
            orders.append(o)
    big_m = 1
    for o in orders:
        big_m = big_m * o // math.gcd(big_m, o)
    from collections import Counter
    tuples = Counter()
    for eig in eigen_lists:
        tuples[tuple(root_power_exponent(lam, big_m) for lam in eig)] += 1
    key = (shape, big_m, tuple(sorted(tuples.items())))
    if key in _molien_cache:
        return _molien_cache[key]

    import numpy as np
    count = sum(tuples.values())
    num_deg = sum(d for d in shape) * (big_m - 1)
    # Coefficients live in Z[C_M]; entries stay far below 2^63 because each
    # element contributes at most M^(len(shape)) unit terms.
    total = np.zeros((num_deg + 1, big_m), dtype=np.int64)
    for exps, mult in tuples.items():
        cur = np.zeros((1, big_m), dtype=np.int64)
        cur[0, 0] = 1
        for d, e in zip(shape, exps):
            grown = np.zeros((cur.shape[0] + d * (big_m - 1), big_m), dtype=np.int64)
            for j in range(big_m):
                grown[d * j: d * j + cur.shape[0]] += np.roll(cur, (e * j) % big_m, axis=1)
            cur = grown
        total[: cur.shape[0]] += mult * cur
    num_coeffs = []
    for k in range(num_deg + 1):
        value = CycNum(big_m, [int(v) for v in total[k]])
        if not value.is_rational():
            raise NonRationalCollapse(f"Molien coefficient of t^{k} is irrational")
        num_coeffs.append(value.rational_part() / count)
    den = IntPoly((1,))
    for d in shape:
        den = den * one_minus_t_pow(d * big_m)
    result = RatFunc.from_frac_polys(num_coeffs, [Fraction(c) for c in den.coeffs])
    _molien_cache[key] = result
    return result


def _eigen_data(ctx: AlgebraCtx, group: MatGroup):
    """Factor degrees and per-element eigenvalue tuples for a Molien average."""
    if ctx.kind == "down_up":
        shape = (1, 1, 2)
        eigs = []
        for g in group:
            ctx.check_automorphism(g)
            lam, mu = eigenvalues(g)
            eigs.append((lam, mu, lam * mu))
        return shape, eigs
    if ctx.kind in ("skew_plane", "jordan_plane"):
        shape = (1, 1)
        eigs = []
        for g in group:
            tr = plane_trace(ctx, g)
            eigs.append(tuple(lam for _, lam in tr.den_factors))
        return shape, eigs
    raise ValueError(f"molien does not handle context kind {ctx.kind!r}")


def molien(ctx: AlgebraCtx, group: MatGroup) -> RatFunc:
    """Hilbert series of the invariant ring: the average of trace series."""
    shape, eigs = _eigen_data(ctx, group)
    return _average_inverse_products(shape, eigs)


# ---------------------------------------------------------------------------
# reflections and bireflections
# ---------------------------------------------------------------------------

def trace_form(ctx: AlgebraCtx, g: Mat2) -> TraceForm:
    if ctx.kind == "down_up":
        return downup_trace(ctx, g)
    return plane_trace(ctx, g)


def is_quasi_reflection(ctx: AlgebraCtx, g: Mat2) -> bool:
    """Pole order gkdim - 1 at t = 1 (classical reflection analogue)."""
    return trace_form(ctx, g).pole_order_at_one() == ctx.gkdim - 1


def is_bireflection(ctx: AlgebraCtx, g: Mat2, include_reflections: bool = True) -> bool:
    """
    Pole order gkdim - 2 at t = 1; with include_reflections (the default)
    pole order gkdim - 1 also qualifies.  The identity never qualifies.
    """
    order = trace_form(ctx, g).pole_order_at_one()
    ok = order == ctx.gkdim - 2 or (include_reflections and order == ctx.gkdim - 1)
    if ctx.kind == "down_up":
        # Matrix-side criterion: det 1 (non-identity) or an eigenvalue 1.
        lam, mu = eigenvalues(g)
        ident = g == Mat2.identity()
        matrix_side = (not ident) and (g.det() == 1 or lam == 1 or mu == 1)
        assert ok == matrix_side, "trace and matrix bireflection tests disagree"
    return ok


def bireflection_subgroup(ctx: AlgebraCtx, group: MatGroup) -> MatGroup:
    gens = [g for g in group if is_bireflection(ctx, g)]
    if not gens:
        return close_group([Mat2.identity()])
    return close_group(gens)


def generated_by_bireflections(ctx: AlgebraCtx, group: MatGroup) -> bool:
    return len(bireflection_subgroup(ctx, group)) == len(group)


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Theorem03Report:
    """All invariants needed to decide the cyclotomic-Gorenstein picture."""

    ctx: AlgebraCtx
    group: MatGroup
    label: object
    hilbert_series: RatFunc
    hdet_trivial: bool
    gorenstein_by_hdet: bool
    gorenstein_by_stanley: bool
    as_index: int | None
    cyclotomic: bool
    cyclotomic_factors: tuple | None
    noncyclotomic_witness: IntPoly | None
    bireflection_count: int
    generated_by_bireflections: bool
    condition_c2: bool
    condition_c3: bool
    consistent: bool


def theorem03_report(alpha, beta, generators, cap: int = DEFAULT_CAP) -> Theorem03Report:
    """
    Close the generated group, verify it acts on A(alpha, beta), and compute
    the Hilbert series of the invariants together with the Gorenstein,
    cyclotomic and bireflection structure.
    """
    from .intpoly import is_cyclotomic_product

    ctx = AlgebraCtx.down_up(alpha, beta)
    group = close_group(generators, cap=cap)
    for g in group:
        ctx.check_automorphism(g)
    label = classify(group)
    series = molien(ctx, group)

    hdet_trivial = all(hdet_matrix(g) == 1 for g in group)
    stanley = stanley_gorenstein_test(series)
    fact = is_cyclotomic_product(series.num) if not series.num.is_zero() else None
    cyclotomic = fact is not None
    biref = [g for g in group if is_bireflection(ctx, g)]
    generated = generated_by_bireflections(ctx, group)

    c3 = hdet_trivial and cyclotomic
    c2 = c3 and generated
    return Theorem03Report(
        ctx=ctx,
        group=group,
        label=label,
        hilbert_series=series,
        hdet_trivial=hdet_trivial,
        gorenstein_by_hdet=hdet_trivial,
        gorenstein_by_stanley=stanley is not None,
        as_index=stanley[1] if stanley is not None else None,
        cyclotomic=cyclotomic,
        cyclotomic_factors=fact.factors if fact is not None else None,
        noncyclotomic_witness=None if cyclotomic else series.num,
        bireflection_count=len(biref),
        generated_by_bireflections=generated,
        condition_c2=c2,
        condition_c3=c3,
        consistent=c2 == c3,
    )


# ---------------------------------------------------------------------------
# monomial matrices on weighted polynomial rings (auxiliary checks)
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class MonomialMat:
    """
    An n x n monomial matrix: column j maps basis vector e_j to
    scalars[j] * e_perm[j].
    """

    perm: tuple[int, ...]
    scalars: tuple[CycNum, ...]

    @staticmethod
    def from_rows(rows) -> "MonomialMat":
        n = len(rows)
        perm = []
        scalars = []
        for j in range(n):
            hits = [i for i in range(n) if not _cyc(rows[i][j]).is_zero()]
            if len(hits) != 1:
                raise NonMonomialMatrix("each column must have exactly one nonzero entry")
            perm.append(hits[0])
            scalars.append(_cyc(rows[hits[0]][j]))
        return MonomialMat(tuple(perm), tuple(scalars))

    @staticmethod
    def diag(entries) -> "MonomialMat":
        entries = tuple(_cyc(e) for e in entries)
        return MonomialMat(tuple(range(len(entries))), entries)

    @staticmethod
    def identity(n: int) -> "MonomialMat":
        return MonomialMat.diag([1] * n)

    def __matmul__(self, other: "MonomialMat") -> "MonomialMat":
        perm = tuple(self.perm[p] for p in other.perm)
        scalars = tuple(other.scalars[j] * self.scalars[other.perm[j]]
                        for j in range(len(self.perm)))
        return MonomialMat(perm, scalars)

    def key(self) -> tuple:
        lcm = 1
        for s in self.scalars:
            lcm = lcm * s.conductor // math.gcd(lcm, s.conductor)
        return (self.perm, tuple(s.promoted(lcm).coeffs for s in self.scalars), lcm)

    def eigenvalues(self) -> tuple[CycNum, ...]:
        """Eigenvalues cycle by cycle: the l-th roots of the cycle product."""
        n = len(self.perm)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start]:
                continue
            cycle = []
            j = start
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = self.perm[j]
            product = CycNum.one()
            for j in cycle:
                product = product * self.scalars[j]
            o = root_of_unity_order(product)
            if o is None:
                raise InfiniteOrderSuspected("cycle product is not a root of unity")
            ell = len(cycle)
            k = root_power_exponent(product, o)
            mu = zeta(ell * o, k)
            for r in range(ell):
                out.append(mu * zeta(ell, r))
        return tuple(out)


def close_monomial_group(generators, cap: int = DEFAULT_CAP) -> tuple[MonomialMat, ...]:
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0].perm)
    # Lift every scalar to a common conductor so products keep a single
    # conductor and the dedup keys are stable.
    lcm = 1
    for g in gens:
        for s in g.scalars:
            lcm = lcm * s.conductor // math.gcd(lcm, s.conductor)
    gens = [MonomialMat(g.perm, tuple(s.promoted(lcm) for s in g.scalars))
            for g in gens]
    ident = MonomialMat(tuple(range(n)),
                        tuple(CycNum.one().promoted(lcm) for _ in range(n)))
    elements = [ident]
    seen = {ident.key()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m @ g
                k = p.key()
                if k not in seen:
                    if len(elements) >= cap:
                        raise InfiniteOrderSuspected(
                            f"monomial closure exceeded cap of {cap}")
                    seen.add(k)
                    elements.append(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(elements)


def polyring_molien(generators, weights=None, cap: int = DEFAULT_CAP) -> RatFunc:
    """
    Hilbert series of the invariants of a finite monomial matrix group acting
    on a polynomial ring whose variables have the given weights (default all
    1).  Supported up to 4 variables.
    """
    gens = [g if isinstance(g, MonomialMat) else MonomialMat.from_rows(g)
            for g in generators]
    n = len(gens[0].perm)
    if n > 4:
        raise UnsupportedAutomorphism("polynomial-ring averages support up to 4 variables")
    if weights is None:
        weights = (1,) * n
    weights = tuple(int(w) for w in weights)
    elements = close_monomial_group(gens, cap=cap)
    eigs = []
    for m in elements:
        vals = m.eigenvalues()
        if len(vals) != n:
            raise NonMonomialMatrix("eigenvalue count mismatch")
        if any(p != i for i, p in enumerate(m.perm)) and len(set(weights)) > 1:
            # A permutation mixing variables of unequal weight does not act
            # on the weighted ring degree-wise.
            raise NotAnAutomorphism("permutation mixes variables of different weights")
        eigs.append(vals)
    return _average_inverse_products(weights, eigs)
