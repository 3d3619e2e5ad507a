"""
2x2 matrices over cyclotomic fields, finite multiplicative closures, and
recognition of the standard families of finite subgroups of GL_2.

Group closure is breadth-first from the identity, so element order is
deterministic for a given generator list.  All elements of a closure are
stored at the least common multiple of the generators' conductors, which
makes hashing and membership exact and cheap.
"""
from __future__ import annotations

import dataclasses
import functools
import math

from .cycnum import CycNum, root_of_unity_order, root_power_exponent, zeta
from .errors import (GroupTooLarge, InfiniteOrderSuspected, SingularGenerator)

DEFAULT_CAP = 10_000


@dataclasses.dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix with CycNum entries (row-major)."""

    a: CycNum
    b: CycNum
    c: CycNum
    d: CycNum

    @staticmethod
    def of(a, b, c, d) -> "Mat2":
        conv = lambda x: x if isinstance(x, CycNum) else CycNum.from_rat(x)
        return Mat2(conv(a), conv(b), conv(c), conv(d))

    @staticmethod
    def identity() -> "Mat2":
        return Mat2.of(1, 0, 0, 1)

    @staticmethod
    def diag(x, y) -> "Mat2":
        return Mat2.of(x, 0, 0, y)

    def entries(self) -> tuple[CycNum, CycNum, CycNum, CycNum]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def det(self) -> CycNum:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CycNum:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        det = self.det()
        if det.is_zero():
            raise SingularGenerator("matrix is not invertible")
        inv = det.inv()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()

    def is_antidiagonal(self) -> bool:
        return (self.a.is_zero() and self.d.is_zero()
                and not self.b.is_zero() and not self.c.is_zero())

    def conductor(self) -> int:
        n = 1
        for e in self.entries():
            n = n * e.conductor // math.gcd(n, e.conductor)
        return n

    def key(self, conductor: int) -> tuple:
        """Hashable exact form of the matrix at the given conductor."""
        return tuple(e.promoted(conductor).coeffs for e in self.entries())

    @functools.lru_cache(maxsize=None)
    def order(self, cap: int = DEFAULT_CAP) -> int:
        """Multiplicative order; InfiniteOrderSuspected beyond the cap."""
        power = self
        ident = Mat2.identity()
        for k in range(1, cap + 1):
            if power == ident:
                return k
            power = power @ self
        raise InfiniteOrderSuspected(f"no power up to {cap} equals the identity")


# Named matrices used throughout: reflections, rotations and the diagonal
# one-parameter families.

def mat_s() -> Mat2:
    return Mat2.of(0, 1, 1, 0)


def mat_s1() -> Mat2:
    return Mat2.of(0, 1, -1, 0)


def mat_s2() -> Mat2:
    return Mat2.of(0, -1, 1, 0)


def mat_d1() -> Mat2:
    return Mat2.diag(-1, 1)


def mat_d2() -> Mat2:
    return Mat2.diag(1, -1)


def mat_c(eps: CycNum) -> Mat2:
    """diag(eps, eps^-1)."""
    return Mat2.diag(eps, eps.inv())


def mat_c_minus(eps: CycNum) -> Mat2:
    """diag(-eps, eps^-1)."""
    return Mat2.diag(-eps, eps.inv())


def standard_group(family: int, n: int, cap: int = DEFAULT_CAP) -> "MatGroup":
    """
    The families Q1..Q8 of finite subgroups of diagonal/antidiagonal
    matrices, by their standard generators:

      Q1 = <c_eps>, eps primitive n-th root           (order n,  det 1)
      Q2 = <d1, c_eps>, eps primitive 2n-th root      (order 4n, det +-1)
      Q3 = <d1, c_eps>, eps primitive n-th, n odd     (order 2n, det +-1)
      Q4 = <c_{eps,-}>, eps primitive 4n-th root      (order 4n, det +-1)
      Q5 = <s1, c_eps>, eps primitive 2n-th root      (order 4n, det 1)
      Q6 = <s, c_eps>, eps primitive n-th root        (order 2n, det +-1)
      Q7 = <d1, s, c_eps>, eps primitive 2n-th root   (order 8n, det +-1)
      Q8 = <s, c_{eps,-}>, eps primitive 4n-th root   (order 8n, det +-1)
    """
    if family == 1:
        gens = [mat_c(zeta(n))]
    elif family == 2:
        gens = [mat_d1(), mat_c(zeta(2 * n))]
    elif family == 3:
        if n % 2 == 0:
            raise ValueError("Q3 requires odd n")
        gens = [mat_d1(), mat_c(zeta(n))]
    elif family == 4:
        gens = [mat_c_minus(zeta(4 * n))]
    elif family == 5:
        gens = [mat_s1(), mat_c(zeta(2 * n))]
    elif family == 6:
        gens = [mat_s(), mat_c(zeta(n))]
    elif family == 7:
        gens = [mat_d1(), mat_s(), mat_c(zeta(2 * n))]
    elif family == 8:
        gens = [mat_s(), mat_c_minus(zeta(4 * n))]
    else:
        raise ValueError(f"unknown family Q{family}")
    return close_group(gens, cap=cap)


@dataclasses.dataclass(frozen=True)
class MatGroup:
    """A finite group of 2x2 matrices, all stored at a common conductor."""

    elements: tuple[Mat2, ...]
    generators: tuple[Mat2, ...]
    conductor: int

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: Mat2) -> bool:
        lcm = self.conductor * m.conductor() \
            // math.gcd(self.conductor, m.conductor())
        keys = {e.key(lcm) for e in self.elements}
        return m.key(lcm) in keys

    def det_values(self) -> set[CycNum]:
        out: list[CycNum] = []
        for e in self.elements:
            d = e.det()
            if not any(d == x for x in out):
                out.append(d)
        return set(out)

    def diagonal_part(self) -> tuple[Mat2, ...]:
        return tuple(e for e in self.elements if e.is_diagonal())

    def exponent(self) -> int:
        m = 1
        for e in self.elements:
            o = e.order(cap=len(self.elements) + 1)
            m = m * o // math.gcd(m, o)
        return m

    def is_cyclic(self) -> bool:
        n = len(self.elements)
        return any(e.order(cap=n + 1) == n for e in self.elements)


_closure_cache: dict = {}


def close_group(generators, cap: int = DEFAULT_CAP) -> MatGroup:
    """
    Breadth-first multiplicative closure of the generators (plus identity).
    Raises SingularGenerator for non-invertible input and GroupTooLarge when
    the closure exceeds `cap` elements.  Closures are memoized by the exact
    generator list, so repeated analyses of one group are cheap.
    """
    gens = list(generators)
    for g in gens:
        if g.det().is_zero():
            raise SingularGenerator("group generator has zero determinant")
    conductor = 1
    for g in gens:
        c = g.conductor()
        conductor = conductor * c // math.gcd(conductor, c)
    cache_key = (tuple(g.key(conductor) for g in gens), conductor, cap)
    cached = _closure_cache.get(cache_key)
    if cached is not None:
        return cached
    lifted = [Mat2(*(e.promoted(conductor) for e in g.entries())) for g in gens]
    ident = Mat2(*(e.promoted(conductor) for e in Mat2.identity().entries()))
    elements = [ident]
    seen = {ident.key(conductor)}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in lifted:
                p = m @ g
                k = p.key(conductor)
                if k not in seen:
                    if len(elements) >= cap:
                        raise GroupTooLarge(f"closure exceeded cap of {cap} elements")
                    seen.add(k)
                    elements.append(p)
                    nxt.append(p)
        frontier = nxt
    group = MatGroup(tuple(elements), tuple(gens), conductor)
    _closure_cache[cache_key] = group
    return group


def sl2_part(group: MatGroup) -> MatGroup:
    """The subgroup of determinant-one elements."""
    elems = tuple(e for e in group.elements if e.det() == 1)
    return MatGroup(elems, elems, group.conductor)


def satisfies_det_pm1(group: MatGroup) -> bool:
    """True when the determinant image is exactly {1, -1}."""
    dets = group.det_values()
    return len(dets) == 2 and all(d == 1 or d == -1 for d in dets)


@functools.lru_cache(maxsize=None)
def eigenvalues(g: Mat2, cap: int = DEFAULT_CAP) -> tuple[CycNum, CycNum]:
    """
    The eigenvalue pair of a finite-order matrix, each an m-th root of unity
    for m the order of g, sorted by exponent as a power of zeta_m.
    """
    m = g.order(cap=cap)
    if g.is_diagonal():
        pair = [g.a, g.d]
    elif g.is_antidiagonal():
        # Char poly is t^2 - bc, so the eigenvalues are the square roots of bc.
        bc = g.b * g.c
        o = root_of_unity_order(bc)
        if o is None:
            raise InfiniteOrderSuspected("antidiagonal product is not a root of unity")
        j = root_power_exponent(bc, o)
        mu = zeta(2 * o, j)
        pair = [mu, -mu]
    else:
        tr, det = g.trace(), g.det()
        pair = []
        for k in range(m):
            lam = zeta(m, k)
            if lam * lam - tr * lam + det == 0:
                pair.append(lam)
                if len(pair) == 2:
                    break
        if len(pair) == 1:  # double eigenvalue
            pair.append(pair[0])
        if len(pair) != 2:
            raise InfiniteOrderSuspected("could not locate eigenvalues among roots of unity")
    exps = sorted(root_power_exponent(lam, m) for lam in pair)
    return (zeta(m, exps[0]), zeta(m, exps[1]))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class GroupLabel:
    family: str
    n: int | None
    order: int
    all_matches: tuple[str, ...]


def classify(group: MatGroup) -> GroupLabel:
    """
    Recognize a closed group against the standard families: the diagonal and
    diagonal/antidiagonal families Q1..Q8 and, for determinant-one groups,
    the cyclic / binary dihedral / binary polyhedral alternatives.  Groups
    presented in a conjugated basis come back as "Unrecognized".
    """
    order = len(group)
    dets = group.det_values()
    det_one = len(dets) == 1 and any(d == 1 for d in dets)
    det_pm1 = satisfies_det_pm1(group)
    all_diag = all(e.is_diagonal() for e in group)
    in_u = all(e.is_diagonal() or e.is_antidiagonal() for e in group)

    matches: list[tuple[str, int | None]] = []

    if all_diag:
        sl2 = sl2_part(group)
        m = len(sl2)
        has_refl = any(e == mat_d1() or e == mat_d2() for e in group)
        if det_one and group.is_cyclic():
            matches.append(("Q1", order))
        if det_pm1 and has_refl and m % 2 == 0:
            matches.append(("Q2", m // 2))
        if det_pm1 and has_refl and m % 2 == 1:
            matches.append(("Q3", m))
            if m == 1:
                matches.append(("A1", None))
            matches.append(("A3", m))
        if det_pm1 and not has_refl and group.is_cyclic() and m % 2 == 0:
            matches.append(("Q4", m // 2))
            matches.append(("A4", m // 2))
        if det_pm1 and has_refl and m % 2 == 0:
            matches.append(("A2", m // 2))
    elif in_u:
        diag = close_group(group.diagonal_part()) if group.diagonal_part() else None
        anti = [e for e in group if e.is_antidiagonal()]
        anti_dets = {1 if e.det() == 1 else (-1 if e.det() == -1 else None)
                     for e in anti}
        diag_dets = {1 if e.det() == 1 else (-1 if e.det() == -1 else None)
                     for e in group.diagonal_part()}
        if det_one and anti:
            if order % 4 == 0:
                matches.append(("Q5", order // 4))
        if det_pm1 and anti_dets == {-1} and diag_dets == {1}:
            matches.append(("Q6", order // 2))
            matches.append(("D", order // 2))
            matches.append(("A5", None))
        if det_pm1 and anti_dets == {1, -1} and diag_dets == {1, -1} and diag:
            has_refl = any(e == mat_d1() or e == mat_d2() for e in diag)
            if has_refl and order % 8 == 0:
                matches.append(("Q7", order // 8))
            if not has_refl and diag.is_cyclic() and order % 8 == 0:
                matches.append(("Q8", order // 8))

    if det_one:
        if group.is_cyclic():
            matches.append(("C", order))
        if (order % 4 == 0 and order > 4 and not group.is_cyclic()
                and _has_cyclic_index_two(group)):
            matches.append(("BD", order // 4))
        if order == 4 and group.is_cyclic():
            matches.append(("BD", 1))
        if order == 24 and not group.is_cyclic() and not _has_cyclic_index_two(group):
            matches.append(("BT", None))
        if order == 48 and not _has_cyclic_index_two(group):
            matches.append(("BO", None))
        if order == 120 and not _has_cyclic_index_two(group):
            matches.append(("BI", None))

    rendered = tuple(_render_label(f, n) for f, n in matches)
    for q in ("Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"):
        for f, n in matches:
            if f == q:
                return GroupLabel(q, n, order, rendered)
    if matches:
        f, n = matches[0]
        return GroupLabel(f, n, order, rendered)
    return GroupLabel("Unrecognized", None, order, ())


def _render_label(family: str, n: int | None) -> str:
    if family in ("Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"):
        return f"{family}(n={n})"
    if family == "C":
        return f"C{n}"
    if family == "BD":
        return f"BD{4 * n}"
    if family == "D":
        return f"D{2 * n}"
    if family.startswith("A"):
        return f"A{family[1]}-type" if n is None else f"A{family[1]}-type(n={n})"
    return family


def _has_cyclic_index_two(group: MatGroup) -> bool:
    n = len(group)
    if n % 2:
        return False
    return any(e.order(cap=n + 1) == n // 2 for e in group)
