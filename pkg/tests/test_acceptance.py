"""Acceptance suite: the twelve headline checks.

Every series identity is verified by exact equality of canonically reduced
rational functions; the oracle suites compare exact routines against
independent numeric computations.  Criteria 9 and 10 share one sweep over
all admissible (algebra, group) pairs, computed once per module.
"""
import pytest

from duinv import paperlab
from duinv.cycnum import zeta
from duinv.intpoly import IntPoly, cyclotomic_poly
from duinv.invariants import (AlgebraCtx, downup_trace, theorem03_report)
from duinv.matgroup import Mat2, mat_c, mat_c_minus, mat_d1, mat_s, mat_s1


def _assert_all_pass(results):
    failed = [(r.check_id, dict(r.parameters), r.expected, r.computed)
              for r in results if not r.passed]
    assert not failed, failed


# ---------------------------------------------------------------------------
# 1. cyclic diagonal actions: (1-t^{2n}) / ((1-t^n)^2 (1-t^2)^2)
# ---------------------------------------------------------------------------

def test_01_cyclic_diagonal_series():
    _assert_all_pass([r for n in range(2, 11)
                      for r in paperlab.check_cyclic_diagonal_series(n)])


# ---------------------------------------------------------------------------
# 2. reflection-extended actions, plus the diagonal partial-sum identity
# ---------------------------------------------------------------------------

def test_02_reflection_extended_series():
    _assert_all_pass([r for n in range(1, 7)
                      for r in paperlab.check_reflection_extended_series(n)])


# ---------------------------------------------------------------------------
# 3. odd reflection-extended actions: cyclotomic iff n = 1, with the
#    alternative four-factor closed form at n = 1
# ---------------------------------------------------------------------------

def test_03_odd_reflection_series():
    _assert_all_pass([r for n in range(1, 22, 2)
                      for r in paperlab.check_odd_reflection_series(n)])


# ---------------------------------------------------------------------------
# 4. rotated cyclic actions: series, non-cyclotomic numerator, and the
#    index-2 bireflection subgroup
# ---------------------------------------------------------------------------

def test_04_rotated_cyclic_series():
    _assert_all_pass([r for n in range(1, 11)
                      for r in paperlab.check_rotated_cyclic_series(n)])


# ---------------------------------------------------------------------------
# 5. non-cyclotomic numerator families up to n = 60; the single cyclotomic
#    base case factors as Phi_2^2 Phi_4 Phi_6, confirmed by the root oracle
# ---------------------------------------------------------------------------

def test_05_noncyclotomic_families():
    results = paperlab.sweep_noncyclotomic_families(60)
    _assert_all_pass(results)
    base = [r for r in results if r.check_id == "family-one-base-case"]
    assert len(base) == 1 and base[0].computed == ((2, 2), (4, 1), (6, 1))
    from _oracles import oracle_is_cyclotomic
    product = cyclotomic_poly(2) ** 2 * cyclotomic_poly(4) * cyclotomic_poly(6)
    assert oracle_is_cyclotomic(product)
    for n in (2, 3, 10):
        assert not oracle_is_cyclotomic(paperlab._family_one_numerator(n))
        assert not oracle_is_cyclotomic(paperlab._family_two_numerator(n))


# ---------------------------------------------------------------------------
# 6. three-variable diagonal family: the four-term numerator is reproduced
#    (through the exact correction identity) and is non-cyclotomic
# ---------------------------------------------------------------------------

def test_06_three_variable_numerator():
    _assert_all_pass([r for n in range(3, 22, 2)
                      for r in paperlab.check_three_variable_numerator(n)])


# ---------------------------------------------------------------------------
# 7. negation on the Jordan plane: series and Stanley symmetry
# ---------------------------------------------------------------------------

def test_07_jordan_plane():
    _assert_all_pass(paperlab.check_jordan_negation_series())


# ---------------------------------------------------------------------------
# 8. every tabulated involution has homological determinant -1
# ---------------------------------------------------------------------------

def test_08_involution_hdets():
    _assert_all_pass(paperlab.check_involution_hdets(a_range=range(1, 7),
                                                     d_range=range(4, 9)))


# ---------------------------------------------------------------------------
# 9 & 10. consistency sweep over all admissible (algebra, group) pairs
# ---------------------------------------------------------------------------

PARAMS = ((1, 1), (0, 1), (2, -1), (3, -1))


def _family_generators():
    """Named generator lists: Q1..Q8 (n <= 8), C_m (m <= 12), BD_4m (m <= 6)."""
    cases = []
    for n in range(1, 9):
        cases.append((f"Q1({n})", True, [mat_c(zeta(n))]))
        cases.append((f"Q2({n})", True, [mat_d1(), mat_c(zeta(2 * n))]))
        if n % 2 == 1:
            cases.append((f"Q3({n})", True, [mat_d1(), mat_c(zeta(n))]))
        cases.append((f"Q4({n})", True, [mat_c_minus(zeta(4 * n))]))
        cases.append((f"Q5({n})", False, [mat_s1(), mat_c(zeta(2 * n))]))
        cases.append((f"Q6({n})", False, [mat_s(), mat_c(zeta(n))]))
        cases.append((f"Q7({n})", False, [mat_d1(), mat_s(), mat_c(zeta(2 * n))]))
        cases.append((f"Q8({n})", False, [mat_s(), mat_c_minus(zeta(4 * n))]))
    for m in range(1, 13):
        cases.append((f"C{m}", True, [mat_c(zeta(m))]))
    for m in range(1, 7):
        cases.append((f"BD{4 * m}", False, [mat_s1(), mat_c(zeta(2 * m))]))
    return cases


@pytest.fixture(scope="module")
def sweep_reports():
    reports = []
    for alpha, beta in PARAMS:
        diagonal_only = AlgebraCtx.down_up(alpha, beta).aut_shape.name == "O"
        for name, diagonal, gens in _family_generators():
            if diagonal_only and not diagonal:
                continue
            reports.append(((alpha, beta, name),
                            theorem03_report(alpha, beta, gens)))
    return reports


def test_09_consistency_sweep(sweep_reports):
    bad = []
    for tag, rep in sweep_reports:
        if not (rep.consistent and rep.condition_c2 == rep.condition_c3):
            bad.append(("C2 vs C3", tag))
        if rep.gorenstein_by_hdet != rep.gorenstein_by_stanley:
            bad.append(("hdet vs Stanley", tag))
    assert not bad, bad
    assert len(sweep_reports) > 200  # the sweep really ran at full breadth


def test_10_no_quasi_reflections(sweep_reports):
    seen = set()
    for (alpha, beta, _name), rep in sweep_reports:
        key = (alpha, beta, rep.group.elements)
        if key in seen:
            continue
        seen.add(key)
        ctx = AlgebraCtx.down_up(alpha, beta)
        for g in rep.group:
            if g == Mat2.identity():
                continue
            assert downup_trace(ctx, g).pole_order_at_one() != 2, (alpha, beta, g)


# ---------------------------------------------------------------------------
# 11. oracle suites
# ---------------------------------------------------------------------------

def test_11_cyclotomic_tester_oracle():
    from _oracles import run_cyclotomic_oracle_suite
    run_cyclotomic_oracle_suite(cases=400)


def test_11_series_convolution_oracle():
    from _oracles import run_series_oracle_suite
    run_series_oracle_suite(cases=100, n_terms=32)


def test_11_cyclotomic_arithmetic_embedding():
    from _oracles import run_embedding_suite
    run_embedding_suite(cases=200, depth=5, tol=1e-9)


# ---------------------------------------------------------------------------
# 12. four-variable weighted average: five-factor closed form
# ---------------------------------------------------------------------------

def test_12_four_variable_average():
    _assert_all_pass([r for vw in ((1, 1), (1, 2), (2, 3))
                      for r in paperlab.check_four_variable_average(*vw)])
