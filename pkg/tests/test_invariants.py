"""Trace series, Molien averages, homological determinants, bireflections."""
from fractions import Fraction

import pytest

from duinv.cycnum import CycNum, zeta
from duinv.errors import (NonMonomialMatrix, NotAnAutomorphism,
                          UnsupportedAutomorphism)
from duinv.intpoly import IntPoly, one_minus_t_pow, x_pow
from duinv.invariants import (AlgebraCtx, AutShape, MonomialMat,
                              bireflection_subgroup, close_monomial_group,
                              downup_trace, generated_by_bireflections,
                              hdet_from_trace, hdet_matrix, hypersurface_trace,
                              is_bireflection, is_quasi_reflection, molien,
                              normal_sequence_trace, plane_trace,
                              polyring_molien, theorem03_report)
from duinv.matgroup import Mat2, close_group, mat_c, mat_d1, mat_s, mat_s1
from duinv.ratfunc import RatFunc


def _omt(k):
    return one_minus_t_pow(k)


# ---------------------------------------------------------------------------
# contexts and automorphism shapes
# ---------------------------------------------------------------------------

def test_aut_shapes():
    assert AlgebraCtx.down_up(0, 1).aut_shape is AutShape.FULL_GL2
    assert AlgebraCtx.down_up(2, -1).aut_shape is AutShape.FULL_GL2
    assert AlgebraCtx.down_up(3, -1).aut_shape is AutShape.U
    assert AlgebraCtx.down_up(1, 1).aut_shape is AutShape.O
    with pytest.raises(ValueError):
        AlgebraCtx.down_up(1, 0)


def test_check_automorphism():
    o_ctx = AlgebraCtx.down_up(1, 1)
    o_ctx.check_automorphism(mat_c(zeta(5)))
    with pytest.raises(NotAnAutomorphism):
        o_ctx.check_automorphism(mat_s())
    u_ctx = AlgebraCtx.down_up(3, -1)
    u_ctx.check_automorphism(mat_s())
    with pytest.raises(NotAnAutomorphism):
        u_ctx.check_automorphism(Mat2.of(1, 1, 0, 1))
    AlgebraCtx.down_up(0, 1).check_automorphism(Mat2.of(1, 1, 0, 1))


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

def test_identity_trace_is_hilbert_series():
    ctx = AlgebraCtx.down_up(1, 1)
    tr = downup_trace(ctx, Mat2.identity())
    assert tr.to_ratfunc() == RatFunc.make(IntPoly((1,)), _omt(1) ** 2 * _omt(2))


def test_downup_trace_eigen_factors():
    ctx = AlgebraCtx.down_up(0, 1)
    degrees = sorted(d for d, _ in downup_trace(ctx, Mat2.diag(zeta(3), zeta(5))).den_factors)
    assert degrees == [1, 1, 2]
    # a determinant-one element collapses to a rational trace
    tr = downup_trace(ctx, mat_c(zeta(3)))
    assert tr.to_ratfunc() == RatFunc.make(
        IntPoly((1,)), IntPoly((1, 1, 1)) * _omt(2))


def test_plane_trace_restrictions():
    skew = AlgebraCtx.skew_plane(zeta(4))
    plane_trace(skew, Mat2.diag(2, 3))
    with pytest.raises(UnsupportedAutomorphism):
        plane_trace(skew, mat_s())
    jordan = AlgebraCtx.jordan_plane()
    plane_trace(jordan, Mat2.diag(-1, -1))
    with pytest.raises(UnsupportedAutomorphism):
        plane_trace(jordan, Mat2.diag(1, -1))


def test_trace_laurent_and_pole():
    tr = normal_sequence_trace([(1, 1), (2, -1)])
    assert tr.pole_order_at_one() == 1
    exp, coeff = tr.laurent_leading_at_infinity()
    assert exp == -3 and coeff == CycNum.from_rat(-1)
    hyp = hypersurface_trace([(2, 1), (2, 1), (2, -1)], (4, 1))
    assert hyp.pole_order_at_one() == 2 - 1 + 0  # two unit poles, one unit zero...
    assert hyp.pole_order_at_one() == 1


# ---------------------------------------------------------------------------
# homological determinants
# ---------------------------------------------------------------------------

def test_hdet_matrix():
    assert hdet_matrix(mat_s()) == 1        # det -1 squares to 1
    assert hdet_matrix(mat_c(zeta(7))) == 1
    g = Mat2.diag(zeta(3), 1)
    assert hdet_matrix(g) == zeta(3, 2)


def test_hdet_from_trace_matches_matrix_formula():
    """For the down-up trace 1/((1-at)(1-bt)(1-abt^2)) the value at infinity
    gives hdet = (ab)^2 = det^2, with injective dimension 3."""
    ctx = AlgebraCtx.down_up(1, 1)
    for g in (Mat2.diag(zeta(3), zeta(4)), Mat2.diag(-1, zeta(5)), mat_c(zeta(8))):
        tr = downup_trace(ctx, g)
        res = hdet_from_trace(tr, 3)
        assert res.value == hdet_matrix(g)


def test_hdet_sign_involution_on_plane():
    tr = normal_sequence_trace([(1, 1), (1, -1)])
    assert hdet_from_trace(tr, 2).value == CycNum.from_rat(-1)


# ---------------------------------------------------------------------------
# Molien averages
# ---------------------------------------------------------------------------

def test_molien_trivial_group():
    ctx = AlgebraCtx.down_up(1, 1)
    series = molien(ctx, close_group([Mat2.identity()]))
    assert series == RatFunc.make(IntPoly((1,)), _omt(1) ** 2 * _omt(2))


def test_molien_sign_action():
    ctx = AlgebraCtx.down_up(1, 1)
    series = molien(ctx, close_group([Mat2.diag(-1, -1)]))
    # invariants of -I: even part of the algebra
    full = RatFunc.make(IntPoly((1,)), _omt(1) ** 2 * _omt(2))
    twisted = RatFunc.make(IntPoly((1,)), IntPoly((1, 1)) ** 2 * _omt(2))
    assert series == (full + twisted).scale(Fraction(1, 2))


def test_molien_matches_average_of_traces():
    ctx = AlgebraCtx.down_up(0, 1)
    group = close_group([mat_s1()])
    series = molien(ctx, group)
    total = RatFunc.make(IntPoly(), IntPoly((1,)))
    for g in group:
        total = total + downup_trace(ctx, g).to_ratfunc()
    assert series == total.scale(Fraction(1, len(group)))


def test_molien_first_coefficient_is_one():
    ctx = AlgebraCtx.down_up(1, 1)
    for gens in ([mat_c(zeta(6))], [mat_d1(), mat_c(zeta(4))]):
        series = molien(ctx, close_group(gens))
        assert series.series_coeffs(1) == [Fraction(1)]


# ---------------------------------------------------------------------------
# bireflections
# ---------------------------------------------------------------------------

def test_quasi_reflection_on_downup():
    ctx = AlgebraCtx.down_up(1, 1)
    # pole order gkdim - 1 = 2 never happens for non-identity down-up actions
    for g in (mat_d1(), Mat2.diag(-1, -1), mat_c(zeta(5))):
        assert not is_quasi_reflection(ctx, g)


def test_bireflections_on_downup():
    ctx = AlgebraCtx.down_up(1, 1)
    assert is_bireflection(ctx, mat_c(zeta(5)))      # det 1
    assert is_bireflection(ctx, Mat2.diag(-1, 1))    # eigenvalue 1
    assert is_bireflection(ctx, Mat2.diag(-1, -1))   # -I has det 1
    assert not is_bireflection(ctx, Mat2.diag(-1, zeta(3)))
    assert not is_bireflection(ctx, Mat2.identity())


def test_bireflection_subgroup_q4():
    ctx = AlgebraCtx.down_up(1, 1)
    from duinv.matgroup import standard_group
    group = standard_group(4, 2)
    sub = bireflection_subgroup(ctx, group)
    assert len(group) == 2 * len(sub)
    assert not generated_by_bireflections(ctx, group)
    assert generated_by_bireflections(ctx, standard_group(1, 7))


# ---------------------------------------------------------------------------
# full report
# ---------------------------------------------------------------------------

def test_report_q1():
    report = theorem03_report(1, 1, [mat_c(zeta(3))])
    assert report.label.family == "Q1"
    assert report.hdet_trivial
    assert report.gorenstein_by_stanley
    assert report.cyclotomic
    assert report.condition_c2 and report.condition_c3 and report.consistent
    n = 3
    assert report.hilbert_series == RatFunc.make(
        _omt(2 * n), _omt(n) ** 2 * _omt(2) ** 2)


def test_report_rejects_bad_shape():
    with pytest.raises(NotAnAutomorphism):
        theorem03_report(1, 2, [mat_s()])


def test_report_q4_noncyclotomic():
    report = theorem03_report(1, 1, [Mat2.diag(-zeta(4), zeta(4, 3))])
    assert report.label.family == "Q4"
    assert not report.cyclotomic
    assert report.noncyclotomic_witness is not None
    assert not report.generated_by_bireflections
    assert report.consistent


# ---------------------------------------------------------------------------
# monomial matrices
# ---------------------------------------------------------------------------

def test_monomial_from_rows():
    m = MonomialMat.from_rows([[0, 1], [1, 0]])
    assert m.perm == (1, 0)
    with pytest.raises(NonMonomialMatrix):
        MonomialMat.from_rows([[1, 1], [0, 1]])


def test_monomial_eigenvalues_swap():
    m = MonomialMat.from_rows([[0, 1], [1, 0]])
    vals = set(m.eigenvalues())
    assert vals == {CycNum.one(), CycNum.from_rat(-1)}


def test_monomial_closure_dedups_conductors():
    gens = [MonomialMat.diag([zeta(3), zeta(3, 2), 1]),
            MonomialMat.diag([-CycNum.one(), CycNum.one(), -CycNum.one()])]
    assert len(close_monomial_group(gens)) == 6


def test_polyring_molien_cyclic():
    # C_2 acting by sign on 2 variables
    g = MonomialMat.diag([-CycNum.one(), -CycNum.one()])
    series = polyring_molien([g])
    assert series == RatFunc.make(IntPoly((1, 0, 1)), _omt(2) ** 2)
    assert series.series_coeffs(5) == [Fraction(x) for x in (1, 0, 3, 0, 5)]


def test_polyring_molien_weighted_guard():
    swap = MonomialMat.from_rows([[0, 1], [1, 0]])
    with pytest.raises(NotAnAutomorphism):
        polyring_molien([swap], weights=(1, 2))


def test_polyring_molien_symmetric_group_s3():
    gens = [MonomialMat.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
            MonomialMat.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])]
    series = polyring_molien(gens)
    expected = RatFunc.make(IntPoly((1,)), _omt(1) * _omt(2) * _omt(3))
    assert series == expected  # elementary symmetric polynomial degrees
