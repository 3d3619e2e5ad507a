"""
Exact invariant theory of finite group actions on graded down-up algebras:
cyclotomic arithmetic, Molien averages, homological determinants,
bireflection structure and cyclotomic-Gorenstein reports.
"""

from .cycnum import CycNum, cyc_make, root_of_unity_order, root_power_exponent, zeta
from .errors import (DenominatorVanishesAtZero, DivisionByZero, DuinvError,
                     GroupTooLarge, InfiniteOrderSuspected,
                     NonMonomialMatrix, NonNormalizableDenominator,
                     NonRationalCollapse, NotAnAutomorphism, ParseError,
                     PromotionOverflow, SingularGenerator,
                     UnsupportedAutomorphism, ZeroConductor, ZeroDenominator,
                     ZeroFunction, ZeroPolynomial)
from .intpoly import (CycFactorization, IntPoly, cyclotomic_poly, divisors,
                      factorize, is_cyclotomic_product, one_minus_t_pow,
                      poly_gcd_q, totient, x_pow)
from .invariants import (AlgebraCtx, AutShape, HdetResult, MonomialMat,
                         Theorem03Report, TraceForm, bireflection_subgroup,
                         close_monomial_group, downup_trace,
                         generated_by_bireflections, hdet_from_trace,
                         hdet_matrix, hypersurface_trace, is_bireflection,
                         is_quasi_reflection, molien, normal_sequence_trace,
                         plane_trace, polyring_molien, theorem03_report)
from .matgroup import (GroupLabel, Mat2, MatGroup, classify, close_group,
                       eigenvalues, mat_c, mat_c_minus, mat_d1, mat_d2, mat_s,
                       mat_s1, mat_s2, sl2_part, standard_group)
from .ratfunc import CycPoly, RatFunc, ratfunc_make, stanley_gorenstein_test
from .cli import parse_cyc, parse_matrix, render_cyc, render_matrix

__version__ = "0.1.0"
