"""Ingham summation sums, Dirichlet series and Euler products for
arithmetic coefficient sequences, with finite-scale verification
harnesses for the associated Tauberian conditions."""

from .errors import (
    CapacityError,
    QuadratureError,
    SingularFactorError,
    SpecFormatError,
)
from .sieve import SieveTable, build_sieve
from .sequences import (
    BUILTIN_SEQUENCES,
    CoefficientSequence,
    MultiplicativeSpec,
    a_from_f,
    extend_completely_multiplicative,
    f_from_a,
    named_sequence,
    sum_over_divisors,
)
from .summation import (
    SummationValue,
    TruncatedSum,
    WeightSequence,
    abel_lambda_sum,
    abel_power_sum,
    batch_sums,
    cumulative_sums,
    ingham_A,
    ingham_S,
    ingham_series_partial,
    tauber_weighted,
)
from .dirichlet import (
    EvalParams,
    FtEvaluation,
    euler_product,
    f_t_table,
    ft_partial_sum,
    g_eval,
    l_t,
    mu_n_alpha,
    zeta_real,
    zeta_tail,
)
from .quadrature import QuadResult, adaptive_simpson, integral_sigma_to_inf, integral_zero_to_inf
from .report import ReportRow, VerificationReport
from .verify import (
    DifferenceIdentityResult,
    Theorem3Result,
    TrendPolicy,
    WintnerResult,
    check_axer,
    check_wintner,
    cond1_ratio,
    cond2_ratio,
    difference_identity_check,
    lemma_ratio_suite,
    s_decomposition_identity,
    s_difference_identity,
    s_multiplicative_identity,
    theorem1_residual,
    theorem2_conditions,
    theorem3_check,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_SEQUENCES",
    "CapacityError",
    "CoefficientSequence",
    "DifferenceIdentityResult",
    "EvalParams",
    "FtEvaluation",
    "MultiplicativeSpec",
    "QuadResult",
    "QuadratureError",
    "ReportRow",
    "SieveTable",
    "SingularFactorError",
    "SpecFormatError",
    "SummationValue",
    "Theorem3Result",
    "TrendPolicy",
    "TruncatedSum",
    "VerificationReport",
    "WeightSequence",
    "WintnerResult",
    "a_from_f",
    "abel_lambda_sum",
    "abel_power_sum",
    "adaptive_simpson",
    "batch_sums",
    "build_sieve",
    "check_axer",
    "check_wintner",
    "cond1_ratio",
    "cond2_ratio",
    "cumulative_sums",
    "difference_identity_check",
    "euler_product",
    "extend_completely_multiplicative",
    "f_from_a",
    "f_t_table",
    "ft_partial_sum",
    "g_eval",
    "ingham_A",
    "ingham_S",
    "ingham_series_partial",
    "integral_sigma_to_inf",
    "integral_zero_to_inf",
    "l_t",
    "lemma_ratio_suite",
    "mu_n_alpha",
    "named_sequence",
    "s_decomposition_identity",
    "s_difference_identity",
    "s_multiplicative_identity",
    "sum_over_divisors",
    "tauber_weighted",
    "theorem1_residual",
    "theorem2_conditions",
    "theorem3_check",
    "zeta_real",
    "zeta_tail",
]
