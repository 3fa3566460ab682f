"""Exact tools for stationary 1-dependent 0/1 sequences.

A process here is described by one of its run-probability sequences:
q_n = P(n consecutive zeros) or p_n = P(n consecutive ones).  From
either one the package computes count distributions, correlation
kernels, determinant representations, and pattern-count tables, all in
exact rational arithmetic.  A handful of concrete models with path
samplers comes included, along with Monte Carlo and brute-force oracles
and a verification suite runner.
"""

from .detpp import (
    ExtendedOneRuns,
    KernelBand,
    all_zero_sets,
    correlation,
    det_poly,
    det_rational,
    kernel_direct,
    kernel_from_one_runs,
    multivariate_pgf,
    pgf_determinant,
    pgf_fredholm,
    string_probability,
)
from .enumeration import (
    CountTable,
    PairSet,
    bstring_counts,
    bstring_gf,
    florez_count,
    pattern_count_table,
)
from .errors import (
    CompositionDomainError,
    DepthExceeded,
    EmptyTrials,
    InternalInconsistency,
    NonInvertibleSeries,
    NotOneDependentWarning,
    OneDepError,
    SamplerUnavailable,
    ShiftDomainError,
    ValidationError,
)
from .models import (
    Carries,
    Eulerian,
    Flipping,
    Iid,
    ModelSpec,
    NonTwoBlock,
    Non2bfValidation,
    OnePair,
    Path,
    StringWitness,
    one_runs,
    sample_path,
    validate_non2bf,
    zero_runs,
)
from .oracles import (
    Distribution,
    EmpiricalDistribution,
    descent_distribution_bruteforce,
    flipping_exact,
    max_sigma_deviation,
    monte_carlo_distribution,
    pattern_count_bruteforce,
    transfer_matrix_distribution,
)
from .series import (
    BSeries,
    Rational,
    RunSeq,
    USeries,
    ZPoly,
    as_rational,
    biv_inv,
    biv_mul,
    extract,
    negate_variable,
    scale_substitute,
    series_inv,
    series_mul,
    shift,
    unshift,
)
from .transforms import (
    bgf_exchangeable,
    bgf_from_one_runs,
    bgf_from_zero_runs,
    bgf_renewal,
    bgf_stationary_renewal,
    dual_bgf,
    involution,
    pgf_by_recursion,
    shifted_involution,
)
from .verify import Check, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "BSeries",
    "Carries",
    "Check",
    "CompositionDomainError",
    "CountTable",
    "DepthExceeded",
    "Distribution",
    "EmpiricalDistribution",
    "EmptyTrials",
    "Eulerian",
    "ExtendedOneRuns",
    "Flipping",
    "Iid",
    "InternalInconsistency",
    "KernelBand",
    "ModelSpec",
    "Non2bfValidation",
    "NonInvertibleSeries",
    "NonTwoBlock",
    "NotOneDependentWarning",
    "OneDepError",
    "OnePair",
    "Path",
    "PairSet",
    "Rational",
    "RunSeq",
    "SamplerUnavailable",
    "ShiftDomainError",
    "StringWitness",
    "USeries",
    "ValidationError",
    "ZPoly",
    "all_zero_sets",
    "as_rational",
    "bgf_exchangeable",
    "bgf_from_one_runs",
    "bgf_from_zero_runs",
    "bgf_renewal",
    "bgf_stationary_renewal",
    "biv_inv",
    "biv_mul",
    "bstring_counts",
    "bstring_gf",
    "correlation",
    "descent_distribution_bruteforce",
    "det_poly",
    "det_rational",
    "dual_bgf",
    "extract",
    "flipping_exact",
    "florez_count",
    "involution",
    "kernel_direct",
    "kernel_from_one_runs",
    "max_sigma_deviation",
    "monte_carlo_distribution",
    "multivariate_pgf",
    "negate_variable",
    "one_runs",
    "pattern_count_bruteforce",
    "pattern_count_table",
    "pgf_by_recursion",
    "pgf_determinant",
    "pgf_fredholm",
    "run_suite",
    "sample_path",
    "scale_substitute",
    "series_inv",
    "series_mul",
    "shift",
    "shifted_involution",
    "string_probability",
    "suite_names",
    "transfer_matrix_distribution",
    "unshift",
    "validate_non2bf",
    "zero_runs",
    "__version__",
]
