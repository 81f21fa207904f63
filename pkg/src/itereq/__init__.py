"""Toolkit for polynomial-like iterative equations.

Analyzes characteristic polynomials, reduces equation order through the
root-elimination rules, solves the associated linear recurrences in closed
form, verifies candidate solutions on grids, and treats the
f^n(x) = f(x)^n / x^(n-1) family end to end.
"""

from .boros import (
    BorosAnalysis,
    BorosClassification,
    SolutionFamily,
    analyze_boros,
    boros_characteristic,
    check_root_bounds,
    classify_boros,
    find_r0,
    sine_inequality,
)
from .errors import IllConditionedError, OrbitEscapeError
from .polynomial import (
    ALL_REALS,
    Interval,
    IterativeEquation,
    Polynomial,
    divide,
    dual,
    from_roots,
)
from .recurrence import (
    ClosedFormSolution,
    MonotonicityClass,
    classify_monotonicity,
    closed_form,
    evaluate_closed,
    iterate_recurrence,
)
from .reduction import AnalysisVerdict, ReductionResult, analyze, reduce_boros_equation
from .roots import (
    DEFAULT_TOLERANCES,
    GapReport,
    GapVerdict,
    RootClassification,
    RootSet,
    ToleranceConfig,
    classify,
    find_roots,
    modulus_gap,
)
from .verify import (
    AffineMap,
    CandidateFunction,
    PowerMap,
    VerificationReport,
    check_injectivity_monotonicity,
    orbit,
    sample_grid,
    verify_boros,
    verify_boros_direct,
    verify_iterative,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_REALS",
    "AffineMap",
    "AnalysisVerdict",
    "BorosAnalysis",
    "BorosClassification",
    "CandidateFunction",
    "ClosedFormSolution",
    "DEFAULT_TOLERANCES",
    "GapReport",
    "GapVerdict",
    "IllConditionedError",
    "Interval",
    "IterativeEquation",
    "MonotonicityClass",
    "OrbitEscapeError",
    "Polynomial",
    "PowerMap",
    "ReductionResult",
    "RootClassification",
    "RootSet",
    "SolutionFamily",
    "ToleranceConfig",
    "VerificationReport",
    "analyze",
    "analyze_boros",
    "boros_characteristic",
    "check_injectivity_monotonicity",
    "check_root_bounds",
    "classify",
    "classify_boros",
    "classify_monotonicity",
    "closed_form",
    "divide",
    "dual",
    "evaluate_closed",
    "find_r0",
    "find_roots",
    "from_roots",
    "iterate_recurrence",
    "modulus_gap",
    "orbit",
    "reduce_boros_equation",
    "sample_grid",
    "sine_inequality",
    "verify_boros",
    "verify_boros_direct",
    "verify_iterative",
]
