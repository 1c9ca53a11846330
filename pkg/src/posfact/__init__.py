"""Exact invariants of pseudoperiodic mapping classes and certified
positive-factorization checks.

The package works purely on invariant data (surface type, fractional Dehn
twist coefficients, curve-orbit screw numbers), all of it in exact rational
arithmetic.  That data underdetermines the mapping class; every positive
certification produced here is valid for every mapping class realizing the
given invariants, and no negative certification is ever produced.
"""

from ._backend import backend_name
from .core import (
    BoundaryTwist,
    CurveOrbit,
    DomainError,
    InvalidMoveError,
    NTClass,
    OrbitKind,
    OrbitTwist,
    PeriodData,
    Surface,
    TwistMove,
    compose_twists,
    int_variant,
    period_data,
)
from .factorization import (
    ClassificationReport,
    CriterionResult,
    CriterionRoute,
    Diagnostic,
    GenusZeroUnsupportedError,
    Inconclusive,
    LTag,
    LValue,
    MainTheoremRoute,
    NotApplicable,
    PositivelyFactorizable,
    Sufficient,
    TableUndefinedError,
    Unknown,
    WitnessDecomposition,
    classify,
    correcting_exponent_bound,
    criterion,
    criterion_k,
    genus_zero_diagnostics,
    l_multitwist,
    l_multitwist_power,
)
from .invariants import (
    EssentialResult,
    essential_part,
    is_essential,
    is_fully_right_veering,
    verify_essential_uniqueness,
)
from .oracle import OrbitModel, OrbitModelError, differential_check_formula, orbit_model_screw
from .poset import (
    BoxTooLargeError,
    DimensionMismatchError,
    PosetRegion,
    contains,
    enumerate_box,
    essential_inclusion_check,
    known_region,
    minimal_generators,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # core
    "DomainError",
    "InvalidMoveError",
    "Surface",
    "OrbitKind",
    "CurveOrbit",
    "NTClass",
    "BoundaryTwist",
    "OrbitTwist",
    "TwistMove",
    "PeriodData",
    "int_variant",
    "compose_twists",
    "period_data",
    # invariants
    "EssentialResult",
    "is_essential",
    "essential_part",
    "verify_essential_uniqueness",
    "is_fully_right_veering",
    # factorization
    "GenusZeroUnsupportedError",
    "TableUndefinedError",
    "LTag",
    "LValue",
    "Diagnostic",
    "WitnessDecomposition",
    "Sufficient",
    "Inconclusive",
    "NotApplicable",
    "CriterionResult",
    "MainTheoremRoute",
    "CriterionRoute",
    "PositivelyFactorizable",
    "Unknown",
    "ClassificationReport",
    "l_multitwist",
    "l_multitwist_power",
    "criterion_k",
    "criterion",
    "classify",
    "correcting_exponent_bound",
    "genus_zero_diagnostics",
    # poset
    "DimensionMismatchError",
    "BoxTooLargeError",
    "PosetRegion",
    "minimal_generators",
    "known_region",
    "contains",
    "essential_inclusion_check",
    "enumerate_box",
    # oracle
    "OrbitModelError",
    "OrbitModel",
    "orbit_model_screw",
    "differential_check_formula",
]
