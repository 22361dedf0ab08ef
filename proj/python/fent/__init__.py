"""Observable correlations and entanglement analysis for two-fermion systems."""

from fent._core import (
    CanonicalPair,
    ClosedForm,
    FentError,
    GroundState,
    MaxResult,
    ObservablePair,
    OptimizerDiagnostics,
    SlaterAnalysis,
    closed_form,
    correlation,
    degree,
    epr_conditionals,
    ground_state,
    max_abs_correlation,
    max_abs_correlation_dense,
    slater_analysis,
    slater_rank,
)

__all__ = [
    "CanonicalPair",
    "ClosedForm",
    "FentError",
    "GroundState",
    "MaxResult",
    "ObservablePair",
    "OptimizerDiagnostics",
    "SlaterAnalysis",
    "closed_form",
    "correlation",
    "degree",
    "epr_conditionals",
    "ground_state",
    "max_abs_correlation",
    "max_abs_correlation_dense",
    "slater_analysis",
    "slater_rank",
]
