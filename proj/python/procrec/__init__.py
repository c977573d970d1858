"""Process recommendations for video game projects from postmortem elements."""

from ._core import (
    STANDARD_CONTEXT_SIZE,
    ContextMatrix,
    ElementStore,
    InputError,
    InvariantError,
    PcaModel,
    RecommendedProcess,
    check_dot,
    compare_elements,
    correctness_metrics,
    coverage_from_counts,
    coverage_metrics,
    evaluate_against_extracted,
    extracted_process,
    find_similar,
    fit_pca,
    recommend,
)

__all__ = [
    "STANDARD_CONTEXT_SIZE",
    "ContextMatrix",
    "ElementStore",
    "InputError",
    "InvariantError",
    "PcaModel",
    "RecommendedProcess",
    "check_dot",
    "compare_elements",
    "correctness_metrics",
    "coverage_from_counts",
    "coverage_metrics",
    "evaluate_against_extracted",
    "extracted_process",
    "find_similar",
    "fit_pca",
    "recommend",
]
