"""Exact coefficient heights of generic Sylvester resultants."""

from ._resheight import (
    FeasibilityError,
    argmax_layers,
    compute_A,
    conjecture_probe,
    constants,
    expand_summary,
    hl_max,
    identity_checks,
    measure_convergence,
    monotonic_probe,
    quad_height,
    run_suite,
    suite_names,
)

__all__ = [
    "FeasibilityError",
    "argmax_layers",
    "compute_A",
    "conjecture_probe",
    "constants",
    "expand_summary",
    "hl_max",
    "identity_checks",
    "measure_convergence",
    "monotonic_probe",
    "quad_height",
    "run_suite",
    "suite_names",
]
