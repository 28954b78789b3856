"""Generalized Struve convolution operator: special functions, class tests and bounds."""

from ._gstruve import (
    GstruveError,
    apply_s,
    best_dominant_q,
    f21,
    generalized_m,
    j_functional,
    membership_test,
    modulus_bounds,
    normalized_n_series,
    phi_series,
    radius_positivity,
    re_bounds,
    recurrence_residual,
    run_suite,
    sharp_bound_h,
    struve_h,
    struve_l,
    suite_names,
)

__all__ = [
    "GstruveError",
    "apply_s",
    "best_dominant_q",
    "f21",
    "generalized_m",
    "j_functional",
    "membership_test",
    "modulus_bounds",
    "normalized_n_series",
    "phi_series",
    "radius_positivity",
    "re_bounds",
    "recurrence_residual",
    "run_suite",
    "sharp_bound_h",
    "struve_h",
    "struve_l",
    "suite_names",
]
