"""Hyperelliptic constants, Gamma values at rational arguments, hyperelliptic
trigonometric functions, and numerical certification of the identities that
connect them."""

__version__ = "0.1.0"

from .applications import SuperellipseSpec, agm_identity_suite, elliptic_K, singular_value_suite, superellipse_area, zeta_ratio_check
from .constants import ConstantValue, Method, lemniscate_constant, pi_aux, pi_n, q_n
from .errors import (
    AccuracyWarning,
    BranchError,
    DomainError,
    HypergammaError,
    InvalidInterval,
    NoBracket,
    NonConvergence,
    OutOfImage,
    SlowConvergence,
)
from .gammafn import closed_form, gamma_deriv, gamma_reference, gamma_special, parse_rational
from .hypertrig import BranchSelector, Family, TrigOrder, arc_integral, e_function, inverse_trig, verify_rotation_identity
from .numkernel import ToleranceConfig, agm, find_root_monotone, integrate_finite, integrate_real_line, sum_arcs_series
from .residuals import IdentityResidual

__all__ = [
    "AccuracyWarning", "BranchError", "BranchSelector", "ConstantValue", "DomainError", "Family",
    "HypergammaError", "IdentityResidual", "InvalidInterval", "Method", "NoBracket", "NonConvergence",
    "OutOfImage", "SlowConvergence", "SuperellipseSpec", "ToleranceConfig", "TrigOrder", "agm",
    "agm_identity_suite", "arc_integral", "closed_form", "e_function", "elliptic_K", "find_root_monotone",
    "gamma_deriv", "gamma_reference", "gamma_special", "integrate_finite", "integrate_real_line",
    "inverse_trig", "lemniscate_constant", "parse_rational", "pi_aux", "pi_n", "q_n",
    "singular_value_suite", "sum_arcs_series", "superellipse_area", "verify_rotation_identity",
    "zeta_ratio_check",
]
