"""
Painleve Module

Bilinear recurrences of the special polynomials for P_II - P_VI and the
rational solution of P_III.
"""

from .presets import (
    FamilyId,
    FamilyParams,
    MissingParameterError,
    condition_check,
    preset,
    preset_condition_check,
)
from .umemura import (
    OdeCheck,
    p3_ode_residual,
    p3_parameters,
    p3_solution,
    umemura_terms,
    verify_p3,
    verify_p3_grid,
)

__all__ = [
    "FamilyId",
    "FamilyParams",
    "MissingParameterError",
    "condition_check",
    "preset",
    "preset_condition_check",
    "OdeCheck",
    "p3_ode_residual",
    "p3_parameters",
    "p3_solution",
    "umemura_terms",
    "verify_p3",
    "verify_p3_grid",
]
