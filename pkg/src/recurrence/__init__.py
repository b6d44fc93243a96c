"""
Recurrence Module

Hirota bilinear recurrences for special polynomials and Somos-k
sequences over exact rationals.
"""

from .hirota import (
    HCoeffs,
    HirotaSpec,
    InvalidSpecError,
    SequenceReport,
    StepCheck,
    StepFailure,
    certificate,
    h_at,
    hirota_generate,
    hirota_rhs,
    hirota_step,
    reconstruct_ok,
)
from .somos import (
    SomosDivisionError,
    SomosSpec,
    is_integral,
    somos_first_noninteger,
    somos_generate,
)

__all__ = [
    "HCoeffs",
    "HirotaSpec",
    "InvalidSpecError",
    "SequenceReport",
    "StepCheck",
    "StepFailure",
    "certificate",
    "h_at",
    "hirota_generate",
    "hirota_rhs",
    "hirota_step",
    "reconstruct_ok",
    "SomosDivisionError",
    "SomosSpec",
    "is_integral",
    "somos_first_noninteger",
    "somos_generate",
]
