"""
Validator Module

Provides validation for emitted JSON reports.
"""

from .report_validator import (
    ReportValidator,
    ValidationError,
    ValidationResult,
)

__all__ = [
    "ReportValidator",
    "ValidationResult",
    "ValidationError",
]
