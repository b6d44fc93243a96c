"""
Report Validator

Validates the JSON reports emitted by the CLI. Schema validation checks
structure and encodings; semantic validation re-derives the facts a
report states about itself (degrees, indices, summary booleans) and
flags any disagreement.

Example:
    >>> validator = ReportValidator()
    >>> result = validator.validate_file("p2.json")
    >>> if not result.is_valid:
    ...     for error in result.errors:
    ...         print(error)
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import jsonschema

from src.reporter.codec import DecodeError, decode_poly, decode_rational

DEFAULT_SCHEMA_PATH = Path(__file__).parent.parent.parent / "schema" / "report.schema.json"

Issues = Tuple[List["ValidationError"], List["ValidationError"]]


@dataclass
class ValidationError:
    """A single problem found in a report"""
    path: str
    message: str
    severity: str = "error"  # "error", "warning"

    def __str__(self) -> str:
        return f"[{self.severity.upper()}] {self.path}: {self.message}"


@dataclass
class ValidationResult:
    is_valid: bool
    errors: List[ValidationError] = field(default_factory=list)
    warnings: List[ValidationError] = field(default_factory=list)

    @property
    def has_warnings(self) -> bool:
        return len(self.warnings) > 0

    def get_all_issues(self) -> List[ValidationError]:
        return self.errors + self.warnings


class ReportValidator:
    """Schema plus semantic validation of report documents"""

    def __init__(self, schema_path: Optional[Path] = None):
        self.schema_path = schema_path or DEFAULT_SCHEMA_PATH
        self.schema = self._load_schema()

    def _load_schema(self) -> Dict[str, Any]:
        try:
            with open(self.schema_path, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise RuntimeError(f"Failed to load schema from {self.schema_path}: {e}") from e

    def validate_file(self, report_path: Union[str, Path]) -> ValidationResult:
        try:
            with open(report_path, "r", encoding="utf-8") as f:
                report = json.load(f)
        except json.JSONDecodeError as e:
            return ValidationResult(is_valid=False, errors=[ValidationError("", f"Invalid JSON: {e}")])
        except OSError as e:
            return ValidationResult(is_valid=False, errors=[ValidationError("", f"Failed to read file: {e}")])
        return self.validate(report)

    def validate(self, report: Any) -> ValidationResult:
        schema_errors = self._validate_schema(report)
        if schema_errors:
            return ValidationResult(is_valid=False, errors=schema_errors)

        checker = {
            "sequence": self._validate_sequence,
            "somos": self._validate_somos,
            "residual": self._validate_residual,
            "ode_check": self._validate_ode_check,
            "certification": self._validate_certification,
        }.get(report["kind"])
        errors: List[ValidationError] = []
        warnings: List[ValidationError] = []
        if checker is not None:
            try:
                errors, warnings = checker(report, "root")
            except DecodeError as e:
                errors = [ValidationError("root", str(e))]
        return ValidationResult(is_valid=not errors, errors=errors, warnings=warnings)

    def _validate_schema(self, report: Any) -> List[ValidationError]:
        try:
            jsonschema.validate(instance=report, schema=self.schema)
        except jsonschema.ValidationError as e:
            path = ".".join(str(p) for p in e.path) if e.path else "root"
            return [ValidationError(path=path, message=e.message)]
        except jsonschema.SchemaError as e:
            return [ValidationError(path="schema", message=f"Invalid schema: {e.message}")]
        return []

    def _validate_sequence(self, doc: Dict[str, Any], base: str) -> Issues:
        errors: List[ValidationError] = []
        warnings: List[ValidationError] = []
        entries = doc["entries"]
        for i, entry in enumerate(entries):
            path = f"{base}.entries[{i}]"
            if entry["n"] != i:
                errors.append(ValidationError(path, f"index {entry['n']} out of sequence, expected {i}"))
            poly = decode_poly(entry["poly"])
            degree = int(poly.degree) if not poly.is_zero else -1
            if entry["degree"] != degree:
                errors.append(ValidationError(path, f"degree {entry['degree']} but polynomial has degree {degree}"))
            if entry["denominator_lcm"] != str(poly.denominator_lcm):
                errors.append(ValidationError(path, "denominator_lcm does not match the coefficients"))
            if i == len(entries) - 1 and entry["coprime_with_next"] is not None:
                errors.append(ValidationError(path, "last entry cannot carry a coprimality flag"))
            if entry["coprime_with_next"] is False:
                warnings.append(ValidationError(path, f"gcd(P_{i}, P_{i + 1}) is not constant", "warning"))
            if not entry["squarefree"]:
                warnings.append(ValidationError(path, f"P_{i} has a repeated factor", "warning"))

        failure = doc["failure"]
        if failure is not None and failure["n"] != len(entries):
            errors.append(ValidationError(f"{base}.failure", f"failure index {failure['n']} should be {len(entries)}"))
        if doc["zero_term"] is not None and doc["zero_term"] != len(entries):
            errors.append(ValidationError(f"{base}.zero_term", "zero term must follow the last entry"))
        successful = failure is None and doc["zero_term"] is None
        if doc["is_successful"] != successful:
            errors.append(ValidationError(f"{base}.is_successful", "disagrees with failure/zero_term"))
        if doc["certified"] and not doc["strict"]:
            errors.append(ValidationError(f"{base}.certified", "only strict runs can be certified"))
        return errors, warnings

    def _validate_somos(self, doc: Dict[str, Any], base: str) -> Issues:
        errors: List[ValidationError] = []
        first = next(
            (n for n, t in enumerate(doc["terms"]) if decode_rational(t).denominator != 1), None
        )
        if doc["first_noninteger"] != first:
            errors.append(ValidationError(f"{base}.first_noninteger", f"terms say {first}"))
        return errors, []

    def _validate_residual(self, doc: Dict[str, Any], base: str) -> Issues:
        errors: List[ValidationError] = []
        if doc["satisfied"] != decode_poly(doc["residual"]).is_zero:
            errors.append(ValidationError(f"{base}.satisfied", "disagrees with the residual"))
        return errors, []

    def _validate_ode_check(self, doc: Dict[str, Any], base: str) -> Issues:
        errors: List[ValidationError] = []
        for i, check in enumerate(doc["checks"]):
            path = f"{base}.checks[{i}]"
            a, b = decode_rational(check["a"]), decode_rational(check["b"])
            if a + b != 4 * check["n"]:
                errors.append(ValidationError(path, "a + b must equal 4n"))
            if check["pass"] != decode_poly(check["residual"]["num"]).is_zero:
                errors.append(ValidationError(path, "pass disagrees with the residual"))
        if doc["all_pass"] != all(c["pass"] for c in doc["checks"]):
            errors.append(ValidationError(f"{base}.all_pass", "disagrees with the checks"))
        return errors, []

    def _validate_certification(self, doc: Dict[str, Any], base: str) -> Issues:
        errors, warnings = self._validate_residual(doc["condition"], f"{base}.condition")
        seq_errors, seq_warnings = self._validate_sequence(doc["sequence"], f"{base}.sequence")
        errors.extend(seq_errors)
        warnings.extend(seq_warnings)
        expected = doc["condition"]["satisfied"] and doc["sequence"]["certified"]
        if doc["passed"] != expected:
            errors.append(ValidationError(f"{base}.passed", "disagrees with condition and certificate"))
        return errors, warnings
