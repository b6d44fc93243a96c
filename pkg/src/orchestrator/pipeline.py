"""
Orchestrator pipeline: condition check then certificate

Glues the polynomiality condition and the divisibility certificate into
one result, so a family is certified only when (f, g) satisfy the
condition for the HirotaSpec's beta and every generated step divides exactly
with constant gcds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from src.conditions import ResidualReport
from src.painleve import condition_check
from src.recurrence import HirotaSpec, SequenceReport, certificate


@dataclass
class CertificationResult:
    condition: ResidualReport
    sequence: Optional[SequenceReport]
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors


def check_and_certify(spec: HirotaSpec, N: int, run_when_unsatisfied: bool = True) -> CertificationResult:
    """
    Check the condition for spec, then run certificate(spec, N).

    With run_when_unsatisfied=False the certificate is skipped (sequence is
    None) when the condition fails.
    """
    condition = condition_check(spec)
    result = CertificationResult(condition=condition, sequence=None)
    if not condition.satisfied:
        result.errors.append(f"condition residual is nonzero: {condition.residual}")
        if not run_when_unsatisfied:
            return result

    seq = certificate(spec, N)
    result.sequence = seq
    if seq.failure is not None:
        result.errors.append(f"P_{seq.failure.n} is not a polynomial")
    if seq.zero_term is not None:
        result.errors.append(f"P_{seq.zero_term} vanished")
    for i, ok in enumerate(seq.coprimality_flags):
        if not ok:
            result.errors.append(f"gcd(P_{i}, P_{i + 1}) is not constant")
    for i, ok in enumerate(seq.squarefree_flags):
        if not ok:
            result.warnings.append(f"P_{i} has a repeated factor")
    if not seq.certified and seq.is_successful and not result.errors:
        result.errors.append("certificate assertions failed")
    return result
