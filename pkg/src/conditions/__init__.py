"""
Conditions Module

The polynomiality condition (*), its beta-modified variant, the closed
form of its solutions and the Riccati coefficient descent.
"""

from .residual import (
    ResidualReport,
    closed_form_u,
    g_from_u,
    modified_residual,
    star_residual,
    theorem2_solutions,
)
from .riccati import ContradictionTrace, RiccatiSolutionSet, riccati_descent, riccati_lhs
from .search import DegreeSummary, SearchReport, modified_evidence_search, structured_candidates

__all__ = [
    "ResidualReport",
    "closed_form_u",
    "g_from_u",
    "modified_residual",
    "star_residual",
    "theorem2_solutions",
    "ContradictionTrace",
    "RiccatiSolutionSet",
    "riccati_descent",
    "riccati_lhs",
    "DegreeSummary",
    "SearchReport",
    "modified_evidence_search",
    "structured_candidates",
]
