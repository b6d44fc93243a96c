"""
JSON encoding of every report the CLI emits.

Polynomials are ``{"variable": "x", "coeffs": [["num", "den"], ...]}`` in
ascending degree with integers as decimal strings; scalars use the same
``["num", "den"]`` pair. Documents carry a ``kind`` discriminator and are
described by schema/report.schema.json.

Sequence, residual and Somos documents decode back to the library
objects; ``dumps(encode(decode(doc)))`` reproduces the input text.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.conditions import ResidualReport, RiccatiSolutionSet, SearchReport, g_from_u
from src.painleve import OdeCheck
from src.polyring import Poly, RationalFunction
from src.polyring.bench import BenchRow
from src.recurrence import HCoeffs, HirotaSpec, SequenceReport, StepCheck, StepFailure

VARIABLE = "x"

Json = Dict[str, Any]


class DecodeError(ValueError):
    """A JSON document does not describe a report"""


# -- scalars and polynomials ----------------------------------------------

def encode_rational(c: Fraction) -> List[str]:
    c = Fraction(c)
    return [str(c.numerator), str(c.denominator)]


def decode_rational(pair: Sequence[str]) -> Fraction:
    try:
        num, den = pair
        return Fraction(int(num), int(den))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise DecodeError(f"bad rational {pair!r}: {e}") from e


def encode_poly(p: Poly) -> Json:
    return {"variable": VARIABLE, "coeffs": [encode_rational(c) for c in p.coeffs]}


def decode_poly(doc: Json) -> Poly:
    if doc.get("variable") != VARIABLE:
        raise DecodeError(f"unsupported variable {doc.get('variable')!r}")
    coeffs = tuple(decode_rational(pair) for pair in doc.get("coeffs", []))
    if coeffs and coeffs[-1] == 0:
        raise DecodeError("trailing zero coefficient")
    return Poly(coeffs)


def encode_ratfun(r: RationalFunction) -> Json:
    return {"num": encode_poly(r.num), "den": encode_poly(r.den)}


# -- recurrence specs and sequences ---------------------------------------

def encode_spec(spec: HirotaSpec) -> Json:
    return {
        "f": encode_poly(spec.f),
        "g": encode_poly(spec.g),
        "h": {
            "p": encode_poly(spec.h.p),
            "alpha": encode_rational(spec.h.alpha),
            "beta": encode_rational(spec.h.beta),
        },
        "seed0": encode_poly(spec.seed0),
        "seed1": encode_poly(spec.seed1),
    }


def decode_spec(doc: Json) -> HirotaSpec:
    h = doc["h"]
    return HirotaSpec(
        f=decode_poly(doc["f"]),
        g=decode_poly(doc["g"]),
        h=HCoeffs(p=decode_poly(h["p"]), alpha=decode_rational(h["alpha"]), beta=decode_rational(h["beta"])),
        seed0=decode_poly(doc["seed0"]),
        seed1=decode_poly(doc["seed1"]),
    )


def encode_sequence(report: SequenceReport, spec: HirotaSpec, family: str) -> Json:
    entries = []
    last = len(report.entries) - 1
    for i, (n, p) in enumerate(report.entries):
        entries.append({
            "n": n,
            "degree": report.degrees[i],
            "denominator_lcm": str(p.denominator_lcm),
            "coprime_with_next": report.coprimality_flags[i] if i < last else None,
            "squarefree": report.squarefree_flags[i],
            "poly": encode_poly(p),
        })
    failure = None
    if report.failure is not None:
        failure = {
            "n": report.failure.n,
            "remainder": encode_poly(report.failure.remainder),
            "divisor": encode_poly(report.failure.divisor),
        }
    return {
        "kind": "sequence",
        "family": family,
        "spec": encode_spec(spec),
        "strict": report.strict,
        "entries": entries,
        "failure": failure,
        "zero_term": report.zero_term,
        "checks": [
            {"n": c.n, "divides": c.divides, "coprime": c.coprime, "squarefree": c.squarefree}
            for c in report.checks
        ],
        "is_successful": report.is_successful,
        "certified": report.certified,
    }


def decode_sequence(doc: Json) -> Tuple[SequenceReport, HirotaSpec, str]:
    if doc.get("kind") != "sequence":
        raise DecodeError(f"expected a sequence document, got {doc.get('kind')!r}")
    entries_doc = doc["entries"]
    entries = [(e["n"], decode_poly(e["poly"])) for e in entries_doc]
    failure: Optional[StepFailure] = None
    if doc.get("failure") is not None:
        fd = doc["failure"]
        failure = StepFailure(n=fd["n"], remainder=decode_poly(fd["remainder"]), divisor=decode_poly(fd["divisor"]))
    report = SequenceReport(
        entries=entries,
        degrees=[e["degree"] for e in entries_doc],
        coprimality_flags=[e["coprime_with_next"] for e in entries_doc[:-1]],
        squarefree_flags=[e["squarefree"] for e in entries_doc],
        failure=failure,
        zero_term=doc.get("zero_term"),
        strict=doc.get("strict", False),
        checks=[StepCheck(**c) for c in doc.get("checks", [])],
    )
    return report, decode_spec(doc["spec"]), doc.get("family", "custom")


# -- conditions -------------------------------------------------------------

def encode_residual(f: Poly, g: Poly, report: ResidualReport) -> Json:
    return {
        "kind": "residual",
        "f": encode_poly(f),
        "g": encode_poly(g),
        "beta": encode_rational(report.beta),
        "residual": encode_poly(report.residual),
        "satisfied": report.satisfied,
    }


def decode_residual(doc: Json) -> Tuple[Poly, Poly, ResidualReport]:
    if doc.get("kind") != "residual":
        raise DecodeError(f"expected a residual document, got {doc.get('kind')!r}")
    report = ResidualReport(residual=decode_poly(doc["residual"]), beta=decode_rational(doc["beta"]))
    return decode_poly(doc["f"]), decode_poly(doc["g"]), report


def encode_solutions(result: RiccatiSolutionSet) -> Json:
    return {
        "kind": "solutions",
        "f": encode_poly(result.f),
        "beta": encode_rational(result.beta),
        "solutions": [encode_poly(g_from_u(u, result.f)) for u in result.solutions],
        "u": [encode_poly(u) for u in result.solutions],
        "contradiction_traces": [
            {"branch": t.branch, "coefficient": t.coefficient} for t in result.contradiction_traces
        ],
        "unresolved_families": list(result.unresolved_families),
    }


def encode_search(report: SearchReport) -> Json:
    return {
        "kind": "search",
        "deg_min": report.deg_min,
        "deg_max": report.deg_max,
        "trials": report.trials,
        "rng_seed": report.rng_seed,
        "beta": encode_rational(report.beta),
        "total_solutions": report.total_solutions,
        "degrees": [
            {
                "degree": d.degree,
                "candidates": d.candidates,
                "with_solutions": d.with_solutions,
                "contradictions": d.contradictions,
                "pairs": [{"f": encode_poly(f), "g": encode_poly(g)} for f, g in d.pairs],
            }
            for d in report.degrees
        ],
    }


# -- Somos, third Painleve checks, benchmark ----------------------------------

def encode_somos(k: int, terms: Sequence[Fraction], first_noninteger: Optional[int]) -> Json:
    return {
        "kind": "somos",
        "k": k,
        "terms": [encode_rational(a) for a in terms],
        "first_noninteger": first_noninteger,
    }


def decode_somos(doc: Json) -> Tuple[int, List[Fraction], Optional[int]]:
    if doc.get("kind") != "somos":
        raise DecodeError(f"expected a somos document, got {doc.get('kind')!r}")
    return doc["k"], [decode_rational(t) for t in doc["terms"]], doc.get("first_noninteger")


def encode_ode_checks(checks: Sequence[OdeCheck]) -> Json:
    return {
        "kind": "ode_check",
        "checks": [
            {
                "n": c.n,
                "c": encode_rational(c.c),
                "a": encode_rational(c.a),
                "b": encode_rational(c.b),
                "residual": encode_ratfun(c.residual),
                "pass": c.pass_,
            }
            for c in checks
        ],
        "all_pass": all(c.pass_ for c in checks),
    }


def encode_bench(rows: Sequence[BenchRow], threshold: int) -> Json:
    return {
        "kind": "bench",
        "threshold": threshold,
        "rows": [
            {
                "length": r.length,
                "schoolbook_s": r.schoolbook_s,
                "karatsuba_s": r.karatsuba_s,
                "speedup": r.speedup if math.isfinite(r.speedup) else None,
                "identical": r.identical,
            }
            for r in rows
        ],
    }


def dumps(doc: Json) -> str:
    """Canonical text form; key order is insertion order"""
    return json.dumps(doc, indent=2)


def loads(text: str) -> Json:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DecodeError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise DecodeError("a report must be a JSON object")
    return doc
