"""CSV and LaTeX renderings of sequence and Somos reports."""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import List, Sequence

from src.polyring import Poly, format_poly, format_rational
from src.recurrence import SequenceReport

CSV_HEADER = ["n", "degree", "denominator_lcm", "coprime_with_next", "squarefree", "poly"]


def _flag(value: object) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def sequence_to_csv(report: SequenceReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    last = len(report.entries) - 1
    for i, (n, p) in enumerate(report.entries):
        writer.writerow([
            n,
            report.degrees[i],
            p.denominator_lcm,
            _flag(report.coprimality_flags[i] if i < last else None),
            _flag(report.squarefree_flags[i]),
            format_poly(p),
        ])
    if report.failure is not None:
        writer.writerow([report.failure.n, "", "", "", "", "not a polynomial"])
    elif report.zero_term is not None:
        writer.writerow([report.zero_term, "", "", "", "", "0"])
    return buf.getvalue()


def somos_to_csv(terms: Sequence[Fraction]) -> str:
    """One line of terms, e.g. ``1,1,1,1,2,3,7,23,59``"""
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow([format_rational(a) for a in terms])
    return buf.getvalue()


def latex_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_poly(p: Poly) -> str:
    """Descending powers, e.g. ``x^{6}+20x^{3}-\\frac{5}{2}``"""
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = latex_rational(mag)
        else:
            mono = "x" if k == 1 else f"x^{{{k}}}"
            body = mono if mag == 1 else latex_rational(mag) + mono
        if c < 0:
            parts.append("-" + body)
        else:
            parts.append(("+" if parts else "") + body)
    return "".join(parts)


def sequence_to_latex(report: SequenceReport, symbol: str = "P") -> str:
    lines = [r"\begin{align*}"]
    rows = [rf"{symbol}_{{{n}}} &= {latex_poly(p)}" for n, p in report.entries]
    lines.append(" \\\\\n".join(rows))
    lines.append(r"\end{align*}")
    return "\n".join(lines) + "\n"


def somos_to_latex(terms: Sequence[Fraction]) -> str:
    return ",\\ ".join(latex_rational(a) for a in terms) + "\n"
