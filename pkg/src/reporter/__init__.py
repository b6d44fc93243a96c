"""
Reporter Module

Serializes reports as JSON, CSV and LaTeX and summarizes run journals.
"""

from .codec import (
    DecodeError,
    decode_poly,
    decode_residual,
    decode_sequence,
    decode_somos,
    dumps,
    encode_poly,
    encode_residual,
    encode_sequence,
    encode_somos,
    loads,
)
from .formats import latex_poly, sequence_to_csv, sequence_to_latex, somos_to_csv, somos_to_latex
from .utils import aggregate_events, load_journal_from_jsonl

__all__ = [
    "DecodeError",
    "decode_poly",
    "decode_residual",
    "decode_sequence",
    "decode_somos",
    "dumps",
    "encode_poly",
    "encode_residual",
    "encode_sequence",
    "encode_somos",
    "loads",
    "latex_poly",
    "sequence_to_csv",
    "sequence_to_latex",
    "somos_to_csv",
    "somos_to_latex",
    "aggregate_events",
    "load_journal_from_jsonl",
]
