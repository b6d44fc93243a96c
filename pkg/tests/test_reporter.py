import logging
from fractions import Fraction

import pytest

from src.conditions import modified_residual, riccati_descent, star_residual
from src.painleve import FamilyId, preset
from src.polyring import ONE, Poly
from src.polyring.bench import BenchRow
from src.recurrence import HCoeffs, HirotaSpec, SomosSpec, certificate, hirota_generate, somos_generate
from src.reporter import (
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
    latex_poly,
    loads,
    sequence_to_csv,
    sequence_to_latex,
    somos_to_csv,
    somos_to_latex,
)
from src.reporter.codec import decode_rational, encode_bench, encode_solutions
from src.reporter.utils import aggregate_events, load_journal_from_jsonl
from src.session.manager import RunJournal

X = Poly.x()


@pytest.fixture
def p2_report():
    spec = preset(FamilyId.P2)
    return hirota_generate(spec, 2), spec


@pytest.fixture
def failing_report():
    spec = HirotaSpec(f=ONE, g=ONE, h=HCoeffs(p=X), seed0=ONE, seed1=ONE)
    return hirota_generate(spec, 10), spec


def test_poly_encoding():
    assert encode_poly(Poly.from_ints([4, 0, 0, 1])) == {
        "variable": "x",
        "coeffs": [["4", "1"], ["0", "1"], ["0", "1"], ["1", "1"]],
    }
    assert encode_poly(Poly()) == {"variable": "x", "coeffs": []}


def test_poly_decoding_rejects_malformed():
    with pytest.raises(DecodeError):
        decode_poly({"variable": "y", "coeffs": []})
    with pytest.raises(DecodeError):
        decode_poly({"variable": "x", "coeffs": [["1", "1"], ["0", "1"]]})
    with pytest.raises(DecodeError):
        decode_rational(["1", "0"])


@pytest.mark.parametrize("fixture", ["p2_report", "failing_report"])
def test_sequence_json_reproduces_text(fixture, request):
    report, spec = request.getfixturevalue(fixture)
    text = dumps(encode_sequence(report, spec, "custom"))
    decoded, decoded_spec, family = decode_sequence(loads(text))
    assert decoded.polys == report.polys
    assert decoded.failure == report.failure
    assert dumps(encode_sequence(decoded, decoded_spec, family)) == text


def test_certified_sequence_reproduces_text():
    spec = preset(FamilyId.P2)
    text = dumps(encode_sequence(certificate(spec, 5), spec, "p2"))
    decoded, decoded_spec, family = decode_sequence(loads(text))
    assert decoded.certified
    assert family == "p2"
    assert dumps(encode_sequence(decoded, decoded_spec, family)) == text


def test_sequence_document_fields(failing_report):
    report, spec = failing_report
    doc = encode_sequence(report, spec, "custom")
    assert doc["kind"] == "sequence"
    assert doc["is_successful"] is False
    assert doc["failure"]["n"] == 4
    assert doc["entries"][-1]["coprime_with_next"] is None
    assert doc["entries"][3]["denominator_lcm"] == "1"


def test_decode_wrong_kind():
    with pytest.raises(DecodeError):
        decode_sequence({"kind": "somos"})


def test_residual_round_trip():
    f, g = (X * X - 1) ** 2, X * (X * X - 1)
    text = dumps(encode_residual(f, g, modified_residual(f, g, Fraction(1))))
    f2, g2, report = decode_residual(loads(text))
    assert (f2, g2) == (f, g)
    assert report.satisfied and report.beta == 1
    assert dumps(encode_residual(f2, g2, report)) == text


def test_residual_document_flags_failure():
    doc = encode_residual(ONE, ONE, star_residual(ONE, ONE))
    assert doc["satisfied"] is False
    assert doc["residual"]["coeffs"] == [["-2", "1"]]


def test_solutions_document():
    doc = encode_solutions(riccati_descent(X ** 3))
    assert doc["kind"] == "solutions"
    assert [decode_poly(g) for g in doc["solutions"]] == [
        (X ** 2).scale(Fraction(3, 2)),
        X ** 2,
    ]


def test_somos_round_trip():
    terms = somos_generate(SomosSpec(k=4, N=8))
    text = dumps(encode_somos(4, terms, None))
    assert decode_somos(loads(text)) == (4, terms, None)


def test_bench_infinite_speedup_is_null():
    doc = encode_bench([BenchRow(length=8, schoolbook_s=0.1, karatsuba_s=0.0, identical=True)], 32)
    assert doc["rows"][0]["speedup"] is None


@pytest.mark.parametrize("text", ["not json", "[1, 2]"])
def test_loads_rejects(text):
    with pytest.raises(DecodeError):
        loads(text)


def test_sequence_csv(p2_report):
    report, _ = p2_report
    assert sequence_to_csv(report).splitlines() == [
        "n,degree,denominator_lcm,coprime_with_next,squarefree,poly",
        "0,0,1,true,true,1",
        "1,1,1,true,true,x",
        "2,3,1,,true,x^3+4",
    ]


def test_sequence_csv_failure_row(failing_report):
    report, _ = failing_report
    assert sequence_to_csv(report).splitlines()[-1] == "4,,,,,not a polynomial"


def test_somos_csv():
    assert somos_to_csv(somos_generate(SomosSpec(k=4, N=8))) == "1,1,1,1,2,3,7,23,59\n"
    assert somos_to_csv([Fraction(1, 2), Fraction(3)]) == "1/2,3\n"


def test_latex(p2_report):
    report, _ = p2_report
    assert latex_poly(Poly((Fraction(-1, 3), Fraction(1), Fraction(-5, 2)))) == r"-\frac{5}{2}x^{2}+x-\frac{1}{3}"
    assert sequence_to_latex(report) == (
        "\\begin{align*}\n"
        "P_{0} &= 1 \\\\\n"
        "P_{1} &= x \\\\\n"
        "P_{2} &= x^{3}+4\n"
        "\\end{align*}\n"
    )
    assert somos_to_latex([Fraction(1), Fraction(1, 2)]) == "1,\\ \\frac{1}{2}\n"


def test_load_and_aggregate_journal(tmp_path):
    journal = RunJournal(run_id="run-123")
    journal.record("command", {"name": "generate"})
    journal.record("step_failure", {"n": 4, "errors": ["P_4 is not a polynomial"]})
    journal.record("flag_violation", {"n": 3, "warnings": ["P_3 has a repeated factor"]})
    path = tmp_path / "journal.jsonl"
    journal.save(path)

    run_id, events = load_journal_from_jsonl(path)
    assert run_id == "run-123"
    assert len(events) == 3
    agg = aggregate_events(events)
    assert agg["counts"]["command"] == 1
    assert agg["errors"] == ["P_4 is not a polynomial"]
    assert agg["warnings"] == ["P_3 has a repeated factor"]
    assert agg["commands"] == ["generate"]
    assert agg["failed_steps"] == [4]
    assert agg["flagged_terms"] == [3]
    assert len(journal.of_type("step_failure")) == 1


def test_journal_skips_malformed_lines(tmp_path, caplog):
    path = tmp_path / "journal.jsonl"
    path.write_text('{"run_id": "r", "ts": "t", "type": "command", "data": {}}\n{oops\n', encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        run_id, events = load_journal_from_jsonl(path)
    assert run_id == "r"
    assert len(events) == 1
    assert "malformed" in caplog.text
