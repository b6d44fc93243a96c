"""Click-based CLI for painleve-bilinear: generate, check, solve, search and verify.

stdout carries the serialized report, stderr the log. Exit codes:
0 success, 1 a checked property failed, 2 usage or parse error.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, List, NoReturn, Optional, Sequence

import click
from rich.console import Console
from rich.logging import RichHandler

from src.conditions import (
    modified_evidence_search,
    modified_residual,
    riccati_descent,
    star_residual,
    theorem2_solutions,
)
from src.config import ConfigError, EngineConfig
from src.orchestrator.pipeline import check_and_certify
from src.painleve import FamilyId, FamilyParams, MissingParameterError, preset, verify_p3_grid
from src.parser import ParseError, parse_poly, parse_rational
from src.polyring import DegenerateInputError, Poly, poly
from src.polyring.bench import benchmark_threshold
from src.recurrence import (
    HCoeffs,
    HirotaSpec,
    InvalidSpecError,
    SequenceReport,
    SomosDivisionError,
    SomosSpec,
    hirota_generate,
    somos_first_noninteger,
    somos_generate,
)
from src.reporter.codec import (
    dumps,
    encode_bench,
    encode_ode_checks,
    encode_residual,
    encode_search,
    encode_sequence,
    encode_solutions,
    encode_somos,
)
from src.reporter.formats import sequence_to_csv, sequence_to_latex, somos_to_csv, somos_to_latex
from src.reporter.utils import aggregate_events, load_journal_from_jsonl
from src.session.manager import RunJournal
from src.validator.report_validator import ReportValidator

logger = logging.getLogger(__name__)


class PolyParamType(click.ParamType):
    name = "polynomial"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Poly:
        if isinstance(value, Poly):
            return value
        try:
            return parse_poly(str(value))
        except ParseError as e:
            self.fail(str(e), param, ctx)


class RationalParamType(click.ParamType):
    name = "rational"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except ParseError as e:
            self.fail(str(e), param, ctx)


class RationalListParamType(click.ParamType):
    name = "rational-list"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> List[Fraction]:
        if isinstance(value, list):
            return value
        try:
            return [parse_rational(item) for item in str(value).split(",")]
        except ParseError as e:
            self.fail(str(e), param, ctx)


POLY = PolyParamType()
RATIONAL = RationalParamType()
RATIONAL_LIST = RationalListParamType()


@dataclass
class CliState:
    config: EngineConfig
    journal: RunJournal


def _setup_logging(config: EngineConfig) -> None:
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
    logging.basicConfig(level=config.level, format="%(message)s", handlers=[handler], force=True)


@click.group()
@click.option("--verbose", is_flag=True, default=False, help="Log every step at DEBUG level")
@click.option("--journal", "journal_path", type=click.Path(dir_okay=False), default=None,
              help="Write lifecycle events of this run as JSONL")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Threads for independent work items (search, verify-p3)")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, journal_path: Optional[str], workers: Optional[int]) -> None:
    """Painleve special polynomials and bilinear recurrences, exactly."""
    try:
        config = EngineConfig.from_env().with_flags(workers=workers, verbose=verbose)
    except ConfigError as e:
        raise click.UsageError(str(e))
    _setup_logging(config)
    journal = RunJournal()
    journal.record("command", {"name": ctx.invoked_subcommand, "workers": config.workers})
    ctx.obj = CliState(config=config, journal=journal)
    if journal_path:
        ctx.call_on_close(lambda: journal.save(journal_path))


def _state(ctx: click.Context) -> CliState:
    return ctx.find_root().obj


def _fail(ctx: click.Context, event: str, errors: Sequence[str]) -> NoReturn:
    _state(ctx).journal.record(event, {"errors": list(errors)})
    for e in errors:
        logger.error(e)
    raise SystemExit(1)


# -- family selection shared by generate and certify -------------------------

def family_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--family", type=click.Choice([f.value for f in FamilyId]), default="custom",
                     show_default=True, help="Preset family, or custom with --f/--g/--p"),
        click.option("--c", "c", type=RATIONAL, default=None, help="Parameter c (p3, p6)"),
        click.option("--v", "v", type=RATIONAL, default=None, help="Parameter v (p5)"),
        click.option("--f", "f", type=POLY, default=None, help="f(x) for custom"),
        click.option("--g", "g", type=POLY, default=None, help="g(x) for custom"),
        click.option("--p", "p", type=POLY, default=None, help="p(x) of h_n for custom"),
        click.option("--alpha", type=RATIONAL, default="0", help="alpha of h_n for custom"),
        click.option("--beta", type=RATIONAL, default="0", help="beta of h_n for custom"),
        click.option("--p0", type=POLY, default="1", help="seed P_0 for custom"),
        click.option("--p1", type=POLY, default="x", help="seed P_1 for custom"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _build_spec(family: str, c: Optional[Fraction], v: Optional[Fraction], f: Optional[Poly],
                g: Optional[Poly], p: Optional[Poly], alpha: Fraction, beta: Fraction,
                p0: Poly, p1: Poly) -> HirotaSpec:
    fid = FamilyId(family)
    try:
        if fid is not FamilyId.CUSTOM:
            return preset(fid, FamilyParams(c=c, v=v))
        missing = [name for name, val in (("--f", f), ("--g", g), ("--p", p)) if val is None]
        if missing:
            raise click.UsageError(f"custom family needs {', '.join(missing)}")
        return HirotaSpec(f=f, g=g, h=HCoeffs(p=p, alpha=alpha, beta=beta),  # type: ignore[arg-type]
                          seed0=p0, seed1=p1)
    except (MissingParameterError, InvalidSpecError) as e:
        raise click.UsageError(str(e))


def _journal_sequence(journal: RunJournal, report: SequenceReport) -> None:
    if report.failure is not None:
        journal.record("step_failure", {"n": report.failure.n,
                                        "errors": [f"P_{report.failure.n} is not a polynomial"]})
    for i, ok in enumerate(report.coprimality_flags):
        if not ok:
            journal.record("flag_violation", {"n": i, "warnings": [f"gcd(P_{i}, P_{i + 1}) not constant"]})
    for i, ok in enumerate(report.squarefree_flags):
        if not ok:
            journal.record("flag_violation", {"n": i, "warnings": [f"P_{i} not squarefree"]})


@cli.command()
@family_options
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Generate P_0..P_N")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "latex"]), default="json", show_default=True)
@click.pass_context
def generate(ctx: click.Context, family: str, c: Optional[Fraction], v: Optional[Fraction],
             f: Optional[Poly], g: Optional[Poly], p: Optional[Poly], alpha: Fraction, beta: Fraction,
             p0: Poly, p1: Poly, n: int, fmt: str) -> None:
    """Generate P_0..P_N of a bilinear recurrence."""
    spec = _build_spec(family, c, v, f, g, p, alpha, beta, p0, p1)
    report = hirota_generate(spec, n)
    _journal_sequence(_state(ctx).journal, report)
    if fmt == "json":
        click.echo(dumps(encode_sequence(report, spec, family)))
    elif fmt == "csv":
        click.echo(sequence_to_csv(report), nl=False)
    else:
        click.echo(sequence_to_latex(report), nl=False)
    if not report.is_successful:
        raise SystemExit(1)


@cli.command()
@click.option("--k", "k", type=int, required=True, help="Somos order (>= 4)")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Compute a_0..a_N")
@click.option("--seeds", type=RATIONAL_LIST, default=None, help="Comma-separated a_0..a_{k-1}; default all 1")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "latex"]), default="csv", show_default=True)
@click.option("--expect-integral", is_flag=True, default=False, help="Exit 1 if any term is not an integer")
@click.pass_context
def somos(ctx: click.Context, k: int, n: int, seeds: Optional[List[Fraction]], fmt: str,
          expect_integral: bool) -> None:
    """Somos-k sequence over exact rationals."""
    try:
        spec = SomosSpec(k=k, N=n, seeds=tuple(seeds or ()))
    except InvalidSpecError as e:
        raise click.UsageError(str(e))
    try:
        terms = somos_generate(spec)
    except SomosDivisionError as e:
        _fail(ctx, "step_failure", [str(e)])
    first = somos_first_noninteger(spec)
    if fmt == "json":
        click.echo(dumps(encode_somos(k, terms, first)))
    elif fmt == "csv":
        click.echo(somos_to_csv(terms), nl=False)
    else:
        click.echo(somos_to_latex(terms), nl=False)
    if expect_integral and first is not None:
        _fail(ctx, "verification", [f"a_{first} = {terms[first]} is not an integer"])


@cli.command(name="check-star")
@click.option("--f", "f", type=POLY, required=True)
@click.option("--g", "g", type=POLY, required=True)
@click.option("--beta", type=RATIONAL, default="0", help="Check (*) + 2*beta*f = 0 instead of (*)")
@click.pass_context
def check_star(ctx: click.Context, f: Poly, g: Poly, beta: Fraction) -> None:
    """Evaluate the polynomiality condition for (f, g)."""
    report = star_residual(f, g) if beta == 0 else modified_residual(f, g, beta)
    _state(ctx).journal.record("verification", {"check": "condition", "satisfied": report.satisfied})
    click.echo(dumps(encode_residual(f, g, report)))
    if not report.satisfied:
        raise SystemExit(1)


@cli.command(name="solve-g")
@click.option("--f", "f", type=POLY, required=True)
@click.option("--beta", type=RATIONAL, default="0")
@click.pass_context
def solve_g(ctx: click.Context, f: Poly, beta: Fraction) -> None:
    """All polynomial g solving the condition for a given f."""
    try:
        result = riccati_descent(f, beta)
        closed = theorem2_solutions(f) if beta == 0 else None
    except DegenerateInputError as e:
        raise click.BadParameter(str(e), param_hint="--f")
    click.echo(dumps(encode_solutions(result)))
    if closed is not None:
        found = sorted((u + f.derivative().scale(Fraction(1, 2)) for u in result.solutions), key=Poly.sort_key)
        if found != closed:
            _fail(ctx, "verification", ["coefficient descent and closed form disagree"])


@cli.command()
@click.option("--deg-min", type=click.IntRange(min=1), required=True)
@click.option("--deg-max", type=click.IntRange(min=1), required=True)
@click.option("--trials", type=click.IntRange(min=1), required=True, help="Random f per degree")
@click.option("--rng-seed", type=int, required=True)
@click.option("--beta", type=RATIONAL, default="1", show_default=True)
@click.option("--expect-none", is_flag=True, default=False, help="Exit 1 if any solution is found")
@click.pass_context
def search(ctx: click.Context, deg_min: int, deg_max: int, trials: int, rng_seed: int, beta: Fraction,
           expect_none: bool) -> None:
    """Search for solutions of the modified condition per degree of f."""
    if deg_max < deg_min:
        raise click.BadParameter("must be >= --deg-min", param_hint="--deg-max")
    report = modified_evidence_search(deg_min, deg_max, trials, rng_seed, beta=beta,
                                      workers=_state(ctx).config.workers)
    click.echo(dumps(encode_search(report)))
    if expect_none and report.total_solutions:
        _fail(ctx, "verification", [f"{report.total_solutions} solution pairs found"])


@cli.command(name="verify-p3")
@click.option("--n", "ns", type=click.IntRange(min=0), multiple=True, required=True)
@click.option("--c", "cs", type=RATIONAL, multiple=True, required=True)
@click.pass_context
def verify_p3_cmd(ctx: click.Context, ns: Sequence[int], cs: Sequence[Fraction]) -> None:
    """Substitute the Umemura-polynomial solution into the third Painleve equation."""
    try:
        checks = verify_p3_grid(ns, cs, workers=_state(ctx).config.workers)
    except ZeroDivisionError as e:
        _fail(ctx, "verification", [str(e)])
    _state(ctx).journal.record("verification", {"check": "p3", "passed": [c.pass_ for c in checks]})
    click.echo(dumps(encode_ode_checks(checks)))
    failed = [f"n={c.n}, c={c.c}" for c in checks if not c.pass_]
    if failed:
        _fail(ctx, "verification", [f"nonzero residual at {x}" for x in failed])


@cli.command()
@family_options
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.pass_context
def certify(ctx: click.Context, family: str, c: Optional[Fraction], v: Optional[Fraction],
            f: Optional[Poly], g: Optional[Poly], p: Optional[Poly], alpha: Fraction, beta: Fraction,
            p0: Poly, p1: Poly, n: int) -> None:
    """Condition check plus divisibility certificate up to N."""
    spec = _build_spec(family, c, v, f, g, p, alpha, beta, p0, p1)
    result = check_and_certify(spec, n)
    journal = _state(ctx).journal
    if result.sequence is not None:
        _journal_sequence(journal, result.sequence)
    doc = {
        "kind": "certification",
        "condition": encode_residual(spec.f, spec.g, result.condition),
        "sequence": encode_sequence(result.sequence, spec, family),  # type: ignore[arg-type]
        "passed": result.passed,
    }
    click.echo(dumps(doc))
    if not result.passed:
        _fail(ctx, "verification", result.errors)


@cli.command()
@click.option("--lengths", default="8,16,24,32,48,64,128", show_default=True, help="Comma-separated operand lengths")
@click.option("--bits", type=click.IntRange(min=8), default=256, show_default=True)
@click.option("--repeats", type=click.IntRange(min=1), default=3, show_default=True)
@click.pass_context
def bench(ctx: click.Context, lengths: str, bits: int, repeats: int) -> None:
    """Time schoolbook against Karatsuba multiplication."""
    try:
        sizes = [int(x) for x in lengths.split(",")]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers", param_hint="--lengths")
    if any(s < 1 for s in sizes):
        raise click.BadParameter("lengths must be positive", param_hint="--lengths")
    rows = benchmark_threshold(sizes, bits=bits, repeats=repeats)
    click.echo(dumps(encode_bench(rows, poly.KARATSUBA_THRESHOLD)))
    if not all(r.identical for r in rows):
        _fail(ctx, "verification", ["kernels disagree"])


@cli.command(name="validate-report")
@click.argument("report_file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def validate_report(ctx: click.Context, report_file: str) -> None:
    """Validate a JSON report against the schema and its own claims."""
    result = ReportValidator().validate_file(Path(report_file))
    if result.is_valid:
        click.echo("VALID: Report passed validation")
        if result.has_warnings:
            click.echo("Warnings:")
            for w in result.warnings:
                click.echo(f"  - {w}")
    else:
        click.echo("INVALID: Errors found")
        for issue in result.get_all_issues():
            click.echo(f"  - {issue}")
        _fail(ctx, "verification", [str(e) for e in result.errors])


@cli.command(name="journal-summary")
@click.argument("journal_file", type=click.Path(exists=True, dir_okay=False))
def journal_summary(journal_file: str) -> None:
    """Summarize a JSONL run journal written with --journal."""
    run_id, events = load_journal_from_jsonl(journal_file)
    summary = aggregate_events(events)
    click.echo(json.dumps({"run_id": run_id, "events": len(events), **summary}, indent=2))


if __name__ == "__main__":
    cli()
