"""Command-line interface for the hadamard-gorenstein toolkit.

Sub-commands build Gorenstein point sets and stick figures from an h-vector
and a configuration of four points of P^1, compute Hilbert functions of point
files, check SI-sequences and multiply points coordinate-wise.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from pathlib import Path

import click
from pydantic import ValidationError as PydanticValidationError

from src.config import Config
from src.enums import Command, OutputFormat, ValidationCode
from src.hadamard.construction import AConfig, stick_figure, validate_config
from src.hadamard.errors import HadamardError, InvariantViolation, ValidationError
from src.hadamard.exactq import to_rational
from src.hadamard.gorenstein import gorenstein_points
from src.hadamard.hvector import HVector, make_profile, residual_b
from src.hadamard.projgeom import ProjPoint, hadamard_point
from src.hadamard.serialization import (
    gorenstein_document,
    hf_document,
    read_points,
    render_hf,
    render_points,
    stick_document,
)
from src.hadamard.verify import PointSet, check_gorenstein, check_stick_figure, h_vector_of
from src.monitoring import get_logger, initialize_monitoring, metrics, track_operation

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

logger = get_logger("hadamard.cli")

FORMAT_CHOICE = click.Choice([fmt.value for fmt in OutputFormat])


def _parse_int_list(text: str, name: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"{name} must be comma-separated integers") from e


def _parse_point(text: str, name: str) -> ProjPoint:
    try:
        return ProjPoint(tuple(to_rational(part) for part in text.split(",")))
    except (ValueError, ZeroDivisionError, HadamardError) as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"{name} is not a point: {text!r}") from e


def _build_config(
    config: Config, ratios: str | None, ia: str | None, ib: str | None, rows: int, columns: int
) -> AConfig:
    pairs = ratios.split(",") if ratios else config.default_ratio_pairs
    ia_list = _parse_int_list(ia, "--Ia") if ia else config.default_index_set(rows)
    ib_list = _parse_int_list(ib, "--Ib") if ib else config.default_index_set(columns)
    return validate_config([pair.strip() for pair in pairs], ia_list, ib_list)


def _resolve_format(fmt: str | None, output: str | None) -> OutputFormat:
    if fmt:
        return OutputFormat(fmt)
    return OutputFormat.from_path(output) if output else OutputFormat.JSON


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("wrote output", path=output, size=len(text))
    else:
        click.echo(text, nl=False)


def _fail(ctx: click.Context, error: Exception, code: int = EXIT_INPUT) -> None:
    if isinstance(error, ValidationError):
        click.echo(f"error: {error.code.value}: {error}", err=True)
    else:
        click.echo(f"error: {error}", err=True)
    ctx.exit(code)


def ratio_options(function):
    """Shared --A, --Ia and --Ib options."""
    function = click.option("--Ib", "ib", default=None, help="Comma-separated Q indices (default: 0,2,4,...)")(function)
    function = click.option("--Ia", "ia", default=None, help="Comma-separated P indices (default: 0,2,4,...)")(function)
    function = click.option(
        "--A", "ratios", default=None, help="Four comma-separated points of P^1 written alpha/beta"
    )(function)
    return function


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help="Logging level (logs go to stderr)",
)
@click.option("--structured-logging/--plain-logging", default=None, help="Emit JSON log lines")
@click.option("--hf-degree-cap", type=int, default=None, help="Highest degree tried for Hilbert functions")
@click.pass_context
def cli(ctx, log_level, structured_logging, hf_degree_cap):
    """Gorenstein point sets from Hadamard products of lines."""
    try:
        config = Config.from_options(
            LOG_LEVEL=log_level, STRUCTURED_LOGGING=structured_logging, HF_DEGREE_CAP=hf_degree_cap
        )
    except PydanticValidationError as e:
        raise click.UsageError(f"invalid configuration: {e.errors()[0]['msg']}") from e
    initialize_monitoring(config)
    ctx.obj = config


@cli.command(Command.GORENSTEIN.value)
@click.option("--h", "h_text", required=True, help="The h-vector, e.g. 1,3,4,3,1")
@ratio_options
@click.option("--output", "-o", default=None, help="Write the point file here instead of stdout")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=None, help="json or csv (default: from --output)")
@click.option("--verify", is_flag=True, default=False, help="Recompute the h-vector of the emitted points")
@click.pass_context
def gorenstein_command(ctx, h_text, ratios, ia, ib, output, fmt, verify):
    """Emit the Gorenstein set of points with h-vector --h."""
    config: Config = ctx.obj
    try:
        with track_operation(Command.GORENSTEIN.value, h=h_text):
            profile = make_profile(HVector.parse(h_text))
            cfg = _build_config(config, ratios, ia, ib, profile.rows, profile.columns)
            result = gorenstein_points(profile, cfg)
    except HadamardError as e:
        _fail(ctx, e)

    verified = None
    if verify:
        try:
            with track_operation("verify", points=len(result)):
                check = check_gorenstein(result, cfg, config.HF_DEGREE_CAP)
        except InvariantViolation as e:
            _fail(ctx, e, EXIT_VERIFY)
        verified = check.passed
        click.echo(f"h-vector of the emitted points: ({','.join(map(str, check.h_vector))})", err=True)

    _emit(render_points(gorenstein_document(result, cfg, verified), _resolve_format(fmt, output)), output)
    logger.info("gorenstein finished", points=len(result), stats=metrics.get_stats())
    if verified is False:
        click.echo(f"error: verification failed for h = {profile.h}", err=True)
        ctx.exit(EXIT_VERIFY)
    ctx.exit(EXIT_OK)


@cli.command(Command.STICK.value)
@click.option("--a", "a", type=int, required=True, help="Number of rows (P indices)")
@click.option("--b", "b", type=int, required=True, help="Number of columns (Q indices)")
@ratio_options
@click.option("--output", "-o", default=None, help="Write the JSON document here instead of stdout")
@click.pass_context
def stick_command(ctx, a, b, ratios, ia, ib, output):
    """Emit the a x b stick figure, its meets and ruling planes."""
    config: Config = ctx.obj
    try:
        with track_operation(Command.STICK.value, a=a, b=b):
            cfg = _build_config(config, ratios, ia, ib, a, b)
            figure = stick_figure(cfg, a, b)
            report = check_stick_figure(figure)
            document = stick_document(figure, report)
    except HadamardError as e:
        _fail(ctx, e)

    _emit(document.model_dump_json(indent=2) + "\n", output)
    if not report.passed:
        click.echo(f"error: stick figure check failed: {report.failure}", err=True)
        ctx.exit(EXIT_VERIFY)
    ctx.exit(EXIT_OK)


@cli.command(Command.HF.value)
@click.argument("points_file", type=click.Path(dir_okay=False))
@click.option("--max-degree", type=int, default=None, help="Highest degree tried (default: number of points)")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=OutputFormat.JSON.value, help="Report format")
@click.option("--output", "-o", default=None, help="Write the report here instead of stdout")
@click.pass_context
def hf_command(ctx, points_file, max_degree, fmt, output):
    """Print the Hilbert function and h-vector of the points in POINTS_FILE."""
    config: Config = ctx.obj
    cap = max_degree if max_degree is not None else config.HF_DEGREE_CAP
    try:
        with track_operation(Command.HF.value, path=points_file):
            point_set = PointSet(tuple(read_points(points_file)))
            report = h_vector_of(point_set, cap)
    except InvariantViolation as e:
        _fail(ctx, e, EXIT_VERIFY)
    except HadamardError as e:
        _fail(ctx, e)

    _emit(render_hf(hf_document(report, len(point_set)), OutputFormat(fmt)), output)
    ctx.exit(EXIT_OK)


@cli.command(Command.CHECK_SI.value)
@click.option("--h", "h_text", required=True, help="The h-vector, e.g. 1,3,4,3,1")
@click.pass_context
def check_si_command(ctx, h_text):
    """Exit 0 when --h is an SI-sequence with h_1 = 3, printing s, t, a, g and b."""
    try:
        profile = make_profile(HVector.parse(h_text))
        b = residual_b(profile)
    except HadamardError as e:
        _fail(ctx, e)

    def joined(values):
        return ",".join(str(x) for x in values)

    click.echo(f"s={profile.s}")
    click.echo(f"t={profile.t}")
    click.echo(f"a={joined(profile.a)}")
    click.echo(f"g={joined(profile.g)}")
    click.echo(f"b={joined(b)}")
    ctx.exit(EXIT_OK)


@cli.command(Command.HADAMARD.value)
@click.option("--p", "p_text", required=True, help="First point, comma-separated rationals")
@click.option("--q", "q_text", required=True, help="Second point, comma-separated rationals")
@click.pass_context
def hadamard_command(ctx, p_text, q_text):
    """Print the canonical Hadamard product of two points."""
    try:
        product = hadamard_point(_parse_point(p_text, "--p"), _parse_point(q_text, "--q"))
    except HadamardError as e:
        _fail(ctx, e)
    click.echo(str(product))
    ctx.exit(EXIT_OK)


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    try:
        result = cli.main(args=argv, prog_name="hadamard-gorenstein", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INPUT
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    finally:
        Config.reset()
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
