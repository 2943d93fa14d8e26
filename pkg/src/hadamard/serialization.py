"""File formats for emitted point sets, stick figures and Hilbert function reports.

Coordinates are always written as canonical integers in decimal strings, so
two runs can be compared byte for byte. JSON documents are pydantic models;
point sets can also be written as CSV with a mandatory header row.
"""

import csv
import io
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError

from src.enums import OutputFormat, ValidationCode
from src.hadamard.construction import AConfig, StickFigure, intersect_lines, ruling_planes
from src.hadamard.errors import DegenerateInputError, ValidationError
from src.hadamard.exactq import to_rational
from src.hadamard.gorenstein import GorensteinResult
from src.hadamard.projgeom import ProjPoint
from src.hadamard.verify import HFReport, StickReport


class ConfigModel(BaseModel):
    """The four points of P^1 as "alpha/beta" strings and the two index sets."""

    A: list[str]
    Ia: list[int]
    Ib: list[int]


class PointFile(BaseModel):
    """A point set, optionally with the h-vector and configuration it came from."""

    h_vector: list[int] | None = None
    config: ConfigModel | None = None
    points: list[list[str | int]]
    labels: list[str] | None = None
    verified: bool | None = None


class LineEntry(BaseModel):
    cell: list[int]
    forms: list[list[str]]
    text: str


class MeetEntry(BaseModel):
    lines: list[list[int]]
    point: list[str]


class StickCheckModel(BaseModel):
    passed: bool
    pairs_checked: int
    failure: str | None = None


class StickFile(BaseModel):
    """Lines, pairwise meets and ruling planes of a stick figure."""

    config: ConfigModel
    a: int
    b: int
    lines: list[LineEntry]
    intersections: list[MeetEntry] = Field(default_factory=list)
    row_planes: list[list[str]]
    column_planes: list[list[str]]
    check: StickCheckModel


class HFValue(BaseModel):
    degree: int
    value: int


class HFFile(BaseModel):
    values: list[HFValue]
    h_vector: list[int]
    stabilized_at: int
    points: int


def _strings(values) -> list[str]:
    return [str(x) for x in values]


def config_model(cfg: AConfig) -> ConfigModel:
    return ConfigModel(
        A=[f"{alpha}/{beta}" for alpha, beta in zip(cfg.alpha, cfg.beta)],
        Ia=list(cfg.ia.indices),
        Ib=list(cfg.ib.indices),
    )


def gorenstein_document(result: GorensteinResult, cfg: AConfig, verified: bool | None = None) -> PointFile:
    return PointFile(
        h_vector=list(result.h.entries),
        config=config_model(cfg),
        points=[_strings(p.coords) for p in result.points],
        labels=result.labels,
        verified=verified,
    )


def stick_document(sf: StickFigure, report: StickReport) -> StickFile:
    lines = [
        LineEntry(cell=[i, j], forms=[_strings(f.coords) for f in sf.lines[i, j].forms], text=str(sf.lines[i, j]))
        for i, j in sf.cells()
    ]
    intersections = []
    cells = sf.cells()
    for index, first in enumerate(cells):
        for second in cells[index + 1:]:
            if (first[0] == second[0]) != (first[1] == second[1]):
                point = intersect_lines(sf, first, second)
                if point is not None:
                    intersections.append(MeetEntry(lines=[list(first), list(second)], point=_strings(point.coords)))
    row_planes, column_planes = ruling_planes(sf)
    return StickFile(
        config=config_model(sf.config),
        a=len(sf.rows),
        b=len(sf.columns),
        lines=lines,
        intersections=intersections,
        row_planes=[_strings(f.coords) for f in row_planes],
        column_planes=[_strings(f.coords) for f in column_planes],
        check=StickCheckModel(passed=report.passed, pairs_checked=report.pairs_checked, failure=report.failure),
    )


def hf_document(report: HFReport, count: int) -> HFFile:
    return HFFile(
        values=[HFValue(degree=d, value=v) for d, v in report.values],
        h_vector=list(report.h_vector),
        stabilized_at=report.stabilized_at,
        points=count,
    )


def render_points(document: PointFile, fmt: OutputFormat = OutputFormat.JSON) -> str:
    """JSON text of the document, or CSV with columns x0..xn and an optional label."""
    if fmt is OutputFormat.JSON:
        return document.model_dump_json(indent=2, exclude_none=True) + "\n"
    width = len(document.points[0]) if document.points else 4
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = [f"x{i}" for i in range(width)]
    if document.labels is not None:
        header.append("label")
    writer.writerow(header)
    for index, row in enumerate(document.points):
        cells = [str(x) for x in row]
        if document.labels is not None:
            cells.append(document.labels[index])
        writer.writerow(cells)
    return buffer.getvalue()


def render_hf(document: HFFile, fmt: OutputFormat = OutputFormat.JSON) -> str:
    if fmt is OutputFormat.JSON:
        return document.model_dump_json(indent=2) + "\n"
    lines = ["degree,hf"] + [f"{v.degree},{v.value}" for v in document.values]
    return "\n".join(lines) + "\n"


def _point(values: list[str | int], where: str) -> ProjPoint:
    try:
        return ProjPoint(tuple(to_rational(v) for v in values))
    except (ValueError, ZeroDivisionError, DegenerateInputError) as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"bad point {values} at {where}") from e


def parse_points(text: str, fmt: OutputFormat) -> list[ProjPoint]:
    """Points from JSON (a PointFile) or CSV text.

    Raises:
        ValidationError: MALFORMED_INPUT on any parse failure
    """
    if fmt is OutputFormat.JSON:
        try:
            document = PointFile.model_validate_json(text)
        except PydanticValidationError as e:
            raise ValidationError(ValidationCode.MALFORMED_INPUT, f"not a point file: {e.error_count()} errors") from e
        rows = document.points
    else:
        reader = list(csv.reader(io.StringIO(text)))
        if not reader or not reader[0] or reader[0][0].strip() != "x0":
            raise ValidationError(ValidationCode.MALFORMED_INPUT, "CSV point file needs an x0,x1,... header")
        header = reader[0]
        width = sum(1 for name in header if name.strip().startswith("x"))
        rows = []
        for index, row in enumerate(line for line in reader[1:] if line):
            if len(row) != len(header):
                raise ValidationError(
                    ValidationCode.MALFORMED_INPUT, f"row {index} has {len(row)} fields, not {len(header)}", index
                )
            rows.append(row[:width])
    if not rows:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, "point file holds no points")
    width = len(rows[0])
    points = []
    for index, row in enumerate(rows):
        if len(row) != width:
            raise ValidationError(
                ValidationCode.MALFORMED_INPUT, f"row has {len(row)} coordinates, expected {width}", index
            )
        points.append(_point(row, f"row {index}"))
    return points


def read_points(path: str | Path) -> list[ProjPoint]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"{path} is not UTF-8 text") from e
    return parse_points(text, OutputFormat.from_path(str(path)))
