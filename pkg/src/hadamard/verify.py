"""Independent checks on constructed point sets and stick figures.

The Hilbert function of a finite set of distinct points X in P^n is the rank
of the evaluation matrix whose rows are the points and whose columns are the
monomials of degree d. It grows until it reaches |X| and stays there; its
first difference is the h-vector of X.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations
import logging
from math import comb, prod

from src.enums import ValidationCode
from src.hadamard.construction import AConfig, Cell, StickFigure, stick_figure
from src.hadamard.errors import InvariantViolation, UndefinedProductError, ValidationError
from src.hadamard.exactq import QMatrix, integer_rank, kernel_basis, rank
from src.hadamard.gorenstein import GorensteinResult
from src.hadamard.projgeom import Line3, Poly, ProjPoint, eval_poly, hadamard_point, monomials, sample_line_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSet:
    """Nonempty set of pairwise distinct points of one projective space."""

    points: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        if not points:
            raise ValidationError(ValidationCode.MALFORMED_INPUT, "empty point set")
        width = len(points[0])
        seen: set[ProjPoint] = set()
        for index, point in enumerate(points):
            if len(point) != width:
                raise ValidationError(ValidationCode.MALFORMED_INPUT, f"point {point} is not in P^{width - 1}", index)
            if point in seen:
                raise ValidationError(ValidationCode.POINTS_NOT_DISTINCT, f"point {point} repeated", index)
            seen.add(point)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return len(self.points[0]) - 1

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjPoint]:
        return iter(self.points)


@dataclass(frozen=True)
class HFReport:
    """Hilbert function values up to stabilization and the resulting h-vector."""

    values: tuple[tuple[int, int], ...]
    h_vector: tuple[int, ...]
    stabilized_at: int


def hilbert_function(ps: PointSet, d: int) -> int:
    """Rank of the |points| x C(d+n, n) monomial evaluation matrix."""
    if d < 0:
        return 0
    exponents = monomials(ps.n + 1, d)
    rows = [[prod(x**e for x, e in zip(point.coords, exponent) if e) for exponent in exponents] for point in ps]
    value = integer_rank(rows)
    logger.debug("HF(%d) = %d on %d points", d, value, len(ps))
    return value


def h_vector_of(ps: PointSet, degree_cap: int | None = None) -> HFReport:
    """Compute HF(0), HF(1), ... until it equals |points|.

    Raises:
        InvariantViolation: If HF breaks its bounds or has not stabilized by the cap
    """
    cap = len(ps) if degree_cap is None else degree_cap
    values = []
    previous = 0
    for d in range(cap + 1):
        value = hilbert_function(ps, d)
        if value < previous or value > min(comb(d + ps.n, ps.n), len(ps)):
            raise InvariantViolation(f"HF({d}) = {value} out of bounds")
        values.append((d, value))
        previous = value
        if value == len(ps):
            h_vector = tuple(v - (values[i - 1][1] if i else 0) for i, (_, v) in enumerate(values))
            return HFReport(tuple(values), h_vector, d)
    raise InvariantViolation(f"Hilbert function did not reach {len(ps)} by degree {cap}")


@dataclass(frozen=True)
class StickReport:
    """Outcome of the exhaustive stick-figure check.

    Attributes:
        passed: Whether every pair and triple behaved
        pairs_checked: Number of line pairs examined
        meets: Meet point of every intersecting pair
        failure: Description of the first counterexample
        offending: Cells involved in the first counterexample
    """

    passed: bool
    pairs_checked: int
    meets: dict[tuple[Cell, Cell], ProjPoint] = field(default_factory=dict, hash=False)
    failure: str | None = None
    offending: tuple[Cell, ...] = ()


def _meet(first: Line3, second: Line3) -> ProjPoint | None | Line3:
    system = QMatrix.from_rows([*first.coefficient_matrix().row_list(), *second.coefficient_matrix().row_list()])
    system_rank = rank(system)
    if system_rank == 2:
        return first
    if system_rank == 4:
        return None
    (vector,) = kernel_basis(system)
    return ProjPoint(vector)


def check_stick_figure(sf: StickFigure) -> StickReport:
    """Pairs meet exactly when they share a row or a column, and no point is on three lines."""
    cells = sf.cells()
    meets: dict[tuple[Cell, Cell], ProjPoint] = {}
    pairs = 0
    for first, second in combinations(cells, 2):
        pairs += 1
        meet = _meet(sf.lines[first], sf.lines[second])
        if isinstance(meet, Line3):
            return StickReport(False, pairs, meets, f"lines {first} and {second} coincide", (first, second))
        should_meet = (first[0] == second[0]) != (first[1] == second[1])
        if (meet is not None) != should_meet:
            verb = "meet" if meet is not None else "are skew"
            return StickReport(False, pairs, meets, f"lines {first} and {second} {verb}", (first, second))
        if meet is not None:
            meets[first, second] = meet
    for (first, second), point in meets.items():
        for third in cells:
            if third not in (first, second) and sf.lines[third].contains(point):
                return StickReport(
                    False, pairs, meets, f"{point} lies on {first}, {second} and {third}", (first, second, third)
                )
    return StickReport(True, pairs, meets)


def vanishes_on(f: Poly, pts: Iterable[ProjPoint]) -> bool:
    return all(eval_poly(f, p) == 0 for p in pts)


def coplanar_product_samples(l1: Line3, l2: Line3, k1: int, k2: int) -> list[ProjPoint]:
    """Hadamard products p * q for k1 sampled points p of l1 and k2 points q of l2.

    Pairs whose product is undefined are skipped.
    """
    products = []
    for p in sample_line_points(l1, k1):
        for q in sample_line_points(l2, k2):
            try:
                products.append(hadamard_point(p, q))
            except UndefinedProductError:
                logger.debug("skipping undefined product %s * %s", p, q)
    return products


@dataclass(frozen=True)
class GorensteinCheck:
    """Aggregate verdict on a Gorenstein point set."""

    count: int
    expected_count: int
    distinct: bool
    no_zero_coordinates: bool
    incidence: bool
    h_vector: tuple[int, ...]
    expected_h_vector: tuple[int, ...]

    @property
    def h_vector_matches(self) -> bool:
        return self.h_vector == self.expected_h_vector

    @property
    def passed(self) -> bool:
        return (
            self.count == self.expected_count
            and self.distinct
            and self.no_zero_coordinates
            and self.incidence
            and self.h_vector_matches
        )


def _incidence_holds(points: Sequence[ProjPoint], figure: StickFigure, c1_cells: set[Cell]) -> bool:
    for point in points:
        through = [cell for cell, line in figure.lines.items() if line.contains(point)]
        on_c1 = sum(1 for cell in through if cell in c1_cells)
        if on_c1 != 1 or len(through) - on_c1 != 1:
            return False
    return True


def check_gorenstein(result: GorensteinResult, cfg: AConfig, degree_cap: int | None = None) -> GorensteinCheck:
    """Recheck a Gorenstein set against a freshly built stick figure and its Hilbert function."""
    points = result.points
    rows, columns = len(result.figure.rows), len(result.figure.columns)
    figure = stick_figure(cfg, rows, columns)
    c1_cells = {(figure.rows[i], figure.columns[j]) for i, j in result.c1_pairs}
    distinct = len(set(points)) == len(points)
    h_vector: tuple[int, ...] = ()
    if distinct and points:
        h_vector = h_vector_of(PointSet(tuple(points)), degree_cap).h_vector
    check = GorensteinCheck(
        count=len(points),
        expected_count=result.h.total,
        distinct=distinct,
        no_zero_coordinates=all(0 not in p.coords for p in points),
        incidence=_incidence_holds(points, figure, c1_cells),
        h_vector=h_vector,
        expected_h_vector=result.h.entries,
    )
    logger.debug("Gorenstein check for %s: passed=%s h=%s", result.h, check.passed, h_vector)
    return check
