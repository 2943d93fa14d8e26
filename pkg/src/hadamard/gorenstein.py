"""Gorenstein sets of points cut out on a complete intersection stick figure.

For an SI-profile with t = floor(s/2), take the stick figure with rows
u_0..u_t and columns v_0..v_{s-t+1}. The curve C1 is the union of the lines
(i, j) with j < a_i; its residual C2 is the union of the remaining lines. The
points where C1 meets C2 form a Gorenstein set with h-vector h:

    i{j,k}   row i, C1 column j < a_i, C2 column a_i <= k <= s-t+1
    {i,k}j   rows i < k, column min(a_i, a_k) <= j < max(a_i, a_k)

Labels use grid positions, not index values.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations
import logging

from src.enums import LabelFamily, ValidationCode
from src.hadamard.construction import (
    AConfig,
    Cell,
    StickFigure,
    intersect_lines,
    meet_same_column,
    meet_same_row,
    stick_figure,
)
from src.hadamard.errors import InvariantViolation, ValidationError
from src.hadamard.hvector import HVector, SIProfile
from src.hadamard.projgeom import ProjPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GorensteinPoint:
    """One point of the set with the grid positions of the two lines through it.

    Attributes:
        point: Canonical coordinates
        family: ROW for i{j,k}, COLUMN for {i,k}j
        i, j, k: Grid positions as they appear in the label
    """

    point: ProjPoint
    family: LabelFamily
    i: int
    j: int
    k: int

    @property
    def label(self) -> str:
        if self.family is LabelFamily.ROW:
            return f"{self.i}{{{self.j},{self.k}}}"
        return f"{{{self.i},{self.k}}}{self.j}"

    @property
    def line_positions(self) -> tuple[Cell, Cell]:
        """Positions (row, column) of the two lines through the point, in label order.

        For i{j,k} that is row i at columns j then k; for {i,k}j, rows i then k at
        column j. Exactly one of the two lies in C1, but it need not come first.
        """
        if self.family is LabelFamily.ROW:
            return (self.i, self.j), (self.i, self.k)
        return (self.i, self.j), (self.k, self.j)


@dataclass(frozen=True)
class GorensteinResult:
    entries: tuple[GorensteinPoint, ...]
    h: HVector
    c1_pairs: tuple[Cell, ...]
    figure: StickFigure

    @property
    def points(self) -> list[ProjPoint]:
        return [entry.point for entry in self.entries]

    @property
    def labels(self) -> list[str]:
        return [entry.label for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[GorensteinPoint]:
        return iter(self.entries)


def select_C1(profile: SIProfile) -> list[Cell]:  # noqa: N802
    """Grid positions (i, j), j = 0 .. a_i - 1, of the lines of C1."""
    limit = profile.s - profile.t + 1
    pairs = []
    for i, a_i in enumerate(profile.a):
        if a_i > limit:
            raise ValidationError(ValidationCode.A_RANGE, f"a_{i} = {a_i} exceeds s-t+1 = {limit}", i)
        pairs.extend((i, j) for j in range(a_i))
    return pairs


def expected_count(profile: SIProfile) -> int:
    """sum_i a_i (s-t+2-a_i) + sum_{i<k} |a_i - a_k|."""
    width = profile.s - profile.t + 2
    first = sum(a_i * (width - a_i) for a_i in profile.a)
    second = sum(abs(x - y) for x, y in combinations(profile.a, 2))
    return first + second


def _index_triples(profile: SIProfile) -> Iterator[tuple[LabelFamily, int, int, int]]:
    last = profile.s - profile.t + 1
    for i, a_i in enumerate(profile.a):
        for j in range(a_i):
            for k in range(a_i, last + 1):
                yield LabelFamily.ROW, i, j, k
    for i, k in combinations(range(profile.t + 1), 2):
        low, high = sorted((profile.a[i], profile.a[k]))
        for j in range(low, high):
            yield LabelFamily.COLUMN, i, j, k


def gorenstein_points(profile: SIProfile, cfg: AConfig) -> GorensteinResult:
    """The Gorenstein set of points with h-vector profile.h.

    Each point comes from the closed-form meet of its two lines and is
    checked against the kernel solution of the line pair.

    Raises:
        ValidationError: If the index sets are too short for the profile
        InvariantViolation: On a count mismatch, a repeated point or a zero coordinate
    """
    if len(cfg.ia) < profile.rows:
        raise ValidationError(ValidationCode.GRID_SIZE, f"|Ia| = {len(cfg.ia)} is below t+1 = {profile.rows}")
    if len(cfg.ib) < profile.columns:
        raise ValidationError(ValidationCode.GRID_SIZE, f"|Ib| = {len(cfg.ib)} is below s-t+2 = {profile.columns}")
    c1_pairs = tuple(select_C1(profile))
    figure = stick_figure(cfg, profile.rows, profile.columns)
    u, v = figure.rows, figure.columns

    entries = []
    for family, i, j, k in _index_triples(profile):
        if family is LabelFamily.ROW:
            point = meet_same_row(cfg, u[i], v[j], v[k])
            solved = intersect_lines(figure, (u[i], v[j]), (u[i], v[k]))
        else:
            point = meet_same_column(cfg, u[i], u[k], v[j])
            solved = intersect_lines(figure, (u[i], v[j]), (u[k], v[j]))
        if solved != point:
            raise InvariantViolation(f"closed form {point} and solver {solved} disagree")
        if 0 in point.coords:
            raise InvariantViolation(f"point {point} has a zero coordinate")
        entries.append(GorensteinPoint(point, family, i, j, k))

    total = profile.h.total
    if len(entries) != total or expected_count(profile) != total:
        raise InvariantViolation(f"{len(entries)} points built, expected {total} for {profile.h}")
    if len({entry.point for entry in entries}) != len(entries):
        raise InvariantViolation(f"repeated point in the Gorenstein set for {profile.h}")
    logger.debug("built %d Gorenstein points for %s", len(entries), profile.h)
    return GorensteinResult(tuple(entries), profile.h, c1_pairs, figure)
