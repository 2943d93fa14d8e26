"""Configurations of four points of P^1 and the stick figures they generate.

A configuration A = (A_0, ..., A_3), A_i = [alpha_i : beta_i], defines

    the line       L = {sum alpha_i x_i = 0, sum beta_i x_i = 0}
    the points     P_k = [(alpha_i + k beta_i) / alpha_i]_i
                   Q_k = [(k alpha_i + beta_i) / beta_i]_i

The P_k lie on a line l^P, the Q_k on a line l^Q, and the two lines span a
plane h. For index sets Ia = {u_0 < u_1 < ...} and Ib = {v_0 < v_1 < ...} the
products P_{u_i} * Q_{v_j} form a planar complete intersection Z, and the lines
(P_{u_i} * Q_{v_j}) * L form a complete intersection stick figure: lines in the
same row or column meet, other pairs are skew.

Points are kept in their canonical integral representative, so alpha_i and
beta_i are the coprime integers of A_i with alpha_i > 0.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import logging
from math import prod

from src.config import Config
from src.enums import ValidationCode
from src.hadamard.errors import (
    DegenerateInputError,
    HadamardError,
    InvariantViolation,
    ValidationError,
)
from src.hadamard.exactq import QMatrix, kernel_basis, minor, rank, to_rational
from src.hadamard.projgeom import (
    Line3,
    LinearForm,
    Poly,
    ProjPoint,
    forms_through,
    hadamard_point,
    hadamard_transform,
    plane_through,
    sample_line_points,
    transform_line,
)

logger = logging.getLogger(__name__)


Cell = tuple[int, int]


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing indices starting at 0 and avoiding 1."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        indices = tuple(int(x) for x in self.indices)
        if not indices or indices[0] != 0:
            raise ValidationError(ValidationCode.INDEX_SET, f"index set {list(indices)} must start with 0", 0)
        for position in range(1, len(indices)):
            if indices[position] <= indices[position - 1]:
                raise ValidationError(
                    ValidationCode.INDEX_SET, f"index set {list(indices)} is not strictly increasing", position
                )
            if indices[position] == 1:
                raise ValidationError(ValidationCode.INDEX_SET, "1 not allowed in index set", position)
        object.__setattr__(self, "indices", indices)

    @classmethod
    def evens(cls, size: int, step: int | None = None) -> "IndexSet":
        """The first size multiples of step, which defaults to Config.DEFAULT_INDEX_STEP."""
        if step is None:
            return cls(tuple(Config.current().default_index_set(size)))
        return cls(tuple(step * k for k in range(size)))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, position: int) -> int:
        return self.indices[position]

    def first(self, n: int) -> tuple[int, ...]:
        return self.indices[:n]


def in_excluded_set(point: ProjPoint) -> bool:
    """Whether [alpha : beta] lies in W, i.e. -beta/alpha is n or 1/n for a positive integer n."""
    alpha, beta = point.coords
    if alpha == 0:
        return False
    ratio = Fraction(-beta, alpha)
    return ratio > 0 and (ratio.numerator == 1 or ratio.denominator == 1)


@dataclass(frozen=True)
class AConfig:
    """Four validated points of P^1 together with the two index sets.

    Attributes:
        points: A_0, ..., A_3 in canonical form
        ia: Indices used for the P family
        ib: Indices used for the Q family
    """

    points: tuple[ProjPoint, ...]
    ia: IndexSet
    ib: IndexSet

    def __post_init__(self) -> None:
        if len(self.points) != 4 or any(len(p) != 2 for p in self.points):
            raise ValidationError(ValidationCode.MALFORMED_INPUT, "a configuration needs four points of P^1")
        for index, point in enumerate(self.points):
            if 0 in point.coords:
                raise ValidationError(
                    ValidationCode.ZERO_COORDINATE, f"A_{index} = {point} has a zero coordinate", index
                )
        for first, second in combinations(range(4), 2):
            if self.points[first] == self.points[second]:
                raise ValidationError(
                    ValidationCode.NOT_DISTINCT, f"A_{first} and A_{second} are both {self.points[first]}", second
                )
        for index, point in enumerate(self.points):
            if in_excluded_set(point):
                raise ValidationError(ValidationCode.W_MEMBERSHIP, f"A_{index} = {point} lies in W", index)

    @classmethod
    def default(cls, rows: int = 3, columns: int = 4) -> "AConfig":
        """The configuration built from Config.DEFAULT_RATIOS and the default index sets."""
        return validate_config(Config.current().default_ratio_pairs, IndexSet.evens(rows), IndexSet.evens(columns))

    @property
    def alpha(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.points)

    @property
    def beta(self) -> tuple[int, ...]:
        return tuple(p[1] for p in self.points)


def parse_ratio(text: str) -> ProjPoint:
    """Read a point of P^1 written "alpha/beta" or "alpha:beta"."""
    separator = ":" if ":" in text else "/"
    parts = text.split(separator)
    try:
        if len(parts) != 2:
            raise ValueError(text)
        return ProjPoint((to_rational(parts[0]), to_rational(parts[1])))
    except (ValueError, ZeroDivisionError, DegenerateInputError) as e:
        raise ValidationError(ValidationCode.MALFORMED_INPUT, f"bad point of P^1 {text!r}") from e


def validate_config(
    points: Sequence[ProjPoint | tuple[int | str | Fraction, int | str | Fraction] | str],
    ia: IndexSet | Iterable[int],
    ib: IndexSet | Iterable[int],
) -> AConfig:
    """Build a validated configuration.

    Besides the invariants of AConfig, checks that no P_i (i in Ia) and no Q_j
    (j in Ib) has a zero coordinate.

    Raises:
        ValidationError: With the offending index
    """
    parsed = []
    for item in points:
        if isinstance(item, ProjPoint):
            parsed.append(item)
        elif isinstance(item, str):
            parsed.append(parse_ratio(item))
        else:
            try:
                parsed.append(ProjPoint(tuple(item)))
            except DegenerateInputError as e:
                raise ValidationError(ValidationCode.ZERO_COORDINATE, f"{item} is not a point", len(parsed)) from e
    cfg = AConfig(
        tuple(parsed),
        ia if isinstance(ia, IndexSet) else IndexSet(tuple(ia)),
        ib if isinstance(ib, IndexSet) else IndexSet(tuple(ib)),
    )
    for k in cfg.ia:
        if 0 in point_P(cfg, k).coords:
            raise InvariantViolation(f"P_{k} has a zero coordinate")
    for k in cfg.ib:
        if 0 in point_Q(cfg, k).coords:
            raise InvariantViolation(f"Q_{k} has a zero coordinate")
    logger.debug("validated configuration %s, Ia=%s, Ib=%s", [str(p) for p in parsed], cfg.ia.indices, cfg.ib.indices)
    return cfg


def avoids_delta(line: Line3, i: int) -> bool:
    """Whether line misses Delta_i, the points with at most i + 1 nonzero coordinates."""
    coefficients = line.coefficient_matrix()
    for support in combinations(range(4), i + 1):
        if rank(coefficients.submatrix(range(2), support)) < len(support):
            return False
    return True


def line_L(cfg: AConfig) -> Line3:
    """The line L = {sum alpha_i x_i = 0, sum beta_i x_i = 0}, which misses Delta_1."""
    line = Line3(LinearForm(cfg.alpha), LinearForm(cfg.beta))
    if not avoids_delta(line, 1):
        raise InvariantViolation(f"L = {line} meets Delta_1")
    return line


def point_P(cfg: AConfig, k: int) -> ProjPoint:
    return ProjPoint(tuple(Fraction(a + k * b, a) for a, b in zip(cfg.alpha, cfg.beta)))


def point_Q(cfg: AConfig, k: int) -> ProjPoint:
    return ProjPoint(tuple(Fraction(k * a + b, b) for a, b in zip(cfg.alpha, cfg.beta)))


def matrix_M(cfg: AConfig) -> QMatrix:
    """Rows (alpha_i beta_i), (alpha_i^2), (beta_i^2)."""
    return QMatrix.from_rows(
        [
            [a * b for a, b in zip(cfg.alpha, cfg.beta)],
            [a * a for a in cfg.alpha],
            [b * b for b in cfg.beta],
        ]
    )


def matrix_N(cfg: AConfig) -> QMatrix:
    """Rows (alpha_i), (beta_i)."""
    return QMatrix.from_rows([cfg.alpha, cfg.beta])


def collinearity_rank(cfg: AConfig, k: int, family: str = "P") -> int:
    """Rank of the coordinate matrix of P_0, P_1, P_k (or Q_0, Q_1, Q_k); always 2."""
    point = point_P if family == "P" else point_Q
    return rank(QMatrix.from_rows([point(cfg, 0).coords, point(cfg, 1).coords, point(cfg, k).coords]))


def lines_PQ(cfg: AConfig) -> tuple[Line3, Line3]:
    """The lines l^P through all P_k and l^Q through all Q_k.

    Both are cut out by the common plane h = sum (-1)^(t+1) alpha_t beta_t |M(t+1)| x_t
    and by f = sum_{t>0} (-1)^t alpha_t |N(1,t+1)| x_t, resp.
    g = sum_{t>0} (-1)^t beta_t |N(1,t+1)| x_t.
    """
    m = matrix_M(cfg)
    n = matrix_N(cfg)
    alpha, beta = cfg.alpha, cfg.beta
    h = LinearForm(tuple((-1) ** (t + 1) * alpha[t] * beta[t] * minor(m, [], [t]) for t in range(4)))
    n_minors = [Fraction(0)] + [minor(n, [], [0, t]) for t in range(1, 4)]
    f = LinearForm(tuple((-1) ** t * alpha[t] * n_minors[t] for t in range(4)))
    g = LinearForm(tuple((-1) ** t * beta[t] * n_minors[t] for t in range(4)))

    p0, p1, q1 = point_P(cfg, 0), point_P(cfg, 1), point_Q(cfg, 1)
    origin = ProjPoint((1, 0, 0, 0))
    if h != plane_through(p0, p1, q1):
        raise InvariantViolation(f"h = {h} is not the plane through P_0, P_1, Q_1")
    if f != plane_through(p0, p1, origin) or g != plane_through(p0, q1, origin):
        raise InvariantViolation("second forms of l^P, l^Q disagree with their defining planes")
    ell_p, ell_q = Line3(h, f), Line3(h, g)
    if ell_p.coincides(ell_q):
        raise InvariantViolation("l^P and l^Q coincide")
    return ell_p, ell_q


def _grid_size_check(cfg: AConfig, a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValidationError(ValidationCode.GRID_SIZE, f"grid {a}x{b} must have positive sides")
    if a > len(cfg.ia):
        raise ValidationError(ValidationCode.GRID_SIZE, f"a = {a} exceeds |Ia| = {len(cfg.ia)}")
    if b > len(cfg.ib):
        raise ValidationError(ValidationCode.GRID_SIZE, f"b = {b} exceeds |Ib| = {len(cfg.ib)}")


def build_Z(cfg: AConfig, a: int, b: int) -> list[ProjPoint]:
    """The a*b points P_{u_i} * Q_{v_j}, row by row.

    Raises:
        InvariantViolation: On a repeated point or a non-planar set
    """
    _grid_size_check(cfg, a, b)
    points = [hadamard_point(point_P(cfg, u), point_Q(cfg, v)) for u in cfg.ia.first(a) for v in cfg.ib.first(b)]
    if len(set(points)) != len(points):
        raise InvariantViolation(f"repeated point in Z for a={a}, b={b}")
    if rank(QMatrix.from_rows([p.coords for p in points])) > 3:
        raise InvariantViolation("Z does not lie on a plane")
    return points


def z_generators(cfg: AConfig, a: int, b: int) -> tuple[Poly, Poly, Poly]:
    """Generators h, prod_j f^{*Q_{v_j}} and prod_i g^{*P_{u_i}} of the ideal of Z, of degrees 1, b, a."""
    _grid_size_check(cfg, a, b)
    ell_p, ell_q = lines_PQ(cfg)
    h = ell_p.form_a.to_poly()
    f = ell_p.form_b.to_poly()
    g = ell_q.form_b.to_poly()
    f_product = _poly_product([hadamard_transform(f, point_Q(cfg, v)) for v in cfg.ib.first(b)])
    g_product = _poly_product([hadamard_transform(g, point_P(cfg, u)) for u in cfg.ia.first(a)])
    return h.canonical(), f_product.canonical(), g_product.canonical()


@dataclass(frozen=True)
class StickFigure:
    """Grid of lines (P_i * Q_j) * L, keyed by index values (i in Ia, j in Ib)."""

    config: AConfig
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    lines: dict[Cell, Line3] = field(hash=False)

    def line(self, i: int, j: int) -> Line3:
        try:
            return self.lines[i, j]
        except KeyError as e:
            raise ValidationError(ValidationCode.INDEX_SET, f"line ({i}, {j}) is not in the grid") from e

    def cells(self) -> list[Cell]:
        return [(i, j) for i in self.rows for j in self.columns]

    def __len__(self) -> int:
        return len(self.lines)


def stick_figure(cfg: AConfig, a: int, b: int) -> StickFigure:
    """The a*b lines (P_{u_i} * Q_{v_j}) * L.

    Raises:
        InvariantViolation: If two lines of the grid coincide
    """
    _grid_size_check(cfg, a, b)
    base = line_L(cfg)
    rows, columns = cfg.ia.first(a), cfg.ib.first(b)
    lines = {
        (u, v): transform_line(base, hadamard_point(point_P(cfg, u), point_Q(cfg, v))) for u in rows for v in columns
    }
    keys = {line.key for line in lines.values()}
    if len(keys) != len(lines):
        raise InvariantViolation(f"repeated line in the {a}x{b} stick figure")
    logger.debug("stick figure of %d lines over rows %s and columns %s", len(lines), rows, columns)
    return StickFigure(cfg, rows, columns, lines)


def system_matrix(cfg: AConfig, first: Cell, second: Cell) -> QMatrix:
    """Coefficients of the transformed forms of L by P_i * Q_j and P_k * Q_l, stacked.

    Row entries are alpha_t^2 beta_t / ((alpha_t + i beta_t)(j alpha_t + beta_t)) and
    alpha_t beta_t^2 / (...), for (i, j) then (k, l). Any nonnegative indices are allowed.
    """
    rows = []
    for i, j in (first, second):
        denominators = [(a + i * b) * (j * a + b) for a, b in zip(cfg.alpha, cfg.beta)]
        if 0 in denominators:
            raise HadamardError(f"P_{i} * Q_{j} has a zero coordinate")
        rows.append([Fraction(a * a * b, d) for a, b, d in zip(cfg.alpha, cfg.beta, denominators)])
        rows.append([Fraction(a * b * b, d) for a, b, d in zip(cfg.alpha, cfg.beta, denominators)])
    return QMatrix.from_rows(rows)


def system_det_factor(i: int, j: int, k: int, l: int) -> int:  # noqa: E741
    """(i-k)(j-l)(jk-1)(il-1), which vanishes exactly when the two lines meet."""
    return (i - k) * (j - l) * (j * k - 1) * (i * l - 1)


def _closed_form_meet(cfg: AConfig, factors: Sequence[Sequence[int]]) -> ProjPoint:
    m = matrix_M(cfg)
    coords = []
    for t, (a, b) in enumerate(zip(cfg.alpha, cfg.beta)):
        numerator = prod(p * a + q * b for p, q in factors[t])
        coords.append((-1) ** t * minor(m, [], [t]) * Fraction(numerator, a * b))
    return ProjPoint(tuple(coords))


def meet_same_row(cfg: AConfig, i: int, j: int, l: int) -> ProjPoint:  # noqa: E741
    """Closed form of the meet of lines (i, j) and (i, l), j != l.

    Coordinate t is (-1)^t |M(t+1)| (alpha_t + i beta_t)(j alpha_t + beta_t)(l alpha_t + beta_t) / (alpha_t beta_t).
    """
    return _closed_form_meet(cfg, [((1, i), (j, 1), (l, 1))] * 4)


def meet_same_column(cfg: AConfig, i: int, k: int, j: int) -> ProjPoint:
    """Closed form of the meet of lines (i, j) and (k, j), i != k."""
    return _closed_form_meet(cfg, [((1, i), (1, k), (j, 1))] * 4)


def intersect_lines(sf: StickFigure, first: Cell, second: Cell) -> ProjPoint | None:
    """Meet of two grid lines, or None when they are skew.

    The kernel of the stacked 4x4 system is authoritative; the closed forms
    are compared against it.

    Raises:
        DegenerateInputError: If both cells name the same line
        InvariantViolation: If the closed form and the kernel disagree
    """
    if first == second:
        raise DegenerateInputError(f"line {first} intersected with itself")
    sf.line(*first)
    sf.line(*second)
    (i, j), (k, l) = first, second  # noqa: E741
    system = system_matrix(sf.config, first, second)
    system_rank = rank(system)
    if system_rank == 2:
        raise InvariantViolation(f"lines {first} and {second} coincide")
    if system_rank == 4:
        if i == k or j == l:
            raise InvariantViolation(f"lines {first} and {second} share an index but do not meet")
        if system_det_factor(i, j, k, l) == 0:
            raise InvariantViolation(f"nonzero determinant for {first}, {second} although its factor vanishes")
        return None

    (kernel,) = kernel_basis(system)
    point = ProjPoint(kernel)
    if i == k:
        closed = meet_same_row(sf.config, i, j, l)
    elif j == l:
        closed = meet_same_column(sf.config, i, k, j)
    else:
        raise InvariantViolation(f"lines {first} and {second} meet without sharing an index")
    if closed != point:
        raise InvariantViolation(f"closed form {closed} differs from kernel point {point} for {first}, {second}")
    if not (sf.lines[first].contains(point) and sf.lines[second].contains(point)):
        raise InvariantViolation(f"meet {point} is not on the grid lines {first} and {second}")
    return point


def _plane_for(lines: Sequence[Line3], label: str) -> LinearForm:
    samples = [p for line in lines for p in sample_line_points(line, 2)]
    forms = forms_through(samples)
    if not forms or (len(lines) > 1 and len(forms) != 1):
        raise InvariantViolation(f"lines of {label} are not coplanar")
    return forms[0]


def ruling_planes(sf: StickFigure) -> tuple[list[LinearForm], list[LinearForm]]:
    """One plane through each row of lines and one through each column.

    A row or column holding a single line does not determine its plane; the
    lexicographically first kernel form is returned then.
    """
    row_planes = [_plane_for([sf.lines[i, j] for j in sf.columns], f"row {i}") for i in sf.rows]
    column_planes = [_plane_for([sf.lines[i, j] for i in sf.rows], f"column {j}") for j in sf.columns]
    return row_planes, column_planes


def product_surfaces(sf: StickFigure) -> tuple[Poly, Poly]:
    """Products of the row planes and of the column planes, of degrees a and b."""
    row_planes, column_planes = ruling_planes(sf)
    return (
        _poly_product([form.to_poly() for form in row_planes]),
        _poly_product([form.to_poly() for form in column_planes]),
    )


def _poly_product(polys: Sequence[Poly]) -> Poly:
    result = polys[0]
    for poly in polys[1:]:
        result = result * poly
    return result
