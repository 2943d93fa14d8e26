"""Exact rational arithmetic and dense exact linear algebra.

Every rank, determinant and kernel in the construction goes through this
module. Entries are fractions.Fraction values; nothing is ever compared with
a tolerance. Determinant and rank use fraction-free (Bareiss) elimination on
an integer copy of the matrix, the kernel uses Gauss-Jordan reduction over
the rationals.

Examples:
    ```python
    from src.hadamard.exactq import QMatrix, det, kernel_basis

    m = QMatrix.from_rows([[1, 1, 1, 1]])
    kernel_basis(m)   # three vectors, each annihilated by the row
    det(QMatrix.identity(3))   # Fraction(1, 1)
    ```
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
import logging
from math import lcm

from src.hadamard.errors import DimensionError

logger = logging.getLogger(__name__)

Rational = Fraction
Vector = tuple[Fraction, ...]


def to_rational(value: int | str | Fraction) -> Fraction:
    """Convert an int, a Fraction or a "num/den" string to a Fraction.

    Args:
        value: Integer, Fraction, or text such as "-3/2" or "7"

    Returns:
        The reduced fraction

    Raises:
        ValueError: If the text is not a rational number
        ZeroDivisionError: If the denominator is zero
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    raise ValueError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a fraction as "num/den", or as a bare integer when integral."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class QMatrix:
    """Dense matrix of exact rationals stored row-major.

    Attributes:
        rows: Number of rows
        cols: Number of columns
        entries: Row-major entries, length rows * cols
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(to_rational(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | str | Fraction]]) -> "QMatrix":
        """Build a matrix from a list of equally long rows."""
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise DimensionError(f"row {index} has {len(row)} entries, expected {width}")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, position: tuple[int, int]) -> Fraction:
        i, j = position
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, keep_rows: Iterable[int], keep_cols: Iterable[int]) -> "QMatrix":
        """Return the submatrix on the given row and column indices (in order)."""
        keep_rows = list(keep_rows)
        keep_cols = list(keep_cols)
        return QMatrix(
            len(keep_rows),
            len(keep_cols),
            tuple(self[i, j] for i in keep_rows for j in keep_cols),
        )

    def scale_row(self, i: int, factor: Fraction) -> "QMatrix":
        """Return a copy with row i multiplied by factor."""
        rows = [list(r) for r in self.row_list()]
        rows[i] = [x * factor for x in rows[i]]
        return QMatrix.from_rows(rows)

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Matrix-vector product m·v."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0)) for i in range(self.rows))


def _integral_rows(m: QMatrix) -> tuple[list[list[int]], int]:
    """Clear denominators row by row.

    Returns:
        Integer rows and the product of the row multipliers
    """
    scale = 1
    rows = []
    for row in m.row_list():
        multiplier = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([x.numerator * (multiplier // x.denominator) for x in row])
        scale *= multiplier
    return rows, scale


def bareiss(rows: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination on an integer matrix.

    The first nonzero entry in the current column is taken as pivot; every
    division is exact, so intermediate entries stay integral and are minors of
    the input.

    Args:
        rows: Integer rows; modified in place

    Returns:
        The echelon rows, the pivot column of each eliminated row, and the
        sign of the row permutation applied
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    previous = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_index = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_index is None:
            continue
        if pivot_index != r:
            rows[r], rows[pivot_index] = rows[pivot_index], rows[r]
            sign = -sign
        pivot_row = rows[r]
        pivot = pivot_row[c]
        for i in range(r + 1, n_rows):
            row = rows[i]
            factor = row[c]
            if factor == 0:
                rows[i] = [(pivot * x) // previous for x in row]
            else:
                rows[i] = [(pivot * x - factor * y) // previous for x, y in zip(row, pivot_row)]
        previous = pivot
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def det(m: QMatrix) -> Fraction:
    """Exact determinant of a square matrix.

    Raises:
        DimensionError: If the matrix is not square
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    rows, scale = _integral_rows(m)
    rows, pivots, sign = bareiss(rows)
    if len(pivots) < m.rows:
        return Fraction(0)
    return Fraction(sign * rows[-1][-1], scale)


def rank(m: QMatrix) -> int:
    """Exact rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _integral_rows(m)
    _, pivots, _ = bareiss(rows)
    return len(pivots)


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix given as rows; the rows are consumed."""
    if not rows or not rows[0]:
        return 0
    _, pivots, _ = bareiss(rows)
    return len(pivots)


def rref(m: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form over the rationals.

    Returns:
        The reduced matrix (zero rows kept at the bottom) and its pivot columns
    """
    rows = [list(r) for r in m.row_list()]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_index = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot_index is None:
            continue
        rows[r], rows[pivot_index] = rows[pivot_index], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if m.rows == 0:
        return m, pivots
    return QMatrix.from_rows(rows), pivots


def kernel_basis(m: QMatrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column.

    Returns an empty list when the matrix has full column rank.
    """
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(m.cols)) for i in range(m.cols)]
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * m.cols
        vector[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r, f]
        basis.append(tuple(vector))
    logger.debug("kernel of %dx%d matrix has dimension %d", m.rows, m.cols, len(basis))
    return basis


def minor(m: QMatrix, removed_rows: Iterable[int], removed_cols: Iterable[int]) -> Fraction:
    """Determinant of the submatrix left after removing rows and columns.

    Indices are zero-based, so the one-based |N(1,2)| (first and second
    columns removed) is ``minor(n, [], [0, 1])``.

    Raises:
        DimensionError: If an index is out of range or the residue is not square
    """
    removed_rows = set(removed_rows)
    removed_cols = set(removed_cols)
    if any(not 0 <= i < m.rows for i in removed_rows) or any(not 0 <= j < m.cols for j in removed_cols):
        raise DimensionError("removed index out of range")
    keep_rows = [i for i in range(m.rows) if i not in removed_rows]
    keep_cols = [j for j in range(m.cols) if j not in removed_cols]
    if len(keep_rows) != len(keep_cols):
        raise DimensionError(f"residue of shape {len(keep_rows)}x{len(keep_cols)} is not square")
    return det(m.submatrix(keep_rows, keep_cols))
