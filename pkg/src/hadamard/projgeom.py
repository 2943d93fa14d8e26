"""Projective points, linear forms, lines in P^3 and Hadamard products.

Points and forms are kept in a canonical integral representative: the
coordinates are cleared of denominators, divided by their gcd and signed so
that the first nonzero entry is positive. Projective equality is then plain
tuple equality.

The Hadamard product of two points is their coordinate-wise product. The
Hadamard transformation of a polynomial f = sum a_I X^I by a point P without
zero coordinates is sum (a_I / P^I) X^I; applied to the generators of the
ideal of a variety V it gives generators of the ideal of P * V, which is how
transformed lines are computed here.
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
import logging
from math import gcd, lcm, prod

from cachetools import LRUCache, cached

from src.hadamard.errors import DegenerateInputError, DimensionError, DomainError, UndefinedProductError
from src.hadamard.exactq import QMatrix, format_rational, kernel_basis, rank, rref, to_rational

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def canonical_coords(values: Iterable[int | str | Fraction]) -> tuple[int, ...]:
    """Canonical integral representative of a nonzero homogeneous vector.

    Raises:
        DegenerateInputError: If every entry is zero
    """
    fractions = [to_rational(v) for v in values]
    if not any(fractions):
        raise DegenerateInputError("all coordinates are zero")
    multiplier = lcm(*(x.denominator for x in fractions))
    ints = [x.numerator * (multiplier // x.denominator) for x in fractions]
    divisor = gcd(*ints)
    ints = [x // divisor for x in ints]
    if next(x for x in ints if x != 0) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class _Homogeneous:
    """Nonzero vector up to scaling, stored canonically."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", canonical_coords(self.coords))

    @classmethod
    def of(cls, *values: int | str | Fraction):
        return cls(tuple(values))

    @property
    def dim(self) -> int:
        """Dimension n of the ambient projective space."""
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in self.coords)


class ProjPoint(_Homogeneous):
    """Point of P^n in canonical integral coordinates."""

    def __str__(self) -> str:
        return "[" + ":".join(str(x) for x in self.coords) + "]"


class LinearForm(_Homogeneous):
    """Linear form sum c_i x_i, up to scaling, in canonical coefficients."""

    def evaluate(self, point: ProjPoint) -> int:
        if len(point) != len(self):
            raise DimensionError(f"form in {len(self)} variables at a point with {len(point)} coordinates")
        return sum(c * x for c, x in zip(self.coords, point.coords))

    def to_poly(self) -> "Poly":
        return Poly.linear(self.coords)

    def __str__(self) -> str:
        return str(self.to_poly())


@dataclass(frozen=True)
class Line3:
    """Line of P^3 cut out by two independent linear forms."""

    form_a: LinearForm
    form_b: LinearForm

    def __post_init__(self) -> None:
        if len(self.form_a) != 4 or len(self.form_b) != 4:
            raise DimensionError("a line of P^3 needs forms in four variables")
        if rank(self.coefficient_matrix()) != 2:
            raise DegenerateInputError(f"forms {self.form_a} and {self.form_b} are dependent")

    @property
    def forms(self) -> tuple[LinearForm, LinearForm]:
        return self.form_a, self.form_b

    def coefficient_matrix(self) -> QMatrix:
        return QMatrix.from_rows([self.form_a.coords, self.form_b.coords])

    @cached_property
    def key(self) -> tuple[tuple[Fraction, ...], ...]:
        """Reduced row echelon form of the coefficients; equal keys mean equal lines."""
        reduced, _ = rref(self.coefficient_matrix())
        return tuple(reduced.row_list())

    def coincides(self, other: "Line3") -> bool:
        return self.key == other.key

    def contains(self, point: ProjPoint) -> bool:
        return self.form_a.evaluate(point) == 0 and self.form_b.evaluate(point) == 0

    def point_basis(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Two vectors spanning the line, from the kernel of the coefficients."""
        u, v = kernel_basis(self.coefficient_matrix())
        return u, v

    def __str__(self) -> str:
        return f"{{{self.form_a} = 0, {self.form_b} = 0}}"


@cached(cache=LRUCache(maxsize=128))
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """Exponent vectors of the given degree in descending lexicographic order."""
    if nvars == 1:
        return ((degree,),)
    result = []
    for first in range(degree, -1, -1):
        result.extend((first, *rest) for rest in monomials(nvars - 1, degree - first))
    return tuple(result)


@dataclass(frozen=True)
class Poly:
    """Homogeneous polynomial with exact rational coefficients.

    Terms are merged, zero coefficients dropped and exponent vectors sorted in
    descending lexicographic order (x0^2 before x0*x1 before x1^2).
    """

    nvars: int
    degree: int
    terms: tuple[tuple[Exponent, Fraction], ...]

    def __post_init__(self) -> None:
        merged: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self.terms:
            exponent = tuple(exponent)
            if len(exponent) != self.nvars:
                raise DimensionError(f"exponent {exponent} for {self.nvars} variables")
            if sum(exponent) != self.degree or min(exponent, default=0) < 0:
                raise DimensionError(f"exponent {exponent} is not of degree {self.degree}")
            merged[exponent] = merged.get(exponent, Fraction(0)) + to_rational(coefficient)
        terms = tuple(sorted(((e, c) for e, c in merged.items() if c != 0), reverse=True))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[Exponent, int | str | Fraction]) -> "Poly":
        """Build a polynomial from an exponent -> coefficient mapping (nonempty)."""
        if not terms:
            raise DegenerateInputError("a polynomial needs at least one term to fix its degree")
        degree = sum(next(iter(terms)))
        return cls(nvars, degree, tuple(terms.items()))

    @classmethod
    def linear(cls, coefficients: Sequence[int | str | Fraction]) -> "Poly":
        n = len(coefficients)
        return cls(n, 1, tuple((tuple(int(i == j) for j in range(n)), c) for i, c in enumerate(coefficients)))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficients(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def evaluate(self, point: ProjPoint | Sequence[Fraction]) -> Fraction:
        values = tuple(point)
        if len(values) != self.nvars:
            raise DimensionError(f"polynomial in {self.nvars} variables at a point with {len(values)} coordinates")
        total = Fraction(0)
        for exponent, coefficient in self.terms:
            total += coefficient * prod(x**e for x, e in zip(values, exponent) if e)
        return total

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionError("product of polynomials in different rings")
        product: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                exponent = tuple(a + b for a, b in zip(e1, e2))
                product[exponent] = product.get(exponent, Fraction(0)) + c1 * c2
        return Poly(self.nvars, self.degree + other.degree, tuple(product.items()))

    def canonical(self) -> "Poly":
        """Same zero set with integral coprime coefficients, leading one positive."""
        if self.is_zero:
            return self
        coords = canonical_coords(c for _, c in self.terms)
        return Poly(self.nvars, self.degree, tuple((e, Fraction(c)) for (e, _), c in zip(self.terms, coords)))

    def to_linear_form(self) -> LinearForm:
        if self.degree != 1:
            raise DimensionError(f"degree {self.degree} polynomial is not a linear form")
        coefficients = self.coefficients()
        return LinearForm(tuple(coefficients.get(e, Fraction(0)) for e in monomials(self.nvars, 1)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exponent, coefficient in self.terms:
            monomial = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exponent) if e
            )
            magnitude = abs(coefficient)
            if not monomial:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rational(magnitude)}*{monomial}"
            if coefficient < 0:
                parts.append(f"-{body}")
            else:
                parts.append(f"+{body}" if parts else body)
        return "".join(parts)


def hadamard_point(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Coordinate-wise product of two points.

    Raises:
        DimensionError: If the points live in different spaces
        UndefinedProductError: If every coordinate product vanishes
    """
    if len(p) != len(q):
        raise DimensionError(f"Hadamard product of {p} and {q}")
    product = tuple(a * b for a, b in zip(p.coords, q.coords))
    if not any(product):
        raise UndefinedProductError(f"undefined Hadamard product {p} * {q}")
    return ProjPoint(product)


def delta_index(p: ProjPoint) -> int:
    """Least i with p in Delta_i, i.e. the number of nonzero coordinates minus one."""
    return sum(1 for x in p.coords if x != 0) - 1


def hadamard_transform(f: Poly, p: ProjPoint) -> Poly:
    """Hadamard transformation of f by p: sum (a_I / p^I) X^I.

    The representative of p is the canonical one; the result is not rescaled.

    Raises:
        DomainError: If p has a zero coordinate
    """
    if len(p) != f.nvars:
        raise DimensionError(f"transforming a polynomial in {f.nvars} variables by {p}")
    if 0 in p.coords:
        raise DomainError(f"Hadamard transformation by {p}, which has a zero coordinate")
    return Poly(
        f.nvars,
        f.degree,
        tuple((e, c / prod(x**k for x, k in zip(p.coords, e))) for e, c in f.terms),
    )


def transform_line(line: Line3, p: ProjPoint) -> Line3:
    """The line p * line, cut out by the transformed forms of line."""
    form_a = hadamard_transform(line.form_a.to_poly(), p).to_linear_form()
    form_b = hadamard_transform(line.form_b.to_poly(), p).to_linear_form()
    return Line3(form_a, form_b)


def eval_poly(f: Poly, p: ProjPoint) -> Fraction:
    """Value of f at the canonical representative of p."""
    return f.evaluate(p)


def contains(line: Line3, point: ProjPoint) -> bool:
    """True when both defining forms of line vanish at point."""
    return line.contains(point)


def forms_through(points: Sequence[ProjPoint]) -> list[LinearForm]:
    """Independent linear forms vanishing at all the points, sorted by coefficients."""
    basis = kernel_basis(QMatrix.from_rows([pt.coords for pt in points]))
    return sorted((LinearForm(v) for v in basis), key=lambda form: form.coords)


def line_through(p: ProjPoint, q: ProjPoint) -> Line3:
    """Line through two distinct points of P^3.

    Raises:
        DegenerateInputError: If p and q are the same point
    """
    if len(p) != 4 or len(q) != 4:
        raise DimensionError("line_through works in P^3")
    if p == q:
        raise DegenerateInputError(f"no unique line through {p} and itself")
    form_a, form_b = forms_through([p, q])
    return Line3(form_a, form_b)


def plane_through(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> LinearForm:
    """Plane of P^3 through three non-collinear points.

    Raises:
        DegenerateInputError: If the points are collinear
    """
    forms = forms_through([p, q, r])
    if len(forms) != 1:
        raise DegenerateInputError(f"{p}, {q}, {r} do not span a plane")
    return forms[0]


def _parameters() -> Iterator[tuple[int, int]]:
    yield 1, 0
    yield 0, 1
    m = 1
    while True:
        for s in range(1, m + 1):
            if gcd(s, m) != 1:
                continue
            yield s, m
            if s != m:
                yield m, s
        m += 1


def sample_line_points(line: Line3, k: int) -> list[ProjPoint]:
    """k distinct points lambda*u + mu*v of a line, for a fixed parameter sequence.

    The parameters run (1:0), (0:1), (1:1), (1:2), (2:1), (1:3), (3:1), ...
    """
    if k <= 0:
        return []
    u, v = line.point_basis()
    points = []
    for lam, mu in _parameters():
        points.append(ProjPoint(tuple(lam * a + mu * b for a, b in zip(u, v))))
        if len(points) == k:
            break
    return points
