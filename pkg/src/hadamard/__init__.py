"""Hadamard products of lines and the Gorenstein point sets they produce."""

from src.hadamard.construction import (
    AConfig,
    IndexSet,
    StickFigure,
    build_Z,
    intersect_lines,
    line_L,
    lines_PQ,
    point_P,
    point_Q,
    ruling_planes,
    stick_figure,
    validate_config,
    z_generators,
)
from src.hadamard.errors import (
    DegenerateInputError,
    DimensionError,
    DomainError,
    HadamardError,
    InvariantViolation,
    UndefinedProductError,
    ValidationError,
)
from src.hadamard.exactq import QMatrix, det, kernel_basis, minor, rank
from src.hadamard.gorenstein import GorensteinResult, expected_count, gorenstein_points, select_C1
from src.hadamard.hvector import HVector, SIProfile, make_profile, residual_b
from src.hadamard.projgeom import Line3, LinearForm, Poly, ProjPoint, hadamard_point, hadamard_transform
from src.hadamard.verify import PointSet, check_gorenstein, check_stick_figure, h_vector_of, hilbert_function

__all__ = [
    "AConfig",
    "DegenerateInputError",
    "DimensionError",
    "DomainError",
    "GorensteinResult",
    "HVector",
    "HadamardError",
    "IndexSet",
    "InvariantViolation",
    "Line3",
    "LinearForm",
    "PointSet",
    "Poly",
    "ProjPoint",
    "QMatrix",
    "SIProfile",
    "StickFigure",
    "UndefinedProductError",
    "ValidationError",
    "build_Z",
    "check_gorenstein",
    "check_stick_figure",
    "det",
    "expected_count",
    "gorenstein_points",
    "h_vector_of",
    "hadamard_point",
    "hadamard_transform",
    "hilbert_function",
    "intersect_lines",
    "kernel_basis",
    "line_L",
    "lines_PQ",
    "make_profile",
    "minor",
    "point_P",
    "point_Q",
    "rank",
    "residual_b",
    "ruling_planes",
    "select_C1",
    "stick_figure",
    "validate_config",
    "z_generators",
]
