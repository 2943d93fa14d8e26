"""Enumerations shared by the command line and the construction library.

This module defines the command names, output formats, point-label families
and validation reason codes, so every layer spells them the same way.
"""

from enum import Enum


class Command(str, Enum):
    """Sub-commands exposed by the command line."""

    GORENSTEIN = "gorenstein"
    STICK = "stick"
    HF = "hf"
    CHECK_SI = "check-si"
    HADAMARD = "hadamard"

    @classmethod
    def get_all_commands(cls) -> list[str]:
        """Get all command names.

        Returns:
            List of command name values
        """
        return [command.value for command in cls]


class OutputFormat(str, Enum):
    """File formats for emitted point sets."""

    JSON = "json"
    CSV = "csv"

    @classmethod
    def from_path(cls, path: str) -> "OutputFormat":
        """Guess the format from a file extension, defaulting to JSON."""
        return cls.CSV if path.lower().endswith(".csv") else cls.JSON


class LabelFamily(str, Enum):
    """The two families of Gorenstein points.

    ROW points are meets of two lines sharing their P index, written i{j,k};
    COLUMN points share their Q index, written {i,k}j.
    """

    ROW = "row"
    COLUMN = "column"


class ValidationCode(str, Enum):
    """Reasons an input is rejected."""

    # h-vector checks
    NOT_SYMMETRIC = "not symmetric"
    NOT_O_SEQUENCE = "first difference is not an O-sequence"
    CODIMENSION = "codimension-3 requirement"
    A_RANGE = "a_i exceeds s-t+1"
    NOT_PROFILE = "not an admissible h-vector"

    # configuration checks
    ZERO_COORDINATE = "zero coordinate"
    NOT_DISTINCT = "configuration points not distinct"
    W_MEMBERSHIP = "point in the excluded set W"
    INDEX_SET = "index set violation"
    GRID_SIZE = "grid size exceeds index set"

    # file and command-line input
    POINTS_NOT_DISTINCT = "points not distinct"
    MALFORMED_INPUT = "malformed input"
