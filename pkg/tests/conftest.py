"""Shared fixtures: the default configuration, reference point sets and seeded generators."""

from fractions import Fraction
import logging
import random

import pytest

from src.config import Config
from src.hadamard.construction import AConfig, IndexSet, validate_config
from src.hadamard.hvector import HVector, is_si_sequence, macaulay_bound, make_profile
from src.hadamard.projgeom import ProjPoint
from src.monitoring import metrics

# Gorenstein set for h = (1,3,4,3,1) and A = ([1:1],[1:2],[1:3],[1:4]), Ia = (0,2,4), Ib = (0,2,4,6)
REFERENCE_POINTS = [
    (1, -4, 5, -2),
    (5, -18, 21, -8),
    (7, -24, 27, -10),
    (5, -30, 49, -24),
    (7, -40, 63, -30),
    (45, -180, 245, -108),
    (21, -80, 105, -45),
    (5, -36, 65, -34),
    (25, -162, 273, -136),
    (35, -216, 351, -170),
    (18, -60, 70, -27),
    (90, -540, 910, -459),
]
REFERENCE_LABELS = [
    "0{0,1}",
    "0{0,2}",
    "0{0,3}",
    "1{0,2}",
    "1{0,3}",
    "1{1,2}",
    "1{1,3}",
    "2{0,1}",
    "2{0,2}",
    "2{0,3}",
    "{0,1}1",
    "{1,2}1",
]


@pytest.fixture(autouse=True)
def _fresh_state():
    Config.reset()
    metrics.reset()
    yield
    Config.reset()
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_hadamard_handler", False):
            root.removeHandler(handler)


@pytest.fixture
def default_config() -> AConfig:
    return AConfig.default(3, 4)


@pytest.fixture
def profile_13431():
    return make_profile(HVector((1, 3, 4, 3, 1)))


@pytest.fixture
def reference_points() -> list[ProjPoint]:
    return [ProjPoint(coords) for coords in REFERENCE_POINTS]


@pytest.fixture
def reference_labels() -> list[str]:
    return list(REFERENCE_LABELS)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_si_vector(rng: random.Random, max_s: int = 8) -> HVector:
    """A random codimension 3 SI-sequence with socle degree between 2 and max_s."""
    s = rng.choice([s for s in (2, 2, 3, 3, 4, 4, 5, 6, 7, 8) if s <= max_s])
    t = s // 2
    a = [1, 2]
    for i in range(2, t + 1):
        a.append(rng.randint(0, min(macaulay_bound(a[-1], i - 1), s - t + 1)))
    rising = [sum(a[: i + 1]) for i in range(t + 1)]
    entries = [rising[min(i, s - i)] for i in range(s + 1)]
    h = HVector(tuple(entries))
    assert is_si_sequence(h)
    return h


def random_config(rng: random.Random, rows: int, columns: int, top: int = 4) -> AConfig:
    """Four distinct positive ratios (never in W) with even index sets."""
    ratios: list[Fraction] = []
    pairs = []
    while len(pairs) < 4:
        alpha, beta = rng.randint(1, top), rng.randint(1, top)
        if Fraction(beta, alpha) in ratios:
            continue
        ratios.append(Fraction(beta, alpha))
        pairs.append((alpha, beta))
    return validate_config(pairs, IndexSet.evens(rows), IndexSet.evens(columns))


@pytest.fixture
def si_vector_factory(rng):
    return lambda max_s=8: random_si_vector(rng, max_s)


@pytest.fixture
def config_factory(rng):
    return lambda rows, columns, top=4: random_config(rng, rows, columns, top)
