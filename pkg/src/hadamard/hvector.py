"""h-vectors: binomial expansions, Macaulay bounds, O- and SI-sequences.

An h-vector (h_0, ..., h_s) of a codimension 3 Gorenstein set of points is
symmetric and its first difference up to the middle is an O-sequence. From it
the construction derives

    a_i = h_i - h_{i-1}              0 <= i <= t = floor(s/2)
    g_i = i + 1                      0 <= i <= t
          t + 1                      t <= i <= s - t + 1
          s - i + 2                  s - t + 1 <= i <= s + 1

where a is the h-vector of the curve C1 and g the h-vector of the complete
intersection stick figure containing it. The residual curve C2 has h-vector
b_i = g_{s+1-i} - a_{s+1-i} and a_i + b_i - g_i is the first difference of h.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
import logging
from math import comb

from cachetools import LRUCache, cached

from src.enums import ValidationCode
from src.hadamard.errors import InvariantViolation, ValidationError

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=4096))
def binomial_expansion(n: int, i: int) -> tuple[int, ...]:
    """The i-binomial expansion of n as the decreasing tuple (n_i, ..., n_j).

    n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j) with
    n_i > n_{i-1} > ... > n_j >= j >= 1, found greedily.
    """
    if n < 1 or i < 1:
        raise ValueError(f"binomial expansion needs n >= 1 and i >= 1, got n={n}, i={i}")
    tops = []
    rest = n
    k = i
    while rest > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= rest:
            top += 1
        tops.append(top)
        rest -= comb(top, k)
        k -= 1
    return tuple(tops)


def macaulay_bound(n: int, i: int) -> int:
    """Macaulay's bound n^<i> on the growth of an O-sequence from degree i to i + 1."""
    if i < 1:
        raise ValueError(f"Macaulay bound needs i >= 1, got {i}")
    if n == 0:
        return 0
    return sum(comb(top + 1, i - offset + 1) for offset, top in enumerate(binomial_expansion(n, i)))


def _first_growth_violation(seq: Sequence[int]) -> int | None:
    """Index of the first entry breaking the O-sequence conditions, or None."""
    if not seq:
        return None
    if seq[0] != 1:
        return 0
    for index, value in enumerate(seq):
        if value < 0:
            return index
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > macaulay_bound(seq[i], i):
            return i + 1
    return None


def is_o_sequence(seq: Sequence[int]) -> bool:
    return _first_growth_violation(seq) is None


@dataclass(frozen=True)
class HVector:
    """Finite sequence h_0, ..., h_s of nonnegative integers."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Read a comma separated list such as "1,3,4,3,1"."""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            raise ValidationError(ValidationCode.MALFORMED_INPUT, f"bad h-vector {text!r}") from e

    @property
    def s(self) -> int:
        return len(self.entries) - 1

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def first_difference(self) -> tuple[int, ...]:
        """h_i - h_{i-1} for i = 0 .. s + 1, with h_{-1} = h_{s+1} = 0."""
        padded = (0, *self.entries, 0)
        return tuple(padded[i + 1] - padded[i] for i in range(len(self.entries) + 1))

    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def _rising_part(h: HVector) -> tuple[int, ...]:
    t = h.s // 2
    return tuple(h[i] - (h[i - 1] if i else 0) for i in range(t + 1))


def is_si_sequence(h: HVector | Iterable[int]) -> bool:
    """Symmetric with an O-sequence as first difference up to the middle."""
    if not isinstance(h, HVector):
        h = HVector(tuple(h))
    if not h.entries or any(x < 0 for x in h):
        return False
    return h.is_symmetric() and is_o_sequence(_rising_part(h))


@dataclass(frozen=True)
class SIProfile:
    """A validated codimension 3 SI-sequence with its derived sequences.

    Attributes:
        h: The h-vector
        s: Socle degree, the index of the last entry of h
        t: floor(s / 2)
        a: First difference of h up to t, the h-vector of C1
        g: h-vector of the complete intersection stick figure, length s + 2
    """

    h: HVector
    s: int
    t: int
    a: tuple[int, ...]
    g: tuple[int, ...]

    @property
    def rows(self) -> int:
        """Number of P indices the construction needs, t + 1."""
        return self.t + 1

    @property
    def columns(self) -> int:
        """Number of Q indices the construction needs, s - t + 2."""
        return self.s - self.t + 2

    def a_at(self, i: int) -> int:
        """a_i, extended by zeros outside 0 .. t."""
        return self.a[i] if 0 <= i <= self.t else 0


def _g_sequence(s: int, t: int) -> tuple[int, ...]:
    values = []
    for i in range(s + 2):
        if i <= t:
            values.append(i + 1)
        elif i <= s - t + 1:
            values.append(t + 1)
        else:
            values.append(s - i + 2)
    return tuple(values)


def make_profile(h: HVector | Iterable[int]) -> SIProfile:
    """Validate h and derive s, t, a and g.

    Raises:
        ValidationError: Naming the first violated condition
    """
    if not isinstance(h, HVector):
        h = HVector(tuple(h))
    if not h.entries or h[0] != 1:
        raise ValidationError(ValidationCode.NOT_PROFILE, f"h-vector {h} must start with 1", 0)
    for index, value in enumerate(h):
        if value < 0:
            raise ValidationError(ValidationCode.NOT_PROFILE, f"h-vector {h} has a negative entry", index)
    for index in range(len(h) // 2):
        if h[index] != h[h.s - index]:
            raise ValidationError(ValidationCode.NOT_SYMMETRIC, f"h-vector {h} is not symmetric", index)
    if len(h) < 2 or h[1] != 3:
        raise ValidationError(ValidationCode.CODIMENSION, f"h-vector {h} must have h_1 = 3", 1)

    s = h.s
    t = s // 2
    a = _rising_part(h)
    violation = _first_growth_violation(a)
    if violation is not None:
        raise ValidationError(
            ValidationCode.NOT_O_SEQUENCE, f"first difference {a} of {h} is not an O-sequence", violation
        )
    for index, value in enumerate(a):
        if value > s - t + 1:
            raise ValidationError(ValidationCode.A_RANGE, f"a_{index} = {value} exceeds s-t+1 = {s - t + 1}", index)

    profile = SIProfile(h=h, s=s, t=t, a=a, g=_g_sequence(s, t))
    logger.debug("profile of %s: s=%d t=%d a=%s g=%s", h, s, t, a, profile.g)
    return profile


def difference_sequence(profile: SIProfile, b: Sequence[int]) -> tuple[int, ...]:
    """d_i = a_i + b_i - g_i for i = 0 .. s + 1."""
    return tuple(
        profile.a_at(i) + (b[i] if i < len(b) else 0) - profile.g[i] for i in range(profile.s + 2)
    )


def residual_b(profile: SIProfile) -> tuple[int, ...]:
    """h-vector b of the residual curve C2, trailing zeros dropped.

    Raises:
        InvariantViolation: If a + b - g is not the first difference of h
    """
    s = profile.s
    b = [profile.g[s + 1 - i] - profile.a_at(s + 1 - i) for i in range(s + 2)]
    while b and b[-1] == 0:
        b.pop()
    d = difference_sequence(profile, b)
    if d != profile.h.first_difference():
        raise InvariantViolation(f"a + b - g = {d} differs from the first difference of {profile.h}")
    return tuple(b)
