"""
Integer partitions, Frobenius coordinates and particle coordinates.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import LengthError, ShapeError

__all__ = [
    "Partition",
    "Frobenius",
    "conjugate",
    "particle_coords",
    "frobenius",
    "from_frobenius",
    "hook",
    "enumerate_partitions",
    "partitions_of",
    "strict_partitions",
    "doubles",
    "from_particle_coords",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; ``Partition()`` is the zero partition.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``.
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ShapeError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """``lambda_i`` with 1-based ``i``; zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def frobenius(self):
        return frobenius(self)

    @property
    def rank(self):
        return sum(1 for i, p in enumerate(self) if p > i)

    def particle_coords(self, n, length=None):
        return particle_coords(self, n, length)

    def contains(self, other):
        other = Partition(other)
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))


@dataclass(frozen=True)
class Frobenius:
    """Frobenius coordinates ``(a_1 > ... > a_r | b_1 > ... > b_r)``."""

    arms: tuple
    legs: tuple

    def __post_init__(self):
        object.__setattr__(self, "arms", tuple(int(a) for a in self.arms))
        object.__setattr__(self, "legs", tuple(int(b) for b in self.legs))
        if len(self.arms) != len(self.legs):
            raise ShapeError("arms and legs must have the same length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ShapeError(f"Frobenius sequence must be strictly decreasing and >= 0: {seq}")

    @property
    def rank(self):
        return len(self.arms)


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def particle_coords(lam, n, length=None):
    """``l_i = lambda_i - i + n`` for ``i = 1..length`` (default ``length = n``)."""
    lam = Partition(lam)
    if len(lam) > n:
        raise LengthError(f"partition {list(lam)} has more than {n} parts")
    length = n if length is None else length
    if length < len(lam):
        raise LengthError("requested fewer coordinates than parts")
    return tuple(lam.part(i) - i + n for i in range(1, length + 1))


def from_particle_coords(coords, n):
    """Inverse of :func:`particle_coords` for ``len(coords) == n``."""
    return Partition(c + i - n for i, c in enumerate(coords, start=1))


def frobenius(lam):
    lam = Partition(lam)
    conj = conjugate(lam)
    r = lam.rank
    return Frobenius(
        tuple(lam[i] - i - 1 for i in range(r)),
        tuple(conj[i] - i - 1 for i in range(r)),
    )


def from_frobenius(fr, legs=None):
    """Partition with Frobenius coordinates ``fr`` (or ``arms=fr, legs=legs``)."""
    if legs is not None:
        fr = Frobenius(tuple(fr), tuple(legs))
    elif not isinstance(fr, Frobenius):
        raise TypeError("expected a Frobenius instance or separate arms and legs")
    r = fr.rank
    if r == 0:
        return Partition()
    # row i (0-based) of the diagram: i < r -> a_i + i + 1; below the
    # diagonal the row length counts legs reaching that row
    rows = [fr.arms[i] + i + 1 for i in range(r)]
    depth = fr.legs[0] + 1
    for i in range(r, depth):
        rows.append(sum(1 for j in range(r) if fr.legs[j] + j >= i))
    return Partition(rows)


def hook(arm, leg):
    """The hook ``(arm | leg) = (arm + 1, 1^leg)``."""
    return Partition([arm + 1] + [1] * leg)


@lru_cache(maxsize=None)
def _partitions_exact(weight, max_part, max_length):
    # descending lexicographic order
    if weight == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(weight, max_part), 0, -1):
        for rest in _partitions_exact(weight - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(weight, max_length=None, max_part=None):
    """Partitions of exactly ``weight``, descending lexicographic order."""
    max_length = weight if max_length is None else max_length
    max_part = weight if max_part is None else max_part
    return [Partition(p) for p in _partitions_exact(weight, max_part, max_length)]


def enumerate_partitions(max_weight, max_length=None, max_part=None):
    """All partitions with ``|lambda| <= max_weight`` (and length / part bounds).

    Ordered by ascending weight, then descending lexicographic order, so
    ``enumerate_partitions(2, 2)`` is ``(0), (1), (2), (1, 1)``.
    """
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, max_length, max_part))
    return out


def strict_partitions(max_weight):
    """Strict partitions (distinct parts) of weight ``<= max_weight``, canonical order."""
    return [p for p in enumerate_partitions(max_weight) if len(set(p)) == len(p)]


def doubles(alpha):
    """``(D(alpha), D'(alpha))`` for a strict partition ``alpha``.

    ``D(alpha) = (alpha_1..alpha_r | alpha_1-1..alpha_r-1)`` and
    ``D'(alpha) = (alpha_1-1..alpha_r-1 | alpha_1..alpha_r)``.
    """
    alpha = Partition(alpha)
    if len(set(alpha)) != len(alpha):
        raise ShapeError(f"{list(alpha)} is not a strict partition")
    shifted = tuple(a - 1 for a in alpha)
    return (
        from_frobenius(Frobenius(tuple(alpha), shifted)),
        from_frobenius(Frobenius(shifted, tuple(alpha))),
    )
