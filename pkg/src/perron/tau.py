"""Reduced pairs and the lexicographic descent measure for vector pairs."""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .errors import ValidationError
from .transforms import Vec


class Comparability(Enum):
    LESS_EQ = "le"
    GREATER_EQ = "ge"
    EQUAL = "eq"
    INCOMPARABLE = "incomparable"


class Tau(NamedTuple):
    """(min, max) of the sum norms of the reduced parts; compares lexicographically."""

    first: int
    second: int


class ReducedPair(NamedTuple):
    gamma: Vec
    abar: Vec
    bbar: Vec


def _check_dims(alpha: Vec, beta: Vec):
    if len(alpha) != len(beta):
        raise ValidationError(
            f"dimension mismatch: {len(alpha)} vs {len(beta)}")


def reduce_pair(alpha: Vec, beta: Vec) -> ReducedPair:
    """Split off the coordinatewise minimum; the two remainders have disjoint supports."""
    _check_dims(alpha, beta)
    gamma = tuple(map(min, alpha, beta))
    abar = tuple(a - c for a, c in zip(alpha, gamma))
    bbar = tuple(b - c for b, c in zip(beta, gamma))
    return ReducedPair(gamma, abar, bbar)


def tau(alpha: Vec, beta: Vec) -> Tau:
    _, abar, bbar = reduce_pair(alpha, beta)
    na = sum(abar)
    nb = sum(bbar)
    return Tau(min(na, nb), max(na, nb))


def comparability(alpha: Vec, beta: Vec) -> Comparability:
    """Componentwise relation; Incomparable exactly when tau's first coordinate is positive."""
    _check_dims(alpha, beta)
    le = all(a <= b for a, b in zip(alpha, beta))
    ge = all(a >= b for a, b in zip(alpha, beta))
    if le and ge:
        return Comparability.EQUAL
    if le:
        return Comparability.LESS_EQ
    if ge:
        return Comparability.GREATER_EQ
    return Comparability.INCOMPARABLE
