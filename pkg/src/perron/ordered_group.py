"""Finitely generated ordered abelian groups with rational lexicographic orders.

A rank-n group is described by the images of its generators in Q^d under a
lexicographic order.  The images must be lex-positive and linearly
independent over Q, which makes the coordinate map injective and the induced
order total.  Bases evolve by transforms that subtract the smallest selected
basis element from the others; every such transform keeps all basis images
positive and enlarges the cone of non-negative integer combinations, which is
what lets any positive element eventually acquire non-negative coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .engine import Adversary, run_pair
from .errors import InternalError, ValidationError
from .transforms import Matrix, Step, Vec, apply_step, identity_matrix, intvec

LexVec = tuple[Fraction, ...]


def lexvec(entries) -> LexVec:
    """Freeze a vector of exact rationals."""
    v = tuple(Fraction(e) for e in entries)
    if not v:
        raise ValidationError("lex vector must have dimension >= 1")
    return v


def lex_sign(v: LexVec) -> int:
    """Sign of the first non-zero coordinate; 0 for the zero vector."""
    for c in v:
        if c:
            return 1 if c > 0 else -1
    return 0


def _lv_sub(u: LexVec, v: LexVec) -> LexVec:
    return tuple(a - b for a, b in zip(u, v))


def _rational_rank(rows: Sequence[LexVec]) -> int:
    """Rank over Q, computed on denominator-cleared integer rows."""
    work = []
    for row in rows:
        den = math.lcm(*(c.denominator for c in row))
        work.append([int(c * den) for c in row])
    ncols = len(work[0]) if work else 0
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                work[i] = [lead * x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class GroupOrder:
    """Order data: the lex image of each original generator."""

    images: tuple[LexVec, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def order_dim(self) -> int:
        return len(self.images[0])


def validate_order(order: GroupOrder) -> list[str]:
    """Return the list of violations (empty when the order is usable)."""
    violations = []
    if not order.images:
        return ["order must have at least one generator image"]
    lengths = {len(img) for img in order.images}
    if len(lengths) != 1:
        return ["generator images must share one length"]
    for k, img in enumerate(order.images, start=1):
        if lex_sign(img) <= 0:
            violations.append(f"image {k} is not lex-positive")
    rank = _rational_rank(order.images)
    if rank != order.rank:
        violations.append(
            f"images not independent: rank {rank} < {order.rank}")
    return violations


@dataclass(frozen=True)
class GroupBasis:
    """A basis of the group: each row of coords_in_original writes one basis
    element in the original generators; images are cached lex values."""

    order: GroupOrder
    coords_in_original: Matrix
    images: tuple[LexVec, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def initial(cls, order: GroupOrder) -> "GroupBasis":
        violations = validate_order(order)
        if violations:
            raise ValidationError("invalid order: " + "; ".join(violations))
        return cls(order, identity_matrix(order.rank), order.images)


@dataclass(frozen=True)
class GroupElement:
    """Integer coordinates relative to a designated basis."""

    basis: GroupBasis
    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", intvec(self.coords))
        if len(self.coords) != self.basis.rank:
            raise ValidationError(
                f"element has {len(self.coords)} coordinates, basis rank is "
                f"{self.basis.rank}")


def element_value(element: GroupElement) -> LexVec:
    """The element's image: the coordinate combination of the basis images."""
    imgs = element.basis.images
    acc = [Fraction(0)] * len(imgs[0])
    for c, img in zip(element.coords, imgs):
        if c:
            for k, x in enumerate(img):
                acc[k] += c * x
    return tuple(acc)


def element_compare(e1: GroupElement, e2: GroupElement) -> int:
    """-1, 0 or 1 as e1 is below, equal to, or above e2 in the group order."""
    if e1.basis != e2.basis:
        raise ValidationError("elements must be expressed in the same basis")
    return lex_sign(_lv_sub(element_value(e1), element_value(e2)))


def simple_perron(basis: GroupBasis, J) -> tuple[GroupBasis, Step]:
    """Subtract the J-minimal basis element from every other element of J.

    j is the member of J with lex-minimal image (unique, since independent
    images are distinct).  Coordinates of any element transform by the step
    matrix of the returned Step; all new images stay lex-positive and the
    basis stays unimodular over the original generators.
    """
    n = basis.rank
    Jset = frozenset(J)
    if not Jset or not all(1 <= i <= n for i in Jset):
        raise ValidationError(f"J must be a non-empty subset of 1..{n}")
    ranked = sorted(Jset, key=lambda i: basis.images[i - 1])
    j = ranked[0]
    if len(ranked) > 1 and basis.images[ranked[0] - 1] == basis.images[ranked[1] - 1]:
        raise InternalError("two basis elements share an image; order is degenerate")
    j_img = basis.images[j - 1]
    j_row = basis.coords_in_original[j - 1]
    images = tuple(
        _lv_sub(img, j_img) if (i in Jset and i != j) else img
        for i, img in enumerate(basis.images, start=1))
    rows = tuple(
        tuple(x - y for x, y in zip(row, j_row)) if (i in Jset and i != j) else row
        for i, row in enumerate(basis.coords_in_original, start=1))
    for i in Jset:
        if i != j and lex_sign(images[i - 1]) <= 0:
            raise InternalError("transformed basis image is not lex-positive")
    return GroupBasis(basis.order, rows, images), Step(Jset, j, n)


class _PerronChooser(Adversary):
    """j-chooser that tracks the evolving basis: picks the J-minimal image and
    applies the matching basis transform as it goes.  A legitimate adversary,
    so the pair engine's termination guarantee applies unchanged."""

    def __init__(self, basis: GroupBasis):
        self.basis = basis

    def choose(self, J, vectors, round_no):
        self.basis, step = simple_perron(self.basis, J)
        return step.j


class PositivizeResult(NamedTuple):
    basis: GroupBasis
    coords: Vec
    steps: tuple[Step, ...]


def positivize(basis: GroupBasis, element: GroupElement,
               step_limit: Optional[int] = None) -> PositivizeResult:
    """Transform the basis until the element has all-non-negative coordinates.

    Splits the coordinates into positive and negative parts and descends that
    pair to comparability with the J-minimal-image chooser, so every step is a
    basis transform.  Positivity of the element forces the final relation to
    come out the right way; the result expands back to the element exactly.
    """
    if element.basis != basis:
        raise ValidationError("element is not expressed in the given basis")
    if lex_sign(element_value(element)) < 0:
        raise ValidationError(
            "element is negative; only positive elements join the cone")
    if all(c >= 0 for c in element.coords):
        return PositivizeResult(basis, element.coords, ())
    plus = tuple(max(c, 0) for c in element.coords)
    minus = tuple(max(-c, 0) for c in element.coords)
    chooser = _PerronChooser(basis)
    trace = run_pair(plus, minus, chooser, step_limit=step_limit)
    coords = tuple(p - m for p, m in zip(trace.final_alpha, trace.final_beta))
    if any(c < 0 for c in coords):
        raise InternalError("positive element ended with a negative coordinate")
    return PositivizeResult(chooser.basis, coords, trace.steps)


class PositivizeAllResult(NamedTuple):
    basis: GroupBasis
    coords: tuple[Vec, ...]
    steps: tuple[Step, ...]


def positivize_all(basis: GroupBasis, elements: Sequence[GroupElement],
                   step_limit: Optional[int] = None) -> PositivizeAllResult:
    """Positivize the elements one after another in one final basis.

    The cone only grows along the way, so elements already settled keep
    non-negative coordinates while later ones are worked on.
    """
    coords_list: list[Vec] = []
    for k, e in enumerate(elements):
        if e.basis != basis:
            raise ValidationError(
                f"element {k + 1} is not expressed in the given basis")
        if lex_sign(element_value(e)) < 0:
            raise ValidationError(f"element {k + 1} is negative")
        coords_list.append(e.coords)
    current = basis
    steps: list[Step] = []
    for k in range(len(coords_list)):
        result = positivize(current, GroupElement(current, coords_list[k]),
                            step_limit=step_limit)
        for i in range(len(coords_list)):
            if i == k:
                coords_list[i] = result.coords
            else:
                c = coords_list[i]
                for step in result.steps:
                    c = apply_step(step, c)
                coords_list[i] = c
        current = result.basis
        steps.extend(result.steps)
    return PositivizeAllResult(current, tuple(coords_list), tuple(steps))
