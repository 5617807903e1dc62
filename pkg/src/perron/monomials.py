"""Monomial values under a valuation, divisibility transforms, and
monomialization of polynomials.

Variables x_1..x_m carry lex-vector values, the first n of them rationally
independent.  A substitution x_i = prod_j (x'_j)^(a_ij) with a non-negative
unimodular exponent matrix (identity beyond the first n variables) rewrites
polynomials so that a chosen monomial divides everything in sight.
Coefficients are exact rationals; identities below hold with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalError, ValidationError
from .ordered_group import (GroupBasis, GroupElement, GroupOrder, LexVec,
                            lex_sign, positivize, positivize_all,
                            _rational_rank)
from .transforms import Matrix, Step, Vec, compose_trace, natvec

# Canonical polynomial: exponent vector -> non-zero coefficient.
Polynomial = dict[Vec, Fraction]


@dataclass(frozen=True)
class ValuedRing:
    """m variables with lex-vector values; the first num_toric are the toric
    variables whose values form a rational basis."""

    num_vars: int
    num_toric: int
    values: tuple[LexVec, ...]

    @property
    def order_dim(self) -> int:
        return len(self.values[0])


def validate_ring(ring: ValuedRing) -> list[str]:
    """Return the list of violations (empty when the ring is usable)."""
    violations = []
    if not 1 <= ring.num_toric <= ring.num_vars:
        return [f"need 1 <= num_toric <= num_vars, got {ring.num_toric} and "
                f"{ring.num_vars}"]
    if len(ring.values) != ring.num_vars:
        return [f"expected {ring.num_vars} values, got {len(ring.values)}"]
    if len({len(v) for v in ring.values}) != 1:
        return ["values must share one length"]
    for k, v in enumerate(ring.values, start=1):
        if lex_sign(v) <= 0:
            violations.append(f"value of variable {k} is not lex-positive")
    toric = ring.values[:ring.num_toric]
    rank = _rational_rank(toric)
    if rank != ring.num_toric:
        violations.append(
            f"toric values not independent: rank {rank} < {ring.num_toric}")
    return violations


def _require_valid(ring: ValuedRing):
    violations = validate_ring(ring)
    if violations:
        raise ValidationError("invalid ring: " + "; ".join(violations))


def polynomial(terms: Iterable[tuple[Sequence[int], Fraction]]) -> Polynomial:
    """Canonicalize a term list: merge duplicate exponents, drop zeros."""
    out: Polynomial = {}
    for exponents, coeff in terms:
        e = natvec(exponents)
        c = Fraction(coeff)
        acc = out.get(e, Fraction(0)) + c
        if acc:
            out[e] = acc
        elif e in out:
            del out[e]
    return out


def monomial_value(ring: ValuedRing, exponents: Sequence[int]) -> LexVec:
    """Value of a monomial: exponents combine the variable values linearly."""
    e = natvec(exponents)
    if len(e) != ring.num_vars:
        raise ValidationError(
            f"monomial has {len(e)} exponents, ring has {ring.num_vars} variables")
    acc = [Fraction(0)] * ring.order_dim
    for c, val in zip(e, ring.values):
        if c:
            for k, x in enumerate(val):
                acc[k] += c * x
    return tuple(acc)


@dataclass(frozen=True)
class Substitution:
    """x_i = prod_j (x'_j)^(matrix[i][j]) for toric i; identity beyond.

    Carries the generating steps so callers can audit unimodularity."""

    matrix: Matrix
    num_vars: int
    steps: tuple[Step, ...] = ()

    @property
    def num_toric(self) -> int:
        return len(self.matrix)


def substitute_exponents(e: Vec, s: Substitution) -> Vec:
    n = s.num_toric
    head = tuple(sum(e[i] * s.matrix[i][j] for i in range(n)) for j in range(n))
    return head + tuple(e[n:])


def apply_substitution(p: Polynomial, s: Substitution) -> Polynomial:
    """Map every exponent vector through the substitution; coefficients move
    unchanged and no two terms can collide (the exponent map is injective)."""
    out: Polynomial = {}
    for e, c in p.items():
        if len(e) != s.num_vars:
            raise ValidationError(
                f"term has {len(e)} exponents, substitution covers {s.num_vars}")
        image = substitute_exponents(e, s)
        if image in out:
            raise InternalError("substitution collided two exponent vectors")
        out[image] = c
    return out


def _substitution_from(ring: ValuedRing, final_basis: GroupBasis,
                       steps: tuple[Step, ...]) -> tuple[Substitution, ValuedRing]:
    """Assemble the substitution matrix and the primed ring from the final
    basis reached by a run of basis transforms.

    Column i of the composed step matrix holds the coordinates of the old
    value of x_i in the new basis, so the exponent matrix is its transpose.
    """
    n = ring.num_toric
    composed = compose_trace(steps, n)
    a = tuple(tuple(composed[j][i] for j in range(n)) for i in range(n))
    new_values = final_basis.images + ring.values[n:]
    return (Substitution(a, ring.num_vars, steps),
            ValuedRing(ring.num_vars, n, new_values))


def divisibility_transform(ring: ValuedRing, m1: Sequence[int],
                           m2: Sequence[int]) -> tuple[Substitution, ValuedRing]:
    """Substitution under which the lower-valued toric monomial m1 divides m2.

    Positivizes the value difference in the group generated by the toric
    values; the resulting basis images become the primed variable values.
    """
    _require_valid(ring)
    m1 = natvec(m1)
    m2 = natvec(m2)
    n, m = ring.num_toric, ring.num_vars
    for name, mono in (("M1", m1), ("M2", m2)):
        if len(mono) != m:
            raise ValidationError(f"{name} has {len(mono)} exponents, expected {m}")
        if any(mono[n:]):
            raise ValidationError(
                f"{name} must involve only the first {n} variables")
    if not monomial_value(ring, m1) < monomial_value(ring, m2):
        raise ValidationError("value of M1 must be strictly below value of M2")
    basis = GroupBasis.initial(GroupOrder(ring.values[:n]))
    delta = GroupElement(basis, tuple(e - d for d, e in zip(m1[:n], m2[:n])))
    result = positivize(basis, delta)
    return _substitution_from(ring, result.basis, result.steps)


@dataclass(frozen=True)
class MonomializationResult:
    substitution: Substitution
    new_values: tuple[LexVec, ...]
    factor_exponents: Vec
    unit_part: Polynomial


def monomialize(ring: ValuedRing, f: Polynomial) -> MonomializationResult:
    """Rewrite f as (toric monomial) * unit with the unit outside the toric
    ideal: f's image under the substitution factors exactly, and the unit has
    a term with all toric exponents zero.

    Groups the terms by toric exponent part; the value-minimal part is unique
    because distinct toric monomials have distinct values.  One combined run
    positivizes every value difference at once, yielding a single substitution.
    """
    _require_valid(ring)
    if not f:
        raise ValidationError("polynomial must be non-zero")
    n, m = ring.num_toric, ring.num_vars
    for e in f:
        if len(e) != m:
            raise ValidationError(
                f"term has {len(e)} exponents, ring has {m} variables")

    toric_parts = sorted({e[:n] for e in f})
    zero_tail = (0,) * (m - n)
    valued = [(monomial_value(ring, t + zero_tail), t) for t in toric_parts]
    min_value, min_part = min(valued, key=lambda pair: pair[0])
    if sum(1 for v, _ in valued if v == min_value) > 1:
        raise InternalError("two distinct toric monomials share a value")

    basis = GroupBasis.initial(GroupOrder(ring.values[:n]))
    deltas = [GroupElement(basis, tuple(a - b for a, b in zip(t, min_part)))
              for t in toric_parts if t != min_part]
    combined = positivize_all(basis, deltas)
    substitution, new_ring = _substitution_from(ring, combined.basis,
                                                combined.steps)

    transformed = apply_substitution(f, substitution)
    factor = substitute_exponents(min_part + zero_tail, substitution)[:n]
    shift = factor + zero_tail
    unit: Polynomial = {}
    for e, c in transformed.items():
        reduced = tuple(x - y for x, y in zip(e, shift))
        if any(x < 0 for x in reduced):
            raise InternalError("factor does not divide the transformed polynomial")
        unit[reduced] = c
    if not any(all(e[j] == 0 for j in range(n)) for e in unit):
        raise InternalError("unit part still lies inside the toric ideal")
    return MonomializationResult(substitution, new_ring.values, factor, unit)
