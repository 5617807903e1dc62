"""Exact unimodular descent transforms and their applications.

Core: elementary row-sum steps drive a lexicographic measure down until a
pair of non-negative integer vectors becomes componentwise comparable, no
matter how an adversary picks within each proposed index set.  On top of
that sit a winning strategy for the polyhedra game, basis transforms that
give positive elements of ordered abelian groups non-negative coordinates,
and monomialization of polynomials under a monomial valuation.
"""

from .engine import (Adversary, EngineTrace, FirstIndex, Interactive, MaxGrowth,
                     Scripted, SeededRandom, choose_J, run_pair)
from .errors import (InteractiveAborted, InternalError, PerronError,
                     StepLimitExceeded, ValidationError)
from .game import (GameOutcome, GameState, advance_champion, apply_round,
                   is_won, propose_J, prune_dominated, solve)
from .monomials import (MonomializationResult, Polynomial, Substitution,
                        ValuedRing, apply_substitution, divisibility_transform,
                        monomial_value, monomialize, polynomial,
                        substitute_exponents, validate_ring)
from .ordered_group import (GroupBasis, GroupElement, GroupOrder, LexVec,
                            PositivizeAllResult, PositivizeResult,
                            element_compare, element_value, lex_sign, lexvec,
                            positivize, positivize_all, simple_perron,
                            validate_order)
from .tau import Comparability, ReducedPair, Tau, comparability, reduce_pair, tau
from .transforms import (Matrix, Step, Vec, apply_matrix, apply_step,
                         compose_trace, determinant, identity_matrix, intvec,
                         mat_mul, natvec, step_matrix)

__version__ = "0.1.0"

__all__ = [
    "Adversary", "Comparability", "EngineTrace", "FirstIndex", "GameOutcome",
    "GameState", "GroupBasis", "GroupElement", "GroupOrder", "Interactive",
    "InteractiveAborted", "InternalError", "LexVec", "Matrix", "MaxGrowth",
    "MonomializationResult", "PerronError", "Polynomial", "PositivizeAllResult",
    "PositivizeResult", "ReducedPair", "Scripted", "SeededRandom", "Step",
    "StepLimitExceeded", "Substitution", "Tau", "ValidationError", "ValuedRing",
    "Vec", "advance_champion", "apply_matrix", "apply_round", "apply_step",
    "apply_substitution", "choose_J", "comparability", "compose_trace",
    "determinant", "divisibility_transform", "element_compare", "element_value",
    "identity_matrix", "intvec", "is_won", "lex_sign", "lexvec", "mat_mul",
    "monomial_value", "monomialize", "natvec", "polynomial", "positivize",
    "positivize_all", "propose_J", "prune_dominated", "reduce_pair", "run_pair",
    "simple_perron", "solve", "step_matrix", "substitute_exponents", "tau",
    "validate_order", "validate_ring",
]
