"""The polyhedra game: rules, win detection, and the champion strategy.

One player proposes J, the opponent picks j in J, and every tracked point
updates by the same step.  The proposer wins once some point is a
componentwise minimum of the set.  The strategy below keeps a champion that
is below every point already processed and attacks the first point the
champion cannot be compared with; steps preserve componentwise inequalities,
so settled points stay settled.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

from .engine import Adversary, choose_J
from .errors import InteractiveAborted, StepLimitExceeded, ValidationError
from .tau import Comparability, comparability
from .transforms import Step, Vec, apply_step, natvec


@dataclass(frozen=True)
class GameState:
    vectors: tuple[Vec, ...]
    round: int = 0
    trace: tuple[Step, ...] = ()
    champion_index: int = 0


@dataclass(frozen=True)
class GameOutcome:
    final_vectors: tuple[Vec, ...]
    winner_index: int
    trace: tuple[Step, ...]
    rounds: int


def _validated_vectors(vectors) -> tuple[Vec, ...]:
    vs = tuple(natvec(v) for v in vectors)
    if not vs:
        raise ValidationError("vector list must be non-empty")
    n = len(vs[0])
    for v in vs:
        if len(v) != n:
            raise ValidationError("all vectors must share one dimension")
    return vs


def _minimum_index(vs: Sequence[Vec]) -> Optional[int]:
    for i, v in enumerate(vs):
        if all(all(x <= y for x, y in zip(v, w)) for w in vs):
            return i
    return None


def is_won(vectors: Sequence[Vec]) -> Optional[int]:
    """Index of a componentwise minimum (smallest index on ties), or None."""
    return _minimum_index(_validated_vectors(vectors))


def apply_round(state: GameState, J, j: int) -> GameState:
    """Apply the step (J, j) to every vector; append it to the trace."""
    step = Step(frozenset(J), j, len(state.vectors[0]))
    return replace(state,
                   vectors=tuple(apply_step(step, v) for v in state.vectors),
                   round=state.round + 1,
                   trace=state.trace + (step,))


def advance_champion(vectors: Sequence[Vec], champion_index: int) -> tuple[int, Optional[int]]:
    """Sweep the vectors in input order, absorbing everything comparable into
    the champion; return the updated champion index and the index of the first
    incomparable vector (None if the sweep completes).

    Strict inequalities survive steps, so the sweep is stable across rounds.
    """
    champ = champion_index
    for i, v in enumerate(vectors):
        if i == champ:
            continue
        rel = comparability(vectors[champ], v)
        if rel is Comparability.INCOMPARABLE:
            return champ, i
        if rel is Comparability.GREATER_EQ:
            champ = i
    return champ, None


def propose_J(state: GameState) -> frozenset[int]:
    """The J to play now: choose_J on the champion and the first vector it
    cannot be compared with."""
    champ, target = advance_champion(state.vectors, state.champion_index)
    if target is None:
        raise ValidationError("game is already won; nothing to propose")
    return choose_J(state.vectors[champ], state.vectors[target])


OnGameRound = Callable[[GameState, frozenset], None]


def solve(vectors, adversary: Adversary,
          step_limit: Optional[int] = None,
          on_round: Optional[OnGameRound] = None) -> GameOutcome:
    """Play the champion strategy to a won position, against any adversary."""
    state = GameState(_validated_vectors(vectors))
    try:
        while True:
            champ, target = advance_champion(state.vectors, state.champion_index)
            state = replace(state, champion_index=champ)
            if target is None:
                winner = _minimum_index(state.vectors)
                return GameOutcome(state.vectors, winner, state.trace, state.round)
            if step_limit is not None and state.round >= step_limit:
                raise StepLimitExceeded(
                    f"game not won within {step_limit} rounds", state.trace)
            J = choose_J(state.vectors[champ], state.vectors[target])
            if on_round is not None:
                on_round(state, J)
            j = adversary.choose(J, state.vectors, state.round + 1)
            if j not in J:
                raise ValidationError(f"adversary chose j={j} outside J={sorted(J)}")
            state = apply_round(state, J, j)
    except InteractiveAborted as exc:
        exc.steps = state.trace
        raise


def prune_dominated(vectors) -> tuple[Vec, ...]:
    """Keep exactly the componentwise-minimal vectors, deduplicated, in input
    order.  The positive hull of the set is unchanged."""
    vs = _validated_vectors(vectors)
    kept: list[Vec] = []
    for v in vs:
        dominated = any(w != v and all(x <= y for x, y in zip(w, v)) for w in vs)
        if not dominated and v not in kept:
            kept.append(v)
    return tuple(kept)
