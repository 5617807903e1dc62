"""Descent of a vector pair to componentwise comparability.

choose_J builds an index set J such that applying the step (J, j) strictly
decreases tau for EVERY j in J, so the opponent's choice of j never matters.
run_pair iterates this against an adversary until the pair is comparable;
termination follows from the well-ordering of the measure.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import InteractiveAborted, StepLimitExceeded, ValidationError
from .tau import Comparability, Tau, comparability, reduce_pair, tau
from .transforms import Step, Vec, apply_step, natvec


class Adversary:
    """Picks j from a proposed J, seeing the tracked vectors and round number."""

    def choose(self, J: frozenset[int], vectors: Sequence[Vec], round_no: int) -> int:
        raise NotImplementedError


class FirstIndex(Adversary):
    """Always the smallest index in J."""

    def choose(self, J, vectors, round_no):
        return min(J)


class SeededRandom(Adversary):
    """Uniform choice; the whole choice sequence is a pure function of the seed."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def choose(self, J, vectors, round_no):
        candidates = sorted(J)
        return candidates[self._rng.randrange(len(candidates))]


class MaxGrowth(Adversary):
    """Greedy: maximize the total entry sum over all tracked vectors after the
    step; ties broken by the smallest index."""

    def choose(self, J, vectors, round_no):
        dim = len(vectors[0])

        def grown_total(j):
            step = Step(J, j, dim)
            return sum(sum(apply_step(step, v)) for v in vectors)

        best = None
        best_total = None
        for j in sorted(J):
            t = grown_total(j)
            if best_total is None or t > best_total:
                best, best_total = j, t
        return best


class Scripted(Adversary):
    """Replays a fixed list of choices, falling back to the smallest index in J
    once the script is exhausted."""

    def __init__(self, choices: Sequence[int]):
        self.choices = list(choices)
        self._cursor = 0

    def choose(self, J, vectors, round_no):
        if self._cursor < len(self.choices):
            j = self.choices[self._cursor]
            self._cursor += 1
            return j
        return min(J)


class Interactive(Adversary):
    """Prompts for j on a stream pair; re-prompts on invalid input, aborts on EOF.

    Streams default to sys.stdin / sys.stderr, resolved at prompt time so
    callers may rebind them.
    """

    def __init__(self, infile=None, outfile=None):
        self._infile = infile
        self._outfile = outfile

    def choose(self, J, vectors, round_no):
        infile = self._infile if self._infile is not None else sys.stdin
        out = self._outfile if self._outfile is not None else sys.stderr
        label = "{" + ",".join(str(i) for i in sorted(J)) + "}"
        while True:
            out.write(f"choose j in {label}: ")
            out.flush()
            line = infile.readline()
            if line == "":
                raise InteractiveAborted("end of input during interactive choice")
            try:
                j = int(line.strip())
            except ValueError:
                j = None
            if j in J:
                return j
            out.write(f"j must be one of {label}\n")
            out.flush()


def _choose_J_swapped(alpha: Vec, beta: Vec) -> tuple[frozenset[int], bool]:
    """choose_J plus the flag saying whether the roles of alpha and beta were
    swapped to put the smaller reduced norm first."""
    _, abar, bbar = reduce_pair(alpha, beta)
    if sum(abar) == 0 or sum(bbar) == 0:
        raise ValidationError("pair is already comparable; no J to choose")
    swapped = sum(abar) > sum(bbar)
    if swapped:
        abar, bbar = bbar, abar
    J = {i for i, e in enumerate(abar, start=1) if e > 0}
    # Largest residuals first; the shortest prefix whose sum covers the small
    # side's norm is what makes tau drop for every j.
    order = sorted((i for i, e in enumerate(bbar, start=1) if e > 0),
                   key=lambda i: (-bbar[i - 1], i))
    need = sum(abar)
    acc = 0
    for i in order:
        J.add(i)
        acc += bbar[i - 1]
        if acc >= need:
            break
    return frozenset(J), swapped


def choose_J(alpha: Vec, beta: Vec) -> frozenset[int]:
    """Index set J such that tau strictly decreases for every choice of j in J.

    Requires the pair to be incomparable (both reduced parts non-zero).
    """
    return _choose_J_swapped(alpha, beta)[0]


@dataclass(frozen=True)
class EngineTrace:
    """Record of one descent run: steps taken, tau before each step and after
    the last, the final relation, and the per-step role-swap flags."""

    steps: tuple[Step, ...]
    tau_history: tuple[Tau, ...]
    outcome: Comparability
    swap_history: tuple[bool, ...]
    final_alpha: Vec
    final_beta: Vec

    @property
    def rounds(self) -> int:
        return len(self.steps)


OnPairRound = Callable[[Vec, Vec, frozenset, int], None]


def run_pair(alpha: Vec, beta: Vec, adversary: Adversary,
             step_limit: Optional[int] = None,
             on_round: Optional[OnPairRound] = None) -> EngineTrace:
    """Iterate choose_J against the adversary until the pair is comparable.

    Terminates for every adversary; step_limit is a safety valve only and
    raises StepLimitExceeded (with the partial trace) when hit.
    """
    a = natvec(alpha)
    b = natvec(beta)
    if len(a) != len(b):
        raise ValidationError(f"dimension mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    steps: list[Step] = []
    swaps: list[bool] = []
    history = [tau(a, b)]
    try:
        while (rel := comparability(a, b)) is Comparability.INCOMPARABLE:
            if step_limit is not None and len(steps) >= step_limit:
                raise StepLimitExceeded(
                    f"pair not comparable within {step_limit} steps", steps)
            J, swapped = _choose_J_swapped(a, b)
            if on_round is not None:
                on_round(a, b, J, len(steps) + 1)
            j = adversary.choose(J, (a, b), len(steps) + 1)
            if j not in J:
                raise ValidationError(
                    f"adversary chose j={j} outside J={sorted(J)}")
            step = Step(J, j, n)
            a = apply_step(step, a)
            b = apply_step(step, b)
            steps.append(step)
            swaps.append(swapped)
            history.append(tau(a, b))
    except InteractiveAborted as exc:
        exc.steps = tuple(steps)
        raise
    return EngineTrace(tuple(steps), tuple(history), rel, tuple(swaps), a, b)
