"""
================================================================================
REVERSING MODULE - Subword Reversing and Complements
================================================================================

One reversing step replaces a factor s^-1 s' by v' v^-1, where s.v' = s'.v is
the relation of the presentation starting with s and s'. A factor s^-1 s is
deleted (free cancellation). Reversing repeats steps until the word is
terminal (v' v^-1), a factor has no relation (stuck), or the step budget runs
out.

The complement w \\ w' is the v' of the terminal word reached from w^-1 w'.
================================================================================
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from modules.presentation.relations import PositiveWord, Presentation
from modules.reversing.words import SignedWord, format_word

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000

FREE_CANCELLATION = 'free-cancellation'

TERMINAL = 'terminal'
STUCK = 'stuck'
EXHAUSTED = 'exhausted-budget'


# =============================================================================
# ERRORS
# =============================================================================
class ReversingError(ValueError):
    """Base class for reversing failures."""


class NotReversibleError(ReversingError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"no negative-positive factor at position {position}")


class StuckError(ReversingError):
    def __init__(self, s: int, s_prime: int):
        self.pair = (s, s_prime)
        super().__init__(f"no relation starts with generators {s} and {s_prime}")


class BudgetExhaustedError(ReversingError):
    def __init__(self, trace: 'ReversingTrace'):
        self.trace = trace
        super().__init__(f"reversing did not terminate within {trace.step_count} steps")


# =============================================================================
# TRACES
# =============================================================================
@dataclass(frozen=True)
class TraceStep:
    """A word of the reversing sequence and the step that produced it."""

    word: SignedWord
    position: Optional[int] = None
    rule: Optional[str] = None


@dataclass(frozen=True)
class ReversingTrace:
    """
    `steps` holds every word of the sequence when recorded, otherwise only
    the input; `final` is always the last word reached.
    """

    steps: Tuple[TraceStep, ...]
    final: SignedWord
    status: str
    step_count: int
    stuck_pair: Optional[Tuple[int, int]] = None

    @property
    def initial(self) -> SignedWord:
        return self.steps[0].word

    @property
    def is_terminal(self) -> bool:
        return self.status == TERMINAL

    def to_dict(self, p: Presentation) -> dict:
        data = {
            'status': self.status,
            'step_count': self.step_count,
            'final': format_word(self.final, p),
            'steps': [{'word': format_word(step.word, p),
                       'position': step.position,
                       'rule': step.rule} for step in self.steps],
        }
        if self.stuck_pair is not None:
            data['stuck_pair'] = [p.generators[g].name for g in self.stuck_pair]
        return data


# =============================================================================
# ONE STEP
# =============================================================================
def _replacement(p: Presentation, s: int, s_prime: int) -> Optional[List[int]]:
    if s == s_prime:
        return []
    relation = p.pair_relation(s, s_prime)
    if relation is None:
        return None
    v_prime, v = relation
    return [g + 1 for g in v_prime] + [-(g + 1) for g in reversed(v)]


def _rule_name(p: Presentation, s: int, s_prime: int) -> str:
    if s == s_prime:
        return FREE_CANCELLATION
    return f"relation-{p.relation_id(s, s_prime)}"


def reverse_step(p: Presentation, w: SignedWord, position: int) -> SignedWord:
    """
    Reverse the factor at `position`.

    Raises:
        NotReversibleError: the letters at position, position+1 are not s^-1 s'
        StuckError: no relation s.v' = s'.v exists
    """
    letters = w.letters
    if not (0 <= position < len(letters) - 1
            and letters[position] < 0 < letters[position + 1]):
        raise NotReversibleError(position)
    s, s_prime = -letters[position] - 1, letters[position + 1] - 1
    replacement = _replacement(p, s, s_prime)
    if replacement is None:
        raise StuckError(s, s_prime)
    return SignedWord(letters[:position] + tuple(replacement) + letters[position + 2:])


# =============================================================================
# FULL REVERSING
# =============================================================================
def _leftmost(letters: List[int], start: int) -> Optional[int]:
    for k in range(start, len(letters) - 1):
        if letters[k] < 0 < letters[k + 1]:
            return k
    return None


def _random_position(letters: List[int], rng: random.Random) -> Optional[int]:
    positions = SignedWord(tuple(letters)).reversible_positions()
    return rng.choice(positions) if positions else None


def reverse(p: Presentation, w: SignedWord, budget: int = DEFAULT_BUDGET,
            rng: Optional[random.Random] = None, record: bool = True) -> ReversingTrace:
    """
    Reverse `w` until it is terminal, stuck, or `budget` steps were used.

    Args:
        p (Presentation): complemented presentation
        w (SignedWord): input word
        budget (int): maximum number of steps
        rng (random.Random): when given, each step picks a random reversible
            factor instead of the leftmost one
        record (bool): keep every intermediate word in the trace

    Returns:
        ReversingTrace: status is 'terminal', 'stuck' or 'exhausted-budget'
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")

    letters = list(w.letters)
    steps = [TraceStep(w)]
    count = 0
    hint = 0
    status = TERMINAL
    stuck_pair = None
    trace_debug = logger.isEnabledFor(logging.DEBUG)

    while True:
        k = _random_position(letters, rng) if rng is not None else _leftmost(letters, hint)
        if k is None:
            status = TERMINAL
            break
        if count >= budget:
            status = EXHAUSTED
            break
        s, s_prime = -letters[k] - 1, letters[k + 1] - 1
        replacement = _replacement(p, s, s_prime)
        if replacement is None:
            status = STUCK
            stuck_pair = (s, s_prime)
            break

        letters[k:k + 2] = replacement
        count += 1
        # positions left of k - 1 are untouched and had no reversible factor
        hint = max(k - 1, 0)
        if record:
            steps.append(TraceStep(SignedWord(tuple(letters)), k, _rule_name(p, s, s_prime)))
        if trace_debug:
            logger.debug("step %d at %d: %s", count, k, letters)

    final = SignedWord(tuple(letters))
    return ReversingTrace(tuple(steps), final, status, count, stuck_pair)


# =============================================================================
# COMPLEMENTS
# =============================================================================
def complement(p: Presentation, w: PositiveWord, w_prime: PositiveWord,
               budget: int = DEFAULT_BUDGET) -> Optional[PositiveWord]:
    """
    The R-complement w \\ w': the v' with w^-1 w' reversing to v' v^-1.

    Returns None when reversing gets stuck (the complement does not exist).

    Raises:
        BudgetExhaustedError: termination is undetermined within the budget
    """
    trace = reverse(p, SignedWord.negative(w) + SignedWord.positive(w_prime),
                    budget, record=False)
    if trace.status == STUCK:
        return None
    if trace.status == EXHAUSTED:
        raise BudgetExhaustedError(trace)
    v_prime, _ = trace.final.split_terminal()
    return v_prime


def complement_pair(p: Presentation, w: PositiveWord, w_prime: PositiveWord,
                    budget: int = DEFAULT_BUDGET) -> Optional[Tuple[PositiveWord, PositiveWord]]:
    """(w \\ w', w' \\ w) from a single reversing, or None when stuck."""
    trace = reverse(p, SignedWord.negative(w) + SignedWord.positive(w_prime),
                    budget, record=False)
    if trace.status == STUCK:
        return None
    if trace.status == EXHAUSTED:
        raise BudgetExhaustedError(trace)
    return trace.final.split_terminal()
