"""
================================================================================
REVERSING MODULE - Cube Condition, Completeness and the Word Problem
================================================================================

Cube condition for a triple (u, u', u'') of positive words:

    u^-1 u'' u''^-1 u'  reverses to  v' v^-1
        ==>  (u v')^-1 (u' v)  reverses to the empty word.

The hypothesis says u.v' = u'.v in the group, which fixes the shape of the
conclusion. For a complemented presentation, the cube condition on a set of
words is equivalent to: for every permutation (a, b, c) of the triple, the
double complements (a\\b)\\(a\\c) and (b\\a)\\(b\\c) are both undefined or
both defined and equivalent.

A homogeneous presentation is complete iff the cube condition holds on its
generators. For a complete presentation, w and w' are equivalent iff
w^-1 w' reverses to the empty word.
================================================================================
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterable, Optional, Sequence, Tuple

from modules.monoid.classes import MonoidError, enumerate_classes, oracle_equivalent
from modules.presentation.relations import (
    NonHomogeneousError,
    PositiveWord,
    Presentation,
    is_homogeneous,
)
from modules.reversing.engine import (
    DEFAULT_BUDGET,
    EXHAUSTED,
    STUCK,
    BudgetExhaustedError,
    complement,
    reverse,
)
from modules.reversing.words import SignedWord

logger = logging.getLogger(__name__)

HOLDS = 'holds'
FAILS = 'fails'
UNDETERMINED = 'undetermined'

COMPLETE = 'complete'
INCOMPLETE = 'incomplete'

EQUAL = 'equal'
DISTINCT = 'distinct'


# =============================================================================
# CUBE CONDITION - DIRECT FORM
# =============================================================================
def cube_condition_direct(p: Presentation, u: PositiveWord, u_prime: PositiveWord,
                          u_second: PositiveWord, budget: int = DEFAULT_BUDGET) -> str:
    """
    Check the cube condition for (u, u', u'') by reversing.

    Returns 'holds' when the hypothesis reversing is stuck or the conclusion
    reverses to the empty word, 'fails' when the conclusion ends anywhere
    else, 'undetermined' when a reversing exhausts the budget.
    """
    hypothesis = (SignedWord.negative(u) + SignedWord.positive(u_second)
                  + SignedWord.negative(u_second) + SignedWord.positive(u_prime))
    trace = reverse(p, hypothesis, budget, record=False)
    if trace.status == STUCK:
        return HOLDS
    if trace.status == EXHAUSTED:
        return UNDETERMINED

    v_prime, v = trace.final.split_terminal()
    conclusion = SignedWord.negative(u + v_prime) + SignedWord.positive(u_prime + v)
    trace = reverse(p, conclusion, budget, record=False)
    if trace.status == EXHAUSTED:
        return UNDETERMINED
    if trace.status == STUCK or trace.final:
        return FAILS
    return HOLDS


def cube_condition_on_set(p: Presentation, words: Sequence[PositiveWord],
                          budget: int = DEFAULT_BUDGET) -> str:
    """Direct cube condition on every triple of words^3."""
    undetermined = False
    for triple in product(words, repeat=3):
        verdict = cube_condition_direct(p, *triple, budget=budget)
        if verdict == FAILS:
            return FAILS
        undetermined = undetermined or verdict == UNDETERMINED
    return UNDETERMINED if undetermined else HOLDS


# =============================================================================
# CUBE CONDITION - COMPLEMENT FORM
# =============================================================================
@lru_cache(maxsize=32)
def _classes_for(p: Presentation, max_length: int):
    return enumerate_classes(p, max_length)


def equivalent_words(p: Presentation, w: PositiveWord, w_prime: PositiveWord) -> bool:
    """Exact equivalence test through the graded closure (homogeneous p)."""
    if w == w_prime:
        return True
    if len(w) != len(w_prime):
        return False
    return oracle_equivalent(_classes_for(p, len(w)), w, w_prime)


def _double_complement(p, a, b, c, budget) -> Optional[PositiveWord]:
    a_under_b = complement(p, a, b, budget)
    a_under_c = complement(p, a, c, budget)
    if a_under_b is None or a_under_c is None:
        return None
    return complement(p, a_under_b, a_under_c, budget)


def cube_condition_complement_form(p: Presentation, u: PositiveWord, u_prime: PositiveWord,
                                   u_second: PositiveWord, budget: int = DEFAULT_BUDGET,
                                   equivalent: Optional[Callable] = None) -> str:
    """
    For every permutation (a, b, c): (a\\b)\\(a\\c) and (b\\a)\\(b\\c) are both
    undefined, or both defined and equivalent in the monoid.

    Equivalence is decided by the graded-closure oracle unless `equivalent`
    is given. Words past the oracle size cap leave the triple undetermined.
    """
    if equivalent is None:
        equivalent = lambda w, w_prime: equivalent_words(p, w, w_prime)

    undetermined = False
    for a, b, c in permutations((u, u_prime, u_second)):
        try:
            left = _double_complement(p, a, b, c, budget)
            right = _double_complement(p, b, a, c, budget)
        except BudgetExhaustedError:
            undetermined = True
            continue
        if left is None and right is None:
            continue
        if left is None or right is None:
            return FAILS
        try:
            if left != right and not equivalent(left, right):
                return FAILS
        except MonoidError:
            # double complements too long for the graded oracle
            undetermined = True
    return UNDETERMINED if undetermined else HOLDS


def complement_form_on_set(p: Presentation, words: Sequence[PositiveWord],
                           budget: int = DEFAULT_BUDGET) -> str:
    """Complement form on every 3-multiset of words; a failure wins."""
    undetermined = False
    for triple in combinations_with_replacement(words, 3):
        verdict = cube_condition_complement_form(p, *triple, budget=budget)
        if verdict == FAILS:
            return FAILS
        undetermined = undetermined or verdict == UNDETERMINED
    return UNDETERMINED if undetermined else HOLDS


# =============================================================================
# COMPLETENESS
# =============================================================================
@dataclass(frozen=True)
class CompletenessVerdict:
    verdict: str
    witness: Optional[Tuple[int, int, int]]
    triples_checked: int
    triples_total: int

    def to_dict(self, p: Presentation) -> dict:
        witness = None
        if self.witness is not None:
            witness = [p.generators[g].name for g in self.witness]
        return {
            'verdict': self.verdict,
            'witness': witness,
            'triples_checked': self.triples_checked,
            'triples_total': self.triples_total,
        }


def _check_generator_triple(args) -> str:
    p, triple, budget = args
    return cube_condition_direct(p, (triple[0],), (triple[1],), (triple[2],), budget)


def is_complete(p: Presentation, budget: int = DEFAULT_BUDGET, workers: int = 1,
                progress: Optional[Callable[[int, int], None]] = None) -> CompletenessVerdict:
    """
    Decide completeness through the cube condition on generator triples.

    Args:
        p (Presentation): homogeneous presentation
        budget (int): step budget per reversing
        workers (int): size of the process pool; 1 checks in-process
        progress (callable): called with (checked, total) after each triple

    Returns:
        CompletenessVerdict: 'complete', 'incomplete' with the first failing
        triple in lexicographic order, or 'undetermined'

    Raises:
        NonHomogeneousError: the criterion needs homogeneous relations
    """
    if not is_homogeneous(p):
        raise NonHomogeneousError("completeness criterion needs a homogeneous presentation")

    triples = list(product(range(p.rank), repeat=3))
    total = len(triples)

    if workers > 1 and total > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_check_generator_triple,
                                     ((p, t, budget) for t in triples),
                                     chunksize=max(1, total // (4 * workers))))
        if progress is not None:
            progress(total, total)
    else:
        verdicts = _serial_verdicts(p, triples, budget, progress)

    undetermined = False
    for checked, (triple, verdict) in enumerate(zip(triples, verdicts), start=1):
        if verdict == FAILS:
            logger.info("cube condition fails for generators %s", triple)
            return CompletenessVerdict(INCOMPLETE, triple, checked, total)
        undetermined = undetermined or verdict == UNDETERMINED

    verdict = UNDETERMINED if undetermined else COMPLETE
    logger.info("completeness: %s after %d triples", verdict, total)
    return CompletenessVerdict(verdict, None, total, total)


def _serial_verdicts(p, triples, budget, progress) -> Iterable[str]:
    # stops right after the first failing triple
    verdicts = []
    total = len(triples)
    for checked, triple in enumerate(triples, start=1):
        verdict = _check_generator_triple((p, triple, budget))
        verdicts.append(verdict)
        if progress is not None:
            progress(checked, total)
        if verdict == FAILS:
            break
    return verdicts


# =============================================================================
# WORD PROBLEM
# =============================================================================
def word_problem(p: Presentation, w: PositiveWord, w_prime: PositiveWord,
                 budget: int = DEFAULT_BUDGET) -> str:
    """
    'equal' iff w^-1 w' reverses to the empty word. For a complete
    presentation 'distinct' is then exact; otherwise it only means reversing
    did not prove equality.
    """
    trace = reverse(p, SignedWord.negative(w) + SignedWord.positive(w_prime),
                    budget, record=False)
    if trace.status == EXHAUSTED:
        return UNDETERMINED
    if trace.status == STUCK or trace.final:
        return DISTINCT
    return EQUAL
