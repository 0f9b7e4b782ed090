"""
================================================================================
MONOID MODULE - Cancellativity and Least Common Multiples
================================================================================

Bounded checks of the structural consequences of completeness:

- left-cancellativity: s.y = s.z implies y = z, for generators s and
  |s.y| <= max_length;
- least common right-multiples of generator pairs: s.(s\\s') = s'.(s'\\s) and
  every common right-multiple of s, s' up to max_length is a right-multiple
  of that value.

Both reports say "verified up to length L"; nothing beyond L is claimed.
================================================================================
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from modules.monoid.classes import GradedClasses
from modules.presentation.relations import PositiveWord, Presentation
from modules.reversing.engine import DEFAULT_BUDGET, BudgetExhaustedError, complement_pair

logger = logging.getLogger(__name__)

LCM_OK = 'ok'
LCM_FAILS = 'fails'
LCM_VACUOUS = 'vacuous'
LCM_TOO_LONG = 'too-long'
LCM_UNDETERMINED = 'undetermined'


# =============================================================================
# LEFT CANCELLATIVITY
# =============================================================================
@dataclass(frozen=True)
class CancellativityReport:
    ok: bool
    max_length: int
    counterexample: Optional[Tuple[int, PositiveWord, PositiveWord]] = None

    def to_dict(self, p: Presentation) -> dict:
        data = {'ok': self.ok, 'verified_up_to_length': self.max_length, 'counterexample': None}
        if self.counterexample is not None:
            s, y, z = self.counterexample
            data['counterexample'] = {'s': p.generators[s].name, 'y': p.spell(y), 'z': p.spell(z)}
        return data


def check_left_cancellativity(gc: GradedClasses) -> CancellativityReport:
    """
    Within each class of length l + 1, all words starting with the same
    generator s must have equivalent tails. Returns the first (s, y, z) with
    s.y = s.z and y != z otherwise.
    """
    for length in range(1, gc.max_length + 1):
        for members in gc.classes[length]:
            tails = {}
            for word in members:
                s, tail = word[0], word[1:]
                seen = tails.setdefault(s, tail)
                if gc.class_id(seen) != gc.class_id(tail):
                    logger.info("left cancellation fails for %s: %s vs %s", s, seen, tail)
                    return CancellativityReport(False, gc.max_length, (s, seen, tail))
    return CancellativityReport(True, gc.max_length)


# =============================================================================
# LEAST COMMON MULTIPLES
# =============================================================================
@dataclass(frozen=True)
class LcmReport:
    ok: bool
    max_length: int
    details: Tuple[dict, ...]

    def to_dict(self) -> dict:
        return {'ok': self.ok, 'verified_up_to_length': self.max_length,
                'pairs': list(self.details)}


def _common_multiples(gc: GradedClasses, s: int, s_prime: int):
    """Classes (length, class id) holding words starting with s and with s'."""
    for length in range(2, gc.max_length + 1):
        for class_id, members in enumerate(gc.classes[length]):
            initials = {word[0] for word in members}
            if s in initials and s_prime in initials:
                yield length, class_id


def _is_right_multiple(gc: GradedClasses, members, lcm_class: int, lcm_length: int) -> bool:
    return any(gc.class_id(word[:lcm_length]) == lcm_class for word in members)


def _check_pair(gc: GradedClasses, p: Presentation, s: int, s_prime: int, budget: int) -> dict:
    detail = {'pair': [p.generators[s].name, p.generators[s_prime].name]}
    try:
        complements = complement_pair(p, (s,), (s_prime,), budget)
    except BudgetExhaustedError:
        detail.update(status=LCM_UNDETERMINED, note='complement did not terminate within the budget')
        return detail

    if complements is None:
        witness = next(_common_multiples(gc, s, s_prime), None)
        if witness is None:
            detail.update(status=LCM_VACUOUS,
                          note=f"no common multiple up to length {gc.max_length}")
        else:
            length, class_id = witness
            detail.update(status=LCM_FAILS,
                          note='common multiple exists but the complement is undefined',
                          witness=p.spell(gc.classes[length][class_id][0]))
        return detail

    s_under, s_prime_under = complements
    lcm = (s,) + s_under
    detail['lcm'] = p.spell(lcm)
    if len(lcm) > gc.max_length:
        detail.update(status=LCM_TOO_LONG, note=f"lcm candidate longer than {gc.max_length}")
        return detail
    lcm_members = gc.class_of(lcm)
    if (s_prime,) + s_prime_under not in lcm_members:
        detail.update(status=LCM_FAILS, note="s.(s\\s') and s'.(s'\\s) are not equivalent")
        return detail
    detail['lcm_class'] = [p.spell(word) for word in lcm_members]

    lcm_class = gc.class_id(lcm)
    for length, class_id in _common_multiples(gc, s, s_prime):
        members = gc.classes[length][class_id]
        if length < len(lcm) or not _is_right_multiple(gc, members, lcm_class, len(lcm)):
            detail.update(status=LCM_FAILS,
                          note='common multiple is not a right-multiple of the lcm candidate',
                          witness=p.spell(members[0]))
            return detail

    detail['status'] = LCM_OK
    return detail


def check_lcm_existence(gc: GradedClasses, p: Presentation,
                        budget: int = DEFAULT_BUDGET) -> LcmReport:
    """
    Check least common right-multiples of every generator pair up to
    gc.max_length. Pairs without a complement pass vacuously only when no
    common multiple exists in range; lcm candidates longer than the explored
    length are reported and not counted as failures.
    """
    details = tuple(_check_pair(gc, p, s, s_prime, budget)
                    for s, s_prime in combinations(range(p.rank), 2))
    ok = all(detail['status'] not in (LCM_FAILS, LCM_UNDETERMINED) for detail in details)
    logger.info("lcm check up to length %d: %s", gc.max_length, 'ok' if ok else 'fails')
    return LcmReport(ok, gc.max_length, details)
