"""
================================================================================
MONOID MODULE - Length-Graded Equivalence Classes
================================================================================

For a homogeneous presentation every relation preserves length, so the
positive words of a fixed length are closed under rewriting. The classes of
length l are the connected components of "differs by one relation applied at
one position", computed with a disjoint set over all rank^l words.
================================================================================
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Sequence, Tuple

from modules.monoid.disjoint_set import DisjointSet
from modules.presentation.relations import (
    NonHomogeneousError,
    PositiveWord,
    Presentation,
    is_homogeneous,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_LENGTH = 5
DEFAULT_SIZE_CAP = 200_000


# =============================================================================
# ERRORS
# =============================================================================
class MonoidError(ValueError):
    """Base class for graded-class exploration failures."""


class SizeCapExceededError(MonoidError):
    def __init__(self, length: int, count: int, cap: int):
        self.length = length
        self.count = count
        self.cap = cap
        super().__init__(f"{count} words of length {length} exceed the size cap {cap}")


class WordTooLongError(MonoidError):
    def __init__(self, length: int, max_length: int):
        self.length = length
        self.max_length = max_length
        super().__init__(f"word of length {length} is beyond the explored length {max_length}")


# =============================================================================
# GRADED CLASSES
# =============================================================================
@dataclass(frozen=True)
class GradedClasses:
    """
    `classes[l]` lists the classes of words of length l, each class sorted,
    classes ordered by their smallest word. Length 0 holds the empty word.
    """

    rank: int
    max_length: int
    classes: Tuple[Tuple[Tuple[PositiveWord, ...], ...], ...]
    _ids: Dict[PositiveWord, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        ids = {}
        for per_length in self.classes:
            for class_id, members in enumerate(per_length):
                for word in members:
                    ids[word] = class_id
        object.__setattr__(self, '_ids', ids)

    def _check_length(self, word: Sequence[int]):
        if len(word) > self.max_length:
            raise WordTooLongError(len(word), self.max_length)

    def class_id(self, word: Sequence[int]) -> int:
        self._check_length(word)
        return self._ids[tuple(word)]

    def class_of(self, word: Sequence[int]) -> Tuple[PositiveWord, ...]:
        return self.classes[len(word)][self.class_id(word)]

    def class_counts(self) -> Tuple[int, ...]:
        """Number of classes per length 0..max_length."""
        return tuple(len(per_length) for per_length in self.classes)

    def to_dict(self, p: Presentation, list_classes: bool = False) -> dict:
        data = {
            'max_length': self.max_length,
            'class_counts': {str(length): count for length, count in enumerate(self.class_counts())},
        }
        if list_classes:
            data['classes'] = {
                str(length): [[p.spell(word) for word in members] for members in per_length]
                for length, per_length in enumerate(self.classes) if length > 0
            }
        return data


def _rewrite_table(p: Presentation) -> Dict[PositiveWord, List[PositiveWord]]:
    table: Dict[PositiveWord, List[PositiveWord]] = {}
    for left, right in p.relations:
        table.setdefault(left, []).append(right)
        table.setdefault(right, []).append(left)
    return table


def _classes_of_length(rank: int, length: int, table, relation_lengths) -> Tuple[Tuple[PositiveWord, ...], ...]:
    words = DisjointSet()
    for word in product(range(rank), repeat=length):
        words.make_set(word)
        for r in relation_lengths:
            for i in range(length - r + 1):
                for replacement in table.get(word[i:i + r], ()):
                    words.union(word, word[:i] + replacement + word[i + r:])
    return tuple(sorted(tuple(sorted(group)) for group in words.groups()))


def enumerate_classes(p: Presentation, max_length: int = DEFAULT_MAX_LENGTH,
                      size_cap: int = DEFAULT_SIZE_CAP) -> GradedClasses:
    """
    Partition every positive word of length <= max_length into classes.

    Raises:
        NonHomogeneousError: some relation changes the length
        SizeCapExceededError: rank^length exceeds size_cap for some length
    """
    if not is_homogeneous(p):
        raise NonHomogeneousError("graded classes need length-preserving relations")
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    for length in range(max_length + 1):
        count = p.rank ** length
        if count > size_cap:
            raise SizeCapExceededError(length, count, size_cap)

    table = _rewrite_table(p)
    relation_lengths = sorted({len(left) for left in table})

    classes = []
    for length in range(max_length + 1):
        per_length = _classes_of_length(p.rank, length, table, relation_lengths)
        logger.debug("length %d: %d words in %d classes", length, p.rank ** length, len(per_length))
        classes.append(per_length)

    graded = GradedClasses(p.rank, max_length, tuple(classes))
    logger.info("graded classes up to length %d: %s", max_length, graded.class_counts())
    return graded


def oracle_equivalent(gc: GradedClasses, w: Sequence[int], w_prime: Sequence[int]) -> bool:
    """
    Exact equivalence of positive words within the explored lengths.

    Raises:
        WordTooLongError: a word is longer than gc.max_length
    """
    gc._check_length(w)
    gc._check_length(w_prime)
    if len(w) != len(w_prime):
        return False
    return gc.class_id(w) == gc.class_id(w_prime)


def product_class_counts(a: GradedClasses, b: GradedClasses) -> Tuple[int, ...]:
    """
    Class counts of a direct product of two graded monoids: the convolution
    of the two count sequences, up to the shorter max_length.
    """
    counts_a, counts_b = a.class_counts(), b.class_counts()
    top = min(a.max_length, b.max_length)
    return tuple(sum(counts_a[k] * counts_b[length - k] for k in range(length + 1))
                 for length in range(top + 1))
