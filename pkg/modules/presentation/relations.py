"""
================================================================================
PRESENTATION MODULE - Conjugation-Free Geometric Presentations
================================================================================

One generator x<i> per line. Every intersection point with lines
i_1 < i_2 < ... < i_k contributes the relation family

    x_{i_k} x_{i_{k-1}} ... x_{i_1} = x_{i_{k-1}} ... x_{i_1} x_{i_k} = ...
                                    = x_{i_1} x_{i_k} ... x_{i_2}

i.e. all cyclic rotations of the decreasing product are declared equal. A
simple point (k = 2) gives the commutator x_j x_i = x_i x_j.

Words are tuples of 0-based generator indices. Relations are stored in the
pairwise form s.v' = s'.v, one pair of rotations per relation, so every pair
of initial letters appears in exactly one relation of a family.
================================================================================
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from modules.geometry.lattice import IncidenceLattice, IntersectionPoint

logger = logging.getLogger(__name__)

PositiveWord = Tuple[int, ...]
Relation = Tuple[PositiveWord, PositiveWord]


# =============================================================================
# ERRORS
# =============================================================================
class PresentationError(ValueError):
    """Malformed presentation or presentation file."""


class NonHomogeneousError(PresentationError):
    """An operation that needs length-preserving relations got other ones."""


# =============================================================================
# DATA TYPES
# =============================================================================
@dataclass(frozen=True)
class Generator:
    index: int
    name: str

    @classmethod
    def for_line(cls, index: int) -> 'Generator':
        return cls(index, f"x{index}")


@dataclass(frozen=True)
class RelationFamily:
    """The cyclic rotations of the decreasing product of a point's generators."""

    point: IntersectionPoint
    point_index: int
    base_word: PositiveWord

    @classmethod
    def for_point(cls, point: IntersectionPoint, point_index: int) -> 'RelationFamily':
        return cls(point, point_index, tuple(sorted(point.lines, reverse=True)))

    @property
    def rotations(self) -> Tuple[PositiveWord, ...]:
        base = self.base_word
        return tuple(base[t:] + base[:t] for t in range(len(base)))

    def rotation_starting_with(self, generator: int) -> Optional[PositiveWord]:
        for rotation in self.rotations:
            if rotation[0] == generator:
                return rotation
        return None

    def equalities(self) -> Tuple[Relation, ...]:
        """The k-1 independent equalities base = rotation."""
        rotations = self.rotations
        return tuple((rotations[0], r) for r in rotations[1:])

    def pairwise(self) -> Tuple[Relation, ...]:
        """All C(k, 2) rotation pairs, one per pair of initial letters."""
        return tuple((self.rotation_starting_with(g), self.rotation_starting_with(h))
                     for g, h in combinations(self.base_word, 2))


@dataclass(frozen=True)
class Presentation:
    """
    A semigroup presentation (S, R).

    Presentations generated from a lattice carry their relation families and
    the family index of each relation in `provenance`; hand-built ones only
    carry `relations`.
    """

    generators: Tuple[Generator, ...]
    relations: Tuple[Relation, ...]
    families: Tuple[RelationFamily, ...] = ()
    provenance: Tuple[Optional[int], ...] = ()
    certified: Optional[bool] = None
    _complements: Dict[Tuple[int, int], Tuple[PositiveWord, PositiveWord, int]] = field(
        default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.generators)
        for position, generator in enumerate(self.generators):
            if generator.index != position:
                raise PresentationError(
                    f"generator {generator.name!r} at position {position} has index {generator.index}")
        for left, right in self.relations:
            if not left or not right:
                raise PresentationError("relations must relate nonempty words")
            for letter in left + right:
                if not 0 <= letter < n:
                    raise PresentationError(f"relation uses unknown generator {letter}")

        # (s, s') -> (v', v, relation index) for the relation s.v' = s'.v;
        # on conflicting relations the first one wins
        complements = {}
        for position, (left, right) in enumerate(self.relations):
            if left[0] == right[0]:
                continue
            complements.setdefault((left[0], right[0]), (left[1:], right[1:], position))
            complements.setdefault((right[0], left[0]), (right[1:], left[1:], position))
        object.__setattr__(self, '_complements', complements)

    @classmethod
    def from_names(cls, names: Sequence[str], relations: Sequence[Relation]) -> 'Presentation':
        generators = tuple(Generator(i, name) for i, name in enumerate(names))
        return cls(generators, tuple((tuple(l), tuple(r)) for l, r in relations))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index_of(self, name: str) -> int:
        for generator in self.generators:
            if generator.name == name:
                return generator.index
        raise PresentationError(f"unknown generator {name!r}")

    def spell(self, word: Sequence[int]) -> str:
        return ' '.join(self.generators[letter].name for letter in word)

    def pair_relation(self, s: int, s_prime: int) -> Optional[Tuple[PositiveWord, PositiveWord]]:
        entry = self._complements.get((s, s_prime))
        return None if entry is None else entry[:2]

    def relation_id(self, s: int, s_prime: int) -> Optional[int]:
        entry = self._complements.get((s, s_prime))
        return None if entry is None else entry[2]


GeneratorLike = Union[int, Generator]


def _index(g: GeneratorLike) -> int:
    return g.index if isinstance(g, Generator) else g


# =============================================================================
# GENERATION FROM THE LATTICE
# =============================================================================
def generate_presentation(lat: IncidenceLattice, certified: Optional[bool] = None) -> Presentation:
    """
    The conjugation-free geometric presentation read off the lattice.

    Args:
        lat (IncidenceLattice): affine lattice of the arrangement
        certified (bool): whether the cycle-tree criterion applies; recorded
            in the output only

    Returns:
        Presentation: one generator per line, one family per point
    """
    generators = tuple(Generator.for_line(line.index) for line in lat.arrangement)
    families = tuple(RelationFamily.for_point(point, k) for k, point in enumerate(lat.points))

    relations: List[Relation] = []
    provenance: List[int] = []
    for family_index, family in enumerate(families):
        for relation in family.pairwise():
            relations.append(relation)
            provenance.append(family_index)

    logger.info("presentation: %d generators, %d families, %d relations",
                len(generators), len(families), len(relations))
    return Presentation(generators, tuple(relations), families, tuple(provenance), certified)


# =============================================================================
# STRUCTURAL CHECKS
# =============================================================================
def pair_relation(p: Presentation, s: GeneratorLike, s_prime: GeneratorLike):
    """
    The unique (v', v) with s.v' = s'.v, or None when no relation starts with
    s and s' (parallel lines).
    """
    s, s_prime = _index(s), _index(s_prime)
    if s == s_prime:
        raise PresentationError("pair_relation needs two distinct generators")
    return p.pair_relation(s, s_prime)


def is_homogeneous(p: Presentation) -> bool:
    """Every relation preserves word length, so length is a valid grading."""
    return all(len(left) == len(right) for left, right in p.relations)


@dataclass(frozen=True)
class ComplementedReport:
    ok: bool
    violations: Tuple[dict, ...]

    def to_dict(self) -> dict:
        return {'ok': self.ok, 'violations': list(self.violations)}


def is_complemented(p: Presentation) -> ComplementedReport:
    """
    No relation s... = s..., and at most one relation s... = s'... for every
    pair of distinct generators.
    """
    violations = []
    by_initials: Dict[frozenset, set] = {}
    for position, (left, right) in enumerate(p.relations):
        if left[0] == right[0]:
            violations.append({
                'kind': 'same-initial',
                'relation': position,
                'generator': p.generators[left[0]].name,
            })
            continue
        oriented = (left, right) if left[0] < right[0] else (right, left)
        by_initials.setdefault(frozenset((left[0], right[0])), set()).add(oriented)

    for initials, relations in sorted(by_initials.items(), key=lambda item: sorted(item[0])):
        if len(relations) > 1:
            s, s_prime = sorted(initials)
            violations.append({
                'kind': 'multiple-relations',
                'pair': [p.generators[s].name, p.generators[s_prime].name],
                'count': len(relations),
            })

    return ComplementedReport(not violations, tuple(violations))


def exponent_vector(word: Sequence[int], rank: int) -> Tuple[int, ...]:
    """Image of a positive word in the abelianization Z^rank."""
    counts = [0] * rank
    for letter in word:
        counts[letter] += 1
    return tuple(counts)
