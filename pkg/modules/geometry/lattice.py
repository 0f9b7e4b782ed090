"""
================================================================================
GEOMETRY MODULE - Intersections and the Incidence Lattice
================================================================================

The incidence lattice of an arrangement, realized as the list of its
intersection points together with the set of lines through each of them.
Points where exactly two lines meet are simple; points where three or more
lines meet are multiple.

Every pair of non-parallel lines meets in exactly one point, so
    sum over points of C(multiplicity, 2) + #parallel pairs = C(n, 2).
================================================================================
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Optional, Tuple

from modules.geometry.arrangement import Arrangement, Line, SharedLineError

logger = logging.getLogger(__name__)

Location = Tuple[Fraction, Fraction]


# =============================================================================
# INTERSECTION OF TWO LINES
# =============================================================================
def intersect(l1: Line, l2: Line) -> Optional[Location]:
    """Unique common point of two distinct lines, or None when parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return (x, y)


# =============================================================================
# DATA TYPES
# =============================================================================
@dataclass(frozen=True)
class IntersectionPoint:
    location: Location
    lines: Tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)

    @property
    def is_multiple(self) -> bool:
        return self.multiplicity >= 3

    def to_dict(self) -> dict:
        return {
            'location': [str(self.location[0]), str(self.location[1])],
            'lines': list(self.lines),
            'multiplicity': self.multiplicity,
        }


@dataclass(frozen=True)
class IncidenceLattice:
    """
    Intersection points of an arrangement.

    `points` are sorted by location. `line_points[i]` lists the indices of
    the points on line i, ordered by the position parameter along the line.
    """

    arrangement: Arrangement
    points: Tuple[IntersectionPoint, ...]
    line_points: Tuple[Tuple[int, ...], ...]
    parallel_pairs: Tuple[Tuple[int, int], ...]
    _pair_index: Dict[FrozenSet[int], int] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        pair_index = {}
        for position, point in enumerate(self.points):
            for i, j in combinations(point.lines, 2):
                pair_index[frozenset((i, j))] = position
        object.__setattr__(self, '_pair_index', pair_index)

    @property
    def multiple_points(self) -> Tuple[IntersectionPoint, ...]:
        return tuple(p for p in self.points if p.is_multiple)

    @property
    def simple_points(self) -> Tuple[IntersectionPoint, ...]:
        return tuple(p for p in self.points if p.multiplicity == 2)

    def point_index_of(self, i: int, j: int) -> Optional[int]:
        return self._pair_index.get(frozenset((i, j)))

    def point_of(self, i: int, j: int) -> Optional[IntersectionPoint]:
        """The point shared by lines i and j, None if they are parallel."""
        position = self.point_index_of(i, j)
        return None if position is None else self.points[position]

    def to_dict(self) -> dict:
        return {
            'lines': [str(line) for line in self.arrangement],
            'points': [p.to_dict() for p in self.points],
            'line_points': [list(order) for order in self.line_points],
            'parallel_pairs': [list(pair) for pair in self.parallel_pairs],
        }


# =============================================================================
# LATTICE CONSTRUCTION
# =============================================================================
def build_lattice(arr: Arrangement) -> IncidenceLattice:
    """
    Group all pairwise intersections by location.

    Args:
        arr (Arrangement): the arrangement

    Returns:
        IncidenceLattice: points with their incident lines, per-line orders
    """
    incidences: Dict[Location, set] = {}
    parallel = []
    for l1, l2 in combinations(arr.lines, 2):
        location = intersect(l1, l2)
        if location is None:
            parallel.append((l1.index, l2.index))
            continue
        incidences.setdefault(location, set()).update((l1.index, l2.index))

    points = tuple(IntersectionPoint(location, tuple(sorted(lines)))
                   for location, lines in sorted(incidences.items()))

    line_points = []
    for line in arr.lines:
        on_line = [k for k, p in enumerate(points) if line.index in p.lines]
        on_line.sort(key=lambda k: line.parameter(points[k].location))
        line_points.append(tuple(on_line))

    lattice = IncidenceLattice(arr, points, tuple(line_points), tuple(parallel))
    logger.info("lattice: %d lines, %d points (%d multiple), %d parallel pairs",
                len(arr), len(points), len(lattice.multiple_points), len(parallel))
    return lattice


def pair_count_identity_holds(lattice: IncidenceLattice) -> bool:
    n = len(lattice.arrangement)
    total = sum(comb(p.multiplicity, 2) for p in lattice.points)
    return total + len(lattice.parallel_pairs) == comb(n, 2)


# =============================================================================
# TRANSVERSALITY
# =============================================================================
def is_transversal(arr_a: Arrangement, arr_b: Arrangement) -> bool:
    """
    True iff every line of arr_a meets every line of arr_b in a simple point
    of the union, i.e. the mutual intersections are d1*d2 distinct points.

    Parallel lines never meet in the affine plane, so any parallel pair
    between the two arrangements makes the predicate false.
    """
    keys_a = {line.key: line.index for line in arr_a}
    for line in arr_b:
        if line.key in keys_a:
            raise SharedLineError(
                f"line {keys_a[line.key]} of the first arrangement equals "
                f"line {line.index} of the second")

    union = arr_a.union(arr_b)
    lattice = build_lattice(union)
    offset = len(arr_a)
    for i in range(len(arr_a)):
        for j in range(offset, offset + len(arr_b)):
            point = lattice.point_of(i, j)
            if point is None or point.multiplicity != 2:
                logger.debug("not transversal at lines %d and %d", i, j - offset)
                return False
    return True
