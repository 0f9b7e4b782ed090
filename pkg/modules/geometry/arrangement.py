"""
================================================================================
GEOMETRY MODULE - Lines and Arrangements
================================================================================

Exact representation of real affine line arrangements. Every line is stored
as a*x + b*y = c with rational coefficients, normalized so that the first
nonzero coefficient of (a, b) equals 1. Two input rows describing the same
line therefore normalize to the same coefficients.

Arrangement file format:
- one line per text row, three whitespace-separated rationals `a b c`
- rationals are written `p`, `-p` or `p/q` with q > 0
- `#` starts a comment, blank rows are ignored
================================================================================
"""

import logging
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

# =============================================================================
# ERRORS
# =============================================================================
class ArrangementError(ValueError):
    """Base class for invalid arrangement input."""


class MalformedRationalError(ArrangementError):
    def __init__(self, token: str, row: Optional[int] = None):
        self.token = token
        self.row = row
        where = f" on row {row}" if row is not None else ""
        super().__init__(f"malformed rational {token!r}{where}")


class DegenerateLineError(ArrangementError):
    def __init__(self, row: Optional[int] = None):
        self.row = row
        where = f" on row {row}" if row is not None else ""
        super().__init__(f"degenerate line (a = b = 0){where}")


class DuplicateLineError(ArrangementError):
    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__(f"duplicate line: lines {first} and {second} are equal")


class SharedLineError(ArrangementError):
    """Raised when two arrangements that must be disjoint share a line."""


# =============================================================================
# RATIONALS
# =============================================================================
RATIONAL_PATTERN = re.compile(r'^-?\d+(/\d+)?$')


def parse_rational(token: str, row: Optional[int] = None) -> Fraction:
    """
    Parse `p`, `-p` or `p/q` (q > 0) into a normalized Fraction.

    Decimal or exponent notation is rejected so that every input is exact.
    """
    if not RATIONAL_PATTERN.match(token):
        raise MalformedRationalError(token, row)
    if '/' in token and int(token.split('/')[1]) == 0:
        raise MalformedRationalError(token, row)
    return Fraction(token)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# =============================================================================
# LINES
# =============================================================================
@dataclass(frozen=True)
class Line:
    """The line a*x + b*y = c, at position `index` of its arrangement."""

    a: Fraction
    b: Fraction
    c: Fraction
    index: int = 0

    @classmethod
    def from_coefficients(cls, a, b, c, index: int = 0, row: Optional[int] = None) -> 'Line':
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise DegenerateLineError(row)
        lead = a if a != 0 else b
        return cls(a / lead, b / lead, c / lead, index)

    @property
    def key(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Normalized coefficients; equal keys mean equal lines."""
        return (self.a, self.b, self.c)

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def contains(self, point: Tuple[Fraction, Fraction]) -> bool:
        x, y = point
        return self.a * x + self.b * y == self.c

    def parameter(self, point: Tuple[Fraction, Fraction]) -> Fraction:
        # x orders points along a non-vertical line, y along a vertical one
        return point[1] if self.is_vertical else point[0]

    def reindexed(self, index: int) -> 'Line':
        return Line(self.a, self.b, self.c, index)

    def __str__(self) -> str:
        return f"{format_rational(self.a)} {format_rational(self.b)} {format_rational(self.c)}"


# =============================================================================
# ARRANGEMENTS
# =============================================================================
@dataclass(frozen=True)
class Arrangement:
    """An ordered list of distinct lines; the order is the global numeration."""

    lines: Tuple[Line, ...]

    def __post_init__(self):
        seen = {}
        for position, line in enumerate(self.lines):
            if line.index != position:
                raise ArrangementError(
                    f"line at position {position} carries index {line.index}")
            if line.key in seen:
                raise DuplicateLineError(seen[line.key], position)
            seen[line.key] = position

    @classmethod
    def from_lines(cls, lines: Iterable[Line]) -> 'Arrangement':
        return cls(tuple(line.reindexed(i) for i, line in enumerate(lines)))

    @classmethod
    def from_coefficients(cls, rows: Iterable[Sequence]) -> 'Arrangement':
        """Build from (a, b, c) triples; convenient for fixtures."""
        return cls(tuple(Line.from_coefficients(a, b, c, index=i)
                         for i, (a, b, c) in enumerate(rows)))

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __getitem__(self, index: int) -> Line:
        return self.lines[index]

    def union(self, other: 'Arrangement') -> 'Arrangement':
        """Lines of self followed by the lines of other, re-indexed."""
        return Arrangement.from_lines(list(self.lines) + list(other.lines))

    def with_line(self, line: Line) -> 'Arrangement':
        return Arrangement.from_lines(list(self.lines) + [line])


def parse_arrangement(text: str) -> Arrangement:
    """
    Parse arrangement-file content.

    Args:
        text (str): file content, one line `a b c` per row

    Returns:
        Arrangement: canonicalized lines in input order

    Raises:
        MalformedRationalError, DegenerateLineError, DuplicateLineError
    """
    lines = []
    seen = {}
    for row_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 3:
            raise ArrangementError(
                f"row {row_number}: expected 3 rationals, found {len(tokens)}")
        a, b, c = (parse_rational(token, row_number) for token in tokens)
        line = Line.from_coefficients(a, b, c, index=len(lines), row=row_number)
        if line.key in seen:
            raise DuplicateLineError(seen[line.key], line.index)
        seen[line.key] = line.index
        lines.append(line)

    logger.debug("parsed arrangement with %d lines", len(lines))
    return Arrangement(tuple(lines))


def read_arrangement(filepath: str) -> Arrangement:
    """Read and parse an arrangement file (UTF-8)."""
    with open(filepath, 'r', encoding='utf-8') as f:
        try:
            text = f.read()
        except UnicodeDecodeError:
            raise ArrangementError(f"{filepath}: not a UTF-8 text file")
    return parse_arrangement(text)


def format_arrangement(arr: Arrangement) -> str:
    return ''.join(f"{line}\n" for line in arr)


# =============================================================================
# BUILDERS
# =============================================================================
def pencil(m: int, center=(0, 0), slopes: Optional[Sequence] = None) -> Arrangement:
    """
    m concurrent lines through `center`.

    The default slopes are the vertical line followed by 0, 1, 2, ...
    so that pencil(2) is the pair of axes through the center.
    """
    cx, cy = Fraction(center[0]), Fraction(center[1])
    if slopes is None:
        slopes = [None] + list(range(m - 1))
    if len(slopes) != m:
        raise ArrangementError(f"pencil of {m} lines needs {m} slopes")

    rows = []
    for slope in slopes:
        if slope is None:
            rows.append((1, 0, cx))
        else:
            # y - cy = slope * (x - cx)  ->  -slope*x + y = cy - slope*cx
            slope = Fraction(slope)
            rows.append((-slope, 1, cy - slope * cx))
    return Arrangement.from_coefficients(rows)


def random_arrangement(rng: random.Random, n: int, coefficient_range: int = 4) -> Arrangement:
    """
    A random arrangement of n distinct lines with small integer coefficients.

    Small coefficients make concurrent triples and parallel pairs common,
    which is what the property tests want to exercise.
    """
    lines = []
    seen = set()
    while len(lines) < n:
        a, b, c = (rng.randint(-coefficient_range, coefficient_range) for _ in range(3))
        if a == 0 and b == 0:
            continue
        line = Line.from_coefficients(a, b, c, index=len(lines))
        if line.key in seen:
            continue
        seen.add(line.key)
        lines.append(line)
    return Arrangement(tuple(lines))
