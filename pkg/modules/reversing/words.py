"""
================================================================================
REVERSING MODULE - Signed Words
================================================================================

A signed word is a tuple of non-zero integers: generator i is the letter
i + 1 and its formal inverse is -(i + 1). The empty tuple is the empty word.

A word is terminal when it has the shape v' v^-1 with v', v positive, i.e.
no negative letter is immediately followed by a positive one.
================================================================================
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from modules.presentation.relations import PositiveWord, Presentation

INVERSE_SUFFIX = '^-1'


class WordSyntaxError(ValueError):
    """A word string could not be parsed against a presentation."""


@dataclass(frozen=True)
class SignedWord:
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(letter == 0 for letter in self.letters):
            raise ValueError("signed words cannot contain the letter 0")

    @classmethod
    def positive(cls, word: Sequence[int]) -> 'SignedWord':
        return cls(tuple(g + 1 for g in word))

    @classmethod
    def negative(cls, word: Sequence[int]) -> 'SignedWord':
        """The inverse of the positive word `word`."""
        return cls(tuple(-(g + 1) for g in reversed(word)))

    def __add__(self, other: 'SignedWord') -> 'SignedWord':
        return SignedWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def inverse(self) -> 'SignedWord':
        return SignedWord(tuple(-letter for letter in reversed(self.letters)))

    def reversible_positions(self) -> Tuple[int, ...]:
        letters = self.letters
        return tuple(k for k in range(len(letters) - 1)
                     if letters[k] < 0 and letters[k + 1] > 0)

    def first_reversible_position(self) -> Optional[int]:
        letters = self.letters
        for k in range(len(letters) - 1):
            if letters[k] < 0 and letters[k + 1] > 0:
                return k
        return None

    @property
    def is_terminal(self) -> bool:
        return self.first_reversible_position() is None

    def split_terminal(self) -> Tuple[PositiveWord, PositiveWord]:
        """(v', v) for a terminal word v' v^-1."""
        if not self.is_terminal:
            raise ValueError("word is not of the form v' v^-1")
        cut = next((k for k, letter in enumerate(self.letters) if letter < 0), len(self.letters))
        v_prime = tuple(letter - 1 for letter in self.letters[:cut])
        v = tuple(-letter - 1 for letter in reversed(self.letters[cut:]))
        return v_prime, v

    def exponent_vector(self, rank: int) -> Tuple[int, ...]:
        counts = [0] * rank
        for letter in self.letters:
            if letter > 0:
                counts[letter - 1] += 1
            else:
                counts[-letter - 1] -= 1
        return tuple(counts)


def parse_word(text: str, p: Presentation) -> SignedWord:
    """Parse `x0 x1^-1 x2` (whitespace-separated, `^-1` marks inverses)."""
    letters = []
    for token in text.split():
        inverse = token.endswith(INVERSE_SUFFIX)
        name = token[:-len(INVERSE_SUFFIX)] if inverse else token
        try:
            g = p.index_of(name)
        except ValueError:
            raise WordSyntaxError(f"unknown generator {name!r} in word {text!r}")
        letters.append(-(g + 1) if inverse else g + 1)
    return SignedWord(tuple(letters))


def parse_positive_word(text: str, p: Presentation) -> PositiveWord:
    word = parse_word(text, p)
    if any(letter < 0 for letter in word.letters):
        raise WordSyntaxError(f"expected a positive word, got {text!r}")
    return tuple(letter - 1 for letter in word.letters)


def format_word(w: SignedWord, p: Presentation) -> str:
    if not w:
        return 'e'
    tokens = []
    for letter in w.letters:
        name = p.generators[abs(letter) - 1].name
        tokens.append(name if letter > 0 else name + INVERSE_SUFFIX)
    return ' '.join(tokens)
