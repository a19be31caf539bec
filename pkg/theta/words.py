"""
Words of the monoid Θ¹: reduced alternating words over {Tℓ, Tr} plus the empty word.

Text syntax: "e" is the empty word, otherwise a string over {"l", "r"} such as "lrl".
"""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterator, List, Optional, Tuple


class Letter(Enum):
    L = "l"
    R = "r"

    @property
    def other(self) -> "Letter":
        return Letter.R if self is Letter.L else Letter.L

    def __str__(self) -> str:
        return self.value


EMPTY_SYMBOL = "e"


@total_ordering
@dataclass(frozen=True)
class Word:
    """A reduced word; adjacent letters always differ."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a is b:
                raise ValueError(f"Word is not alternating: {self.render()}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Read 'e' or an alternating string over l and r."""
        text = text.strip()
        if text == EMPTY_SYMBOL:
            return EMPTY
        if not text:
            raise ValueError("Empty word text; use 'e' for the empty word")
        try:
            letters = tuple(Letter(ch) for ch in text)
        except ValueError:
            raise ValueError(f"Word may only contain 'l' and 'r': {text!r}") from None
        return cls(letters)

    @classmethod
    def alternating(cls, first: Letter, length: int) -> "Word":
        """The unique word of the given length starting with `first`."""
        letters = []
        letter = first
        for _ in range(length):
            letters.append(letter)
            letter = letter.other
        return cls(tuple(letters))

    @classmethod
    def ending_in(cls, last: Letter, length: int) -> "Word":
        """The unique word of the given length ending with `last`."""
        if length == 0:
            return EMPTY
        first = last if length % 2 == 1 else last.other
        return cls.alternating(first, length)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def head(self) -> Optional[Letter]:
        return self.letters[0] if self.letters else None

    @property
    def tail(self) -> Optional[Letter]:
        return self.letters[-1] if self.letters else None

    @property
    def mirror(self) -> "Word":
        """The word read backwards."""
        return Word(self.letters[::-1])

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    # length-then-tail order (Tℓ before Tr), the enumeration order
    def sort_key(self) -> Tuple[int, int]:
        if not self.letters:
            return (0, 0)
        return (len(self.letters), 0 if self.tail is Letter.L else 1)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def render(self) -> str:
        if not self.letters:
            return EMPTY_SYMBOL
        return "".join(letter.value for letter in self.letters)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.render()!r})"


EMPTY = Word()
TL = Word((Letter.L,))
TR = Word((Letter.R,))


def multiply(a: Word, b: Word) -> Word:
    """Concatenate, deleting one letter at the junction when t(a) = h(b)."""
    if not a:
        return b
    if not b:
        return a
    if a.tail is b.head:
        return Word(a.letters + b.letters[1:])
    return Word(a.letters + b.letters)


def accessors(w: Word) -> Tuple[int, Optional[Letter], Optional[Letter], Word]:
    """Length, head, tail and mirror of a word."""
    return len(w), w.head, w.tail, w.mirror


def word_leq(a: Word, b: Word) -> bool:
    """σ ≤ τ iff σ is strictly longer or equal: longer words sit lower."""
    return len(a) > len(b) or a == b


def words_of_length(length: int) -> List[Word]:
    if length == 0:
        return [EMPTY]
    return [Word.ending_in(Letter.L, length), Word.ending_in(Letter.R, length)]


def enumerate_words(max_len: int) -> List[Word]:
    """All 2·max_len + 1 words of length ≤ max_len, length first, Tℓ-tail before Tr-tail."""
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    words = []
    for length in range(max_len + 1):
        words.extend(words_of_length(length))
    return words


def nonempty_words(max_len: int) -> List[Word]:
    """enumerate_words without the empty word."""
    return enumerate_words(max_len)[1:]
