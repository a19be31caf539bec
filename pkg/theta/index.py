"""
The index poset Λ = ({0,1} × ℕ) ∪ {(0,0) = (1,0)} and the order isomorphism γ: Θ¹ → Λ.
"""

import re
from dataclasses import dataclass
from typing import List

from theta.words import EMPTY, Letter, Word

_PAIR = re.compile(r"^\(\s*([01])\s*,\s*(\d+)\s*\)$")


@dataclass(frozen=True)
class LambdaIndex:
    """Canonical pair (i, m); m = 0 forces i = 0."""

    i: int
    m: int

    def __post_init__(self):
        if self.i not in (0, 1):
            raise ValueError(f"LambdaIndex i must be 0 or 1, got {self.i}")
        if self.m < 0:
            raise ValueError(f"LambdaIndex m must be non-negative, got {self.m}")
        if self.m == 0 and self.i == 1:
            object.__setattr__(self, "i", 0)

    @classmethod
    def parse(cls, text: str) -> "LambdaIndex":
        """Read the text form '(i,m)'."""
        match = _PAIR.match(text.strip())
        if not match:
            raise ValueError(f"Expected a pair like (1,3), got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    @property
    def letter(self) -> Letter:
        # index 0 ↔ tail Tr, index 1 ↔ tail Tℓ
        return Letter.R if self.i == 0 else Letter.L

    def render(self) -> str:
        return f"({self.i},{self.m})"

    def __str__(self) -> str:
        return self.render()


ROOT_INDEX = LambdaIndex(0, 0)


def gamma(w: Word) -> LambdaIndex:
    """Λ index of a word: 1 for a Tℓ tail, 0 for a Tr tail, paired with the length."""
    if not w:
        return ROOT_INDEX
    return LambdaIndex(0 if w.tail is Letter.R else 1, len(w))


def gamma_inv(x: LambdaIndex) -> Word:
    """The word with the index's tail letter and length."""
    if x.m == 0:
        return EMPTY
    return Word.ending_in(x.letter, x.m)


def lambda_leq(x: LambdaIndex, y: LambdaIndex) -> bool:
    """Order on Λ matching word_leq under gamma."""
    return x.m > y.m or x == y


def enumerate_indices(max_m: int) -> List[LambdaIndex]:
    """Indices with m ≤ max_m in the same order as theta.words.enumerate_words."""
    indices = [ROOT_INDEX]
    for m in range(1, max_m + 1):
        indices.append(LambdaIndex(1, m))
        indices.append(LambdaIndex(0, m))
    return indices
