"""
Ladders: eventually constant maps Θ¹ → K over a kernel model.

A ladder stores the root value, the values at the words of length 1..d ending in Tℓ
(chain_l) and in Tr (chain_r), and the tail values taken by every longer word. Ladders
are normalized to the least depth at construction, so dataclass equality is pointwise
equality of the maps.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from kernel.errors import LadderError
from kernel.extended import ExtendedElement, Special, render_element
from kernel.model import KernelModel
from theta.index import LambdaIndex, gamma, gamma_inv
from theta.words import EMPTY, Letter, Word, enumerate_words, words_of_length


@dataclass(frozen=True)
class Ladder:
    model: KernelModel = field(repr=False)
    root: ExtendedElement
    chain_l: Tuple[ExtendedElement, ...] = ()
    chain_r: Tuple[ExtendedElement, ...] = ()
    tail_l: Optional[ExtendedElement] = None
    tail_r: Optional[ExtendedElement] = None

    def __post_init__(self):
        chain_l, chain_r = tuple(self.chain_l), tuple(self.chain_r)
        if len(chain_l) != len(chain_r):
            raise LadderError(
                f"Chains must have equal length, got {len(chain_l)} and {len(chain_r)}"
            )
        tail_l, tail_r = self.tail_l, self.tail_r
        if chain_l:
            if tail_l is not None and tail_l != chain_l[-1]:
                raise LadderError(f"tailL {render_element(tail_l)} differs from the last level")
            if tail_r is not None and tail_r != chain_r[-1]:
                raise LadderError(f"tailR {render_element(tail_r)} differs from the last level")
            tail_l, tail_r = chain_l[-1], chain_r[-1]
        elif tail_l is None or tail_r is None:
            raise LadderError("A depth-0 ladder needs both tail values")

        lattice = self.model.lattice
        for value in (self.root, tail_l, tail_r) + chain_l + chain_r:
            lattice.check(value)

        while len(chain_l) >= 2 and chain_l[-1] == chain_l[-2] and chain_r[-1] == chain_r[-2]:
            chain_l, chain_r = chain_l[:-1], chain_r[:-1]
        if len(chain_l) == 1:
            chain_l, chain_r = (), ()

        object.__setattr__(self, "chain_l", chain_l)
        object.__setattr__(self, "chain_r", chain_r)
        object.__setattr__(self, "tail_l", tail_l)
        object.__setattr__(self, "tail_r", tail_r)

    @classmethod
    def constant(
        cls, model: KernelModel, root: ExtendedElement, value: ExtendedElement
    ) -> "Ladder":
        """Root value at ∅ and the same value at every nonempty word."""
        return cls(model, root, tail_l=value, tail_r=value)

    @classmethod
    def from_mapping(
        cls, model: KernelModel, values: Mapping[Word, ExtendedElement], depth: int
    ) -> "Ladder":
        """Values for every word of length ≤ depth; deeper words repeat the last level."""
        if depth < 0:
            raise LadderError(f"depth must be non-negative, got {depth}")
        try:
            root = values[EMPTY]
            if depth == 0:
                return cls.constant(model, root, root)
            chain_l = tuple(values[Word.ending_in(Letter.L, m)] for m in range(1, depth + 1))
            chain_r = tuple(values[Word.ending_in(Letter.R, m)] for m in range(1, depth + 1))
        except KeyError as e:
            raise LadderError(f"Missing value for word {e.args[0]}") from None
        return cls(model, root, chain_l, chain_r)

    @property
    def depth(self) -> int:
        return len(self.chain_l)

    def chain(self, letter: Letter) -> Tuple[ExtendedElement, ...]:
        return self.chain_l if letter is Letter.L else self.chain_r

    def tail(self, letter: Letter) -> ExtendedElement:
        return self.tail_l if letter is Letter.L else self.tail_r

    def at(self, length: int, letter: Letter) -> ExtendedElement:
        """Value at the word of the given length ending in `letter`."""
        if length == 0:
            return self.root
        if length <= self.depth:
            return self.chain(letter)[length - 1]
        return self.tail(letter)

    def evaluate(self, w: Word) -> ExtendedElement:
        """Value of the ladder at a word."""
        if not w:
            return self.root
        return self.at(len(w), w.tail)

    def __call__(self, w: Word) -> ExtendedElement:
        return self.evaluate(w)

    def words(self, extra: int = 1) -> List[Word]:
        """Words up to depth + extra; beyond depth + 1 values repeat the tails."""
        return enumerate_words(self.depth + extra)

    def values(self, max_len: Optional[int] = None) -> Dict[Word, ExtendedElement]:
        max_len = self.depth + 1 if max_len is None else max_len
        return {w: self.evaluate(w) for w in enumerate_words(max_len)}

    def specials(self) -> Dict[Word, Special]:
        return {w: v for w, v in self.values().items() if isinstance(v, Special)}

    def has_special(self) -> bool:
        return bool(self.specials())

    def level(self, length: int) -> Tuple[ExtendedElement, ...]:
        """Values at the words of the given length, Tℓ tail first."""
        return tuple(self.evaluate(w) for w in words_of_length(length))

    def render(self) -> str:
        levels = [render_element(self.root)]
        for m in range(1, self.depth + 1):
            left, right = self.at(m, Letter.L), self.at(m, Letter.R)
            levels.append(f"{render_element(left)}/{render_element(right)}")
        levels.append(f"...{render_element(self.tail_l)}/{render_element(self.tail_r)}")
        return " ".join(levels)

    def __str__(self) -> str:
        return self.render()


def _same_model(l1: Ladder, l2: Ladder):
    if l1.model != l2.model:
        raise LadderError(f"Ladders over different models: {l1.model.name} and {l2.model.name}")


def _pointwise(l1: Ladder, l2: Ladder, op) -> Ladder:
    _same_model(l1, l2)
    depth = max(l1.depth, l2.depth)
    root = op(l1.root, l2.root)
    if depth == 0:
        tail_l, tail_r = op(l1.tail_l, l2.tail_l), op(l1.tail_r, l2.tail_r)
        return Ladder(l1.model, root, tail_l=tail_l, tail_r=tail_r)
    chain_l = tuple(op(l1.at(m, Letter.L), l2.at(m, Letter.L)) for m in range(1, depth + 1))
    chain_r = tuple(op(l1.at(m, Letter.R), l2.at(m, Letter.R)) for m in range(1, depth + 1))
    return Ladder(l1.model, root, chain_l, chain_r)


def join(l1: Ladder, l2: Ladder) -> Ladder:
    """Pointwise join in K."""
    return _pointwise(l1, l2, l1.model.lattice.join)


def meet(l1: Ladder, l2: Ladder) -> Ladder:
    """Pointwise meet in K."""
    return _pointwise(l1, l2, l1.model.lattice.meet)


def join_all(ladders: Iterable[Ladder]) -> Ladder:
    ladders = list(ladders)
    if not ladders:
        raise LadderError("join of an empty family")
    result = ladders[0]
    for other in ladders[1:]:
        result = join(result, other)
    return result


def ladder_leq(l1: Ladder, l2: Ladder) -> bool:
    """Pointwise order."""
    _same_model(l1, l2)
    leq = l1.model.lattice.leq
    max_len = max(l1.depth, l2.depth) + 1
    return all(leq(l1.evaluate(w), l2.evaluate(w)) for w in enumerate_words(max_len))


@dataclass(frozen=True)
class LambdaLadder:
    """A ladder read as a map on Λ: the value at (i, m) is the value at γ⁻¹(i, m)."""

    ladder: Ladder

    @property
    def model(self) -> KernelModel:
        return self.ladder.model

    @property
    def depth(self) -> int:
        return self.ladder.depth

    def value(self, x: LambdaIndex) -> ExtendedElement:
        return self.ladder.evaluate(gamma_inv(x))

    @classmethod
    def from_mapping(
        cls, model: KernelModel, values: Mapping[LambdaIndex, ExtendedElement], depth: int
    ) -> "LambdaLadder":
        by_word = {gamma_inv(x): v for x, v in values.items()}
        return cls(Ladder.from_mapping(model, by_word, depth))

    def items(self, max_m: int) -> List[Tuple[LambdaIndex, ExtendedElement]]:
        return [(gamma(w), self.ladder.evaluate(w)) for w in enumerate_words(max_m)]


def eta(l: Ladder) -> LambdaLadder:
    """Re-index a ladder over Λ."""
    return LambdaLadder(l)


def eta_inv(q: LambdaLadder) -> Ladder:
    """Re-index a Λ ladder over Θ¹."""
    return q.ladder
