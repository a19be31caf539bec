"""
The relations K, Tℓ, Tr, Kℓ, Kr and B read off ladders, and band containment.
"""

import logging
from enum import Enum
from typing import Dict, Hashable, Iterable, List, Tuple

from kernel.errors import LadderError
from kernel.extended import ExtendedElement, Special
from ladder.ladder import Ladder, join, ladder_leq, meet
from theta.words import Letter, Word, enumerate_words

log = logging.getLogger(__name__)


class RelationTag(Enum):
    K = "K"
    Tl = "Tl"
    Tr = "Tr"
    Kl = "Kl"
    Kr = "Kr"
    B = "B"

    @classmethod
    def parse(cls, text: str) -> "RelationTag":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(
                f"Unknown relation: {text}. Choose from {[t.value for t in cls]}"
            ) from None


def _check_pair(l1: Ladder, l2: Ladder) -> int:
    if l1.model != l2.model:
        raise LadderError(f"Ladders over different models: {l1.model.name} and {l2.model.name}")
    return max(l1.depth, l2.depth)


def chain(l: Ladder, head: Letter, length: int) -> Tuple[ExtendedElement, ...]:
    """Values at the words Tℓ, TℓTr, TℓTrTℓ, ... (or the Tr-headed dual) up to `length`."""
    return tuple(l.evaluate(Word.alternating(head, m)) for m in range(1, length + 1))


def _same_heads(l1: Ladder, l2: Ladder, head: Letter, depth: int) -> bool:
    # a headed word of length depth + 2 reaches both tails
    return chain(l1, head, depth + 2) == chain(l2, head, depth + 2)


def _same_specials(l1: Ladder, l2: Ladder, depth: int) -> bool:
    for w in enumerate_words(depth + 1):
        a, b = l1.evaluate(w), l2.evaluate(w)
        if (isinstance(a, Special) or isinstance(b, Special)) and a != b:
            return False
    return True


def related(tag: RelationTag, l1: Ladder, l2: Ladder) -> bool:
    """Whether the two ladders lie in the same class of the relation."""
    depth = _check_pair(l1, l2)
    if tag is RelationTag.K:
        return l1.root == l2.root
    if tag is RelationTag.Tl:
        return _same_heads(l1, l2, Letter.L, depth)
    if tag is RelationTag.Tr:
        return _same_heads(l1, l2, Letter.R, depth)
    if tag in (RelationTag.Kl, RelationTag.Kr):
        head = Letter.L if tag is RelationTag.Kl else Letter.R
        words = [Word()] + [Word.alternating(head, m) for m in range(1, depth + 3)]
        return all(l1.evaluate(w) == l2.evaluate(w) for w in words)
    if tag is RelationTag.B:
        return _same_specials(l1, l2, depth)
    raise ValueError(f"Unknown relation: {tag}. Choose from {[t.value for t in RelationTag]}")


def relate_all(l1: Ladder, l2: Ladder) -> Dict[RelationTag, bool]:
    return {tag: related(tag, l1, l2) for tag in RelationTag}


def contains_bands(l: Ladder) -> bool:
    """True iff T* appears nowhere; a special without any T* is an inconsistent ladder."""
    specials = set(l.specials().values())
    if Special.T in specials:
        return False
    if specials:
        raise LadderError(
            f"Ladder has {sorted(str(s) for s in specials)} but never reaches T*"
        )
    return True


def b_signature(l: Ladder, max_len: int) -> Tuple[Tuple[str, str], ...]:
    """Positions and values of the specials among words of length ≤ max_len."""
    return tuple(
        (w.render(), str(v))
        for w in enumerate_words(max_len)
        if isinstance(v := l.evaluate(w), Special)
    )


def classes(tag: RelationTag, ladders: Iterable[Ladder]) -> List[List[Ladder]]:
    """Partition by the relation, classes in order of first appearance."""
    result: List[List[Ladder]] = []
    for l in ladders:
        for cls in result:
            if related(tag, cls[0], l):
                cls.append(l)
                break
        else:
            result.append([l])
    return result


def b_classes(ladders: Iterable[Ladder]) -> List[List[Ladder]]:
    ladders = list(ladders)
    if not ladders:
        return []
    max_len = max(l.depth for l in ladders) + 1
    grouped: Dict[Hashable, List[Ladder]] = {}
    for l in ladders:
        grouped.setdefault(b_signature(l, max_len), []).append(l)
    return list(grouped.values())


def is_sublattice(members: List[Ladder]) -> bool:
    """Closed under pairwise join and meet."""
    present = set(members)
    return all(join(a, b) in present and meet(a, b) in present for a in members for b in members)


def is_order_convex(members: List[Ladder], universe: List[Ladder]) -> bool:
    """No ladder of the universe lies strictly between two members without being one."""
    present = set(members)
    for z in universe:
        if z in present:
            continue
        below = any(ladder_leq(x, z) for x in members)
        above = any(ladder_leq(z, y) for y in members)
        if below and above:
            log.debug(f"{z} lies between members of the class")
            return False
    return True
