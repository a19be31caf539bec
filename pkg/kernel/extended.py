"""
The extended lattice K = K₀ ∪ {T*, L*, R*} carried by a kernel model.

Order: T* < L* < V and T* < R* < V for every V in k0; L* and R* are incomparable.
Joins of k0 elements are carrier joins (k0 is join-closed); meets are kmap(carrier meet).
"""

from enum import Enum
from typing import TYPE_CHECKING, List, Union

from kernel.errors import LadderError

if TYPE_CHECKING:
    from kernel.model import KernelModel


class Special(Enum):
    T = "T*"
    L = "L*"
    R = "R*"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Special":
        return cls(text.strip())


ExtendedElement = Union[str, Special]

SPECIALS = (Special.T, Special.L, Special.R)

# V^{K*} for the adjoined elements: the role whose symbol stands in component forms
UPPER_ROLE = {Special.T: "S", Special.L: "LNB", Special.R: "RNB"}


def upper_star(special: Special) -> str:
    """Component-form name of a special: S, LNB or RNB."""
    return UPPER_ROLE[special]


def render_element(x: ExtendedElement) -> str:
    return x.value if isinstance(x, Special) else x


def parse_element(text: str) -> ExtendedElement:
    """Read an element of K; names ending in '*' are specials."""
    text = text.strip()
    if text.endswith("*"):
        return Special.parse(text)
    return text


def is_special(x: ExtendedElement) -> bool:
    return isinstance(x, Special)


class ExtendedLattice:
    """Lattice operations on k0 ∪ {T*, L*, R*} for one model."""

    def __init__(self, model: "KernelModel"):
        self.model = model
        self.elements: List[ExtendedElement] = [
            v for v in model.elements if v in model.k0
        ] + list(SPECIALS)

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Special):
            return True
        return x in self.model.k0

    def check(self, x: ExtendedElement) -> ExtendedElement:
        """Return x, raising LadderError if it is not in K."""
        if x not in self:
            raise LadderError(f"{x!r} is not an element of K for model {self.model.name}")
        return x

    def leq(self, a: ExtendedElement, b: ExtendedElement) -> bool:
        if a is Special.T:
            return True
        if isinstance(a, Special):
            return a is b or not isinstance(b, Special)
        if isinstance(b, Special):
            return False
        return self.model.leq(a, b)

    def lt(self, a: ExtendedElement, b: ExtendedElement) -> bool:
        return a != b and self.leq(a, b)

    def join(self, a: ExtendedElement, b: ExtendedElement) -> ExtendedElement:
        """Least upper bound in K; L* and R* join to the carrier bottom."""
        if self.leq(a, b):
            return b
        if self.leq(b, a):
            return a
        if isinstance(a, Special) and isinstance(b, Special):
            # only L* and R* are incomparable among the specials
            return self.model.bottom_or_raise()
        return self.model.join(a, b)

    def meet(self, a: ExtendedElement, b: ExtendedElement) -> ExtendedElement:
        """Greatest lower bound in K; meets of k0 elements go through kmap."""
        if self.leq(a, b):
            return a
        if self.leq(b, a):
            return b
        if isinstance(a, Special) or isinstance(b, Special):
            return Special.T
        return self.model.kmap_of(self.model.meet(a, b))
