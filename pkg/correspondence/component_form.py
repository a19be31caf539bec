"""
Symbolic component forms of ladders.

A form is an intersection of terms `Base^{exponent}`:

- `V^K` for the root,
- `V^{K τ̄}` for a word τ with a k0 value V,
- `S^{τ̄}`, `LNB^{τ̄}`, `RNB^{τ̄}` for a word with value T*, L*, R*,
- `CR` for the whole variety.

Exponents carry the mirror τ̄ of the word. Words are emitted up to depth + 1; every longer
word repeats the term of the tail with the same last letter, recorded as `tail_from`.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from correspondence.relations import contains_bands
from kernel.errors import LadderError
from kernel.extended import Special, upper_star
from ladder.conditions import check_phi
from ladder.ladder import Ladder
from theta.index import LambdaIndex, gamma
from theta.words import Word, nonempty_words

CR = "CR"
VB_LABEL = "V^B"


@dataclass(frozen=True)
class ComponentTerm:
    base: str
    kernel: bool = False
    word: Optional[Word] = None

    @property
    def index(self) -> Optional[LambdaIndex]:
        return gamma(self.word) if self.word is not None else None

    def sort_key(self) -> Tuple[int, str, str]:
        length = len(self.word) if self.word is not None else -1 if self.base == CR else 0
        return (length, self.base, self.word.render() if self.word else "")

    def render(self) -> str:
        if self.word is None:
            return f"{self.base}^K" if self.kernel else self.base
        if self.kernel:
            return f"{self.base}^{{K {self.word}}}"
        return f"{self.base}^{{{self.word}}}"

    def record(self) -> str:
        exponent = "K" if self.kernel else "-"
        word = self.word.render() if self.word is not None else "-"
        index = self.index.render() if self.word is not None else "-"
        return f"{self.base}\t{exponent}\t{word}\t{index}"

    def __str__(self) -> str:
        return self.render()


@dataclass
class ComponentForm:
    terms: List[ComponentTerm] = field(default_factory=list)
    tail_from: Optional[int] = None
    nested: Optional["ComponentForm"] = None

    def add(self, term: ComponentTerm):
        if term not in self.terms:
            self.terms.append(term)

    def sorted(self) -> "ComponentForm":
        self.terms.sort(key=ComponentTerm.sort_key)
        return self

    def bases(self) -> List[str]:
        return [t.base for t in self.terms]

    def render(self) -> str:
        parts = [t.render() for t in self.terms]
        if self.nested is not None:
            parts.append(f"{VB_LABEL}({self.nested.render()})")
        return " & ".join(parts)

    def records(self) -> str:
        lines = [f"main\t{t.record()}" for t in self.terms]
        if self.nested is not None:
            lines += [f"{VB_LABEL}\t{t.record()}" for t in self.nested.terms]
        if self.tail_from is not None:
            lines.append(f"tail\t{self.tail_from}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.terms)


def _require_clean(l: Ladder):
    report = check_phi(l)
    if not report.ok:
        raise LadderError(f"Ladder is not in Φ:\n{report.render()}")


def _special_term(value: Special, tau: Word) -> ComponentTerm:
    return ComponentTerm(upper_star(value), word=tau.mirror)


def component_form(l: Ladder) -> ComponentForm:
    """Kernel, trace and special terms of a clean ladder."""
    _require_clean(l)
    form = ComponentForm(tail_from=l.depth + 2)
    form.add(ComponentTerm(str(l.root), kernel=True))
    for tau in nonempty_words(l.depth + 1):
        value = l.evaluate(tau)
        if isinstance(value, Special):
            form.add(_special_term(value, tau))
        else:
            form.add(ComponentTerm(value, kernel=True, word=tau.mirror))
    return form.sorted()


def b_upper_form(l: Ladder) -> ComponentForm:
    """CR alone for a ladder with bands, otherwise CR followed by its special terms."""
    _require_clean(l)
    form = ComponentForm(terms=[ComponentTerm(CR)])
    if contains_bands(l):
        return form
    form.tail_from = l.depth + 2
    for tau in nonempty_words(l.depth + 1):
        value = l.evaluate(tau)
        if isinstance(value, Special):
            form.add(_special_term(value, tau))
    return form.sorted()


def split_form(l: Ladder) -> ComponentForm:
    """Split into k0-valued terms and, when bands are missing, the opaque V^B block."""
    _require_clean(l)
    form = ComponentForm(tail_from=l.depth + 2)
    form.add(ComponentTerm(str(l.root), kernel=True))
    for tau in nonempty_words(l.depth + 1):
        value = l.evaluate(tau)
        if not isinstance(value, Special):
            form.add(ComponentTerm(value, kernel=True, word=tau.mirror))
    if not contains_bands(l):
        form.nested = b_upper_form(l)
    return form.sorted()
