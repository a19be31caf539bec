"""
Condition checkers for ladders on Θ¹ (P1 to P6) and on Λ (Q1 to Q5).

Violations are collected into a ConditionReport; nothing here raises on a failed
condition. Quantifiers over words are truncated at a complete bound:

- lowerStar(v, τ) is constant in further extension of τ once |τ| ≥ height + 1;
- ladder values are constant per tail letter beyond the ladder depth;

so checking words up to depth + height + 3 covers both parities of every tail.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Set, Union

from kernel.extended import Special, render_element
from ladder.ladder import Ladder, LambdaLadder, eta
from theta.index import LambdaIndex, enumerate_indices, gamma_inv, lambda_leq
from theta.words import Letter, Word, multiply, nonempty_words

PHI_TAGS = ("P1", "P2", "P3", "P4", "P5", "P6")
Q_TAGS = ("Q1", "Q2", "Q3", "Q4", "Q5")


@dataclass(frozen=True)
class Violation:
    tag: str
    witnesses: Sequence[str]
    message: str

    def __str__(self) -> str:
        witness = ", ".join(self.witnesses)
        return f"{self.tag} [{witness}] {self.message}" if witness else f"{self.tag} {self.message}"


@dataclass
class ConditionReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, tag: str, witnesses: Iterable[Union[Word, LambdaIndex, str]], message: str):
        rendered = tuple(w.render() if hasattr(w, "render") else str(w) for w in witnesses)
        self.violations.append(Violation(tag, rendered, message))

    def extend(self, other: "ConditionReport"):
        self.violations.extend(other.violations)

    def tags(self) -> Set[str]:
        return {v.tag for v in self.violations}

    def render(self) -> str:
        return "\n".join(str(v) for v in self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def bound(l: Union[Ladder, LambdaLadder]) -> int:
    """Word length past which both sides of P5 and P6 are constant."""
    return l.depth + l.model.height + 3


def _fmt(x) -> str:
    return render_element(x)


def _lowered_message(v, tau: Word, lowered, value) -> str:
    return f"{_fmt(v)} lowered along {tau} is {_fmt(lowered)}, not ≤ {_fmt(value)}"


def check_phi(l: Ladder, only: Sequence[str] = PHI_TAGS) -> ConditionReport:
    """Run the conditions named in `only` (all six by default)."""
    report = ConditionReport()
    model = l.model
    lat = model.lattice
    k0 = model.k0
    limit = bound(l)

    # P1
    if "P1" in only and l.root not in k0:
        report.add("P1", ["e"], f"root {_fmt(l.root)} is not in k0")

    # P2: level m+1 below every value of level m; levels past depth + 2 repeat
    if "P2" in only:
        for m in range(0, l.depth + 2):
            for w_low in _level_words(m + 1):
                low = l.evaluate(w_low)
                for w_up in _level_words(m):
                    up = l.evaluate(w_up)
                    if not lat.leq(low, up):
                        report.add("P2", [w_low, w_up], f"{_fmt(low)} is not ≤ {_fmt(up)}")

    # P3 / P4
    for w in nonempty_words(l.depth + 1):
        value = l.evaluate(w)
        if "P3" in only and value is Special.L and w.tail is not Letter.R:
            report.add("P3", [w], "L* at a word not ending in Tr")
        if "P4" in only and value is Special.R and w.tail is not Letter.L:
            report.add("P4", [w], "R* at a word not ending in Tℓ")

    # P5
    if "P5" in only and l.root in k0:
        for tau in nonempty_words(limit):
            lowered = model.lower_star(l.root, tau)
            value = l.evaluate(tau)
            if not lat.leq(lowered, value):
                report.add("P5", [tau], _lowered_message(l.root, tau, lowered, value))

    # P6: σ beyond depth + 2 repeats a shorter σ with the same tail
    if "P6" in only:
        for sigma in nonempty_words(min(limit, l.depth + 2)):
            s_value = l.evaluate(sigma)
            if s_value not in k0:
                continue
            for tau in nonempty_words(limit):
                if tau.head is sigma.tail:
                    continue
                lowered = model.lower_star(s_value, tau)
                product = multiply(sigma, tau)
                value = l.evaluate(product)
                if not lat.leq(lowered, value):
                    report.add(
                        "P6",
                        [sigma, tau],
                        _lowered_message(s_value, tau, lowered, value) + f" at {product}",
                    )
    return report


def _level_words(m: int) -> List[Word]:
    if m == 0:
        return [Word()]
    return [Word.ending_in(Letter.L, m), Word.ending_in(Letter.R, m)]


def check_q(q: Union[Ladder, LambdaLadder]) -> ConditionReport:
    """Check the Λ-indexed conditions; a Ladder is read through η first."""
    if isinstance(q, Ladder):
        q = eta(q)
    report = ConditionReport()
    model = q.model
    lat = model.lattice
    k0 = model.k0
    limit = bound(q)
    indices = enumerate_indices(q.depth + 2)

    root = q.value(LambdaIndex(0, 0))
    if root not in k0:
        report.add("Q1", ["(0,0)"], f"value {_fmt(root)} is not in k0")

    for x in indices:
        for y in indices:
            if x != y and lambda_leq(x, y):
                vx, vy = q.value(x), q.value(y)
                if not lat.leq(vx, vy):
                    report.add("Q2", [x, y], f"{_fmt(vx)} is not ≤ {_fmt(vy)}")

    for x in indices:
        if x.m == 0:
            continue
        value = q.value(x)
        if x.i == 1 and value is Special.L:
            report.add("Q3", [x], "L* at an index (1,m)")
        if x.i == 0 and value is Special.R:
            report.add("Q4", [x], "R* at an index (0,m)")

    # (i, m) ranges over both spellings of the root
    spelled = [(0, 0), (1, 0)] + [(x.i, x.m) for x in indices if x.m > 0]
    for i, m in spelled:
        value = q.value(LambdaIndex(i, m))
        if value not in k0:
            continue
        for k in range(1, limit + 1):
            for j in (0, 1):
                if (i + j - k) % 2:
                    continue
                tau = gamma_inv(LambdaIndex(j, k))
                lowered = model.lower_star(value, tau)
                target = LambdaIndex(j, m + k)
                bound_value = q.value(target)
                if not lat.leq(lowered, bound_value):
                    report.add(
                        "Q5",
                        [f"({i},{m})", tau, target],
                        _lowered_message(value, tau, lowered, bound_value),
                    )
    return report


def is_phi(l: Ladder) -> bool:
    return check_phi(l).ok


def is_q(q: Union[Ladder, LambdaLadder]) -> bool:
    return check_q(q).ok
