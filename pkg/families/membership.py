"""
Family predicates over models tagged with group and completely simple parts.

- BO: values in the group part, order preserving.
- BO_bar: values in the group part or specials; P1 to P4 and some T*.
- BLO: values in the group or cs part, order preserving.
- BLO_bar: values in either part or specials; P1 to P4, some T*, the single-letter
  lowering conditions at the root and at every σ.
"""

import logging
from enum import Enum
from typing import FrozenSet, List

from kernel.errors import FamilyError
from kernel.extended import Special, render_element
from kernel.model import KernelModel
from ladder.conditions import ConditionReport, check_phi
from ladder.ladder import Ladder
from theta.words import TL, TR, Letter, Word, multiply, nonempty_words

log = logging.getLogger(__name__)

STRUCTURE_TAGS = ("P1", "P2", "P3", "P4")
FAMILY_TAGS = ("range", "T*", "P5*", "P6*")


class FamilyTag(Enum):
    BO = "BO"
    BO_bar = "BO_bar"
    BLO = "BLO"
    BLO_bar = "BLO_bar"

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(
                f"Unknown family: {text}. Choose from {[t.value for t in cls]}"
            ) from None


def _allowed(model: KernelModel, tag: FamilyTag) -> FrozenSet:
    if not model.parts:
        raise FamilyError(f"Model {model.name} has no group/cs part classification")
    allowed = set(model.elements_of_part("group"))
    if tag in (FamilyTag.BLO, FamilyTag.BLO_bar):
        allowed |= set(model.elements_of_part("cs"))
    if tag in (FamilyTag.BO_bar, FamilyTag.BLO_bar):
        allowed |= set(Special)
    return frozenset(allowed)


def _check_range(l: Ladder, allowed: FrozenSet, report: ConditionReport):
    for w, value in l.values().items():
        if value not in allowed:
            report.add("range", [w], f"value {render_element(value)} is outside the family")


def _check_t_star(l: Ladder, report: ConditionReport):
    if Special.T not in l.specials().values():
        report.add("T*", [], "no word takes the value T*")


def _check_p5_star(l: Ladder, report: ConditionReport):
    model = l.model
    if l.root not in model.k0:
        return
    for tau in (TL, TR):
        lowered = model.lower_star(l.root, tau)
        value = l.evaluate(tau)
        if not model.lattice.leq(lowered, value):
            report.add(
                "P5*",
                [tau],
                f"root lowered along {tau} is {render_element(lowered)}, "
                f"not ≤ {render_element(value)}",
            )


def p6_star_violations(l: Ladder, literal: bool = False) -> ConditionReport:
    """
    Single-letter lowering below σφ. The literal reading only takes σ ∈ {Tℓ, Tr}; the
    default takes every σ with σφ in k0 (σ beyond depth + 2 repeats a shorter one).
    """
    report = ConditionReport()
    model = l.model
    sigmas = [TL, TR] if literal else nonempty_words(l.depth + 2)
    for sigma in sigmas:
        s_value = l.evaluate(sigma)
        if s_value not in model.k0:
            continue
        tau = Word((sigma.tail.other,))
        lowered = model.lower_star(s_value, tau)
        product = multiply(sigma, tau)
        value = l.evaluate(product)
        if not model.lattice.leq(lowered, value):
            report.add(
                "P6*",
                [sigma, tau],
                f"{render_element(s_value)} lowered along {tau} is {render_element(lowered)}, "
                f"not ≤ {render_element(value)} at {product}",
            )
    return report


def in_family(tag: FamilyTag, l: Ladder, literal: bool = False) -> ConditionReport:
    """Report the conditions of the family that the ladder breaks."""
    report = ConditionReport()
    _check_range(l, _allowed(l.model, tag), report)
    if tag in (FamilyTag.BO, FamilyTag.BLO):
        report.extend(check_phi(l, only=("P2",)))
        return report
    report.extend(check_phi(l, only=STRUCTURE_TAGS))
    _check_t_star(l, report)
    if tag is FamilyTag.BLO_bar:
        _check_p5_star(l, report)
        report.extend(p6_star_violations(l, literal=literal))
    return report


def check_family_shape(model: KernelModel) -> List[str]:
    """
    Lowering facts the family reductions rely on: group elements lower to T* along every
    word, cs elements take single-letter values in {T, LZ, RZ} and lower to T* along
    every word of length two or more.
    """
    if not model.parts:
        raise FamilyError(f"Model {model.name} has no group/cs part classification")
    problems = []
    words = nonempty_words(model.height + 2)
    band_floor = {model.role(r) for r in ("T", "LZ", "RZ")} - {None}
    for v in model.elements_of_part("group"):
        for tau in words:
            if model.lower_star(v, tau) is not Special.T:
                problems.append(f"group element {v} lowered along {tau} is not T*")
    for v in model.elements_of_part("cs"):
        for letter in Letter:
            low = model.low(letter, v)
            if low not in band_floor:
                problems.append(f"cs element {v}: low{letter.value.upper()} is {low}")
        for tau in words:
            if len(tau) >= 2 and model.lower_star(v, tau) is not Special.T:
                problems.append(f"cs element {v} lowered along {tau} is not T*")
    if problems:
        log.info(f"Model {model.name}: {len(problems)} family shape problem(s)")
    return problems
