"""
Ladder constructions embedding sublattices of a model into Φ, and their checks.

- PK: root P, every other word U, for group elements U ≤ P.
- QK: root Q, every other word U, for admissible U ≤ Q with Q in the cs part.
- LRO: root the top G, U at Tr, T* at every other nonempty word, for group elements U.
"""

import logging
from typing import Callable, Dict, List, Optional

from correspondence.relations import RelationTag, is_order_convex, related
from kernel.errors import FamilyError
from kernel.extended import Special
from kernel.model import KernelModel
from ladder.conditions import ConditionReport, check_phi
from ladder.ladder import Ladder, join, meet

log = logging.getLogger(__name__)

CONSTRUCTS = ("PK", "QK", "LRO")


def _require_part(model: KernelModel, v: str, part: str, what: str):
    if model.part(v) != part:
        raise FamilyError(f"{what} = {v} is not in the {part} part of model {model.name}")


def embed_pk(model: KernelModel, p: str, u: str) -> Ladder:
    """Root p and u at every nonempty word, for group elements u ≤ p."""
    _require_part(model, p, "group", "P")
    _require_part(model, u, "group", "U")
    if not model.leq(u, p):
        raise FamilyError(f"U = {u} is not ≤ P = {p}")
    return Ladder.constant(model, p, u)


def embed_qk(model: KernelModel, q: str, u: str) -> Ladder:
    _require_part(model, q, "cs", "Q")
    if u not in model.admissible:
        raise FamilyError(
            f"U = {u} is not admissible in model {model.name}. "
            f"Choose from {sorted(model.admissible, key=model.index)}"
        )
    if not model.leq(u, q):
        raise FamilyError(f"U = {u} is not ≤ Q = {q}")
    return Ladder.constant(model, q, u)


def lro_ladder(model: KernelModel, u: str) -> Ladder:
    """Root at the group top, u at Tr and T* at every other nonempty word."""
    top = model.top
    if top is None or model.part(top) != "group":
        raise FamilyError(f"Model {model.name} has no group-part top element")
    _require_part(model, u, "group", "U")
    return Ladder(model, top, (Special.T, Special.T), (u, Special.T))


def _domain(model: KernelModel, construct: str, arg: Optional[str]) -> List[str]:
    if construct == "PK":
        _require_part(model, arg, "group", "P")
        return [v for v in model.elements_of_part("group") if model.leq(v, arg)]
    if construct == "QK":
        _require_part(model, arg, "cs", "Q")
        return [v for v in model.elements if v in model.admissible and model.leq(v, arg)]
    if construct == "LRO":
        return model.elements_of_part("group")
    raise FamilyError(f"Unknown construct: {construct}. Choose from {list(CONSTRUCTS)}")


def construct_ladder(model: KernelModel, construct: str, arg: Optional[str], u: str) -> Ladder:
    if construct == "PK":
        return embed_pk(model, arg, u)
    if construct == "QK":
        return embed_qk(model, arg, u)
    if construct == "LRO":
        return lro_ladder(model, u)
    raise FamilyError(f"Unknown construct: {construct}. Choose from {list(CONSTRUCTS)}")


def embedding_check(
    model: KernelModel,
    construct: str,
    arg: Optional[str] = None,
    universe: Optional[List[Ladder]] = None,
    builder: Optional[Callable[[str], Ladder]] = None,
) -> ConditionReport:
    """
    Check that the construct is an injective lattice homomorphism on its domain, that
    images share a K-class and are separated by the trace relation, and (given the
    enumerated universe) that the LRO image is order convex.
    """
    domain = _domain(model, construct, arg)
    build = builder or (lambda u: construct_ladder(model, construct, arg, u))
    images: Dict[str, Ladder] = {u: build(u) for u in domain}
    lat = model.lattice
    report = ConditionReport()

    for u, image in images.items():
        if not check_phi(image).ok:
            report.add("clean", [u], "image is not in Φ")

    separating = RelationTag.Tr if construct == "LRO" else RelationTag.Tl
    for i, u in enumerate(domain):
        for w in domain[i:]:
            lu, lw = images[u], images[w]
            for name, op, ladder_op in (("join", lat.join, join), ("meet", lat.meet, meet)):
                v = op(u, w)
                if v not in images:
                    report.add(name, [u, w], f"{name} {v} leaves the domain")
                elif images[v] != ladder_op(lu, lw):
                    report.add(name, [u, w], f"image of the {name} is not the {name} of images")
            if u == w:
                continue
            if lu == lw:
                report.add("injective", [u, w], "distinct arguments give equal ladders")
            if not related(RelationTag.K, lu, lw):
                report.add("K", [u, w], "images are not K-related")
            if related(separating, lu, lw):
                report.add(separating.value, [u, w], "images share a trace class")
            if construct == "LRO":
                for tag in (RelationTag.Kl, RelationTag.B):
                    if not related(tag, lu, lw):
                        report.add(tag.value, [u, w], f"images are not {tag.value}-related")

    if construct == "LRO" and universe is not None:
        if not is_order_convex(list(images.values()), universe):
            report.add("convex", [], "image is not an interval of the enumerated ladders")

    log.info(f"{construct} check over {len(domain)} arguments: {len(report)} failure(s)")
    return report
