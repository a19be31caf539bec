"""
Exhaustive enumeration of ladders over a kernel model.

all_ladders yields every map of depth ≤ d into K, clean or dirty. enumerate_phi walks the
levels depth first and only extends partial ladders that keep the root in k0, keep every
level below the previous one and place L*/R* at admissible tails; complete candidates are
then run through check_phi. Roots are independent, so they are swept with joblib.
candidate_ladders exposes the pruned walk itself for sweeps that need the dirty candidates.
"""

import itertools
import logging
from dataclasses import replace
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

import joblib
from joblib import Parallel, delayed

from kernel.errors import LadderError
from kernel.extended import ExtendedElement, Special
from kernel.model import KernelModel
from ladder.conditions import check_phi
from ladder.ladder import Ladder

log = logging.getLogger(__name__)

Level = Tuple[ExtendedElement, ExtendedElement]


def all_ladders(model: KernelModel, depth: int) -> Iterator[Ladder]:
    """Every ladder of depth ≤ depth; each map appears exactly once."""
    if depth < 1:
        raise LadderError(f"depth must be at least 1, got {depth}")
    values = model.lattice.elements
    for combo in itertools.product(values, repeat=1 + 2 * depth):
        root, rest = combo[0], combo[1:]
        yield Ladder(model, root, rest[0::2], rest[1::2])


def count_candidates(model: KernelModel, depth: int) -> int:
    """Number of maps all_ladders yields."""
    return len(model.lattice.elements) ** (1 + 2 * depth)


def _level_choices(
    model: KernelModel, above: Sequence[ExtendedElement], final: bool, prune_specials: bool
) -> List[Level]:
    lat = model.lattice
    below = [v for v in lat.elements if all(lat.leq(v, u) for u in above)]
    left, right = below, below
    if prune_specials:
        # L* only at Tr-tailed words, R* only at Tℓ-tailed words
        left = [v for v in below if v is not Special.L]
        right = [v for v in below if v is not Special.R]
    if final:
        # the last level repeats, so both tails compare with each other
        return [(v, v) for v in left if v in right]
    return [(a, b) for a in left for b in right]


def _extend(
    model: KernelModel,
    root: ExtendedElement,
    levels: List[Level],
    depth: int,
    prune_specials: bool,
) -> Iterator[Ladder]:
    if len(levels) == depth:
        yield Ladder(model, root, [a for a, _ in levels], [b for _, b in levels])
        return
    above = levels[-1] if levels else (root,)
    final = len(levels) == depth - 1
    for level in _level_choices(model, above, final, prune_specials):
        levels.append(level)
        yield from _extend(model, root, levels, depth, prune_specials)
        levels.pop()


def candidate_ladders(
    model: KernelModel, depth: int, prune_specials: bool = True
) -> Iterator[Ladder]:
    """
    Ladders of depth ≤ depth with the root in k0 and every level below the one before it,
    i.e. exactly those passing P1 and P2. With prune_specials, L* and R* are also kept off
    the tails where P3 and P4 forbid them.
    """
    if depth < 1:
        raise LadderError(f"depth must be at least 1, got {depth}")
    for root in model.lattice.elements:
        if root in model.k0:
            yield from _extend(model, root, [], depth, prune_specials)


def _enumerate_root(model: KernelModel, root: str, depth: int) -> List[Ladder]:
    found = [l for l in _extend(model, root, [], depth, True) if check_phi(l).ok]
    log.debug(f"{model.name}: root {root} gives {len(found)} ladders at depth {depth}")
    return found


def enumerate_phi(model: KernelModel, max_depth: int, n_jobs: int = 1) -> List[Ladder]:
    """All checkPhi-clean ladders of depth ≤ max_depth, in depth-first level order."""
    if max_depth < 1:
        raise LadderError(f"max_depth must be at least 1, got {max_depth}")
    roots = [v for v in model.lattice.elements if v in model.k0]
    if n_jobs == 1:
        per_root = [_enumerate_root(model, root, max_depth) for root in roots]
    else:
        per_root = Parallel(n_jobs=n_jobs)(
            delayed(_enumerate_root)(model, root, max_depth) for root in roots
        )
        # workers return ladders over unpickled copies of the model
        per_root = [[replace(l, model=model) for l in batch] for batch in per_root]
    ladders = [l for batch in per_root for l in batch]
    log.info(f"{model.name}: {len(ladders)} ladders of depth <= {max_depth}")
    return ladders


def save_ladders(ladders: List[Ladder], path: Union[str, Path]):
    """Dump ladders to disk with joblib."""
    joblib.dump(ladders, path)
    log.info(f"Saved {len(ladders)} ladders to {path}")


def load_ladders(path: Union[str, Path]) -> List[Ladder]:
    """Load ladders written by save_ladders."""
    ladders = joblib.load(path)
    log.info(f"Loaded {len(ladders)} ladders from {path}")
    return ladders
