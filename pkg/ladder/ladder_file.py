"""
Ladder files.

    model orthodox-chain3
    e -> G
    l -> T*
    r -> A
    rl -> T*
    lr -> T*
    tailL -> T*
    tailR -> T*

One line per word up to the depth, Tℓ-tailed word first at each level, then the tails.
"""

import logging
import re
from pathlib import Path
from typing import Dict, Optional, Union

from kernel.builtin import get_builtin
from kernel.errors import LadderError, ModelError, ParseError
from kernel.extended import parse_element, render_element
from kernel.model import KernelModel
from ladder.ladder import Ladder
from theta.words import EMPTY, Letter, Word

log = logging.getLogger(__name__)

_HEADER = re.compile(r"^model\s+(\S+)$")
_ENTRY = re.compile(r"^(\S+)\s*->\s*(\S+)$")


def parse_ladder(
    text: str, model: Optional[KernelModel] = None, source: str = "<input>"
) -> Ladder:
    """Parse a ladder file; without `model` the header names a built-in model."""
    values: Dict[Word, object] = {}
    tails: Dict[Letter, object] = {}
    header_seen = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            match = _HEADER.match(line)
            if not match:
                raise ParseError("expected header 'model <name>'", lineno, source)
            name = match.group(1)
            if model is None:
                try:
                    model = get_builtin(name)
                except ModelError as e:
                    raise ParseError(str(e), lineno, source) from None
            elif model.name != name:
                raise ParseError(
                    f"ladder is over model {name} but model {model.name} was given", lineno, source
                )
            header_seen = True
            continue

        match = _ENTRY.match(line)
        if not match:
            raise ParseError("expected 'word -> element'", lineno, source)
        key, raw_value = match.groups()
        try:
            value = parse_element(raw_value)
        except ValueError:
            raise ParseError(f"unknown special {raw_value!r}", lineno, source) from None
        if value not in model.lattice:
            raise ParseError(f"{raw_value} is not an element of K", lineno, source)

        if key in ("tailL", "tailR"):
            letter = Letter.L if key == "tailL" else Letter.R
            if letter in tails:
                raise ParseError(f"{key} given twice", lineno, source)
            tails[letter] = value
            continue
        try:
            word = Word.parse(key)
        except ValueError as e:
            raise ParseError(str(e), lineno, source) from None
        if word in values:
            raise ParseError(f"word {word} given twice", lineno, source)
        values[word] = value

    if not header_seen:
        raise ParseError("empty ladder file", None, source)
    if EMPTY not in values:
        raise ParseError("missing root entry 'e -> ...'", None, source)
    if len(tails) != 2:
        raise ParseError("missing tailL or tailR", None, source)

    depth = max(len(w) for w in values)
    chain_l, chain_r = [], []
    for m in range(1, depth + 1):
        for letter, chain in ((Letter.L, chain_l), (Letter.R, chain_r)):
            word = Word.ending_in(letter, m)
            if word not in values:
                raise ParseError(f"missing entry for word {word}", None, source)
            chain.append(values[word])
    try:
        return Ladder(model, values[EMPTY], chain_l, chain_r, tails[Letter.L], tails[Letter.R])
    except LadderError as e:
        raise ParseError(str(e), None, source) from None


def load_ladder(path: Union[str, Path], model: Optional[KernelModel] = None) -> Ladder:
    path = Path(path)
    return parse_ladder(path.read_text(encoding="utf-8"), model=model, source=str(path))


def emit_ladder(l: Ladder) -> str:
    """Ladder text with one entry per word up to depth, then both tails."""
    lines = [f"model {l.model.name}", f"e -> {render_element(l.root)}"]
    for m in range(1, l.depth + 1):
        for letter in (Letter.L, Letter.R):
            word = Word.ending_in(letter, m)
            lines.append(f"{word} -> {render_element(l.at(m, letter))}")
    lines.append(f"tailL -> {render_element(l.tail_l)}")
    lines.append(f"tailR -> {render_element(l.tail_r)}")
    return "\n".join(lines) + "\n"


def save_ladder(l: Ladder, path: Union[str, Path]):
    """Write the ladder to disk."""
    Path(path).write_text(emit_ladder(l), encoding="utf-8")
    log.debug(f"Saved ladder over {l.model.name} to {path}")
