from typing import Dict, List, Optional

import pandas as pd

from correspondence.relations import contains_bands
from kernel.errors import LadderError
from kernel.extended import render_element
from kernel.model import KernelModel
from ladder.ladder import Ladder
from theta.words import Letter, enumerate_words, words_of_length


def ladders_frame(ladders: List[Ladder]) -> pd.DataFrame:
    """One row per ladder: root, both chain values per level, tails, depth, bands flag."""
    width = max((l.depth for l in ladders), default=0)
    rows = []
    for l in ladders:
        row: Dict[str, object] = {"root": render_element(l.root)}
        for m in range(1, width + 1):
            row[f"l{m}"] = render_element(l.at(m, Letter.L))
            row[f"r{m}"] = render_element(l.at(m, Letter.R))
        row["tailL"] = render_element(l.tail_l)
        row["tailR"] = render_element(l.tail_r)
        row["depth"] = l.depth
        try:
            row["bands"] = contains_bands(l)
        except LadderError:
            row["bands"] = None
        rows.append(row)
    columns = ["root"]
    for m in range(1, width + 1):
        columns += [f"l{m}", f"r{m}"]
    columns += ["tailL", "tailR", "depth", "bands"]
    return pd.DataFrame(rows, columns=columns)


def frame_text(df: pd.DataFrame) -> str:
    """Tab-separated text of a frame, header included."""
    return df.to_csv(sep="\t", index=False)


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def theta_dot(depth: int, ladder: Optional[Ladder] = None) -> str:
    """Hasse diagram of the words of length ≤ depth; each word covers both longer ones."""
    lines = ["digraph theta {", "  rankdir=TB;"]
    for w in enumerate_words(depth):
        label = w.render()
        if ladder is not None:
            label = f"{label}: {render_element(ladder.evaluate(w))}"
        lines.append(f"  {_quote(w.render())} [label={_quote(label)}];")
    for m in range(depth):
        for upper in words_of_length(m):
            for lower in words_of_length(m + 1):
                lines.append(f"  {_quote(upper.render())} -> {_quote(lower.render())};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_dot(model: KernelModel) -> str:
    """Hasse diagram of the carrier, top first; k0 elements are boxed."""
    lines = [f"digraph {_quote(model.name)} {{", "  rankdir=BT;"]
    for v in model.elements:
        label = v
        role = model.role_of(v)
        if role is not None and role != v:
            label = f"{v} ({role})"
        shape = "box" if v in model.k0 else "ellipse"
        lines.append(f"  {_quote(v)} [label={_quote(label)}, shape={shape}];")
    for a, b in model.hasse_edges():
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
