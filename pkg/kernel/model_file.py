"""
Line-oriented model files.

    [model]
    name = my-model
    [elements]
    T A G
    [order]
    T < A
    [k0]
    T A
    [designated]
    T = T
    [lowL]
    A -> T
    [lowR]
    [kmap]
    [parts]
    A = group
    [admissible]

`#` starts a comment. Element lists may span several lines.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from kernel.errors import ParseError
from kernel.model import ROLES, KernelModel

log = logging.getLogger(__name__)

SECTIONS = (
    "model",
    "elements",
    "order",
    "k0",
    "designated",
    "lowL",
    "lowR",
    "kmap",
    "parts",
    "admissible",
)

_SECTION = re.compile(r"^\[(\w+)\]$")
_ORDER = re.compile(r"^(\S+)\s*<\s*(\S+)$")
_ASSIGN = re.compile(r"^(\S+)\s*=\s*(\S+)$")
_ARROW = re.compile(r"^(\S+)\s*->\s*(\S+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_model(text: str, source: str = "<input>") -> KernelModel:
    """Parse model text; errors carry the source and line number."""
    name: Optional[str] = None
    elements: List[str] = []
    covers: List[Tuple[str, str]] = []
    k0: List[str] = []
    designated: Dict[str, str] = {}
    tables: Dict[str, Dict[str, str]] = {"lowL": {}, "lowR": {}, "kmap": {}}
    parts: Dict[str, str] = {}
    admissible: Optional[List[str]] = None
    seen_sections = set()
    known = set()
    section = None

    def fail(message: str, lineno: int):
        raise ParseError(message, lineno, source)

    def check_known(v: str, lineno: int):
        if v not in known:
            fail(f"unknown element {v!r}", lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue

        header = _SECTION.match(line)
        if header:
            section = header.group(1)
            if section not in SECTIONS:
                fail(f"Unknown section: {section}. Choose from {list(SECTIONS)}", lineno)
            if section in seen_sections:
                fail(f"duplicate section [{section}]", lineno)
            if section != "model" and section != "elements" and not known:
                fail(f"[{section}] before [elements]", lineno)
            seen_sections.add(section)
            if section == "admissible":
                admissible = []
            continue

        if section is None:
            fail("content before the first section header", lineno)

        if section == "model":
            match = _ASSIGN.match(line)
            if not match or match.group(1) != "name":
                fail("expected 'name = <model name>'", lineno)
            name = match.group(2)
        elif section == "elements":
            for v in line.split():
                if "*" in v:
                    fail(f"element name {v!r} may not contain '*'", lineno)
                if v in known:
                    fail(f"duplicate element {v!r}", lineno)
                known.add(v)
                elements.append(v)
        elif section == "order":
            match = _ORDER.match(line)
            if not match:
                fail("expected a cover pair 'a < b'", lineno)
            a, b = match.groups()
            check_known(a, lineno)
            check_known(b, lineno)
            covers.append((a, b))
        elif section in ("k0", "admissible"):
            target = k0 if section == "k0" else admissible
            for v in line.split():
                check_known(v, lineno)
                target.append(v)
        elif section in ("designated", "parts"):
            match = _ASSIGN.match(line)
            if not match:
                fail("expected 'key = value'", lineno)
            key, value = match.groups()
            if section == "designated":
                check_known(value, lineno)
                if key in designated:
                    fail(f"role {key} assigned twice", lineno)
                designated[key] = value
            else:
                check_known(key, lineno)
                parts[key] = value
        else:
            match = _ARROW.match(line)
            if not match:
                fail("expected a table entry 'v -> w'", lineno)
            v, w = match.groups()
            check_known(v, lineno)
            check_known(w, lineno)
            if v in tables[section]:
                fail(f"{section} has two entries for {v}", lineno)
            tables[section][v] = w

    if not elements:
        raise ParseError("model has no [elements] section", None, source)
    if name is None:
        name = Path(source).stem if source != "<input>" else "model"

    model = KernelModel(
        name=name,
        elements=elements,
        covers=covers,
        k0=k0,
        designated=designated,
        low_l=tables["lowL"],
        low_r=tables["lowR"],
        kmap=tables["kmap"],
        parts=parts,
        admissible=admissible,
    )
    log.info(f"Loaded model {name} from {source}: {len(elements)} elements")
    return model


def load_model(path: Union[str, Path]) -> KernelModel:
    """Read a model file."""
    path = Path(path)
    return parse_model(path.read_text(encoding="utf-8"), source=str(path))


def emit_model(m: KernelModel) -> str:
    """Model text that parse_model reads back to an equal model."""
    lines = ["[model]", f"name = {m.name}", "", "[elements]", " ".join(m.elements), "", "[order]"]
    lines += [f"{a} < {b}" for a, b in m.hasse_edges()]
    lines += ["", "[k0]", " ".join(v for v in m.elements if v in m.k0), "", "[designated]"]
    lines += [f"{role} = {m.designated[role]}" for role in _ordered_roles(m)]
    for section, table in (("lowL", m.low_l), ("lowR", m.low_r), ("kmap", m.kmap)):
        lines += ["", f"[{section}]"]
        lines += [f"{v} -> {table[v]}" for v in m.elements if v in table]
    if m.parts:
        lines += ["", "[parts]"]
        lines += [f"{v} = {m.parts[v]}" for v in m.elements if v in m.parts]
    if m.admissible != frozenset(m.parts):
        lines += ["", "[admissible]", " ".join(v for v in m.elements if v in m.admissible)]
    return "\n".join(lines) + "\n"


def _ordered_roles(m: KernelModel) -> List[str]:
    return [role for role in ROLES if role in m.designated]


def save_model(m: KernelModel, path: Union[str, Path]):
    """Write the model to disk."""
    Path(path).write_text(emit_model(m), encoding="utf-8")
