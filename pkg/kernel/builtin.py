"""
Built-in kernel models.

The demo-band and cs-demo tables are synthetic: they satisfy the model axioms but do not
claim semigroup-theoretic truth, except for the pinned entries noted below.
"""

import logging
from typing import Callable, Dict, List, Sequence, Tuple

import networkx as nx

from kernel.errors import ModelError
from kernel.model import KernelModel

log = logging.getLogger(__name__)

Covers = Sequence[Tuple[str, str]]


def orthodox_model(name: str, elements: Sequence[str], covers: Covers) -> KernelModel:
    """
    Model over a group-variety lattice: k0 is the whole carrier, both lower operators
    send everything to the bottom T, kmap is the identity and every element is group-part.
    """
    if not elements:
        raise ModelError(f"Model {name}: empty lattice has no bottom")
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    graph.add_edges_from(covers)
    minimal = [v for v in elements if graph.in_degree(v) == 0]
    if len(minimal) != 1 or not nx.is_directed_acyclic_graph(graph):
        raise ModelError(f"Model {name}: group lattice needs a unique bottom, found {minimal}")
    bottom = minimal[0]
    return KernelModel(
        name=name,
        elements=elements,
        covers=covers,
        k0=elements,
        designated={"T": bottom},
        low_l={v: bottom for v in elements},
        low_r={v: bottom for v in elements},
        kmap={v: v for v in elements},
        parts={v: "group" for v in elements},
    )


def chain_model(length: int) -> KernelModel:
    """Orthodox model over the chain T < A < G (truncated to `length` elements)."""
    names = ["T", "A", "G", "H", "J", "M"]
    if not 1 <= length <= len(names):
        raise ModelError(f"Chain length must be between 1 and {len(names)}, got {length}")
    elements = names[:length]
    covers = list(zip(elements, elements[1:]))
    return orthodox_model(f"orthodox-chain{length}", elements, covers)


def divisor_model(n: int) -> KernelModel:
    """Orthodox model over the divisors of n ordered by divisibility; 1 plays T."""
    if n < 1:
        raise ModelError(f"Divisor lattice needs n >= 1, got {n}")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    covers = []
    for a in divisors:
        for b in divisors:
            q, r = divmod(b, a)
            if b > a and r == 0 and all(q % p for p in range(2, q)):
                covers.append((str(a), str(b)))
    return orthodox_model(f"orthodox-div{n}", [str(d) for d in divisors], covers)


def demo_band_model() -> KernelModel:
    """
    Boolean lattice on the atoms LZ, RZ, S with every band role designated and k0 = {T}.

    lowR is meet with LNB and lowL is meet with RNB. Pinned entries: lowR(LNB) = LNB,
    lowL(LZ) = T, lowR(LZ) = LZ.
    """
    atoms = {
        "T": frozenset(),
        "LZ": frozenset("l"),
        "RZ": frozenset("r"),
        "S": frozenset("s"),
        "RB": frozenset("lr"),
        "LNB": frozenset("ls"),
        "RNB": frozenset("rs"),
        "NB": frozenset("lrs"),
    }
    by_atoms = {v: k for k, v in atoms.items()}
    elements = list(atoms)
    covers = [
        (a, b)
        for a in elements
        for b in elements
        if atoms[a] < atoms[b] and len(atoms[b]) == len(atoms[a]) + 1
    ]
    return KernelModel(
        name="demo-band",
        elements=elements,
        covers=covers,
        k0=["T"],
        designated={role: role for role in ("T", "S", "LZ", "RZ", "LNB", "RNB")},
        low_l={v: by_atoms[atoms[v] & atoms["RNB"]] for v in elements},
        low_r={v: by_atoms[atoms[v] & atoms["LNB"]] for v in elements},
        kmap={v: "T" for v in elements},
    )


def cs_model() -> KernelModel:
    """
    Small completely simple model. Group part T < A < G; CS part CSA, CSE < CS above the
    rectangular-band layer RB and the ReA < ReG layer. kmap sends ReA to A and ReG to G.

    CS-part single-letter lower values land in {T, LZ, RZ}, so every CS element lowers to
    T* along words of length two.
    """
    elements = ["T", "LZ", "RZ", "A", "RB", "G", "ReA", "ReG", "CSA", "CSE", "CS"]
    covers = [
        ("T", "LZ"),
        ("T", "RZ"),
        ("T", "A"),
        ("LZ", "RB"),
        ("RZ", "RB"),
        ("A", "G"),
        ("RB", "ReA"),
        ("A", "ReA"),
        ("G", "ReG"),
        ("ReA", "ReG"),
        ("ReA", "CSA"),
        ("ReA", "CSE"),
        ("ReG", "CS"),
        ("CSA", "CS"),
        ("CSE", "CS"),
    ]
    below_rb = {"T", "LZ", "A", "G"}
    low_l = {v: "T" if v in below_rb else "RZ" for v in elements}
    low_r = {v: "T" if v in {"T", "RZ", "A", "G"} else "LZ" for v in elements}
    kmap = {v: v for v in elements}
    kmap.update({"LZ": "T", "RZ": "T", "RB": "T", "ReA": "A", "ReG": "G"})
    parts = {"T": "group", "A": "group", "G": "group", "CSA": "cs", "CSE": "cs", "CS": "cs"}
    return KernelModel(
        name="cs-demo",
        elements=elements,
        covers=covers,
        k0=["T", "A", "G", "CSA", "CSE", "CS"],
        designated={"T": "T", "LZ": "LZ", "RZ": "RZ"},
        low_l=low_l,
        low_r=low_r,
        kmap=kmap,
        parts=parts,
    )


BUILTINS: Dict[str, Callable[[], KernelModel]] = {
    "orthodox-chain2": lambda: chain_model(2),
    "orthodox-chain3": lambda: chain_model(3),
    "orthodox-div12": lambda: divisor_model(12),
    "demo-band": demo_band_model,
    "cs-demo": cs_model,
}

_cache: Dict[str, KernelModel] = {}


def get_builtin(name: str) -> KernelModel:
    """Look up a built-in model by name, building it on first use."""
    if name not in BUILTINS:
        raise ModelError(f"Unknown model: {name}. Choose from {list(BUILTINS)}")
    if name not in _cache:
        _cache[name] = BUILTINS[name]()
        log.debug(f"Built model {name}")
    return _cache[name]


def builtin_names() -> List[str]:
    return list(BUILTINS)
