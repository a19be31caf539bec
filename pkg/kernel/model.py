"""
Kernel models: a finite carrier lattice with the operators lowL, lowR and kmap.

The carrier order is given by cover pairs (a < b); networkx closes it and numpy holds
the leq matrix plus join and meet tables. Construction is lenient so that validate_model
can report every broken axiom instead of failing on the first one.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from kernel.errors import ModelError
from kernel.extended import ExtendedElement, ExtendedLattice, Special
from theta.index import LambdaIndex, gamma_inv
from theta.words import Letter, Word

log = logging.getLogger(__name__)

ROLES = ("T", "S", "LZ", "RZ", "LNB", "RNB")
PARTS = ("group", "cs")
RESERVED_CHARS = "*&^ \t,()#=<>"

# designated roles collapsed by kstar onto the adjoined elements
_STAR_OF_ROLE = {
    "T": Special.T,
    "S": Special.T,
    "LZ": Special.L,
    "LNB": Special.L,
    "RZ": Special.R,
    "RNB": Special.R,
}

_UNDEFINED = -1


@dataclass(frozen=True)
class ModelViolation:
    axiom: str
    message: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


class KernelModel:
    def __init__(
        self,
        name: str,
        elements: Sequence[str],
        covers: Iterable[Tuple[str, str]],
        k0: Iterable[str],
        designated: Mapping[str, str],
        low_l: Mapping[str, str],
        low_r: Mapping[str, str],
        kmap: Mapping[str, str],
        parts: Optional[Mapping[str, str]] = None,
        admissible: Optional[Iterable[str]] = None,
    ):
        self.name = name
        self.covers: Tuple[Tuple[str, str], ...] = tuple((a, b) for a, b in covers)
        self.k0: FrozenSet[str] = frozenset(k0)
        self.designated: Dict[str, str] = dict(designated)
        self.low_l: Dict[str, str] = dict(low_l)
        self.low_r: Dict[str, str] = dict(low_r)
        self.kmap: Dict[str, str] = dict(kmap)
        self.parts: Dict[str, str] = dict(parts or {})
        self.admissible: FrozenSet[str] = (
            frozenset(admissible) if admissible is not None else frozenset(self.parts)
        )

        given = list(elements)
        if len(set(given)) != len(given):
            raise ModelError(f"Model {name}: duplicate element names")
        self._check_known(given)

        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(given)
        self.graph.add_edges_from(self.covers)
        self.is_acyclic = nx.is_directed_acyclic_graph(self.graph)
        if self.is_acyclic:
            position = {v: i for i, v in enumerate(given)}
            order = list(nx.lexicographical_topological_sort(self.graph, key=position.get))
        else:
            order = given
        self.elements: Tuple[str, ...] = tuple(order)
        self._pos: Dict[str, int] = {v: i for i, v in enumerate(self.elements)}

        self._leq = self._build_leq()
        self._join = self._build_table(upper=True)
        self._meet = self._build_table(upper=False)
        self._star_cache: Dict[Tuple[str, Word], ExtendedElement] = {}
        self._lattice: Optional[ExtendedLattice] = None
        self._hash: Optional[int] = None
        self._role_of = {v: role for role, v in self.designated.items()}

    def _check_known(self, given: List[str]):
        known = set(given)

        def unknown(where: str, names: Iterable[str]):
            for v in names:
                if v not in known:
                    raise ModelError(f"Model {self.name}: unknown element {v!r} in {where}")

        unknown("order", [v for pair in self.covers for v in pair])
        unknown("k0", self.k0)
        unknown("designated", self.designated.values())
        for table_name, table in (("lowL", self.low_l), ("lowR", self.low_r), ("kmap", self.kmap)):
            unknown(table_name, list(table) + list(table.values()))
        unknown("parts", self.parts)
        unknown("admissible", self.admissible)
        for role in self.designated:
            if role not in ROLES:
                raise ModelError(f"Unknown role: {role}. Choose from {list(ROLES)}")
        for v, part in self.parts.items():
            if part not in PARTS:
                raise ModelError(f"Unknown part: {part}. Choose from {list(PARTS)}")

    def _build_leq(self) -> np.ndarray:
        n = len(self.elements)
        leq = np.eye(n, dtype=bool)
        closure = nx.transitive_closure(self.graph, reflexive=False)
        for a, b in closure.edges():
            leq[self._pos[a], self._pos[b]] = True
        return leq

    def _build_table(self, upper: bool) -> np.ndarray:
        n = len(self.elements)
        table = np.full((n, n), _UNDEFINED, dtype=int)
        leq = self._leq if upper else self._leq.T
        for a in range(n):
            for b in range(a, n):
                bounds = leq[a] & leq[b]
                # least among the bounds: below every other bound
                least = bounds & leq[:, bounds].all(axis=1)
                found = np.flatnonzero(least)
                if len(found) == 1:
                    table[a, b] = table[b, a] = found[0]
        return table

    # carrier order

    def index(self, v: str) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ModelError(f"Unknown element: {v}. Choose from {list(self.elements)}") from None

    def leq(self, a: str, b: str) -> bool:
        """Carrier order."""
        return bool(self._leq[self.index(a), self.index(b)])

    def join(self, a: str, b: str) -> str:
        """Carrier join, raising ModelError where it is undefined."""
        return self._lookup(self._join, a, b, "join")

    def meet(self, a: str, b: str) -> str:
        """Carrier meet, raising ModelError where it is undefined."""
        return self._lookup(self._meet, a, b, "meet")

    def _lookup(self, table: np.ndarray, a: str, b: str, what: str) -> str:
        k = table[self.index(a), self.index(b)]
        if k == _UNDEFINED:
            raise ModelError(f"Model {self.name}: {what}({a},{b}) is undefined")
        return self.elements[k]

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq.copy()

    @property
    def bottom(self) -> Optional[str]:
        below_all = np.flatnonzero(self._leq.all(axis=1))
        return self.elements[below_all[0]] if len(below_all) == 1 else None

    @property
    def top(self) -> Optional[str]:
        above_all = np.flatnonzero(self._leq.all(axis=0))
        return self.elements[above_all[0]] if len(above_all) == 1 else None

    def bottom_or_raise(self) -> str:
        bottom = self.bottom
        if bottom is None:
            raise ModelError(f"Model {self.name} has no bottom element")
        return bottom

    @property
    def height(self) -> int:
        """Length of the longest strict chain in the carrier."""
        if not self.is_acyclic:
            return len(self.elements)
        return nx.dag_longest_path_length(self.graph)

    def hasse_edges(self) -> List[Tuple[str, str]]:
        """Cover pairs of the carrier, in element order."""
        if not self.is_acyclic:
            return list(self.covers)
        reduced = nx.transitive_reduction(self.graph)
        return sorted(reduced.edges(), key=lambda e: (self._pos[e[0]], self._pos[e[1]]))

    # operators

    def role(self, name: str) -> Optional[str]:
        """Element holding the designated role, if any."""
        return self.designated.get(name)

    def role_of(self, v: str) -> Optional[str]:
        return self._role_of.get(v)

    def part(self, v: str) -> Optional[str]:
        return self.parts.get(v)

    def elements_of_part(self, part: str) -> List[str]:
        return [v for v in self.elements if self.parts.get(v) == part]

    def _table_value(self, table: Dict[str, str], v: str, what: str) -> str:
        try:
            return table[v]
        except KeyError:
            raise ModelError(f"Model {self.name}: {what} has no entry for {v!r}") from None

    def low(self, letter: Letter, v: str) -> str:
        """lowL or lowR of v, chosen by the letter."""
        if letter is Letter.L:
            return self._table_value(self.low_l, v, "lowL")
        return self._table_value(self.low_r, v, "lowR")

    def kmap_of(self, v: str) -> str:
        return self._table_value(self.kmap, v, "kmap")

    def lower(self, v: str, word: Word) -> str:
        """Apply the letters of the word left to right: Tℓ ↦ lowL, Tr ↦ lowR."""
        for letter in word:
            v = self.low(letter, v)
        return v

    def lower_lambda(self, v: str, x: LambdaIndex) -> str:
        """Lower v along the word with index x."""
        return self.lower(v, gamma_inv(x))

    def kstar(self, v: str) -> ExtendedElement:
        """Designated roles collapse to T*, L* or R*; every other element goes through kmap."""
        role = self._role_of.get(v)
        if role in _STAR_OF_ROLE:
            return _STAR_OF_ROLE[role]
        return self.kmap_of(v)

    def lower_star(self, v: str, word: Word) -> ExtendedElement:
        """kstar of v lowered along the word; cached per model."""
        key = (v, word)
        if key not in self._star_cache:
            self._star_cache[key] = self.kstar(self.lower(v, word))
        return self._star_cache[key]

    @property
    def lattice(self) -> ExtendedLattice:
        """The extended lattice K over this model."""
        if self._lattice is None:
            self._lattice = ExtendedLattice(self)
        return self._lattice

    def signature(self) -> tuple:
        def frozen(d):
            return tuple(sorted(d.items()))

        return (
            self.name,
            self.elements,
            tuple(sorted(self.covers)),
            tuple(sorted(self.k0)),
            frozen(self.designated),
            frozen(self.low_l),
            frozen(self.low_r),
            frozen(self.kmap),
            frozen(self.parts),
            tuple(sorted(self.admissible)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KernelModel):
            return NotImplemented
        return self is other or self.signature() == other.signature()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.signature())
        return self._hash

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_star_cache"] = {}
        state["_lattice"] = None
        state["_hash"] = None
        return state

    def __repr__(self) -> str:
        return f"KernelModel({self.name!r}, {len(self.elements)} elements)"


def validate_model(m: KernelModel) -> List[ModelViolation]:
    """All axiom violations of the model; empty when the model is valid."""
    violations: List[ModelViolation] = []

    def report(axiom: str, message: str):
        violations.append(ModelViolation(axiom, message))

    for v in m.elements:
        bad = [ch for ch in v if ch in RESERVED_CHARS]
        if bad or not v:
            report("names", f"element name {v!r} contains reserved characters")

    # order
    if not m.is_acyclic:
        report("order", "order relation has a cycle")
        return violations
    lattice_ok = True
    n = len(m.elements)
    for a in range(n):
        for b in range(a + 1, n):
            x, y = m.elements[a], m.elements[b]
            if m._join[a, b] == _UNDEFINED:
                lattice_ok = False
                report("lattice", f"join({x},{y}) does not exist")
            if m._meet[a, b] == _UNDEFINED:
                lattice_ok = False
                report("lattice", f"meet({x},{y}) does not exist")
    bottom = m.bottom
    if bottom is None:
        report("bottom", "carrier has no least element")

    # operator tables must be total before their laws can be checked
    complete = {}
    for what, table in (("lowL", m.low_l), ("lowR", m.low_r), ("kmap", m.kmap)):
        missing = [v for v in m.elements if v not in table]
        for v in missing:
            report("tables.total", f"{what} has no entry for {v}")
        complete[what] = not missing

    for what, table in (("lowL", m.low_l), ("lowR", m.low_r), ("kmap", m.kmap)):
        if not complete[what]:
            continue
        for x in m.elements:
            fx = table[x]
            if not m.leq(fx, x):
                report(f"{what}.decreasing", f"{what}({x}) = {fx} is not ≤ {x}")
            if table[fx] != fx:
                report(f"{what}.idempotent", f"{what}({what}({x})) = {table[fx]} ≠ {fx}")
            for y in m.elements:
                if x != y and m.leq(x, y) and not m.leq(fx, table[y]):
                    report(
                        f"{what}.monotone",
                        f"{what} not order-preserving at ({x},{y}): {fx} ≰ {table[y]}",
                    )

    if complete["kmap"]:
        for x in m.elements:
            if m.kmap[x] not in m.k0:
                report("kmap.range", f"kmap({x}) = {m.kmap[x]} is not in k0")
        for x in sorted(m.k0, key=m.index):
            if m.kmap[x] != x:
                report("kmap.k0-identity", f"kmap({x}) = {m.kmap[x]} but {x} is in k0")

    # designated roles
    t = m.role("T")
    if t is not None:
        if bottom is not None and t != bottom:
            report("T.bottom", f"designated T = {t} is not the bottom {bottom}")
        for what, table in (("lowL", m.low_l), ("lowR", m.low_r), ("kmap", m.kmap)):
            if table.get(t, t) != t:
                report("T.fixed", f"{what}({t}) = {table[t]} ≠ {t}")
    seen: Dict[str, str] = {}
    for role, v in m.designated.items():
        if v in seen:
            report("designated.distinct", f"roles {seen[v]} and {role} share element {v}")
        seen[v] = role
        if role != "T" and v in m.k0:
            report("designated.k0", f"role {role} = {v} lies in k0")

    # k0
    if m.bottom is not None and m.bottom not in m.k0:
        report("k0.bottom", f"bottom {m.bottom} is not in k0")
    if lattice_ok:
        k0 = sorted(m.k0, key=m.index)
        for i, x in enumerate(k0):
            for y in k0[i + 1 :]:
                j = m.join(x, y)
                if j not in m.k0:
                    report("k0.join-closed", f"join({x},{y}) = {j} is not in k0")

    for v in m.parts:
        if v not in m.k0:
            report("parts", f"{v} is tagged {m.parts[v]} but is not in k0")
    for v in m.admissible:
        if v not in m.parts:
            report("admissible", f"admissible element {v} carries no part tag")

    if violations:
        log.info(f"Model {m.name}: {len(violations)} violation(s)")
    return violations


def is_valid(m: KernelModel) -> bool:
    """True when validate_model finds nothing."""
    return not validate_model(m)
