"""Directed graph representation, de Bruijn graph and generated-subdigraph
construction, domination predicates, Eulerian circuits, and DOT/JSON export.

Digraphs are immutable after construction and keep both out- and
in-adjacency indices. Vertex order is always lexicographic by label, so
every export and every derived walk is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DomainError, ResourceCapError
from .seqcore import (
    DEFAULT_SIZE_CAP,
    Alphabet,
    CyclicSequence,
    KString,
    k_tour,
    successors,
)

PROVENANCE_KINDS = ("de_bruijn", "generated", "custom")

VertexRef = Union[int, str, KString]


@dataclass(frozen=True)
class Provenance:
    """How a digraph came to be; generated graphs record their source text."""

    kind: str
    sequence: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in PROVENANCE_KINDS:
            raise DomainError(f"unknown provenance kind {self.kind!r}")
        if self.kind == "generated" and self.sequence is None:
            raise DomainError("generated provenance must record its sequence")

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.sequence is not None:
            obj["sequence"] = self.sequence
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "Provenance":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise DomainError("provenance must be an object with a 'kind' field")
        return cls(obj["kind"], obj.get("sequence"))


class Digraph:
    """A vertex-labelled digraph with arcs stored as index pairs.

    Unless the provenance is custom, every arc (u, v) must be a left
    shift: label(v) drops the first symbol of label(u) and appends one
    symbol. Self-loops are permitted.
    """

    def __init__(
        self,
        labels: Sequence[KString],
        arcs: Iterable[tuple[int, int]],
        provenance: Provenance = Provenance("custom"),
    ) -> None:
        labels = tuple(labels)
        if not labels:
            raise DomainError("a digraph needs at least one vertex")
        alphabet = labels[0].alphabet
        order = labels[0].order
        for lbl in labels:
            if lbl.alphabet != alphabet or lbl.order != order:
                raise DomainError("vertex labels must share one alphabet and order")
        if len({lbl.symbols for lbl in labels}) != len(labels):
            raise DomainError("vertex labels must be pairwise distinct")

        n = len(labels)
        arcset: set[tuple[int, int]] = set()
        for arc in arcs:
            u, v = arc
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"arc {arc!r} references an unknown vertex")
            arcset.add((int(u), int(v)))
        if provenance.kind != "custom":
            for u, v in arcset:
                if labels[v].symbols[:-1] != labels[u].symbols[1:]:
                    raise DomainError(
                        f"arc {labels[u]} -> {labels[v]} is not a left shift"
                    )

        self._labels = labels
        self._arcs = frozenset(arcset)
        self._provenance = provenance
        self._alphabet = alphabet
        self._order = order
        self._index = {lbl.symbols: i for i, lbl in enumerate(labels)}
        out: list[list[int]] = [[] for _ in range(n)]
        in_deg = [0] * n
        for u, v in arcset:
            out[u].append(v)
            in_deg[v] += 1
        self._out = tuple(tuple(sorted(ts)) for ts in out)
        self._in_deg = tuple(in_deg)

    @property
    def labels(self) -> tuple[KString, ...]:
        return self._labels

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    @property
    def provenance(self) -> Provenance:
        return self._provenance

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def order(self) -> int:
        return self._order

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def label(self, i: int) -> KString:
        if not 0 <= i < len(self._labels):
            raise DomainError(f"vertex index {i} out of range")
        return self._labels[i]

    def index(self, v: VertexRef) -> int:
        """Resolve an index, KString, or label text to a vertex index."""
        if isinstance(v, int):
            if not 0 <= v < len(self._labels):
                raise DomainError(f"vertex index {v} out of range")
            return v
        if isinstance(v, KString):
            key = v.symbols
        else:
            key = tuple(self._alphabet.decode(ch) for ch in v)
        idx = self._index.get(key)
        if idx is None:
            raise DomainError(f"unknown vertex {v!s}")
        return idx

    def has_vertex(self, v: VertexRef) -> bool:
        try:
            self.index(v)
        except DomainError:
            return False
        return True

    def out_neighbors(self, v: VertexRef) -> tuple[int, ...]:
        return self._out[self.index(v)]

    def out_degree(self, v: VertexRef) -> int:
        return len(self._out[self.index(v)])

    def in_degree(self, v: VertexRef) -> int:
        return self._in_deg[self.index(v)]

    def to_json(self) -> dict:
        return {
            "alphabet": self._alphabet.size,
            "order": self._order,
            "vertices": [lbl.text for lbl in self._labels],
            "arcs": [list(arc) for arc in sorted(self._arcs)],
            "provenance": self._provenance.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Digraph":
        if not isinstance(obj, dict):
            raise DomainError("digraph JSON must be an object")
        for key in ("alphabet", "order", "vertices", "arcs"):
            if key not in obj:
                raise DomainError(f"digraph JSON is missing the {key!r} field")
        alphabet = Alphabet(obj["alphabet"])
        order = obj["order"]
        if not isinstance(order, int) or order < 1:
            raise DomainError("order must be a positive integer")
        labels = []
        for text in obj["vertices"]:
            if len(text) != order:
                raise DomainError(f"vertex {text!r} does not have length {order}")
            labels.append(
                KString(tuple(alphabet.decode(ch) for ch in text), alphabet)
            )
        arcs = []
        for arc in obj["arcs"]:
            if not isinstance(arc, (list, tuple)) or len(arc) != 2:
                raise DomainError(f"arc {arc!r} must be a pair of vertex indices")
            arcs.append((arc[0], arc[1]))
        provenance = (
            Provenance.from_json(obj["provenance"])
            if "provenance" in obj
            else Provenance("custom")
        )
        return cls(labels, arcs, provenance)


@dataclass(frozen=True, eq=False)
class Walk:
    """An ordered vertex sequence in a digraph, possibly closed.

    Length counts arcs traversed: a closed walk on m >= 2 vertices has m
    arcs (including the wraparound), an open walk has m - 1, and a closed
    walk on a single vertex is the stationary walk of length 0.
    Construction checks only index validity; whether consecutive pairs
    are arcs is the business of is_closed_dominating_walk.
    """

    digraph: Digraph
    vertex_indices: tuple[int, ...]
    closed: bool = True

    def __post_init__(self) -> None:
        if not self.vertex_indices:
            raise DomainError("a walk needs at least one vertex")
        n = self.digraph.vertex_count
        for i in self.vertex_indices:
            if not 0 <= i < n:
                raise DomainError(f"walk vertex index {i} out of range")

    @property
    def length(self) -> int:
        m = len(self.vertex_indices)
        if self.closed:
            return m if m > 1 else 0
        return m - 1

    @property
    def label_texts(self) -> tuple[str, ...]:
        return tuple(self.digraph.label(i).text for i in self.vertex_indices)

    def arc_steps(self) -> list[tuple[int, int]]:
        """Arcs traversed in order, with multiplicity."""
        vi = self.vertex_indices
        steps = [(vi[i], vi[i + 1]) for i in range(len(vi) - 1)]
        if self.closed and len(vi) > 1:
            steps.append((vi[-1], vi[0]))
        return steps

    def canonical_rotation(self) -> tuple[int, ...]:
        """Lexicographically least rotation of the vertex index sequence."""
        if not self.closed:
            raise DomainError("canonical rotation is defined for closed walks")
        return least_rotation(self.vertex_indices)


def least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    return min(t[i:] + t[:i] for i in range(len(t)))


def build_de_bruijn_graph(
    a: int, k: int, size_cap: int = DEFAULT_SIZE_CAP
) -> Digraph:
    """The digraph on all a**k k-strings with an arc per left shift.

    Vertices appear in lexicographic order; every vertex has out-degree
    and in-degree exactly a.
    """
    alphabet = Alphabet(a)
    if k < 1:
        raise DomainError("order must be at least 1")
    if a**k > size_cap:
        raise ResourceCapError(f"a^k = {a ** k} exceeds size cap {size_cap}")
    labels = [
        KString(sym, alphabet) for sym in itertools.product(range(a), repeat=k)
    ]
    index = {lbl.symbols: i for i, lbl in enumerate(labels)}
    arcs = set()
    for i, lbl in enumerate(labels):
        tail = lbl.symbols[1:]
        for c in range(a):
            arcs.add((i, index[tail + (c,)]))
    return Digraph(labels, arcs, Provenance("de_bruijn"))


def generated_subdigraph(d: CyclicSequence, k: int) -> Digraph:
    """The subdigraph generated by a sequence of length >= k.

    Vertices are the distinct k-tour windows of ``d`` plus every left
    shift of those windows; arcs are all left shifts between retained
    vertices (the arc-induced subdigraph of the full de Bruijn graph).
    Successor-only vertices may end up with out-degree 0.
    """
    tour = k_tour(d, k)
    vertex_syms = {w.symbols for w in tour.windows}
    for w in set(tour.windows):
        vertex_syms.update(s.symbols for s in successors(w))
    labels = [KString(sym, d.alphabet) for sym in sorted(vertex_syms)]
    index = {lbl.symbols: i for i, lbl in enumerate(labels)}
    arcs = set()
    for i, lbl in enumerate(labels):
        for s in successors(lbl):
            j = index.get(s.symbols)
            if j is not None:
                arcs.add((i, j))
    return Digraph(labels, arcs, Provenance("generated", d.text))


def closed_out_neighborhood(g: Digraph, v: VertexRef) -> frozenset[int]:
    """The vertex itself plus its out-neighbors, as vertex indices."""
    i = g.index(v)
    return frozenset((i,)) | frozenset(g.out_neighbors(i))


def is_dominating_set(g: Digraph, vertices: Iterable[VertexRef]) -> bool:
    """True iff the closed out-neighborhoods of ``vertices`` cover the graph."""
    covered: set[int] = set()
    for v in vertices:
        covered |= closed_out_neighborhood(g, v)
    return len(covered) == g.vertex_count


def is_closed_dominating_walk(g: Digraph, walk: Walk) -> bool:
    """True iff the walk is closed, follows arcs, and its vertices dominate.

    A malformed walk (missing arc, not closed) yields False, never an
    error; a walk built on a different digraph instance is rejected.
    """
    if walk.digraph is not g:
        raise DomainError("walk does not reference this digraph")
    if not walk.closed:
        return False
    arcs = g.arcs
    for step in walk.arc_steps():
        if step not in arcs:
            return False
    return is_dominating_set(g, set(walk.vertex_indices))


def eulerian_circuit(g: Digraph) -> Walk:
    """A closed walk using every arc exactly once (Hierholzer).

    Deterministic: starts at the least vertex with out-arcs and always
    consumes the least unused out-arc first.
    """
    n = g.vertex_count
    if g.arc_count == 0:
        raise DomainError("digraph has no arcs")
    for v in range(n):
        if g.out_degree(v) != g.in_degree(v):
            raise DomainError(
                f"vertex {g.label(v)} has out-degree {g.out_degree(v)} "
                f"!= in-degree {g.in_degree(v)}"
            )
    out = [g.out_neighbors(v) for v in range(n)]
    ptr = [0] * n
    start = next(v for v in range(n) if out[v])
    stack = [start]
    trail: list[int] = []
    while stack:
        v = stack[-1]
        if ptr[v] < len(out[v]):
            u = out[v][ptr[v]]
            ptr[v] += 1
            stack.append(u)
        else:
            trail.append(stack.pop())
    if len(trail) != g.arc_count + 1:
        raise DomainError("digraph is not connected: some arcs are unreachable")
    trail.reverse()
    return Walk(g, tuple(trail[:-1]), closed=True)


def gen_eulerian(a: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> CyclicSequence:
    """De Bruijn sequence of order k read off an Eulerian circuit.

    Walks an Eulerian circuit of the order-(k-1) graph and records the
    symbol each arc appends. For k = 1 the order-0 graph degenerates to a
    single vertex with one loop per symbol, so the reading is simply each
    symbol once in canonical order.
    """
    alphabet = Alphabet(a)
    if k < 1:
        raise DomainError("order must be at least 1")
    if a**k > size_cap:
        raise ResourceCapError(f"a^k = {a ** k} exceeds size cap {size_cap}")
    if k == 1:
        return CyclicSequence(tuple(range(a)), alphabet)
    g = build_de_bruijn_graph(a, k - 1, size_cap)
    circuit = eulerian_circuit(g)
    vi = circuit.vertex_indices
    m = len(vi)
    syms = tuple(g.label(vi[(i + 1) % m]).symbols[-1] for i in range(m))
    return CyclicSequence(syms, alphabet)


def to_dot(g: Digraph, highlight: Walk | None = None) -> str:
    """Deterministic DOT text; highlighted walk arcs bold, the rest grey."""
    if highlight is not None and highlight.digraph is not g:
        raise DomainError("highlight walk does not reference this digraph")
    bold = set(highlight.arc_steps()) if highlight is not None else set()
    lines = ["digraph debruijn {"]
    for lbl in g.labels:
        lines.append(f'  "{lbl.text}";')
    for u, v in sorted(g.arcs):
        if highlight is None:
            attr = ""
        elif (u, v) in bold:
            attr = " [style=bold, color=black]"
        else:
            attr = " [color=grey]"
        lines.append(f'  "{g.label(u).text}" -> "{g.label(v).text}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
