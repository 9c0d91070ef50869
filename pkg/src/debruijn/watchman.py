"""Watchman numbers and minimum closed dominating walks.

The closed-form watchman number of the full de Bruijn graph is a**(k-1);
construct_watchman_walk builds a walk attaining it by lifting a de Bruijn
sequence of order k-1. solve_min_walk is the exact oracle: a per-start
breadth-first search over (vertex, dominated-bitset) states, so it needs
no formula and works on any digraph within the vertex cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, InvariantViolation, ResourceCapError
from .graphcore import (
    Digraph,
    Walk,
    build_de_bruijn_graph,
    generated_subdigraph,
    least_rotation,
)
from .seqcore import (
    DEFAULT_SIZE_CAP,
    Alphabet,
    CyclicSequence,
    gen_fkm,
    is_de_bruijn_sequence,
    k_tour,
)

#: The oracle refuses digraphs with more vertices than this unless the
#: caller raises the cap; the state space is bounded by n * 2**n.
DEFAULT_VERTEX_CAP = 24


@dataclass(frozen=True)
class SolveResult:
    """Outcome of the exact oracle.

    optimum_length and witness are None when the digraph admits no closed
    dominating walk at all. explored_states counts states expanded by the
    search, for diagnostics only.
    """

    optimum_length: int | None
    witness: Walk | None
    explored_states: int

    @property
    def feasible(self) -> bool:
        return self.optimum_length is not None

    def to_json(self) -> dict:
        return {
            "optimum": self.optimum_length,
            "witness": list(self.witness.label_texts) if self.witness else None,
            "explored_states": self.explored_states,
        }


def watchman_number(a: int, k: int) -> int:
    """Closed-form watchman number of the full de Bruijn graph: a**(k-1).

    Defined for k >= 2 (the attaining walk lifts an order-(k-1)
    sequence). For k = 1 use the oracle, which reports 0: every vertex of
    the order-1 graph sees the whole graph.
    """
    Alphabet(a)
    if k < 2:
        raise DomainError("the closed-form watchman number needs order k >= 2")
    return a ** (k - 1)


def construct_watchman_walk(
    a: int,
    k: int,
    seed: CyclicSequence | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> Walk:
    """A minimum closed dominating walk of the full order-k graph.

    The walk visits the k-tour windows of a de Bruijn sequence of order
    k-1 (the given ``seed``, or the canonical gen_fkm one). Its a**(k-1)
    visited vertices have pairwise disjoint out-neighborhoods covering
    all a**k vertices, so the walk dominates and attains watchman_number.
    """
    Alphabet(a)
    if k < 2:
        raise DomainError("watchman walk construction needs order k >= 2")
    if seed is None:
        seed = gen_fkm(a, k - 1, size_cap)
    else:
        if seed.alphabet.size != a:
            raise DomainError(
                f"seed alphabet size {seed.alphabet.size} does not match a = {a}"
            )
        if not is_de_bruijn_sequence(seed, k - 1):
            raise DomainError(f"seed is not a de Bruijn sequence of order {k - 1}")
    g = build_de_bruijn_graph(a, k, size_cap)
    windows = k_tour(seed, k).windows
    return Walk(g, tuple(g.index(w) for w in windows), closed=True)


def induced_walk(
    d: CyclicSequence, k: int, graph: Digraph | None = None
) -> Walk:
    """The closed walk visiting the k-tour windows of ``d`` in tour order.

    Repeated windows are revisited, not skipped, so the length is always
    exactly len(d). ``graph`` may supply a pre-built generated
    subdigraph; by default one is constructed.
    """
    if graph is None:
        graph = generated_subdigraph(d, k)
    windows = k_tour(d, k).windows
    return Walk(graph, tuple(graph.index(w) for w in windows), closed=True)


def _neighborhood_masks(g: Digraph) -> list[int]:
    masks = []
    for v in range(g.vertex_count):
        m = 1 << v
        for u in g.out_neighbors(v):
            m |= 1 << u
        masks.append(m)
    return masks


def _check_vertex_cap(g: Digraph, vertex_cap: int) -> None:
    n = g.vertex_count
    if n > vertex_cap:
        raise ResourceCapError(
            f"digraph has {n} vertices, oracle cap is {vertex_cap} "
            f"(worst-case state space ~{n * (1 << n)})"
        )


def _bounded_bfs(
    start: int,
    limit: int,
    out: list[tuple[int, ...]],
    nb: list[int],
    dist_back: list[int],
    full: int,
    max_gain: int,
) -> tuple[list[int] | None, int]:
    """Shortest closed dominating walk through ``start`` of length <= limit.

    Breadth-first over (vertex, dominated-bitset) states; returns the
    walk's vertex list (start first) or None, plus the number of states
    expanded. States are pruned when the depth plus an admissible
    lower bound (return distance, or ceil(undominated / max
    closed-neighborhood size)) exceeds the limit, so a goal within the
    limit is never missed.
    """
    explored = 0
    init = (start, nb[start])
    parent: dict[tuple[int, int], tuple[int, int] | None] = {init: None}
    frontier = [init]
    depth = 0
    while frontier and depth + 1 <= limit:
        nxt: list[tuple[int, int]] = []
        for state in frontier:
            v, m = state
            explored += 1
            for u in out[v]:
                m2 = m | nb[u]
                if u == start and m2 == full:
                    seq = []
                    s: tuple[int, int] | None = state
                    while s is not None:
                        seq.append(s[0])
                        s = parent[s]
                    seq.reverse()
                    return seq, explored
                key = (u, m2)
                if key in parent:
                    continue
                db = dist_back[u]
                if db < 0:
                    continue
                undone = (full & ~m2).bit_count()
                if depth + 1 + max(db, -(-undone // max_gain)) > limit:
                    continue
                parent[key] = state
                nxt.append(key)
        frontier = nxt
        depth += 1
    return None, explored


def solve_min_walk(g: Digraph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> SolveResult:
    """Exact minimum closed dominating walk by state-space search.

    States are (current vertex, bitset of dominated vertices), reached by
    breadth-first search from every start vertex with transitions along
    out-arcs; the goal is being back at the start with everything
    dominated. All arc costs are 1, so breadth-first order is
    uniform-cost order. The target length is iteratively deepened from
    the bound ceil(n / max closed-neighborhood size), which keeps every
    search tightly pruned without ever sacrificing exactness.

    A stationary length-0 walk is returned iff some single vertex
    dominates the whole graph. Starts whose surrounding cycle-component
    cannot possibly dominate are skipped; if no start survives, the
    instance is infeasible. Among equal-length per-start witnesses the
    one with the lexicographically least canonical rotation wins, and the
    witness is presented in that rotation.
    """
    _check_vertex_cap(g, vertex_cap)
    n = g.vertex_count
    full = (1 << n) - 1
    nb = _neighborhood_masks(g)
    for v in range(n):
        if nb[v] == full:
            return SolveResult(0, Walk(g, (v,), closed=True), 0)

    out = [g.out_neighbors(v) for v in range(n)]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.arcs:
        in_adj[v].append(u)
    for preds in in_adj:
        preds.sort()
    max_gain = max(m.bit_count() for m in nb)

    explored = 0
    starts: list[tuple[int, list[int]]] = []
    for start in range(n):
        dist_back = [-1] * n  # arc-distance from each vertex back to start
        dist_back[start] = 0
        dq = deque([start])
        while dq:
            u = dq.popleft()
            for p in in_adj[u]:
                if dist_back[p] < 0:
                    dist_back[p] = dist_back[u] + 1
                    dq.append(p)
        forward = {start}
        dq = deque([start])
        while dq:
            u = dq.popleft()
            for w in out[u]:
                if w not in forward:
                    forward.add(w)
                    dq.append(w)
        # a walk through start stays inside forward-reach ∩ backward-reach;
        # if even that whole component cannot dominate, skip the start
        potential = 0
        for u in forward:
            if dist_back[u] >= 0:
                potential |= nb[u]
        if potential == full:
            starts.append((start, dist_back))

    if not starts:
        return SolveResult(None, None, explored)

    limit = max(2, -(-n // max_gain))
    while True:
        best_canon: tuple[int, ...] | None = None
        for start, dist_back in starts:
            found, expanded = _bounded_bfs(
                start, limit, out, nb, dist_back, full, max_gain
            )
            explored += expanded
            if found is not None:
                canon = least_rotation(tuple(found))
                if best_canon is None or canon < best_canon:
                    best_canon = canon
        if best_canon is not None:
            return SolveResult(len(best_canon), Walk(g, best_canon, closed=True), explored)
        limit += 1
        if limit > n * n:  # pragma: no cover - feasibility precheck forbids this
            raise InvariantViolation("iterative deepening exceeded the n^2 bound")


def enumerate_min_walks(
    g: Digraph, length: int, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> list[Walk]:
    """All closed dominating walks of exactly ``length`` arcs, up to rotation.

    Each rotation class is returned once, as its lexicographically least
    rotation, in deterministic sorted order. Vertices may repeat within a
    walk. Asking below the optimum yields an empty list.
    """
    _check_vertex_cap(g, vertex_cap)
    if length < 0:
        raise DomainError("walk length cannot be negative")
    n = g.vertex_count
    full = (1 << n) - 1
    nb = _neighborhood_masks(g)
    if length == 0:
        return [Walk(g, (v,), closed=True) for v in range(n) if nb[v] == full]
    if length == 1:
        # a one-arc circuit is a self-loop whose vertex set equals the
        # stationary walk's; under the single-vertex-closed-walk = length 0
        # convention it has no distinct representation (and can never be
        # optimal: the stationary walk dominates the same set)
        return []

    out = [g.out_neighbors(v) for v in range(n)]
    out_set = [frozenset(ts) for ts in out]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.arcs:
        in_adj[v].append(u)
    max_gain = max(m.bit_count() for m in nb)
    found: set[tuple[int, ...]] = set()

    for start in range(n):
        # every walk is enumerated from its least vertex, so the search
        # below never descends to an index smaller than the start
        dist_back = [-1] * n
        dist_back[start] = 0
        dq = deque([start])
        while dq:
            u = dq.popleft()
            for p in in_adj[u]:
                if p >= start and dist_back[p] < 0:
                    dist_back[p] = dist_back[u] + 1
                    dq.append(p)

        path = [start]

        def extend(v: int, dom: int) -> None:
            used = len(path)
            if used == length:
                if dom == full and start in out_set[v]:
                    found.add(least_rotation(tuple(path)))
                return
            remaining = length - used  # arcs left after stepping away from v
            for u in out[v]:
                if u < start:
                    continue
                db = dist_back[u]
                if db < 0 or db > remaining:
                    continue
                dom2 = dom | nb[u]
                undone = (full & ~dom2).bit_count()
                if -(-undone // max_gain) > remaining:
                    continue
                path.append(u)
                extend(u, dom2)
                path.pop()

        extend(start, nb[start])

    return [Walk(g, t, closed=True) for t in sorted(found)]
