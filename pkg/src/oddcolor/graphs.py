"""Simple graphs, short-cycle machinery, and the relaxation hypothesis check.

Vertices are dense integers ``0..n-1``.  Edges are unordered pairs stored as
sorted tuples, kept in lexicographic order.  A *relaxation set* (R set) is a
subset of the edge set; edges of R count twice in the weighted cycle length
r_length(C) = |E(C)| + |E(C) ∩ R|, and a vertex is *R-relaxed* when its degree
is odd or zero, or when it is incident with an R edge.

The hypothesis check implemented here accepts exactly the graphs whose cycles
avoid r-lengths 3, 4, and 6 and in which no two cycles of r-length 5 share
exactly one edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]
RSet = frozenset  # frozenset[Edge]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the pair sorted; loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Immutable after construction.  ``edges`` is a tuple of sorted pairs in
    lexicographic order; ``adj[v]`` is the frozen neighbor set of ``v``.
    """

    __slots__ = ("n", "edges", "adj", "_edge_pos")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            e = normalize_edge(int(u), int(v))
            if not (0 <= e[0] and e[1] < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            norm.add(e)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(norm))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._edge_pos = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries -----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self.adj[u]

    def edge_index(self, e: Edge) -> int:
        return self._edge_pos[normalize_edge(*e)]

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex {v}")
        return v

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, sorted by minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def remove_vertex(self, v: int) -> tuple["Graph", dict[int, int]]:
        """Return (G - v, old->new vertex relabeling keeping ids dense)."""
        self.check_vertex(v)
        relabel = {w: (w if w < v else w - 1) for w in range(self.n) if w != v}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges if v not in (a, b)]
        return Graph(self.n - 1, edges), relabel

    def add_edge(self, u: int, v: int) -> "Graph":
        e = normalize_edge(u, v)
        if e in self._edge_pos:
            raise ValueError(f"edge {e} already present")
        return Graph(self.n, self.edges + (e,))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


# -- named constructors ----------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def r_set(g: Graph, edges: Iterable[tuple[int, int]]) -> RSet:
    """Validate a relaxation set: every member must be an edge of ``g``."""
    out = set()
    for u, v in edges:
        e = normalize_edge(u, v)
        if e not in g._edge_pos:
            raise ValueError(f"relaxation edge {e} is not an edge of the graph")
        out.add(e)
    return frozenset(out)


def r_set_from_indices(g: Graph, indices: Iterable[int]) -> RSet:
    """Relaxation set given as indices into the sorted edge list."""
    out = set()
    for i in indices:
        if not 0 <= i < len(g.edges):
            raise ValueError(f"edge index {i} out of range")
        out.add(g.edges[i])
    return frozenset(out)


# -- cycles ----------------------------------------------------------------


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its vertex sequence (length >= 3).

    The canonical form starts at the smallest vertex and proceeds toward its
    smaller cycle-neighbor, which makes equal cycles compare equal under
    rotation and reflection.
    """

    vertices: tuple[int, ...]

    @property
    def edge_set(self) -> frozenset[Edge]:
        vs = self.vertices
        return frozenset(
            normalize_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )

    def __len__(self) -> int:
        return len(self.vertices)


def canonical_cycle(seq: Iterable[int]) -> Cycle:
    """Canonicalize a vertex sequence under rotation and reflection."""
    vs = tuple(seq)
    if len(vs) < 3:
        raise ValueError("cycles have at least 3 vertices")
    if len(set(vs)) != len(vs):
        raise ValueError("cycle vertices must be pairwise distinct")
    k = vs.index(min(vs))
    rot = vs[k:] + vs[:k]
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return Cycle(rot if rot <= rev else rev)


def cycle_in(g: Graph, seq: Iterable[int]) -> Cycle:
    """Validate ``seq`` as a cycle of ``g`` and return it canonicalized."""
    c = canonical_cycle(seq)
    vs = c.vertices
    for i, u in enumerate(vs):
        g.check_vertex(u)
        v = vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            raise ValueError(f"consecutive vertices {u},{v} are not adjacent")
    return c


def r_length(c: Cycle, r: RSet) -> int:
    """|E(C)| + |E(C) ∩ R|: relaxation edges count twice."""
    es = c.edge_set
    return len(es) + len(es & r)


def is_r_relaxed(v: int, g: Graph, r: RSet) -> bool:
    """True iff deg(v) is odd or 0, or v is incident with a relaxation edge."""
    g.check_vertex(v)
    d = g.degree(v)
    if d == 0 or d % 2 == 1:
        return True
    return any(v in e for e in r)


def enumerate_cycles(g: Graph, max_edge_count: int) -> list[Cycle]:
    """All simple cycles with at most ``max_edge_count`` edges, each once.

    Each cycle is produced exactly once up to rotation and reflection: the
    search roots every cycle at its smallest vertex and fixes the direction
    by requiring second vertex < last vertex.  Output is in lexicographic
    order of the canonical vertex sequences.
    """
    if max_edge_count < 3:
        raise ValueError("max_edge_count must be at least 3")
    out: list[Cycle] = []
    adj_sorted = [sorted(g.adj[v]) for v in range(g.n)]
    path: list[int] = []
    on_path = [False] * g.n

    def extend(start: int, u: int) -> None:
        for w in adj_sorted[u]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                out.append(Cycle(tuple(path)))
            if w <= start or on_path[w] or len(path) == max_edge_count:
                continue
            path.append(w)
            on_path[w] = True
            extend(start, w)
            on_path[w] = False
            path.pop()

    for s in range(g.n):
        path = [s]
        on_path[s] = True
        extend(s, s)
        on_path[s] = False
    return out


def girth(g: Graph) -> int | float:
    """Minimum cycle edge count; ``math.inf`` for forests.

    Computed per edge: remove it and measure the shortest remaining path
    between its endpoints.
    """
    best: int | float = math.inf
    for u, v in g.edges:
        # BFS from u to v avoiding the edge uv
        dist = {u: 0}
        frontier = [u]
        found = None
        while frontier and found is None:
            nxt = []
            for a in frontier:
                for b in g.adj[a]:
                    if a == u and b == v:
                        continue
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        if b == v:
                            found = dist[b]
                            break
                        nxt.append(b)
                if found is not None:
                    break
            frontier = nxt
        if found is not None and found + 1 < best:
            best = found + 1
    return best


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of the relaxed-cycle hypothesis check with witnesses."""

    passes: bool
    forbidden_cycles: tuple[tuple[Cycle, int], ...]  # (cycle, r_length in {3,4,6})
    five_pairs: tuple[tuple[Cycle, Cycle, Edge], ...]  # r-length-5 pair, shared edge

    def to_json(self) -> dict:
        return {
            "passes": self.passes,
            "forbidden_cycles": [
                {"cycle": list(c.vertices), "r_length": L}
                for c, L in self.forbidden_cycles
            ],
            "five_pairs": [
                {"cycle_a": list(a.vertices), "cycle_b": list(b.vertices), "shared_edge": list(e)}
                for a, b, e in self.five_pairs
            ],
        }


def hypothesis_check(g: Graph, r: RSet, max_edge_count: int = 6) -> HypothesisReport:
    """Check the two cycle conditions of the relaxed coloring theorem.

    (a) no cycle has r-length 3, 4, or 6; (b) no two distinct cycles of
    r-length 5 share exactly one edge.  Since r_length(C) >= |E(C)|, cycles
    with more than 6 edges are irrelevant to (a), and r-length-5 cycles have
    at most 5 edges, so the default enumeration cap of 6 is exhaustive.
    """
    cycles = enumerate_cycles(g, max(max_edge_count, 6))
    forbidden = []
    fives = []
    for c in cycles:
        L = r_length(c, r)
        if L in (3, 4, 6):
            forbidden.append((c, L))
        elif L == 5:
            fives.append(c)
    pairs = []
    for c1, c2 in combinations(fives, 2):
        shared = c1.edge_set & c2.edge_set
        if len(shared) == 1:
            pairs.append((c1, c2, min(shared)))
    return HypothesisReport(
        passes=not forbidden and not pairs,
        forbidden_cycles=tuple(forbidden),
        five_pairs=tuple(pairs),
    )


def one_subdivision(h: Graph) -> Graph:
    """Replace every edge uv by a length-2 path u-w-v through a fresh vertex.

    Edge i of the sorted edge list gets subdivision vertex ``h.n + i``, so
    the output has |V|+|E| vertices and 2|E| edges.
    """
    edges = []
    for i, (u, v) in enumerate(h.edges):
        w = h.n + i
        edges.append((u, w))
        edges.append((w, v))
    return Graph(h.n + len(h.edges), edges)
