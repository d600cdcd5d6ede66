"""Verifiers and exact solvers for proper, odd, and relaxed-odd list colorings.

An odd coloring is a proper coloring in which every non-isolated vertex sees
some color an odd number of times among its neighbors.  The relaxed variant
exempts R-relaxed vertices (odd or zero degree, or incident with a relaxation
edge): odd-degree vertices satisfy the parity condition automatically in any
coloring, so with an empty relaxation set the relaxed check coincides with
the odd-coloring check.

The solver is an exact backtracking search.  The parity constraint on a
vertex only becomes checkable once its whole neighborhood is colored, so the
search checks each constrained vertex at the moment its last neighbor gets a
color, which prunes long before the assignment completes.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Edge, Graph, RSet, is_r_relaxed, normalize_edge

Coloring = dict[int, int]


class ListViolationError(ValueError):
    """A coloring uses a color outside the vertex's list."""


class PartialColoringError(ValueError):
    """A coloring does not assign every vertex."""


@dataclass(frozen=True)
class ListAssignment:
    """Size-k color list per vertex, indexed by vertex id."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        sizes = {len(s) for s in self.lists}
        if len(sizes) > 1:
            raise ValueError(f"list sizes must be uniform, got {sorted(sizes)}")

    @property
    def k(self) -> int:
        return len(self.lists[0]) if self.lists else 0

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)


def uniform_lists(n: int, k: int) -> ListAssignment:
    """Every vertex gets the palette {1..k}."""
    palette = frozenset(range(1, k + 1))
    return ListAssignment((palette,) * n)


def list_assignment(n: int, lists: Mapping[int, Iterable[int]]) -> ListAssignment:
    if set(lists) != set(range(n)):
        raise ValueError("lists must cover exactly the vertices 0..n-1")
    return ListAssignment(tuple(frozenset(lists[v]) for v in range(n)))


@dataclass(frozen=True)
class RelaxedInstance:
    """A graph with a relaxation edge set and a list assignment."""

    graph: Graph
    r: RSet
    lists: ListAssignment

    def __post_init__(self):
        if len(self.lists) != self.graph.n:
            raise ValueError("list assignment must cover every vertex")
        for e in self.r:
            if e not in self.graph._edge_pos:
                raise ValueError(f"relaxation edge {e} is not in the graph")


def _require_total(g: Graph, c: Coloring) -> None:
    missing = [v for v in range(g.n) if v not in c]
    if missing:
        raise PartialColoringError(f"vertices without a color: {missing[:5]}")


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff every edge has differently colored endpoints."""
    _require_total(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


def odd_witness(g: Graph, c: Coloring, v: int) -> int | None:
    """Smallest color of odd multiplicity among the neighbors of v, if any."""
    _require_total(g, c)
    counts = Counter(c[u] for u in g.adj[v])
    odd = [col for col, k in counts.items() if k % 2 == 1]
    return min(odd) if odd else None


def is_odd_coloring(g: Graph, c: Coloring) -> bool:
    """Proper, and every vertex with a nonempty neighborhood has an odd witness."""
    if not is_proper(g, c):
        return False
    return all(
        odd_witness(g, c, v) is not None for v in range(g.n) if g.adj[v]
    )


def is_relaxed_odd(inst: RelaxedInstance, c: Coloring) -> bool:
    """Proper list coloring whose non-relaxed vertices all have odd witnesses.

    A color outside its vertex's list raises ListViolationError (that is an
    ill-formed input, not a failed coloring); properness and parity failures
    return False.
    """
    g = inst.graph
    _require_total(g, c)
    for v in range(g.n):
        if c[v] not in inst.lists[v]:
            raise ListViolationError(f"vertex {v} colored {c[v]} outside its list")
    if not is_proper(g, c):
        return False
    for v in range(g.n):
        if g.adj[v] and not is_r_relaxed(v, g, inst.r):
            if odd_witness(g, c, v) is None:
                return False
    return True


def relaxed_odd_violations(inst: RelaxedInstance, c: Coloring) -> list[dict]:
    """Diagnostic listing: list/properness/parity violations, separately tagged."""
    g = inst.graph
    _require_total(g, c)
    out = []
    for v in range(g.n):
        if c[v] not in inst.lists[v]:
            out.append({"kind": "list", "vertex": v, "color": c[v]})
    for u, v in g.edges:
        if c[u] == c[v]:
            out.append({"kind": "proper", "edge": [u, v], "color": c[u]})
    for v in range(g.n):
        if g.adj[v] and not is_r_relaxed(v, g, inst.r):
            if odd_witness(g, c, v) is None:
                out.append({"kind": "odd", "vertex": v})
    return out


# -- exact solver ------------------------------------------------------------


def solver_order(g: Graph) -> list[int]:
    """Static vertex order tuned for early parity checks.

    Vertices of high degree come first (their colors are what neighborhood
    parities depend on), with ties broken toward vertices adjacent to the
    prefix, then smaller id.  Since the solver checks a constrained vertex
    the moment its neighborhood completes, whether or not the vertex itself
    is colored, front-loading the high-degree vertices turns subdivision-like
    instances from exponential into trivial; a plain degeneracy order
    scatters them through the order and stalls the search.
    """
    n = g.n
    placed = [False] * n
    ordered_nbrs = [0] * n
    out = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not placed[u]),
            key=lambda u: (g.degree(u), ordered_nbrs[u], -u),
        )
        placed[v] = True
        out.append(v)
        for w in g.adj[v]:
            ordered_nbrs[w] += 1
    return out


def solve(inst: RelaxedInstance) -> Coloring | None:
    """Exact search for a relaxed-odd list coloring; None iff none exists.

    Backtracks over vertices in a propagation-friendly static order.
    Whenever a vertex's neighborhood becomes fully colored, the parity
    constraint is checked immediately (for non-relaxed vertices), which is
    where essentially all of the pruning comes from.
    """
    g = inst.graph
    n = g.n
    if n == 0:
        return {}
    order = solver_order(g)
    pos = {v: i for i, v in enumerate(order)}
    constrained = [
        v for v in range(n) if g.adj[v] and not is_r_relaxed(v, g, inst.r)
    ]
    # vertices whose neighborhood completes when position p gets colored
    complete_at: list[list[int]] = [[] for _ in range(n)]
    for w in constrained:
        complete_at[max(pos[u] for u in g.adj[w])].append(w)

    colors: dict[int, int] = {}
    lists_sorted = [sorted(inst.lists[v]) for v in range(n)]

    def parity_ok(w: int) -> bool:
        counts = Counter(colors[u] for u in g.adj[w])
        return any(k % 2 == 1 for k in counts.values())

    def place(p: int) -> bool:
        if p == n:
            return True
        u = order[p]
        taken = {colors[w] for w in g.adj[u] if w in colors}
        for col in lists_sorted[u]:
            if col in taken:
                continue
            colors[u] = col
            if all(parity_ok(w) for w in complete_at[p]):
                if place(p + 1):
                    return True
            del colors[u]
        return False

    if place(0):
        return dict(colors)
    return None


def odd_chromatic_number(g: Graph) -> int:
    """Minimum k such that an odd k-coloring exists.

    Always finite: coloring every vertex with its own color is odd, so the
    search over k = 1, 2, ... terminates by n at the latest.
    """
    if g.n == 0:
        return 0
    empty: RSet = frozenset()
    for k in range(1, g.n + 1):
        if solve(RelaxedInstance(g, empty, uniform_lists(g.n, k))) is not None:
            return k
    raise AssertionError("unreachable: rainbow coloring is always odd")


@dataclass(frozen=True)
class ChoosabilityReport:
    """Outcome of sampling k-list-assignments in search of a refutation."""

    k: int
    trials: int
    universe: int
    seed: int
    refutations: tuple[tuple[int, tuple[tuple[int, ...], ...]], ...]
    # (trial index, per-vertex sorted lists) for every unsolvable assignment

    @property
    def refuted(self) -> bool:
        return bool(self.refutations)

    def summary(self) -> str:
        if self.refuted:
            t = self.refutations[0][0]
            return f"refutation found at trial {t}"
        return "no refutation found"


def sampled_choosability(
    g: Graph, k: int, r: RSet, trials: int, universe: int | None = None, seed: int = 0
) -> ChoosabilityReport:
    """Sampled evidence for odd k-choosability under relaxation set r.

    Draws ``trials`` k-list-assignments with colors from {1..universe}
    (default universe 2k) and records every assignment the solver refutes.
    A sampler, not a decision procedure: "no refutation found" is evidence,
    not proof.
    """
    if universe is None:
        universe = 2 * k
    if universe < k:
        raise ValueError("universe must be at least k")
    rng = random.Random(seed)
    palette = list(range(1, universe + 1))
    found = []
    for t in range(trials):
        lists = ListAssignment(
            tuple(frozenset(rng.sample(palette, k)) for _ in range(g.n))
        )
        if solve(RelaxedInstance(g, r, lists)) is None:
            found.append((t, tuple(tuple(sorted(s)) for s in lists.lists)))
    return ChoosabilityReport(k, trials, universe, seed, tuple(found))


# -- low-degree reduction and extension ---------------------------------------


class ReductionError(ValueError):
    """The reduction preconditions fail; the message names the failed case."""


@dataclass(frozen=True)
class ReductionRecord:
    """What a low-degree reduction removed and how to undo it.

    ``case`` is one of "isolated", "pendant" (degree 1), "relaxed_edge"
    (degree 2, the removed vertex rides a relaxation edge) and "bridge"
    (degree 2, the neighbor pair gets joined by a fresh relaxation edge).
    """

    case: str
    vertex: int
    neighbors: tuple[int, ...]
    graph: Graph
    r: RSet
    reduced_graph: Graph
    reduced_r: RSet
    relabel: dict[int, int]  # old vertex -> reduced vertex
    added_edge: Edge | None  # original labels; only for "bridge"


def reduce_low_degree(g: Graph, r: RSet, v: int) -> tuple[Graph, RSet, ReductionRecord]:
    """Remove a vertex of degree <= 2, preserving the cycle hypotheses.

    Degree 0/1 and degree 2 with an incident relaxation edge reduce to G - v.
    Otherwise (degree 2, neighbors a, b) the instance reduces to G - v plus a
    fresh edge ab added to the relaxation set; ab must not already exist,
    which is guaranteed whenever the cycle hypotheses hold (a triangle avb
    would have weighted length 3 or 4).
    """
    g.check_vertex(v)
    nbrs = tuple(sorted(g.adj[v]))
    d = len(nbrs)
    if d > 2:
        raise ReductionError(f"vertex {v} has degree {d} > 2")
    reduced, relabel = g.remove_vertex(v)

    def push(edges: Iterable[Edge]) -> RSet:
        return frozenset(
            normalize_edge(relabel[a], relabel[b]) for a, b in edges if v not in (a, b)
        )

    if d == 0:
        rec = ReductionRecord("isolated", v, nbrs, g, r, reduced, push(r), relabel, None)
        return reduced, rec.reduced_r, rec
    if d == 1:
        rec = ReductionRecord("pendant", v, nbrs, g, r, reduced, push(r), relabel, None)
        return reduced, rec.reduced_r, rec
    a, b = nbrs
    if any(v in e for e in r):
        rec = ReductionRecord("relaxed_edge", v, nbrs, g, r, reduced, push(r), relabel, None)
        return reduced, rec.reduced_r, rec
    if g.has_edge(a, b):
        raise ReductionError(
            f"neighbors {a},{b} of {v} are adjacent: the triangle has weighted "
            "length 3 or 4, so the instance fails the cycle hypotheses"
        )
    new_edge = normalize_edge(relabel[a], relabel[b])
    reduced2 = reduced.add_edge(*new_edge)
    reduced_r = push(r) | {new_edge}
    rec = ReductionRecord(
        "bridge", v, nbrs, g, r, reduced2, reduced_r, relabel, normalize_edge(a, b)
    )
    return reduced2, reduced_r, rec


def _smallest_odd_color(colors: Iterable[int]) -> int | None:
    counts = Counter(colors)
    odd = [c for c, k in counts.items() if k % 2 == 1]
    return min(odd) if odd else None


def extend_low_degree(
    record: ReductionRecord, reduced_coloring: Coloring, lists: ListAssignment
) -> Coloring:
    """Extend a valid coloring of the reduced instance back over the removed
    vertex.

    The removed vertex avoids its neighbors' colors plus the protected parity
    witnesses of its even-degree neighbors; at most 4 colors are excluded, so
    a 5-list always has room.  The result passes the relaxed-odd check on the
    original instance whenever the input passes it on the reduced one.
    """
    g, r, v = record.graph, record.r, record.vertex
    if len(lists) != g.n:
        raise ValueError("lists must cover the original graph")
    if len(lists[v]) != 5:
        raise ValueError("the removed vertex needs a 5-list")
    reduced_lists = ListAssignment(
        tuple(lists[old] for old, _ in sorted(record.relabel.items(), key=lambda kv: kv[1]))
    )
    inst = RelaxedInstance(record.reduced_graph, record.reduced_r, reduced_lists)
    if not is_relaxed_odd(inst, reduced_coloring):
        raise ValueError("reduced coloring does not satisfy the reduced instance")

    colors: Coloring = {old: reduced_coloring[new] for old, new in record.relabel.items()}

    def witness_excluding_v(x: int) -> int | None:
        return _smallest_odd_color(colors[u] for u in g.adj[x] if u != v)

    forbidden: set[int] = set()
    if record.case == "pendant":
        (u,) = record.neighbors
        forbidden.add(colors[u])
        if not is_r_relaxed(u, g, r):
            w = witness_excluding_v(u)
            if w is not None:
                forbidden.add(w)
    elif record.case == "relaxed_edge":
        a, b = record.neighbors
        if not any(v in e and a in e for e in r):
            a, b = b, a  # a is the neighbor across the relaxation edge
        forbidden.update((colors[a], colors[b]))
        if not is_r_relaxed(b, g, r):
            w = witness_excluding_v(b)
            if w is not None:
                forbidden.add(w)
    elif record.case == "bridge":
        a, b = record.neighbors
        forbidden.update((colors[a], colors[b]))
        for x in (a, b):
            w = witness_excluding_v(x)
            if w is not None:
                forbidden.add(w)
    elif record.case != "isolated":
        raise ValueError(f"unknown reduction case {record.case!r}")

    candidates = sorted(lists[v] - forbidden)
    if not candidates:
        raise AssertionError("a 5-list cannot be exhausted by <= 4 exclusions")
    colors[v] = candidates[0]
    return colors
