"""Random generation of connected high-girth test instances.

Instances are produced by randomized edge addition with girth rejection:
candidate edges are shuffled and added only when the endpoints are still far
enough apart, then the graph is trimmed to the largest component of its
2-core so that every surviving vertex has degree at least 2.  Everything is
driven by one seeded generator, so output is reproducible per seed.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .graphs import Graph, girth


class GenerationBudgetError(RuntimeError):
    """The requested number of instances was not reached within the budget."""


def _bfs_distance(adj: list[set[int]], s: int, t: int, cap: int) -> int:
    """Shortest path length s..t, or cap if it is at least cap."""
    if s == t:
        return 0
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        if dist[u] + 1 >= cap:
            continue
        for w in adj[u]:
            if w not in dist:
                if w == t:
                    return dist[u] + 1
                dist[w] = dist[u] + 1
                q.append(w)
    return cap


def _two_core_component(n: int, edges: set[tuple[int, int]]) -> Graph | None:
    """Largest connected component of the 2-core, relabeled densely."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(range(n))
    queue = deque(v for v in alive if len(adj[v]) <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adj[v]:
            adj[w].discard(v)
            if w in alive and len(adj[w]) <= 1:
                queue.append(w)
    if not alive:
        return None
    comps: list[list[int]] = []
    seen: set[int] = set()
    for s in sorted(alive):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    best = max(comps, key=len)
    if len(best) < 3:
        return None
    relabel = {v: i for i, v in enumerate(best)}
    keep = [
        (relabel[u], relabel[v])
        for u, v in edges
        if u in relabel and v in relabel
    ]
    return Graph(len(best), keep)


def generate_girth_instances(
    n: int, min_girth: int, count: int, seed: int, attempts_per_instance: int = 60
) -> list[Graph]:
    """``count`` connected graphs on <= n vertices, girth >= min_girth,
    minimum degree >= 2; deterministic per seed.

    Raises GenerationBudgetError when the attempt budget runs out, which is
    the expected outcome for unreachable parameter combinations (for example
    a required cycle longer than the vertex budget allows).
    """
    if min_girth < 3:
        raise ValueError("min_girth must be at least 3")
    if n < 3 or count < 1:
        raise ValueError("need n >= 3 and count >= 1")
    rng = random.Random(seed)
    out: list[Graph] = []
    budget = count * attempts_per_instance
    attempts = 0
    while len(out) < count:
        if attempts >= budget:
            raise GenerationBudgetError(
                f"generated {len(out)} of {count} instances in {attempts} attempts"
                f" (n={n}, min_girth={min_girth})"
            )
        attempts += 1
        candidates = list(combinations(range(n), 2))
        rng.shuffle(candidates)
        adj: list[set[int]] = [set() for _ in range(n)]
        edges: set[tuple[int, int]] = set()
        for u, v in candidates:
            # adding uv closes a cycle of length dist(u,v) + 1
            if _bfs_distance(adj, u, v, min_girth - 1) >= min_girth - 1:
                adj[u].add(v)
                adj[v].add(u)
                edges.add((u, v))
        g = _two_core_component(n, edges)
        if g is None:
            continue
        gi = girth(g)
        if gi < min_girth:
            raise AssertionError("girth rejection failed")
        out.append(g)
    return out
