"""Combinatorial maps: rotation systems with edge signatures.

An embedding of a connected simple graph is described by a cyclic order of
neighbors around every vertex plus a sign in {+1, -1} per edge; -1 marks
orientation-reversing edges, which is what makes non-orientable surfaces
(projective plane, Klein bottle) expressible with a single formalism.

Faces are traced with the flag construction: every (vertex, edge) incidence
carries two flags, one per corner side, and the two involutions "turn the
corner" and "cross the edge" generate orbits that are exactly the face
boundary walks.  Each edge contributes two darts overall and every dart lands
in exactly one face walk, so the face lengths always sum to 2|E| and the
Euler genus 2 - (|V| - |E| + |F|) is well defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, combinations
from typing import Sequence

from .graphs import Graph, girth

Dart = tuple[int, int]  # (tail vertex, edge index): one traversal step of a walk


class RotationSystem:
    """Per-vertex cyclic neighbor order plus a sign per edge index."""

    __slots__ = ("rotation", "signs")

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]], signs: Sequence[int] | None = None):
        if len(rotation) != graph.n:
            raise ValueError("rotation must list every vertex")
        rot = []
        for v in range(graph.n):
            order = tuple(int(w) for w in rotation[v])
            if sorted(order) != sorted(graph.adj[v]):
                raise ValueError(f"rotation at vertex {v} is not a permutation of its neighbors")
            rot.append(order)
        if signs is None:
            signs = (1,) * len(graph.edges)
        signs = tuple(int(s) for s in signs)
        if len(signs) != len(graph.edges) or any(s not in (-1, 1) for s in signs):
            raise ValueError("signs must be +1/-1, one per edge")
        self.rotation: tuple[tuple[int, ...], ...] = tuple(rot)
        self.signs: tuple[int, ...] = signs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RotationSystem)
            and self.rotation == other.rotation
            and self.signs == other.signs
        )

    def __hash__(self) -> int:
        return hash((self.rotation, self.signs))


def sorted_rotation(graph: Graph, signs: Sequence[int] | None = None) -> RotationSystem:
    """The canonical rotation listing neighbors in increasing order."""
    return RotationSystem(graph, [sorted(graph.adj[v]) for v in range(graph.n)], signs)


@dataclass(frozen=True)
class FaceWalk:
    """Boundary walk of one face, as a cyclic dart sequence.

    ``darts[i] = (v, e)`` traverses edge ``e`` away from tail ``v``; the walk
    is closed, so the head of step i is the tail of step i+1.  The corner at
    tail ``v`` of step i sits between the arrival edge of step i-1 and the
    departure edge of step i.
    """

    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def tails(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.darts)

    def walk_edges(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.darts)

    def edge_set(self) -> frozenset[int]:
        return frozenset(e for _, e in self.darts)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.darts)

    def corners(self) -> tuple[tuple[int, int, int], ...]:
        """(vertex, arrival edge, departure edge) per walk position."""
        ds = self.darts
        k = len(ds)
        return tuple((ds[i][0], ds[i - 1][1], ds[i][1]) for i in range(k))


def face_length(f: FaceWalk) -> int:
    """Dart count of the walk; an edge with both sides on f counts twice."""
    return f.length


def _canonical_walk(darts: list[Dart]) -> FaceWalk:
    # rotate so the lexicographically smallest dart leads; direction is
    # whatever the trace produced (deterministic)
    if not darts:
        return FaceWalk(())
    k = darts.index(min(darts))
    return FaceWalk(tuple(darts[k:] + darts[:k]))


def trace_faces(graph: Graph, rot: RotationSystem) -> tuple[FaceWalk, ...]:
    """Partition all darts into face boundary walks.

    The next-dart rule is the rotation successor, reflected on the far side
    of a -1 edge: concretely, flags (vertex, position, side) are advanced by
    alternating the corner involution with the edge-crossing involution.
    """
    if not graph.is_connected():
        raise ValueError("face tracing needs a connected graph")
    if graph.n == 1 and not graph.edges:
        return (FaceWalk(()),)

    pos_of = [
        {w: i for i, w in enumerate(rot.rotation[v])} for v in range(graph.n)
    ]

    def cross(v: int, p: int, s: int) -> tuple[int, int, int]:
        w = rot.rotation[v][p]
        e = graph.edge_index((v, w))
        s2 = s ^ 1 if rot.signs[e] == 1 else s
        return (w, pos_of[w][v], s2)

    def corner(v: int, p: int, s: int) -> tuple[int, int, int]:
        d = len(rot.rotation[v])
        if s == 1:
            return (v, (p + 1) % d, 0)
        return (v, (p - 1) % d, 1)

    seen: set[tuple[int, int, int]] = set()
    faces: list[FaceWalk] = []
    all_flags = [
        (v, p, s)
        for v in range(graph.n)
        for p in range(len(rot.rotation[v]))
        for s in (0, 1)
    ]
    for start in all_flags:
        if start in seen:
            continue
        walk: list[Dart] = []
        flag = start
        while True:
            seen.add(flag)
            v, p, _ = flag
            walk.append((v, graph.edge_index((v, rot.rotation[v][p]))))
            crossed = cross(*flag)
            seen.add(crossed)
            flag = corner(*crossed)
            if flag == start:
                break
        faces.append(_canonical_walk(walk))
    return tuple(faces)


class EmbeddedGraph:
    """A graph together with a rotation system and its traced faces."""

    __slots__ = ("graph", "rotation", "faces", "_side_faces")

    def __init__(self, graph: Graph, rotation: RotationSystem):
        self.graph = graph
        self.rotation = rotation
        self.faces: tuple[FaceWalk, ...] = trace_faces(graph, rotation)
        sides: list[list[int]] = [[] for _ in graph.edges]
        for fi, f in enumerate(self.faces):
            for e in f.walk_edges():
                sides[e].append(fi)
        # every edge has exactly two sides
        assert all(len(s) == 2 for s in sides)
        self._side_faces: tuple[tuple[int, int], ...] = tuple(
            (s[0], s[1]) for s in sides
        )

    @property
    def euler_genus(self) -> int:
        return 2 - (self.graph.n - len(self.graph.edges) + len(self.faces))

    def side_faces(self, e: int) -> tuple[int, int]:
        """The two faces carrying the sides of edge index ``e``."""
        return self._side_faces[e]

    def faces_at_vertex(self, v: int) -> list[int]:
        """Face index per corner of ``v``, with multiplicity (deg(v) corners)."""
        out = []
        for fi, f in enumerate(self.faces):
            out.extend(fi for tail in f.tails() if tail == v)
        return out

    def is_orientable(self) -> bool:
        # after contracting a spanning tree, orientability is the product of
        # signs over every cycle; equivalently no cycle has an odd number of
        # -1 edges
        n = self.graph.n
        if n == 0:
            return True
        mark: dict[int, int] = {0: 0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.graph.adj[u]:
                s = 0 if self.rotation.signs[self.graph.edge_index((u, w))] == 1 else 1
                if w not in mark:
                    mark[w] = mark[u] ^ s
                    stack.append(w)
                elif mark[w] != mark[u] ^ s:
                    return False
        return True


def euler_genus(e: EmbeddedGraph) -> int:
    """2 - (|V| - |E| + |F|) for a 2-cell embedding of a connected graph."""
    if not e.graph.is_connected():
        raise ValueError("Euler genus needs a connected graph")
    return e.euler_genus


def face_adjacency(e: EmbeddedGraph) -> dict[tuple[int, int], frozenset[int]]:
    """Shared edge sets per face pair.

    Keys are ordered pairs (i, j) with i <= j of face indices; i == j collects
    the edges whose two sides both lie on face i (self-incidence).
    """
    shared: dict[tuple[int, int], set[int]] = {}
    for ei, (a, b) in enumerate(e._side_faces):
        key = (a, b) if a <= b else (b, a)
        shared.setdefault(key, set()).add(ei)
    return {k: frozenset(v) for k, v in shared.items()}


# -- signature normalization -------------------------------------------------


def normalize_signatures(e: EmbeddedGraph) -> EmbeddedGraph:
    """Switch vertices so every spanning-tree edge gets sign +1.

    Switching at v reverses the rotation of v and flips the sign of all its
    incident edges; the face structure and genus are unchanged.
    """
    g = e.graph
    if g.n == 0:
        return e
    flip = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in sorted(g.adj[u]):
            if not seen[w]:
                seen[w] = True
                s = e.rotation.signs[g.edge_index((u, w))]
                flip[w] = flip[u] ^ (1 if s == -1 else 0)
                stack.append(w)
    new_signs = []
    for i, (u, v) in enumerate(g.edges):
        s = e.rotation.signs[i]
        if (flip[u] + flip[v]) % 2 == 1:
            s = -s
        new_signs.append(s)
    new_rot = [
        tuple(reversed(e.rotation.rotation[v])) if flip[v] else e.rotation.rotation[v]
        for v in range(g.n)
    ]
    return EmbeddedGraph(g, RotationSystem(g, new_rot, new_signs))


# -- embedding search --------------------------------------------------------


def _min_face_length(g: Graph) -> int:
    if len(g.edges) == 1:
        return 2
    if all(g.degree(v) >= 2 for v in range(g.n)):
        gi = girth(g)
        if gi is not math.inf:
            return int(gi)
    return 3


def _search_orientable(g: Graph, min_faces: int) -> RotationSystem | None:
    """Depth-first search over rotation systems, building faces dart by dart.

    Chooses the face successor of each dart directly; a face closes when the
    walk returns to its starting dart.  Prunes with the bound
    faces_done + remaining_darts // min_face_length < min_faces.
    Complete: every rotation system corresponds to exactly one search path.
    """
    n = g.n
    m = len(g.edges)
    darts: list[tuple[int, int]] = []
    for u, v in g.edges:
        darts.append((u, v))
        darts.append((v, u))
    darts.sort()
    idx = {d: i for i, d in enumerate(darts)}
    rev = [idx[(v, u)] for (u, v) in darts]
    head = [v for (_, v) in darts]
    tail = [u for (u, _) in darts]
    out_darts: list[list[int]] = [[] for _ in range(n)]
    for i, (u, _) in enumerate(darts):
        out_darts[u].append(i)
    deg = [g.degree(v) for v in range(n)]
    min_len = _min_face_length(g)

    # per-dart successor within its vertex rotation; chain bookkeeping keeps
    # each vertex a single cycle
    succ: list[int | None] = [None] * (2 * m)
    has_pred = [False] * (2 * m)
    chain_head = {i: i for i in range(2 * m)}  # tail dart -> head of its chain
    chain_tail = {i: i for i in range(2 * m)}  # head dart -> tail of its chain
    chain_size = {i: 1 for i in range(2 * m)}  # keyed by head dart

    def try_assign(a: int, b: int):
        """sigma(a) = b; returns an undo token or None if illegal."""
        if succ[a] is not None or has_pred[b]:
            return None
        ha = chain_head[a]
        if ha == b:
            if chain_size[b] != deg[tail[a]]:
                return None  # would close a proper sub-cycle of the rotation
            succ[a] = b
            has_pred[b] = True
            del chain_head[a]
            del chain_tail[b]
            return ("close", a, b)
        tb = chain_tail[b]
        succ[a] = b
        has_pred[b] = True
        del chain_head[a]
        del chain_tail[b]
        chain_head[tb] = ha
        chain_tail[ha] = tb
        old = chain_size.pop(b)
        chain_size[ha] += old
        return ("merge", a, b, tb, ha, old)

    def undo(token) -> None:
        if token[0] == "close":
            _, a, b = token
            succ[a] = None
            has_pred[b] = False
            chain_head[a] = b
            chain_tail[b] = a
        else:
            _, a, b, tb, ha, old = token
            succ[a] = None
            has_pred[b] = False
            chain_size[ha] -= old
            chain_size[b] = old
            chain_head[tb] = b
            chain_head[a] = ha
            chain_tail[b] = tb
            chain_tail[ha] = a

    used = [False] * (2 * m)
    total = 2 * m

    def dfs(faces_done: int, used_count: int, walk_start: int, walk_last: int) -> bool:
        if walk_last < 0:  # no open walk
            if used_count == total:
                return faces_done >= min_faces
            if faces_done + (total - used_count) // min_len < min_faces:
                return False
            d0 = next(i for i in range(total) if not used[i])
            used[d0] = True
            if dfs(faces_done, used_count + 1, d0, d0):
                return True
            used[d0] = False
            return False
        if faces_done + 1 + (total - used_count) // min_len < min_faces:
            return False
        a = rev[walk_last]  # arrived at head(walk_last); a is the return dart
        for nd in out_darts[head[walk_last]]:
            if nd == walk_start:
                token = try_assign(a, nd)
                if token is not None:
                    if dfs(faces_done + 1, used_count, -1, -1):
                        return True
                    undo(token)
            elif not used[nd]:
                token = try_assign(a, nd)
                if token is not None:
                    used[nd] = True
                    if dfs(faces_done, used_count + 1, walk_start, nd):
                        return True
                    used[nd] = False
                    undo(token)
        return False

    if not dfs(0, 0, -1, -1):
        return None
    rotation = []
    for v in range(n):
        if not out_darts[v]:
            rotation.append(())
            continue
        first = out_darts[v][0]
        order = [head[first]]
        d = succ[first]
        while d != first:
            order.append(head[d])
            d = succ[d]
        rotation.append(tuple(order))
    return RotationSystem(g, rotation, None)


def _vertex_rotation_candidates(g: Graph, halve_at: int | None) -> list[list[tuple[int, ...]]]:
    cands = []
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        if not nbrs:
            cands.append([()])
            continue
        first, rest = nbrs[0], nbrs[1:]
        orders = [(first,) + p for p in permutations(rest)]
        if v == halve_at:
            orders = [o for o in orders if o[1:] <= tuple(reversed(o[1:]))]
        cands.append(orders)
    return cands


def _search_signed(g: Graph, max_genus: int) -> RotationSystem | None:
    """Brute force over sign vectors (spanning tree normalized to +1) and
    rotations.  Only used for non-orientable targets; intended for small
    graphs."""
    m = len(g.edges)
    parent_edge: set[int] = set()
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in sorted(g.adj[u]):
            if not seen[w]:
                seen[w] = True
                parent_edge.add(g.edge_index((u, w)))
                stack.append(w)
    cotree = [i for i in range(m) if i not in parent_edge]
    halve_at = next((v for v in range(g.n) if g.degree(v) >= 3), None)
    cands = _vertex_rotation_candidates(g, halve_at)

    for weight in range(1, len(cotree) + 1):
        for neg in combinations(cotree, weight):
            signs = [1] * m
            for i in neg:
                signs[i] = -1
            signs_t = tuple(signs)

            # plain nested product over vertex rotations
            def product_dfs(v: int, chosen: list[tuple[int, ...]]) -> RotationSystem | None:
                if v == g.n:
                    rot = RotationSystem(g, chosen, signs_t)
                    emb = EmbeddedGraph(g, rot)
                    if emb.euler_genus <= max_genus:
                        return rot
                    return None
                for order in cands[v]:
                    found = product_dfs(v + 1, chosen + [order])
                    if found is not None:
                        return found
                return None

            found = product_dfs(0, [])
            if found is not None:
                return found
    return None


def embed_search(g: Graph, max_genus: int) -> EmbeddedGraph | None:
    """Find any 2-cell embedding of Euler genus <= max_genus, or None.

    Exhaustive and deterministic: the orientable case (all signs +1, which
    after spanning-tree normalization is exactly the orientable schemes) is
    searched first with face-driven pruning, then sign vectors by increasing
    weight.  Exponential in general; practical for small graphs.
    """
    if max_genus not in (0, 1, 2):
        raise ValueError("max_genus must be 0, 1, or 2")
    if not g.is_connected():
        raise ValueError("embed_search needs a connected graph")
    if g.n <= 1 or girth(g) is math.inf:
        # trees always embed in the sphere; any rotation works
        return EmbeddedGraph(g, sorted_rotation(g))
    # every embedding of any kind satisfies F <= 2E / (minimum face length),
    # so the genus of every embedding is at least E - V + 2 - that
    max_possible_faces = (2 * len(g.edges)) // _min_face_length(g)
    if len(g.edges) - g.n + 2 - max_possible_faces > max_genus:
        return None
    # orientable surfaces have even Euler genus
    orient_target = max_genus if max_genus % 2 == 0 else max_genus - 1
    min_faces = len(g.edges) - g.n + 2 - orient_target
    rot = _search_orientable(g, min_faces)
    if rot is not None:
        emb = EmbeddedGraph(g, rot)
        if emb.euler_genus > max_genus:
            raise AssertionError("orientable search returned a too-large genus")
        return emb
    if max_genus == 0:
        return None
    rot = _search_signed(g, max_genus)
    if rot is None:
        return None
    return EmbeddedGraph(g, rot)
