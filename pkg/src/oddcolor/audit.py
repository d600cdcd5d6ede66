"""Detectors for the structural configurations excluded from a minimal
counterexample.

Each lemma in the catalog states that some local configuration cannot occur;
the auditors here detect every occurrence exhaustively and report witnesses.
A graph (with embedding) passing all audits is "counterexample-shaped".
Detection only: the coloring-extension arguments behind the lemmas are not
re-executed.

Lemma identifiers L3.1..L3.16 index the catalog; L3.12 is the statement left
unnamed between the face lemmas, audited as "L3.12-unnamed".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, RSet, enumerate_cycles, is_r_relaxed, r_length
from .embedding import EmbeddedGraph, face_adjacency

LEMMA_STATEMENTS = {
    "L3.1": "the graph is connected",
    "L3.2": "every vertex has degree at least three",
    "L3.3": "no 3-vertex is adjacent to two or more relaxed vertices",
    "L3.4": "every 3-cycle has weighted length 5 and all its vertices relaxed",
    "L3.5": "no 3-vertex lies on a 3-cycle",
    "L3.6": "no relaxed 4-vertex has four relaxed neighbors",
    "L3.7": "no 4-vertex with two supported 3-vertex neighbors and a relaxed vertex elsewhere in its closed neighborhood",
    "L3.8": "no 4-vertex whose neighbors are all 3-vertices with outside relaxed support",
    "L3.9": "no adjacent 4-vertices each with two supported 3-vertex neighbors",
    "L3.10": "no two distinct 3-cycles share an edge",
    "L3.11": "an adjacent 3-face/4-face pair shares exactly one edge and has only relaxed vertices",
    "L3.12-unnamed": "the third face at a 4-vertex shared by a 3-face and a 4-face has length at least 5",
    "L3.13": "vertices on both of two 4-faces sharing exactly one edge have degree at least four",
    "L3.14": "two 5-faces sharing exactly one edge with a degree-3 end have a degree-4 neighbor across it",
    "L3.15": "a 3-vertex on two 5-faces is not on a 4-face",
    "L3.16": "some face at every 4-vertex is not a 4-face",
}

FACE_LEMMAS = ("L3.11", "L3.12-unnamed", "L3.13", "L3.14", "L3.15", "L3.16")


@dataclass(frozen=True)
class AuditEntry:
    lemma: str
    verdict: str  # "holds" | "violated" | "skipped"
    witnesses: tuple[dict, ...] = ()

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "statement": LEMMA_STATEMENTS[self.lemma],
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
        }


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]

    @property
    def counterexample_shaped(self) -> bool:
        return all(e.verdict != "violated" for e in self.entries)

    def violated(self) -> tuple[AuditEntry, ...]:
        return tuple(e for e in self.entries if e.verdict == "violated")

    def entry(self, lemma: str) -> AuditEntry:
        for e in self.entries:
            if e.lemma == lemma:
                return e
        raise KeyError(lemma)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def _entry(lemma: str, witnesses: list[dict]) -> AuditEntry:
    witnesses.sort(key=repr)
    return AuditEntry(lemma, "violated" if witnesses else "holds", tuple(witnesses))


# -- graph-only checks ---------------------------------------------------------


def check_degree_lemmas(g: Graph, r: RSet) -> list[AuditEntry]:
    comps = g.components()
    w1 = [] if len(comps) <= 1 else [{"components": comps}]
    w2 = [
        {"vertex": v, "degree": g.degree(v)}
        for v in range(g.n)
        if g.degree(v) <= 2
    ]
    return [_entry("L3.1", w1), _entry("L3.2", w2)]


def check_relaxed_neighborhoods(g: Graph, r: RSet) -> list[AuditEntry]:
    relaxed = [is_r_relaxed(v, g, r) for v in range(g.n)]
    w3 = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        rn = sorted(u for u in g.adj[v] if relaxed[u])
        if len(rn) >= 2:
            w3.append({"vertex": v, "relaxed_neighbors": rn})
    w6 = []
    for v in range(g.n):
        if g.degree(v) == 4 and relaxed[v] and all(relaxed[u] for u in g.adj[v]):
            w6.append({"vertex": v, "neighbors": sorted(g.adj[v])})
    return [_entry("L3.3", w3), _entry("L3.6", w6)]


def check_triangle_lemmas(g: Graph, r: RSet) -> list[AuditEntry]:
    triangles = [c for c in enumerate_cycles(g, 3) if len(c) == 3]
    w4 = []
    for t in triangles:
        L = r_length(t, r)
        if L != 5:
            w4.append({"cycle": list(t.vertices), "r_length": L})
        for v in t.vertices:
            if not is_r_relaxed(v, g, r):
                w4.append({"cycle": list(t.vertices), "non_relaxed_vertex": v})
    w5 = [
        {"cycle": list(t.vertices), "vertex": v}
        for t in triangles
        for v in t.vertices
        if g.degree(v) == 3
    ]
    w10 = []
    for t1, t2 in combinations(triangles, 2):
        shared = t1.edge_set & t2.edge_set
        if shared:
            w10.append(
                {
                    "cycle_a": list(t1.vertices),
                    "cycle_b": list(t2.vertices),
                    "shared_edges": sorted(map(list, shared)),
                }
            )
    return [_entry("L3.4", w4), _entry("L3.5", w5), _entry("L3.10", w10)]


def check_four_vertex_configs(g: Graph, r: RSet) -> list[AuditEntry]:
    relaxed = [is_r_relaxed(v, g, r) for v in range(g.n)]

    def outside_support(u: int, excluding: int) -> int | None:
        """Smallest relaxed vertex in N(u) - {excluding}, if any."""
        cands = sorted(w for w in g.adj[u] if w != excluding and relaxed[w])
        return cands[0] if cands else None

    w7 = []
    for x in range(g.n):
        if g.degree(x) != 4:
            continue
        supported = {
            u: outside_support(u, x)
            for u in sorted(g.adj[x])
            if g.degree(u) == 3 and outside_support(u, x) is not None
        }
        for y, z in combinations(sorted(supported), 2):
            closed = sorted((set(g.adj[x]) | {x}) - {y, z})
            side = [w for w in closed if relaxed[w]]
            if side:
                w7.append(
                    {
                        "x": x,
                        "y": y,
                        "z": z,
                        "support_y": supported[y],
                        "support_z": supported[z],
                        "relaxed_in_closed_nbhd": side[0],
                    }
                )

    w8 = []
    for v in range(g.n):
        if g.degree(v) != 4:
            continue
        support = {}
        for u in sorted(g.adj[v]):
            if g.degree(u) != 3:
                break
            s = outside_support(u, v)
            if s is None:
                break
            support[u] = s
        else:
            w8.append({"vertex": v, "support": support})

    w9 = []
    for x, y in g.edges:
        if g.degree(x) != 4 or g.degree(y) != 4:
            continue
        cx = [u for u in sorted(g.adj[x]) if g.degree(u) == 3 and outside_support(u, x) is not None]
        cy = [u for u in sorted(g.adj[y]) if g.degree(u) == 3 and outside_support(u, y) is not None]
        if len(cx) >= 2 and len(cy) >= 2:
            w9.append(
                {
                    "x": x,
                    "y": y,
                    "x_children": cx[:2],
                    "y_children": cy[:2],
                }
            )
    return [_entry("L3.7", w7), _entry("L3.8", w8), _entry("L3.9", w9)]


# -- face checks ---------------------------------------------------------------


def check_face_lemmas(e: EmbeddedGraph, r: RSet) -> list[AuditEntry]:
    g = e.graph
    faces = e.faces
    lengths = [f.length for f in faces]
    vsets = [f.vertex_set() for f in faces]
    adjacency = face_adjacency(e)
    relaxed = [is_r_relaxed(v, g, r) for v in range(g.n)]

    pairs_sharing = {
        (i, j): sorted(edges) for (i, j), edges in adjacency.items() if i != j
    }

    w11 = []
    for (i, j), shared in pairs_sharing.items():
        li, lj = lengths[i], lengths[j]
        if {li, lj} != {3, 4}:
            continue
        t, q = (i, j) if li == 3 else (j, i)
        if len(shared) != 1:
            w11.append({"three_face": t, "four_face": q, "shared_edges_count": len(shared)})
        for v in sorted(vsets[t] | vsets[q]):
            if not relaxed[v]:
                w11.append({"three_face": t, "four_face": q, "non_relaxed_vertex": v})

    w12 = []
    for (i, j), shared in pairs_sharing.items():
        li, lj = lengths[i], lengths[j]
        if {li, lj} != {3, 4} or len(shared) != 1:
            continue
        t, q = (i, j) if li == 3 else (j, i)
        q_edges = faces[q].edge_set()
        for v in sorted(vsets[t] & vsets[q]):
            if g.degree(v) != 4:
                continue
            for ei in sorted(faces[t].edge_set()):
                if v not in g.edges[ei] or ei in q_edges:
                    continue
                a, b = e.side_faces(ei)
                other = b if a == t else a
                if other == t:
                    continue
                if lengths[other] < 5:
                    w12.append(
                        {
                            "three_face": t,
                            "four_face": q,
                            "vertex": v,
                            "edge": list(g.edges[ei]),
                            "third_face": other,
                            "third_face_length": lengths[other],
                        }
                    )

    w13 = []
    for (i, j), shared in pairs_sharing.items():
        if lengths[i] == 4 and lengths[j] == 4 and len(shared) == 1:
            for v in sorted(vsets[i] & vsets[j]):
                if g.degree(v) <= 3:
                    w13.append({"face_a": i, "face_b": j, "vertex": v, "degree": g.degree(v)})

    w14 = []
    for (i, j), shared in pairs_sharing.items():
        if lengths[i] != 5 or lengths[j] != 5 or len(shared) != 1:
            continue
        u, v = g.edges[shared[0]]
        for f1, f2 in ((i, j), (j, i)):
            for a1, a2 in ((u, v), (v, u)):
                if g.degree(a1) != 3:
                    continue
                cand1 = sorted((g.adj[a1] & vsets[f2]) - {a2})
                cand2 = sorted((g.adj[a2] & vsets[f2]) - {a1})
                if len(cand1) != 1 or len(cand2) != 1:
                    continue  # "the neighbor" is only defined when unique
                if g.degree(cand1[0]) <= 3 and g.degree(cand2[0]) <= 3:
                    w14.append(
                        {
                            "face_with_primes": f2,
                            "other_face": f1,
                            "shared_edge": [u, v],
                            "degree_3_end": a1,
                            "prime_neighbors": [cand1[0], cand2[0]],
                        }
                    )

    corner_faces: list[list[int]] = [[] for _ in range(g.n)]
    for fi, f in enumerate(faces):
        for tail in f.tails():
            corner_faces[tail].append(fi)

    w15 = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        ls = sorted(lengths[fi] for fi in corner_faces[v])
        if ls == [4, 5, 5]:
            w15.append({"vertex": v, "faces": sorted(corner_faces[v])})

    w16 = []
    for v in range(g.n):
        if g.degree(v) != 4:
            continue
        if all(lengths[fi] == 4 for fi in corner_faces[v]):
            w16.append({"vertex": v, "faces": sorted(corner_faces[v])})

    return [
        _entry("L3.11", w11),
        _entry("L3.12-unnamed", w12),
        _entry("L3.13", w13),
        _entry("L3.14", w14),
        _entry("L3.15", w15),
        _entry("L3.16", w16),
    ]


def audit_graph(g: Graph, r: RSet) -> AuditReport:
    """All graph-level checks; face checks are reported as skipped."""
    entries = (
        check_degree_lemmas(g, r)
        + check_relaxed_neighborhoods(g, r)
        + check_triangle_lemmas(g, r)
        + check_four_vertex_configs(g, r)
        + [AuditEntry(lemma, "skipped") for lemma in FACE_LEMMAS]
    )
    return AuditReport(tuple(sorted(entries, key=lambda e: _lemma_key(e.lemma))))


def full_audit(e: EmbeddedGraph, r: RSet) -> AuditReport:
    """Union of every structural check against an embedded instance."""
    g = e.graph
    entries = (
        check_degree_lemmas(g, r)
        + check_relaxed_neighborhoods(g, r)
        + check_triangle_lemmas(g, r)
        + check_four_vertex_configs(g, r)
        + check_face_lemmas(e, r)
    )
    return AuditReport(tuple(sorted(entries, key=lambda e: _lemma_key(e.lemma))))


def _lemma_key(lemma: str) -> tuple[int, int]:
    num = lemma.split(".")[1].split("-")[0]
    return (3, int(num))
