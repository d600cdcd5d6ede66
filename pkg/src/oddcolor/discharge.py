"""Exact discharging over an embedded instance.

Initial charges are deg(v) - 4 per vertex and leng(f) - 4 per face, kept as
integer twelfths so the transfer amounts 1/4, 1/3, 1/2 stay exact.  The
eight transfer rules all read the static embedded graph (one simultaneous
batch); R3 in particular fires on a (face, 3-face, edge) triple exactly when
R2's predicate on that triple is false, so the two are mutually exclusive by
construction.

Rule incidences are counted with multiplicity along boundary walks: a
3-vertex visited twice by the same long face receives the R1 transfer twice.
That convention keeps the ledger conservation exact even on embeddings whose
face boundaries are not cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, RSet, hypothesis_check, is_r_relaxed
from .embedding import EmbeddedGraph, embed_search, face_adjacency
from .audit import AuditReport, audit_graph, full_audit

Element = tuple[str, int]  # ("v", vertex) or ("f", face index)

RULE_TWELFTHS = {
    "R1": 6,
    "R2": 6,
    "R3": 6,
    "R4": 3,
    "R5": 3,
    "R6": 3,
    "R7": 6,
    "R8": 4,
}


def _fmt_element(x: Element) -> str:
    return f"{x[0]}{x[1]}"


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Element
    target: Element
    amount_twelfths: int
    via: tuple[int, int] | None = None  # edge endpoints, for rules phrased "via ab"
    witness: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if RULE_TWELFTHS[self.rule] != self.amount_twelfths:
            raise ValueError(f"{self.rule} must move {RULE_TWELFTHS[self.rule]} twelfths")

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "from": _fmt_element(self.source),
            "to": _fmt_element(self.target),
            "amount_twelfths": self.amount_twelfths,
        }
        if self.via is not None:
            out["via"] = list(self.via)
        if self.witness:
            out["witness"] = self.witness
        return out


def initial_charges(e: EmbeddedGraph) -> dict[Element, int]:
    """deg(v)-4 and leng(f)-4, in twelfths."""
    charges: dict[Element, int] = {}
    for v in range(e.graph.n):
        charges[("v", v)] = 12 * (e.graph.degree(v) - 4)
    for fi, f in enumerate(e.faces):
        charges[("f", fi)] = 12 * (f.length - 4)
    return charges


def generate_transfers(e: EmbeddedGraph, r: RSet) -> tuple[Transfer, ...]:
    """The complete transfer multiset mandated by rules R1-R8."""
    g = e.graph
    faces = e.faces
    lengths = [f.length for f in faces]
    vsets = [f.vertex_set() for f in faces]
    esets = [f.edge_set() for f in faces]
    deg = [g.degree(v) for v in range(g.n)]
    relaxed = [is_r_relaxed(v, g, r) for v in range(g.n)]
    adjacency = face_adjacency(e)
    three_faces = [fi for fi, L in enumerate(lengths) if L == 3]

    transfers: list[Transfer] = []

    # R1: every long face pays each degree-3 corner on its walk
    for fi, f in enumerate(faces):
        if lengths[fi] < 5:
            continue
        for pos, (v, _) in enumerate(f.darts):
            if deg[v] == 3:
                transfers.append(
                    Transfer("R1", ("f", fi), ("v", v), 6, None, {"corner": pos})
                )

    # R2/R3/R4: a long face pays a triangle across a shared edge
    for ei, (a, b) in enumerate(g.edges):
        fa, fb = e.side_faces(ei)
        if fa == fb:
            continue
        for f, fp in ((fa, fb), (fb, fa)):
            if lengths[f] < 5 or lengths[fp] != 3:
                continue
            if deg[a] == 4 and deg[b] == 4:
                # the two ends play different roles; try both labelings
                def walk_edge_to_nonrelaxed(end):
                    for ej in sorted(esets[f]):
                        if ej == ei:
                            continue
                        p, q = g.edges[ej]
                        if end not in (p, q):
                            continue
                        x = q if p == end else p
                        if not relaxed[x]:
                            return ej, x
                    return None

                def outside_nonrelaxed(end):
                    cands = sorted(
                        w for w in g.adj[end] if w not in vsets[fp] and not relaxed[w]
                    )
                    return cands[0] if cands else None

                fired = None
                for aa, bb in ((a, b), (b, a)):
                    h1 = walk_edge_to_nonrelaxed(aa)
                    h2 = outside_nonrelaxed(bb)
                    if h1 is not None and h2 is not None:
                        fired = (aa, bb, h1, h2)
                        break
                if fired is not None:
                    aa, bb, (ej, x), wv = fired
                    transfers.append(
                        Transfer(
                            "R2", ("f", f), ("f", fp), 6, (a, b),
                            {
                                "role_a": aa,
                                "role_b": bb,
                                "edge_at_a": list(g.edges[ej]),
                                "outside_at_b": wv,
                            },
                        )
                    )
                else:
                    transfers.append(
                        Transfer("R3", ("f", f), ("f", fp), 6, (a, b), {}),
                    )
            elif min(deg[a], deg[b]) == 4 and max(deg[a], deg[b]) >= 5:
                transfers.append(Transfer("R4", ("f", f), ("f", fp), 3, (a, b), {}))

    # R5: a (>=6)-face props up a 5-face across a 3/4-degree edge
    for ei, (a, b) in enumerate(g.edges):
        fa, fb = e.side_faces(ei)
        if fa == fb:
            continue
        for f, fp in ((fa, fb), (fb, fa)):
            if lengths[f] < 6 or lengths[fp] != 5:
                continue
            if sorted((deg[a], deg[b])) != [3, 4]:
                continue
            uniques = []
            for vv in (a, b):
                cands = sorted((g.adj[vv] & vsets[fp]) - {a, b})
                if len(cands) == 1 and relaxed[cands[0]]:
                    uniques.append(cands[0])
            if len(uniques) == 2:
                transfers.append(
                    Transfer("R5", ("f", f), ("f", fp), 3, (a, b), {"unique_relaxed": uniques})
                )

    # R6: a (>=6)-face reaches a second 5-face two steps away
    for fi, f in enumerate(faces):
        if lengths[fi] < 6:
            continue
        for v in sorted(vsets[fi]):
            if deg[v] != 4:
                continue
            for ei in sorted(esets[fi]):
                if v not in g.edges[ei]:
                    continue
                a_, b_ = g.edges[ei]
                u = b_ if a_ == v else a_
                if relaxed[u]:
                    continue
                sa, sb = e.side_faces(ei)
                if sa == sb:
                    continue
                fp = sb if sa == fi else sa
                if lengths[fp] != 5:
                    continue
                for fpp in range(len(faces)):
                    if fpp in (fi, fp) or lengths[fpp] != 5:
                        continue
                    key = (fp, fpp) if fp <= fpp else (fpp, fp)
                    shared = sorted(adjacency.get(key, ()))
                    if len(shared) != 1 or v not in g.edges[shared[0]]:
                        continue
                    m = sorted(g.adj[v] & vsets[fpp])
                    if len(m) != 2 or any(deg[w] != 3 for w in m):
                        continue
                    if not any(
                        lengths[ft] == 3
                        and adjacency.get((min(ft, fpp), max(ft, fpp)))
                        for ft in three_faces
                        if ft != fpp
                    ):
                        continue
                    ep = shared[0]
                    transfers.append(
                        Transfer(
                            "R6", ("f", fi), ("f", fpp), 3, tuple(g.edges[ep]),
                            {
                                "vertex": v,
                                "edge_e": list(g.edges[ei]),
                                "five_face": fp,
                                "degree_3_neighbors": m,
                            },
                        )
                    )

    # R7: big vertices pay their triangles
    corner_faces: list[list[tuple[int, int, int, int]]] = [[] for _ in range(g.n)]
    for fi, f in enumerate(faces):
        for v, arr, dep in f.corners():
            corner_faces[v].append((fi, arr, dep, len(corner_faces[v])))
    for v in range(g.n):
        if deg[v] < 5:
            continue
        for fi, _, _, _ in corner_faces[v]:
            if lengths[fi] == 3:
                transfers.append(Transfer("R7", ("v", v), ("f", fi), 6, None, {}))

    # R8: (>=6)-vertices pay 5-face corners whose flanking edges avoid triangles
    def on_triangle(ei: int) -> bool:
        sa, sb = e.side_faces(ei)
        return lengths[sa] == 3 or lengths[sb] == 3

    for v in range(g.n):
        if deg[v] < 6:
            continue
        for fi, arr, dep, k in corner_faces[v]:
            if lengths[fi] != 5:
                continue
            if not on_triangle(arr) and not on_triangle(dep):
                transfers.append(
                    Transfer("R8", ("v", v), ("f", fi), 4, None, {"corner": k})
                )

    transfers.sort(key=lambda t: (t.rule, t.source, t.target, t.via or (), repr(t.witness)))
    return tuple(transfers)


@dataclass(frozen=True)
class ChargeLedger:
    """Initial charges, the applied transfers, and the settled result."""

    initial: dict[Element, int]
    transfers: tuple[Transfer, ...]
    final: dict[Element, int]

    @property
    def total_twelfths(self) -> int:
        return sum(self.final.values())

    def to_json(self) -> dict:
        return {
            "initial": {_fmt_element(k): v for k, v in sorted(self.initial.items())},
            "transfers": [t.to_json() for t in self.transfers],
            "final": {_fmt_element(k): v for k, v in sorted(self.final.items())},
            "total_twelfths": self.total_twelfths,
        }


def settle(e: EmbeddedGraph, r: RSet) -> ChargeLedger:
    """Apply all rules and return the exact ledger; conservation is checked."""
    init = initial_charges(e)
    transfers = generate_transfers(e, r)
    final = dict(init)
    for t in transfers:
        final[t.source] -= t.amount_twelfths
        final[t.target] += t.amount_twelfths
    if sum(final.values()) != sum(init.values()):
        raise AssertionError("charge conservation failed")
    return ChargeLedger(init, transfers, final)


def euler_identity_twelfths(e: EmbeddedGraph) -> int:
    """-4(|V| - |E| + |F|), in twelfths: the exact total initial charge."""
    return 12 * (-4) * (e.graph.n - len(e.graph.edges) + len(e.faces))


def charge_str(twelfths: int) -> str:
    return str(Fraction(twelfths, 12))


@dataclass(frozen=True)
class ChargeReport:
    total_twelfths: int
    negatives: tuple[tuple[Element, int], ...]
    audits_hold: bool
    contradiction: bool
    explained: tuple[tuple[str, tuple[str, ...]], ...]  # element -> violated lemmas naming it

    def to_json(self) -> dict:
        return {
            "total_twelfths": self.total_twelfths,
            "negatives": [
                {"element": _fmt_element(el), "twelfths": tw, "charge": charge_str(tw)}
                for el, tw in self.negatives
            ],
            "audits_hold": self.audits_hold,
            "contradiction": self.contradiction,
            "explained_by": [
                {"element": el, "lemmas": list(ls)} for el, ls in self.explained
            ],
        }


def _mentions(witness: dict, element: Element) -> bool:
    kind, idx = element
    vertex_keys = (
        "vertex", "x", "y", "z", "non_relaxed_vertex", "degree_3_end",
        "relaxed_neighbors", "neighbors", "prime_neighbors",
    )
    face_keys = ("three_face", "four_face", "face_a", "face_b", "faces",
                 "third_face", "face_with_primes", "other_face")
    keys = vertex_keys if kind == "v" else face_keys
    for k in keys:
        val = witness.get(k)
        if val == idx or (isinstance(val, (list, tuple)) and idx in val):
            return True
    return False


def charge_report(ledger: ChargeLedger, audit: AuditReport) -> ChargeReport:
    """Negative final charges plus whether the global contradiction pattern
    (all audits hold, no negatives, positive total) materializes.

    On instances that are not counterexample-shaped, negatives are
    informational and each is paired with the audit violations naming it.
    """
    negatives = tuple(
        (el, tw) for el, tw in sorted(ledger.final.items()) if tw < 0
    )
    audits_hold = audit.counterexample_shaped
    total = ledger.total_twelfths
    contradiction = audits_hold and not negatives and total > 0
    explained = []
    for el, _ in negatives:
        lemmas = tuple(
            entry.lemma
            for entry in audit.violated()
            if any(_mentions(w, el) for w in entry.witnesses)
        )
        explained.append((_fmt_element(el), lemmas))
    return ChargeReport(total, negatives, audits_hold, contradiction, tuple(explained))


# -- end-to-end pipeline -------------------------------------------------------


@dataclass(frozen=True)
class HuntReport:
    """Result of hypothesis -> embedding -> audit -> charges on one instance."""

    eliminated_at: str | None  # None would mean a counterexample survived
    hypothesis: object
    embedding_found: bool
    euler_genus: int | None
    audit: AuditReport | None
    ledger: ChargeLedger | None
    charges: ChargeReport | None

    def to_json(self) -> dict:
        return {
            "eliminated_at": self.eliminated_at,
            "hypothesis": self.hypothesis.to_json(),
            "embedding_found": self.embedding_found,
            "euler_genus": self.euler_genus,
            "audit": self.audit.to_json() if self.audit else None,
            "ledger": self.ledger.to_json() if self.ledger else None,
            "charges": self.charges.to_json() if self.charges else None,
        }


def hunt(g: Graph, r: RSet, max_genus: int = 2) -> HuntReport:
    """Run a candidate instance through the whole elimination pipeline.

    Reports the first stage that rules the instance out as a potential
    counterexample; by the main theorem every instance is ruled out
    somewhere, so ``eliminated_at`` is never None on genus-bounded inputs.
    """
    hyp = hypothesis_check(g, r)
    if not hyp.passes:
        return HuntReport("hypothesis", hyp, False, None, None, None, None)
    emb = embed_search(g, max_genus)
    if emb is None:
        return HuntReport("embedding", hyp, False, None, None, None, None)
    audit = full_audit(emb, r)
    ledger = settle(emb, r)
    charges = charge_report(ledger, audit)
    if not audit.counterexample_shaped:
        stage = "audit"
    elif charges.negatives or charges.total_twelfths <= 0:
        stage = "charges"
    else:
        stage = None  # contradiction: would certify a counterexample
    return HuntReport(
        stage, hyp, True, emb.euler_genus, audit, ledger, charges
    )
