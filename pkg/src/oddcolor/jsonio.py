"""Instance file schema and canonical JSON serialization.

An instance file is one JSON object carrying a graph ({"n", "edges", "R"}),
optionally extended with an embedding ("rotation" per vertex plus "signs"
per edge index) and a list-assignment block ("lists").  Edges are serialized
sorted lexicographically and R refers to positions in that edge list, which
keeps serialization deterministic and digests stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .graphs import Graph, RSet, r_set_from_indices
from .embedding import EmbeddedGraph, RotationSystem
from .coloring import Coloring, ListAssignment

SCHEMA_VERSION = 1


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def graph_to_json(g: Graph, r: RSet = frozenset()) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "R": sorted(g.edge_index(e) for e in r),
    }


def embedding_to_json(e: EmbeddedGraph, r: RSet = frozenset()) -> dict:
    out = graph_to_json(e.graph, r)
    out["rotation"] = {str(v): list(e.rotation.rotation[v]) for v in range(e.graph.n)}
    out["signs"] = list(e.rotation.signs)
    return out


def lists_to_json(lists: ListAssignment) -> dict:
    return {"lists": {str(v): sorted(lists[v]) for v in range(len(lists))}}


def coloring_to_json(c: Coloring) -> dict:
    return {"colors": {str(v): c[v] for v in sorted(c)}}


def coloring_from_json(obj: dict) -> Coloring:
    return {int(v): int(col) for v, col in obj["colors"].items()}


def faces_to_json(e: EmbeddedGraph) -> list[dict]:
    return [
        {"face": i, "length": f.length, "darts": [[v, ei] for v, ei in f.darts]}
        for i, f in enumerate(e.faces)
    ]


@dataclass(frozen=True)
class Instance:
    """A deserialized instance file."""

    graph: Graph
    r: RSet
    embedding: EmbeddedGraph | None
    lists: ListAssignment | None


def instance_from_json(obj: dict) -> Instance:
    if "schema" not in obj:
        raise ValueError("instance file lacks a schema version field")
    if obj["schema"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {obj['schema']}")
    g = Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    r = r_set_from_indices(g, obj.get("R", ()))
    emb = None
    if "rotation" in obj:
        rotation = [obj["rotation"][str(v)] for v in range(g.n)]
        signs = obj.get("signs")
        emb = EmbeddedGraph(g, RotationSystem(g, rotation, signs))
    lists = None
    if "lists" in obj:
        block = obj["lists"]
        if set(block) != {str(v) for v in range(g.n)}:
            raise ValueError("lists block must cover exactly the vertices")
        lists = ListAssignment(tuple(frozenset(block[str(v)]) for v in range(g.n)))
    return Instance(g, r, emb, lists)


def load_instance(path: str) -> tuple[Instance, str]:
    """Read an instance file; returns (instance, sha256 digest of the bytes)."""
    with open(path, "rb") as fh:
        data = fh.read()
    return instance_from_json(json.loads(data)), digest_bytes(data)


def dump_instance(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(obj))
        fh.write("\n")
