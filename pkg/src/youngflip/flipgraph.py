"""The 1-skeleton of the associahedron on Young diagrams, and graph export.

``build_flip_graph(n)`` has vertex set ``Y(n)`` and an edge for every row
flip; it is the 1-skeleton of ``As^{n-1}``.  Faces of higher dimension are
counted through partial triangulations (non-crossing diagonal sets).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, ParseError, UnknownFormat
from .partitions import (
    Partition,
    enumerate_yn,
    flip_neighbors,
    format_partition,
    parse_partition,
    transpose,
)
from .triangulation import crosses

MAX_FLIP_GRAPH_N = 9
MAX_FACES_N = 7

SCHEMA = "youngflip/graph@1"
FORMATS = ("edge-list", "dot-like", "adjacency-json")


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class FlipGraph:
    n: int
    vertices: tuple[Partition, ...]
    edges: frozenset[tuple[Partition, Partition]] = field(repr=False)

    def neighbors(self, p: Partition) -> set[Partition]:
        out = set()
        for a, b in self.edges:
            if a == p:
                out.add(b)
            elif b == p:
                out.add(a)
        return out

    def adjacency(self) -> dict[Partition, set[Partition]]:
        adj: dict[Partition, set[Partition]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> dict[Partition, int]:
        return {v: len(nb) for v, nb in self.adjacency().items()}

    def is_connected(self) -> bool:
        return _connected(self.vertices, self.adjacency())


def _edge(a, b):
    return (a, b) if a <= b else (b, a)


def _connected(vertices: Sequence[Hashable], adj: dict) -> bool:
    if not vertices:
        return True
    seen = {vertices[0]}
    todo = deque([vertices[0]])
    while todo:
        v = todo.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(vertices)


def build_flip_graph(n: int) -> FlipGraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_FLIP_GRAPH_N:
        raise BudgetExceeded(f"flip graphs are limited to n <= {MAX_FLIP_GRAPH_N}")
    return _build_flip_graph(n)


@lru_cache(maxsize=None)
def _build_flip_graph(n: int) -> FlipGraph:
    vertices = tuple(sorted(enumerate_yn(n)))
    edges = set()
    for p in vertices:
        for q in flip_neighbors(p, n):
            if q != p:
                edges.add(_edge(p, q))
    return FlipGraph(n, vertices, frozenset(edges))


def embedding_check(n: int) -> bool:
    """Is the flip graph of ``Y(n)`` the induced subgraph of that of ``Y(n+1)``?"""
    if n > MAX_FLIP_GRAPH_N - 1:
        raise BudgetExceeded(f"embedding check limited to n <= {MAX_FLIP_GRAPH_N - 1}")
    small = build_flip_graph(n)
    big = build_flip_graph(n + 1)
    verts = set(small.vertices)
    if not verts <= set(big.vertices):
        return False
    induced = {e for e in big.edges if e[0] in verts and e[1] in verts}
    return induced == set(small.edges)


def diagonals_of(ngon: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(ngon) for b in range(a + 2, ngon) if (a, b) != (0, ngon - 1)]


def face_numbers(n: int) -> list[int]:
    """``[f_0, ..., f_n]`` for ``As^n``: ``f_k`` counts sets of ``n - k``
    pairwise non-crossing diagonals of the ``(n + 3)``-gon."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_FACES_N:
        raise BudgetExceeded(f"face counting limited to n <= {MAX_FACES_N}")
    diags = diagonals_of(n + 3)
    cross = np.zeros(len(diags), dtype=np.int64)
    for i, d in enumerate(diags):
        for j, e in enumerate(diags):
            if crosses(d, e):
                cross[i] |= np.int64(1) << np.int64(j)
    by_size = _kernels.count_independent(cross, n)
    return [int(by_size[n - k]) for k in range(n + 1)]


def count_faces(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return face_numbers(n)[k]


def transpose_edge_defect(n: int) -> set[tuple[Partition, Partition]]:
    """Edges whose transposed endpoints are not joined by a flip."""
    if n > MAX_FACES_N:
        raise BudgetExceeded(f"defect scan limited to n <= {MAX_FACES_N}")
    g = build_flip_graph(n)
    return {(p, q) for p, q in g.edges if _edge(transpose(p), transpose(q)) not in g.edges}


# ---------------------------------------------------------------------------
# export


@dataclass(frozen=True)
class LabeledGraph:
    """Format-neutral view used by every exporter."""

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    meta: dict = field(default_factory=dict)


def labeled(
    name: str,
    vertices: Iterable,
    edges: Iterable[tuple],
    label: Callable[[object], str],
    sort_key: Callable | None = None,
    meta: dict | None = None,
) -> LabeledGraph:
    """Relabel a graph and sort it deterministically.

    Vertices are ordered by ``sort_key`` applied to the original objects
    (the label string if omitted); edges follow the vertex order.
    """
    vs = list(vertices)
    key = sort_key or label
    vs.sort(key=key)
    index = {v: i for i, v in enumerate(vs)}
    es = []
    for a, b in edges:
        i, j = index[a], index[b]
        if i > j:
            i, j = j, i
        es.append((i, j))
    es.sort()
    names = [label(v) for v in vs]
    return LabeledGraph(name, tuple(names), tuple((names[i], names[j]) for i, j in es), dict(meta or {}))


def flip_graph_labeled(g: FlipGraph) -> LabeledGraph:
    return labeled(
        f"flip_graph_n{g.n}",
        g.vertices,
        g.edges,
        format_partition,
        sort_key=lambda p: p,
        meta={"kind": "flip-graph", "n": g.n},
    )


def export_graph(g: FlipGraph | LabeledGraph, fmt: str) -> bytes:
    lg = flip_graph_labeled(g) if isinstance(g, FlipGraph) else g
    if fmt == "edge-list":
        lines = [f"# {lg.name} vertices={len(lg.vertices)} edges={len(lg.edges)}"]
        lines += [f"{a} -- {b}" for a, b in lg.edges]
        return ("\n".join(lines) + "\n").encode()
    if fmt == "dot-like":
        lines = [f"graph {lg.name} {{"]
        lines += [f'  "{v}";' for v in lg.vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in lg.edges]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "adjacency-json":
        adj: dict[str, list[str]] = {v: [] for v in lg.vertices}
        for a, b in lg.edges:
            adj[a].append(b)
            adj[b].append(a)
        order = {v: i for i, v in enumerate(lg.vertices)}
        doc = {
            "schema": SCHEMA,
            "name": lg.name,
            "meta": lg.meta,
            "vertices": list(lg.vertices),
            "adjacency": {v: sorted(nb, key=order.__getitem__) for v, nb in adj.items()},
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    raise UnknownFormat(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def parse_adjacency_json(data: bytes | str) -> LabeledGraph:
    doc = json.loads(data)
    if doc.get("schema") != SCHEMA:
        raise ParseError(f"unexpected schema {doc.get('schema')!r}")
    vertices = tuple(doc["vertices"])
    order = {v: i for i, v in enumerate(vertices)}
    edges = set()
    for v, nbs in doc["adjacency"].items():
        for w in nbs:
            a, b = sorted((v, w), key=order.__getitem__)
            edges.add((a, b))
    es = tuple(sorted(edges, key=lambda e: (order[e[0]], order[e[1]])))
    return LabeledGraph(doc["name"], vertices, es, doc.get("meta", {}))


def flip_graph_from_json(data: bytes | str) -> FlipGraph:
    lg = parse_adjacency_json(data)
    verts = tuple(parse_partition(v) for v in lg.vertices)
    edges = frozenset(_edge(parse_partition(a), parse_partition(b)) for a, b in lg.edges)
    return FlipGraph(int(lg.meta["n"]), verts, edges)
