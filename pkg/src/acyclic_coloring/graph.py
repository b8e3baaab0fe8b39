"""Simple undirected graphs with the fixed vertex/edge orders the coloring
algorithm relies on.

Vertices are the integers ``0..n-1``. Edges are stored as ``(u, v)`` pairs
with ``u < v``, sorted lexicographically, and an edge id is the position of
the pair in that sorted list. Every deterministic choice made downstream
("largest edge", "ascending edge order", cycle comparison) is taken with
respect to these ids.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GraphError",
    "Graph",
    "Cycle",
    "parse_graph",
    "read_graph",
    "format_graph",
    "incident_edges",
    "other_endpoint",
    "generate_random_regular",
    "enumerate_cycles_upto",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "hypercube_graph",
    "induced_subgraph",
]


class GraphError(ValueError):
    """Malformed graph input or an infeasible generator request."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    Attributes
    ----------
    n : int
        Number of vertices.
    edges : tuple of (int, int)
        Edge endpoints, ``u < v``, in lexicographic order. Index = edge id.
    adjacency : tuple of tuple of int
        For each vertex, the ascending ids of its incident edges.
    max_degree : int
        Maximum vertex degree.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    max_degree: int
    _index: dict[tuple[int, int], int] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        normalized = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if min(u, v) < 0 or max(u, v) >= n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise GraphError(f"duplicate edge {key}")
            normalized.add(key)
        edges = tuple(sorted(normalized))
        adj: list[list[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            adj[u].append(eid)
            adj[v].append(eid)
        adjacency = tuple(tuple(a) for a in adj)
        max_degree = max((len(a) for a in adjacency), default=0)
        index = {pair: eid for eid, pair in enumerate(edges)}
        return cls(n, edges, adjacency, max_degree, index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of the edge ``{u, v}``, or None if absent."""
        return self._index.get((u, v) if u < v else (v, u))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def shared_vertex(self, e: int, f: int) -> int | None:
        a, b = self.edges[e]
        c, d = self.edges[f]
        if a == c or a == d:
            return a
        if b == c or b == d:
            return b
        return None

    def __len__(self) -> int:
        return self.n


def incident_edges(g: Graph, v: int) -> list[int]:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return list(g.adjacency[v])


def other_endpoint(g: Graph, e: int, v: int) -> int:
    u, w = g.edges[e]
    if v == u:
        return w
    if v == w:
        return u
    raise GraphError(f"vertex {v} is not an endpoint of edge {e} = {g.edges[e]}")


# ----------------------------------------------------------------------------
# Cycles
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Cycle:
    """A cycle in canonical form.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (indices mod
    length). The traversal starts at the smallest edge id and heads toward the
    smaller of that edge's two cycle neighbours, so two cycles are equal iff
    their edge sequences are equal.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @classmethod
    def from_vertices(cls, g: Graph, verts: Sequence[int]) -> Cycle:
        L = len(verts)
        if L < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if len(set(verts)) != L:
            raise GraphError(f"repeated vertex in cycle {list(verts)}")
        eids = []
        for i in range(L):
            eid = g.edge_id(verts[i], verts[(i + 1) % L])
            if eid is None:
                raise GraphError(f"no edge between {verts[i]} and {verts[(i + 1) % L]}")
            eids.append(eid)
        p = min(range(L), key=eids.__getitem__)
        if eids[(p + 1) % L] < eids[(p - 1) % L]:
            edges = tuple(eids[(p + i) % L] for i in range(L))
            vertices = tuple(verts[(p + i) % L] for i in range(L))
        else:
            edges = tuple(eids[(p - i) % L] for i in range(L))
            vertices = tuple(verts[(p + 1 - i) % L] for i in range(L))
        return cls(edges, vertices)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: object) -> bool:
        return e in self.edges

    @property
    def is_even(self) -> bool:
        return len(self.edges) % 2 == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Total order on cycles: fewer edges first, then edge-id sequence."""
        return (len(self.edges), self.edges)

    def position(self, e: int) -> int:
        return self.edges.index(e)


# ----------------------------------------------------------------------------
# Text format
# ----------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse an edge list: one ``u v`` pair per line, ``#`` starts a comment.

    The vertex count is one more than the largest vertex id mentioned.
    """
    pairs = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key} (first on line {seen[key]})")
        seen[key] = lineno
        pairs.append(key)
    n = 1 + max((v for _, v in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# ----------------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------------


def generate_random_regular(n: int, d: int, seed: int, max_attempts: int = 10_000) -> Graph:
    """Uniform-ish random d-regular graph from the pairing (configuration) model.

    Stubs are shuffled and paired; any sample with a loop or a repeated pair is
    thrown away whole. Deterministic for a given seed (numpy PCG64).
    """
    if n < 1 or d < 0:
        raise GraphError("need n >= 1 and d >= 0")
    if (n * d) % 2:
        raise GraphError(f"n*d must be even (n={n}, d={d})")
    if d >= n:
        raise GraphError(f"need d < n (n={n}, d={d})")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_attempts):
        perm = rng.permutation(stubs).reshape(-1, 2)
        lo = perm.min(axis=1)
        hi = perm.max(axis=1)
        if np.any(lo == hi):
            continue
        keys = lo.astype(np.int64) * n + hi
        if np.unique(keys).size != keys.size:
            continue
        return Graph.from_edges(n, zip(lo.tolist(), hi.tolist()))
    raise GraphError(f"no simple {d}-regular graph on {n} vertices after {max_attempts} attempts")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(dim: int) -> Graph:
    n = 1 << dim
    return Graph.from_edges(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(dim) if v < v ^ (1 << k)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1`` in vertex order.

    Returns the subgraph and, for each of its edge ids, the id of the same
    edge in ``g``.
    """
    keep = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(keep)}
    pairs = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    sub = Graph.from_edges(len(keep), pairs)
    parent = [g.edge_id(keep[u], keep[v]) for u, v in sub.edges]
    return sub, parent


# ----------------------------------------------------------------------------
# Brute-force cycle enumeration (test oracle)
# ----------------------------------------------------------------------------


def enumerate_cycles_upto(g: Graph, max_len: int) -> list[Cycle]:
    """Every cycle with 3..max_len edges, each once, sorted by ``sort_key``.

    Exponential in the worst case: intended for graphs with about a dozen
    vertices or short ``max_len``. Each cycle is grown from its smallest
    vertex through larger vertices only, and the two traversal directions
    collapse under the canonical form.
    """
    found: set[Cycle] = set()
    nbrs = [sorted(other_endpoint(g, e, v) for e in g.adjacency[v]) for v in range(g.n)]

    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(v: int) -> None:
            for w in nbrs[v]:
                if w == s and len(path) >= 3:
                    found.add(Cycle.from_vertices(g, path))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return sorted(found, key=Cycle.sort_key)
