"""Properly bichromatic cycles, found by alternating color walks.

In a proper coloring the edges of two colors ``a`` and ``b`` form paths and
even cycles, so from an edge of color ``a`` there is at most one way to
continue alternating. Walking that forced path from one endpoint either
dead-ends or comes back to the other endpoint, which gives the (unique)
a/b-cycle through the edge without ever listing the cycles of the graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .graph import Cycle, Graph, enumerate_cycles_upto
from .palette import ColoringState

__all__ = [
    "BadEdgeReport",
    "bichromatic_cycle_through",
    "smallest_bichromatic_cycle",
    "is_badly_colored",
    "badly_colored_edges",
    "find_violation",
    "is_acyclic_proper",
    "brute_force_acyclic",
]


@dataclass(frozen=True)
class BadEdgeReport:
    edge: int
    cycle: Cycle
    colors: tuple[int, int]


def _walk(state: ColoringState, g: Graph, e: int, b: int) -> list[int] | None:
    """Vertex sequence of the a/b-cycle through e, starting ``u, v``; None if open."""
    a = state.color[e]
    u, v = g.edges[e]
    at = state.at
    verts = [u, v]
    x, want = v, b
    for _ in range(g.n):
        f = at[x].get(want)
        if f is None or f == e:
            return None
        p, q = g.edges[f]
        y = q if p == x else p
        if y == u:
            if want != b:
                raise InvariantViolation(f"alternating walk closed at odd length through edge {e}")
            return verts
        verts.append(y)
        x, want = y, (a if want == b else b)
    raise InvariantViolation(f"alternating walk from edge {e} did not terminate")


def bichromatic_cycle_through(state: ColoringState, g: Graph, e: int, b: int) -> Cycle | None:
    """The cycle through e alternating colors ``color(e)`` and ``b``, if any."""
    a = state.color[e]
    if not a:
        raise ValueError(f"edge {e} is uncolored")
    if b == a or b <= 0:
        raise ValueError(f"second color must differ from {a} and be positive, got {b}")
    verts = _walk(state, g, e, b)
    if verts is None:
        return None
    return Cycle.from_vertices(g, verts)


def _candidate_colors(state: ColoringState, g: Graph, e: int) -> list[int]:
    # the closing color must appear at both endpoints of e
    u, v = g.edges[e]
    a = state.color[e]
    at_u, at_v = state.at[u], state.at[v]
    if len(at_u) > len(at_v):
        at_u, at_v = at_v, at_u
    return sorted(c for c in at_u if c != a and c in at_v)


def smallest_bichromatic_cycle(state: ColoringState, g: Graph, e: int) -> BadEdgeReport | None:
    """Smallest (fewest edges, then edge sequence) bichromatic cycle through e."""
    a = state.color[e]
    if not a:
        raise ValueError(f"edge {e} is uncolored")
    best = None
    for b in _candidate_colors(state, g, e):
        verts = _walk(state, g, e, b)
        if verts is None:
            continue
        cyc = Cycle.from_vertices(g, verts)
        if best is None or cyc.sort_key() < best.cycle.sort_key():
            best = BadEdgeReport(e, cyc, (min(a, b), max(a, b)))
    return best


def is_badly_colored(state: ColoringState, g: Graph, e: int) -> bool:
    if not state.color[e]:
        return False
    return any(_walk(state, g, e, b) is not None for b in _candidate_colors(state, g, e))


def badly_colored_edges(state: ColoringState, g: Graph) -> list[int]:
    """All edges lying on a bichromatic cycle, largest id first."""
    return [e for e in range(g.m - 1, -1, -1) if is_badly_colored(state, g, e)]


def find_violation(state: ColoringState, g: Graph):
    """First obstruction to acyclicity, or None.

    Returns ``("cherry", (e, f))`` for two adjacent edges of one color or
    ``("cycle", report)`` for a bichromatic cycle (4-cycles included).
    """
    col = state.color
    for e in range(g.m):
        if not col[e]:
            raise ValueError(f"edge {e} is uncolored")
    for v in range(g.n):
        seen: dict[int, int] = {}
        for e in g.adjacency[v]:
            if col[e] in seen:
                return ("cherry", (seen[col[e]], e))
            seen[col[e]] = e
    for e in range(g.m):
        report = smallest_bichromatic_cycle(state, g, e)
        if report is not None:
            return ("cycle", report)
    return None


def is_acyclic_proper(state: ColoringState, g: Graph) -> bool:
    return find_violation(state, g) is None


def brute_force_acyclic(state: ColoringState, g: Graph, max_len: int) -> bool:
    """Independent check by listing every cycle up to ``max_len`` edges.

    Only a faithful verdict when ``max_len`` is at least the circumference
    of ``g``; that is the caller's responsibility.
    """
    col = state.color
    if not all(col):
        raise ValueError("coloring has uncolored edges")
    for v in range(g.n):
        inc = g.adjacency[v]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                if col[inc[i]] == col[inc[j]]:
                    return False
    for cyc in enumerate_cycles_upto(g, max_len):
        if len({col[e] for e in cyc.edges}) < 3:
            return False
    return True
