"""Coloring state, palette sizes and the greedy random color choice.

A partial coloring maps each edge to ``0`` (uncolored) or a color in
``1..N``. The available set D(e) for an edge removes the colors on adjacent
edges and every color that would close a properly bichromatic 4-cycle, and
the algorithm only ever picks among the ``K`` smallest members of D(e).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Protocol

import numpy as np

from .errors import InvariantViolation
from .graph import Graph

__all__ = [
    "num_colors",
    "quota",
    "RandomStream",
    "ScriptedStream",
    "ColoringState",
    "available_colors",
    "assign_random",
    "initial_coloring",
    "format_coloring",
    "parse_coloring",
]


def _ceil_times(gamma: float, k: int) -> int:
    # decimal repr avoids 1.1*10 -> 11.000000000000002 -> 12
    return math.ceil(Decimal(repr(float(gamma))) * k)


def _check(gamma: float, delta: int) -> None:
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if delta < 2:
        raise ValueError(f"maximum degree must be at least 2, got {delta}")


def num_colors(gamma: float, delta: int) -> int:
    """Palette size ``ceil((2 + gamma)(delta - 1)) + 1``."""
    _check(gamma, delta)
    return math.ceil((2 + Decimal(repr(float(gamma)))) * (delta - 1)) + 1


def quota(gamma: float, delta: int) -> int:
    """Number of smallest available colors sampled from: ``ceil(gamma(delta - 1)) + 1``."""
    _check(gamma, delta)
    return _ceil_times(gamma, delta - 1) + 1


# ----------------------------------------------------------------------------
# Random streams
# ----------------------------------------------------------------------------


class Draws(Protocol):
    def draw(self, k: int) -> int: ...


class RandomStream:
    """Sequential stream of uniform integers in ``1..k``.

    Backed by numpy's PCG64 seeded through ``SeedSequence(seed, spawn_key)``.
    Draws are produced in blocks of ``block`` with ``Generator.integers``; the
    block size is part of the stream definition, so keep it fixed.
    """

    block = 256

    def __init__(self, seed: int, spawn_key: tuple[int, ...] = ()):
        self.seed = int(seed)
        self.spawn_key = tuple(spawn_key)
        ss = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        self._gen = np.random.Generator(np.random.PCG64(ss))
        self._k = None
        self._buf: list[int] = []
        self._pos = 0
        self.count = 0

    def draw(self, k: int) -> int:
        if k != self._k or self._pos == len(self._buf):
            self._k = k
            self._buf = self._gen.integers(1, k + 1, size=self.block).tolist()
            self._pos = 0
        r = self._buf[self._pos]
        self._pos += 1
        self.count += 1
        return r


class ScriptedStream:
    """Replays a fixed list of draws; used to force specific runs in tests."""

    def __init__(self, draws):
        self.draws = list(draws)
        self.count = 0

    def draw(self, k: int) -> int:
        if self.count >= len(self.draws):
            raise IndexError("scripted stream exhausted")
        r = self.draws[self.count]
        if not 1 <= r <= k:
            raise ValueError(f"scripted draw {r} outside 1..{k}")
        self.count += 1
        return r


# ----------------------------------------------------------------------------
# State
# ----------------------------------------------------------------------------


@dataclass
class ColoringState:
    """Partial edge coloring with per-edge assignment instants.

    ``color[e] == 0`` means uncolored. ``stamp[e]`` is the clock value at which
    ``e`` received its current color (-1 while uncolored); the clock advances
    by one on every assignment, so stamps are distinct. ``at[v]`` maps each
    color present at vertex ``v`` to the edge carrying it.
    """

    n_colors: int
    quota: int
    color: list[int]
    stamp: list[int]
    at: list[dict[int, int]] = field(repr=False)
    clock: int = 0

    @classmethod
    def empty(cls, g: Graph, n_colors: int, k: int) -> ColoringState:
        if not 1 <= k <= n_colors:
            raise ValueError(f"need 1 <= K <= N, got K={k}, N={n_colors}")
        return cls(n_colors, k, [0] * g.m, [-1] * g.m, [{} for _ in range(g.n)])

    @classmethod
    def for_gamma(cls, g: Graph, gamma: float) -> ColoringState:
        return cls.empty(g, num_colors(gamma, g.max_degree), quota(gamma, g.max_degree))

    @classmethod
    def from_colors(cls, g: Graph, colors, n_colors: int | None = None, k: int | None = None) -> ColoringState:
        """State holding a given coloring; stamps follow edge-id order.

        Does not check properness: verifiers need to load bad colorings too.
        Where two adjacent edges share a color, ``at`` keeps the larger id.
        """
        colors = [int(c) for c in colors]
        if len(colors) != g.m:
            raise ValueError(f"expected {g.m} colors, got {len(colors)}")
        top = max(colors, default=0)
        n_colors = n_colors if n_colors is not None else max(top, 1)
        state = cls.empty(g, n_colors, k if k is not None else 1)
        for e, c in enumerate(colors):
            if c:
                state.paint(g, e, c)
        return state

    def paint(self, g: Graph, e: int, c: int) -> None:
        u, v = g.edges[e]
        old = self.color[e]
        if old:
            if self.at[u].get(old) == e:
                del self.at[u][old]
            if self.at[v].get(old) == e:
                del self.at[v][old]
        self.color[e] = c
        self.at[u][c] = e
        self.at[v][c] = e
        self.stamp[e] = self.clock
        self.clock += 1

    def copy(self) -> ColoringState:
        return ColoringState(
            self.n_colors, self.quota, list(self.color), list(self.stamp),
            [dict(d) for d in self.at], self.clock,
        )

    def all_colored(self) -> bool:
        return all(self.color)


def _forbidden(state: ColoringState, g: Graph, e: int) -> set[int]:
    col = state.color
    u, v = g.edges[e]
    forbidden = set()
    for end in (u, v):
        for h in g.adjacency[end]:
            if h != e and col[h]:
                forbidden.add(col[h])
    # 4-cycle u-x-y-v closed by e: h={u,x} and f={v,y} share a color, g'={x,y}
    at_v = state.at[v]
    for h in g.adjacency[u]:
        a = col[h]
        if h == e or not a:
            continue
        f = at_v.get(a)
        if f is None or f == e:
            continue
        x = g.edges[h][0] + g.edges[h][1] - u
        y = g.edges[f][0] + g.edges[f][1] - v
        if x == y:
            continue
        gid = g.edge_id(x, y)
        if gid is not None and col[gid]:
            forbidden.add(col[gid])
    return forbidden


def available_colors(state: ColoringState, g: Graph, e: int, check: bool = True) -> list[int]:
    """Ascending list of colors e may take; e's own current color is ignored.

    Raises InvariantViolation if fewer than ``state.quota`` colors remain.
    """
    forbidden = _forbidden(state, g, e)
    avail = [c for c in range(1, state.n_colors + 1) if c not in forbidden]
    if check and len(avail) < state.quota:
        raise InvariantViolation(
            f"edge {e}: only {len(avail)} available colors, quota is {state.quota} "
            f"(N={state.n_colors}, max degree={g.max_degree})"
        )
    return avail


def assign_random(state: ColoringState, g: Graph, e: int, rng: Draws) -> int:
    """Give e the r-th smallest available color, r uniform in ``1..K``."""
    avail = available_colors(state, g, e)
    r = rng.draw(state.quota)
    c = avail[r - 1]
    state.paint(g, e, c)
    return c


def initial_coloring(g: Graph, gamma: float, rng: Draws, n_colors: int | None = None) -> ColoringState:
    """Color every edge in id order with ``assign_random``.

    ``n_colors`` overrides the palette size derived from gamma; the quota
    stays ``quota(gamma, max_degree)``.
    """
    if n_colors is None:
        state = ColoringState.for_gamma(g, gamma)
    else:
        state = ColoringState.empty(g, n_colors, quota(gamma, g.max_degree))
    for e in range(g.m):
        assign_random(state, g, e, rng)
    return state


# ----------------------------------------------------------------------------
# Text format: one "edge_id color" line per edge
# ----------------------------------------------------------------------------


def format_coloring(state: ColoringState) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(state.color))


def parse_coloring(text: str, m: int) -> list[int]:
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'edge_id color', got {raw!r}")
        try:
            e, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if not 0 <= e < m:
            raise ValueError(f"line {lineno}: edge id {e} out of range (m={m})")
        if c < 1:
            raise ValueError(f"line {lineno}: color must be positive, got {c}")
        if e in colors:
            raise ValueError(f"line {lineno}: edge {e} listed twice")
        colors[e] = c
    missing = [e for e in range(m) if e not in colors]
    if missing:
        raise ValueError(f"coloring misses edges {missing[:10]}{'...' if len(missing) > 10 else ''}")
    return [colors[e] for e in range(m)]
