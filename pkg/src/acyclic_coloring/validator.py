"""ColorVal: replaying a prescribed sequence of (edge, edge, half-length)
triples, and the bound on the probability that every prescribed cycle turns
out bichromatic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .bicycle import bichromatic_cycle_through
from .engine import seed_of
from .graph import Cycle, Graph, other_endpoint
from .palette import Draws, RandomStream, assign_random, initial_coloring, quota
from .witness import AdmissibleTriple

__all__ = [
    "ColorValOutcome",
    "cycles_through_pair",
    "is_admissible",
    "colorval_run",
    "lemma5_bound",
    "lemma5_simplified_bound",
    "monte_carlo_success",
]


@dataclass(frozen=True)
class ColorValOutcome:
    success: bool
    cycles: tuple[Cycle, ...]
    chosen_bichromatic: tuple[bool, ...]
    instants: int


def _ordered_ends(g: Graph, t: AdmissibleTriple) -> tuple[int, int, int]:
    """(v, u, w) with first = {v, u}, v < u, and second = {u, w}."""
    if t.first == t.second:
        raise ValueError(f"triple {t}: the two edges coincide")
    v, u = g.edges[t.first]
    if u not in g.edges[t.second]:
        raise ValueError(
            f"triple {t}: edges {g.edges[t.first]} and {g.edges[t.second]} "
            "are not an ordered adjacent pair"
        )
    return v, u, other_endpoint(g, t.second, u)


def cycles_through_pair(g: Graph, t: AdmissibleTriple) -> Iterator[Cycle]:
    """Every cycle of length ``2k`` containing both edges of the triple.

    Depth-bounded search for simple ``w -> v`` paths of ``2k - 2`` edges that
    avoid ``u``; exponential in ``k`` on dense graphs.
    """
    v, u, w = _ordered_ends(g, t)
    need = 2 * t.k - 2
    nbrs = g.adjacency
    path = [u, w]
    used = {u, w}

    def extend(x: int) -> Iterator[Cycle]:
        left = need - (len(path) - 2)
        for e in nbrs[x]:
            y = other_endpoint(g, e, x)
            if y == v:
                if left == 1:
                    yield Cycle.from_vertices(g, path + [v])
            elif left > 1 and y not in used:
                path.append(y)
                used.add(y)
                yield from extend(y)
                path.pop()
                used.discard(y)

    if t.k >= 2 and v != w:
        yield from extend(w)


def is_admissible(g: Graph, t: AdmissibleTriple) -> bool:
    if t.k < 3:
        return False
    return next(cycles_through_pair(g, t), None) is not None


def _fallbacks(g: Graph, S: Sequence[AdmissibleTriple]) -> list[Cycle]:
    cache: dict[AdmissibleTriple, Cycle] = {}
    out = []
    for t in S:
        if t not in cache:
            cycles = list(cycles_through_pair(g, t)) if t.k >= 3 else []
            if not cycles:
                raise ValueError(f"triple {t} is not admissible")
            cache[t] = min(cycles, key=Cycle.sort_key)
        out.append(cache[t])
    return out


def _colorval(g: Graph, S, gamma: float, rng: Draws, fallbacks: list[Cycle]) -> ColorValOutcome:
    state = initial_coloring(g, gamma, rng)
    cycles = []
    chosen = []
    for t, fallback in zip(S, fallbacks):
        C = bichromatic_cycle_through(state, g, t.first, state.color[t.second])
        hit = C is not None and len(C) == 2 * t.k
        if not hit:
            C = fallback
        seed = seed_of(state, C)
        for f in sorted(f for f in C.edges if f not in seed):
            assign_random(state, g, f, rng)
        cycles.append(C)
        chosen.append(hit)
    return ColorValOutcome(all(chosen), tuple(cycles), tuple(chosen), state.clock)


def colorval_run(g: Graph, S: Sequence[AdmissibleTriple], gamma: float, seed: int | Draws) -> ColorValOutcome:
    """Initial coloring, then one forced recoloring step per triple.

    Step i uses the bichromatic ``2k_i``-cycle through the ordered pair when
    there is one, and otherwise the smallest ``2k_i``-cycle through it; in
    both cases the edges off the cycle's seed are redrawn in ascending id
    order. Success means every step found a bichromatic cycle.
    """
    S = list(S)
    fallbacks = _fallbacks(g, S)
    rng = RandomStream(seed) if isinstance(seed, int) else seed
    return _colorval(g, S, gamma, rng, fallbacks)


def lemma5_bound(S: Sequence[AdmissibleTriple], gamma: float, delta: int) -> float:
    """``(1/K)^n * prod (1 - (1 - 1/K)^(delta-1))^(2k-3)``, K the sampling quota."""
    K = quota(gamma, delta)
    miss = 1.0 - (1.0 - 1.0 / K) ** (delta - 1)
    out = 1.0
    for t in S:
        out *= miss ** (2 * t.k - 3) / K
    return out


def lemma5_simplified_bound(S: Sequence[AdmissibleTriple], gamma: float, delta: int) -> float:
    quota(gamma, delta)
    q = -math.expm1(-1.0 / gamma)
    out = 1.0
    for t in S:
        out *= q ** (2 * t.k - 3) / (gamma * (delta - 1))
    return out


def monte_carlo_success(
    g: Graph, S: Sequence[AdmissibleTriple], gamma: float, trials: int, seed: int
) -> tuple[float, float]:
    """Fraction of successful ColorVal runs and its binomial standard error.

    Trial ``i`` draws from ``RandomStream(seed, spawn_key=(i,))``, so trials
    are independent and the result does not depend on evaluation order.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    S = list(S)
    fallbacks = _fallbacks(g, S)
    hits = 0
    for i in range(trials):
        hits += _colorval(g, S, gamma, RandomStream(seed, spawn_key=(i,)), fallbacks).success
    p = hits / trials
    return p, math.sqrt(p * (1 - p) / trials)
