"""The randomized acyclic edge coloring algorithm.

After an initial greedy random coloring of every edge, the main loop takes
the largest badly colored edge ``e`` and the smallest bichromatic cycle ``C``
through it and calls ``recolor(e, C)``. A recolor call fixes the two
earliest-colored edges of ``C`` at opposite parity (the seed), redraws the
colors of the other ``|C| - 2`` edges in ascending id order, and then keeps
calling itself on the largest still-bad edge among those it redrew.

Recursion is an explicit stack so that the step cap, not the interpreter,
bounds the depth.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .bicycle import badly_colored_edges, is_acyclic_proper, is_badly_colored, smallest_bichromatic_cycle
from .errors import InvariantViolation, StepCapExceeded
from .graph import Cycle, Graph
from .palette import ColoringState, Draws, RandomStream, assign_random, initial_coloring

__all__ = [
    "DEFAULT_STEP_CAP",
    "StepRecord",
    "ExecutionRecord",
    "RunStats",
    "seed_of",
    "recolor",
    "run",
]

DEFAULT_STEP_CAP = 10**6


@dataclass(frozen=True)
class StepRecord:
    """One recoloring pass over ``cycle`` minus its seed.

    ``parent`` is the index (into the record) of the recolor call that made
    this call, or None for a phase root.
    """

    edge: int
    cycle: Cycle
    seed: tuple[int, int]
    phase: int
    index_in_phase: int
    clock_at_start: int
    parent: int | None = None

    @property
    def recolored(self) -> tuple[int, ...]:
        return tuple(sorted(f for f in self.cycle.edges if f not in self.seed))


@dataclass
class ExecutionRecord:
    m: int
    steps: list[StepRecord] = field(default_factory=list)
    phase_roots: list[int] = field(default_factory=list)
    terminated: bool = False
    total_instants: int = 0

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def n_phases(self) -> int:
        return len(self.phase_roots)

    def phases(self) -> list[list[StepRecord]]:
        bounds = self.phase_roots + [len(self.steps)]
        return [self.steps[bounds[i]:bounds[i + 1]] for i in range(len(self.phase_roots))]

    def labels(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """The (edge, cycle) pairs, the part of the record a witness forest encodes."""
        return tuple((s.edge, s.cycle.edges) for s in self.steps)


@dataclass
class RunStats:
    n_steps: int
    n_phases: int
    instants: int
    terminated: bool
    verified: bool
    wall_time: float


def seed_of(state: ColoringState, C: Cycle) -> tuple[int, int]:
    """Earliest-colored edge of C, then the earliest one at opposite parity."""
    stamp = state.stamp
    for f in C.edges:
        if stamp[f] < 0:
            raise ValueError(f"edge {f} of the cycle has never been colored")
    p1 = min(range(len(C)), key=lambda i: stamp[C.edges[i]])
    p2 = min(range(1 - p1 % 2, len(C), 2), key=lambda i: stamp[C.edges[i]])
    return C.edges[p1], C.edges[p2]


def _well_colored(state: ColoringState, g: Graph) -> set[int]:
    return {e for e in range(g.m) if not is_badly_colored(state, g, e)}


class _Frame:
    __slots__ = ("index", "rest", "entry_good")

    def __init__(self, index, rest, entry_good):
        self.index = index
        self.rest = rest
        self.entry_good = entry_good


def _open_step(state, g, e, C, rng, record, phase, parent, step_cap, instrumented):
    if len(record.steps) >= step_cap:
        raise StepCapExceeded(f"step cap {step_cap} reached", record, state)
    if e not in C.edges:
        raise InvariantViolation(f"edge {e} is not on its cycle {C.edges}")
    if len(C) < 6:
        raise InvariantViolation(f"bichromatic {len(C)}-cycle {C.edges} in a state free of them")
    seed = seed_of(state, C)
    if e in seed:
        raise InvariantViolation(f"recolored edge {e} belongs to the seed {seed} of {C.edges}")
    entry_good = _well_colored(state, g) if instrumented else None
    index = len(record.steps)
    step = StepRecord(e, C, seed, phase, index - record.phase_roots[phase], state.clock, parent)
    record.steps.append(step)
    rest = step.recolored
    for f in rest:
        assign_random(state, g, f, rng)
    record.total_instants += len(rest)
    return _Frame(index, rest, entry_good)


def recolor(
    state: ColoringState,
    g: Graph,
    e: int,
    C: Cycle,
    rng: Draws,
    record: ExecutionRecord,
    step_cap: int = DEFAULT_STEP_CAP,
    instrumented: bool = False,
    observer: Callable[[ColoringState, StepRecord], None] | None = None,
) -> None:
    """Run one top-level recolor call (a phase) to completion.

    Appends a new phase to ``record``. Raises StepCapExceeded once the record
    holds ``step_cap`` steps and another one is due.
    """
    phase = len(record.phase_roots)
    if len(record.steps) >= step_cap:
        raise StepCapExceeded(f"step cap {step_cap} reached", record, state)
    record.phase_roots.append(len(record.steps))
    stack = [_open_step(state, g, e, C, rng, record, phase, None, step_cap, instrumented)]
    if observer is not None:
        observer(state, record.steps[-1])
    while stack:
        top = stack[-1]
        bad = None
        for f in reversed(top.rest):
            if is_badly_colored(state, g, f):
                bad = f
                break
        if bad is None:
            stack.pop()
            if instrumented:
                _check_well_colored_grows(state, g, top, record)
            continue
        report = smallest_bichromatic_cycle(state, g, bad)
        frame = _open_step(state, g, bad, report.cycle, rng, record, phase, top.index, step_cap, instrumented)
        stack.append(frame)
        if observer is not None:
            observer(state, record.steps[-1])


def _check_well_colored_grows(state, g, frame, record):
    good = _well_colored(state, g)
    must = set(frame.entry_good) | set(frame.rest)
    lost = sorted(must - good)
    if lost:
        step = record.steps[frame.index]
        raise InvariantViolation(
            f"edges {lost} are badly colored after the recolor call at step {frame.index} "
            f"(edge {step.edge}, cycle {step.cycle.edges})"
        )


def run(
    g: Graph,
    gamma: float,
    seed: int | Draws,
    step_cap: int = DEFAULT_STEP_CAP,
    instrumented: bool = False,
    observer: Callable[[ColoringState, StepRecord | None], None] | None = None,
    n_colors: int | None = None,
) -> tuple[ColoringState, ExecutionRecord, RunStats]:
    """Color ``g`` acyclically.

    ``seed`` is an integer (a fresh RandomStream is built from it) or any
    object with a ``draw(k)`` method. On step-cap exhaustion the partial
    state and record are returned with ``record.terminated`` False.
    ``observer`` is called after the initial coloring (with step None) and
    after every step. ``n_colors`` overrides the palette size.
    """
    t0 = time.perf_counter()
    rng = RandomStream(seed) if isinstance(seed, int) else seed
    state = initial_coloring(g, gamma, rng, n_colors)
    record = ExecutionRecord(g.m, total_instants=g.m)
    if observer is not None:
        observer(state, None)
    roots: set[int] = set()
    try:
        while True:
            bad = badly_colored_edges(state, g)
            if not bad:
                break
            e = bad[0]
            if e in roots:
                raise InvariantViolation(f"edge {e} is the root of two phases")
            roots.add(e)
            if len(record.phase_roots) >= g.m:
                raise InvariantViolation(f"more than m={g.m} phases")
            report = smallest_bichromatic_cycle(state, g, e)
            recolor(state, g, e, report.cycle, rng, record, step_cap, instrumented, observer)
        record.terminated = True
    except StepCapExceeded:
        record.terminated = False
    expected = g.m + sum(len(s.cycle) - 2 for s in record.steps)
    if record.total_instants != expected or state.clock != expected:
        raise InvariantViolation(
            f"instant accounting: clock {state.clock}, record {record.total_instants}, expected {expected}"
        )
    verified = record.terminated and is_acyclic_proper(state, g)
    if record.terminated and not verified:
        raise InvariantViolation("run terminated on a coloring that is not acyclic")
    stats = RunStats(
        n_steps=len(record.steps),
        n_phases=record.n_phases,
        instants=record.total_instants,
        terminated=record.terminated,
        verified=verified,
        wall_time=time.perf_counter() - t0,
    )
    return state, record, stats
