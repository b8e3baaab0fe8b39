"""Witness forests built from execution records.

Each phase of a run becomes a plane rooted tree whose vertices carry the
(edge, cycle) labels of its steps. A step hangs under the most recent
vertex on the current root path whose redrawn edges contain its edge. The
forest is then completed: one isolated vertex per edge that never rooted a
phase, and leaves under every internal vertex so it has exactly ``|C| - 2``
children, one per redrawn edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantViolation
from .graph import Cycle, Graph
from .engine import ExecutionRecord

__all__ = [
    "Node",
    "WitnessForest",
    "AdmissibleTriple",
    "build_forest",
    "check_properties",
    "admissible_sequence_of",
    "ordered_neighbor",
    "encode_forest",
    "format_forest",
]


@dataclass(eq=False)
class Node:
    edge: int
    cycle: Cycle | None = None
    seed: tuple[int, int] | None = None
    children: list[Node] = field(default_factory=list)
    step: int | None = None

    @property
    def internal(self) -> bool:
        return self.cycle is not None

    def preorder(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class WitnessForest:
    m: int
    trees: list[Node]

    @property
    def internal_count(self) -> int:
        return sum(1 for node in self.internal_nodes())

    def internal_nodes(self):
        for tree in self.trees:
            for node in tree.preorder():
                if node.internal:
                    yield node


@dataclass(frozen=True)
class AdmissibleTriple:
    first: int
    second: int
    k: int


def build_forest(record: ExecutionRecord, g: Graph) -> WitnessForest:
    trees: list[Node] = []
    for phase in record.phases():
        root = None
        path: list[Node] = []
        for i, step in enumerate(phase):
            node = Node(step.edge, step.cycle, step.seed, step=record.phase_roots[step.phase] + i)
            if root is None:
                root = node
                path = [node]
                continue
            while path and step.edge not in _redrawn(path[-1]):
                path.pop()
            if not path:
                raise InvariantViolation(
                    f"step {node.step}: edge {step.edge} is not redrawn by any ancestor"
                )
            path[-1].children.append(node)
            path.append(node)
        trees.append(root)

    used = {tree.edge for tree in trees}
    trees.extend(Node(e) for e in range(g.m) if e not in used)

    for tree in trees:
        for node in tree.preorder():
            if not node.internal:
                continue
            have = {child.edge for child in node.children}
            node.children.extend(Node(e) for e in sorted(_redrawn(node)) if e not in have)
    return WitnessForest(g.m, trees)


def _redrawn(node: Node) -> set[int]:
    return {f for f in node.cycle.edges if f not in node.seed}


def check_properties(F: WitnessForest, g: Graph, record: ExecutionRecord | None = None) -> list[str]:
    """Violations of the witness-forest properties, as messages. Empty if valid.

    Checks: m trees whose roots carry distinct edges; internal vertices carry
    a cycle and leaves none; child edges lie on the parent's cycle (and off
    its seed, when the seed is known); sibling edges are distinct; internal
    vertices have exactly ``|C| - 2`` children. With ``record``, also that the
    preorder of each phase tree lists that phase's steps.
    """
    out = []
    if len(F.trees) != g.m:
        out.append(f"P1: {len(F.trees)} trees, expected m={g.m}")
    roots = [t.edge for t in F.trees]
    if sorted(roots) != list(range(g.m)):
        out.append(f"P1: root edge labels {sorted(roots)} are not a permutation of the edge set")
    for t, tree in enumerate(F.trees):
        for node in tree.preorder():
            if not 0 <= node.edge < g.m:
                out.append(f"P2: tree {t}: edge label {node.edge} out of range")
            if not node.internal:
                if node.children:
                    out.append(f"P2: tree {t}: vertex labelled ({node.edge}, -) has children")
                continue
            C = node.cycle
            if node.edge not in C.edges:
                out.append(f"P2: tree {t}: edge {node.edge} not on its own cycle {C.edges}")
            labels = [child.edge for child in node.children]
            for child in labels:
                if child not in C.edges:
                    out.append(f"P3: tree {t}: child edge {child} not on parent cycle {C.edges}")
                elif node.seed is not None and child in node.seed:
                    out.append(f"dr-a: tree {t}: child edge {child} is in the parent's seed {node.seed}")
            if len(set(labels)) != len(labels):
                out.append(f"P4: tree {t}: repeated sibling edge labels {labels}")
            if len(labels) != len(C) - 2:
                out.append(f"P5: tree {t}: vertex ({node.edge}, {C.edges}) has {len(labels)} children, expected {len(C) - 2}")
    if record is not None:
        if F.internal_count != len(record):
            out.append(f"count: {F.internal_count} internal vertices for {len(record)} steps")
        for s, phase in enumerate(record.phases()):
            if s >= len(F.trees):
                break
            got = [(n.edge, n.cycle.edges) for n in F.trees[s].preorder() if n.internal]
            want = [(st.edge, st.cycle.edges) for st in phase]
            if got != want:
                out.append(f"order: tree {s} preorder does not reproduce phase {s}")
    return out


def ordered_neighbor(g: Graph, e: int, C: Cycle) -> int:
    """The neighbour of e on C through e's larger endpoint."""
    u = g.edges[e][1]
    i = C.position(e)
    for f in (C.edges[i - 1], C.edges[(i + 1) % len(C)]):
        if u in g.edges[f]:
            return f
    raise InvariantViolation(f"no neighbour of edge {e} through vertex {u} on cycle {C.edges}")


def admissible_sequence_of(F: WitnessForest, g: Graph) -> list[AdmissibleTriple]:
    return [
        AdmissibleTriple(node.edge, ordered_neighbor(g, node.edge, node.cycle), len(node.cycle) // 2)
        for node in F.internal_nodes()
    ]


def encode_forest(F: WitnessForest) -> bytes:
    """Canonical serialization of the labelled forest.

    Preorder tokens ``edge/cycle-edges/child-count``; with the child counts
    the token stream parses back to a unique forest, so the encoding is
    injective. Seeds are derived data and are not encoded.
    """
    tokens = [str(F.m)]
    for tree in F.trees:
        for node in tree.preorder():
            cyc = ".".join(map(str, node.cycle.edges)) if node.internal else ""
            tokens.append(f"{node.edge}/{cyc}/{len(node.children)}")
    return " ".join(tokens).encode("ascii")


def format_forest(F: WitnessForest) -> str:
    lines = []
    for tree in F.trees:
        stack = [(tree, 0)]
        while stack:
            node, depth = stack.pop()
            pad = "  " * depth
            if node.internal:
                lines.append(f"{pad}({node.edge}, {list(node.cycle.edges)}) seed={list(node.seed)}")
            else:
                lines.append(f"{pad}({node.edge}, -)")
            stack.extend((child, depth + 1) for child in reversed(node.children))
    return "\n".join(lines) + "\n"
