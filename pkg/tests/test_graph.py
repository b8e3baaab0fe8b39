import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from acyclic_coloring.graph import (
    Cycle,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_cycles_upto,
    format_graph,
    generate_random_regular,
    hypercube_graph,
    incident_edges,
    induced_subgraph,
    other_endpoint,
    parse_graph,
    path_graph,
)

from conftest import cycles_by_permutation


def test_parse_path():
    g = parse_graph("0 1\n1 2")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))
    assert g.max_degree == 2


def test_parse_k4_lexicographic_order():
    text = "2 3\n1 3\n0 3\n# comment\n\n1 2\n0 2\n1 0\n"
    g = parse_graph(text)
    assert g.m == 6
    assert g.max_degree == 3
    assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0 1\n0 1", "line 2: duplicate"),
        ("0 1\n1 0", "line 2: duplicate"),
        ("0 1\n2 2", "line 2: loop"),
        ("0 1\n1 2 3", "line 2: expected"),
        ("0 x", "line 1: non-integer"),
        ("0 -1", "line 1: negative"),
    ],
)
def test_parse_rejects(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_graph(text)


def test_parse_roundtrip(cube):
    assert parse_graph(format_graph(cube)).edges == cube.edges


def test_incident_edges(k4, p3):
    assert incident_edges(k4, 0) == [0, 1, 2]
    assert incident_edges(p3, 1) == [0, 1]
    g = parse_graph("0 1\n3 4")
    assert incident_edges(g, 2) == []
    with pytest.raises(GraphError):
        incident_edges(g, 5)


def test_other_endpoint():
    g = parse_graph("0 1\n1 2")
    assert other_endpoint(g, 0, 0) == 1
    assert other_endpoint(g, 0, 1) == 0
    with pytest.raises(GraphError):
        other_endpoint(g, 0, 2)


def test_random_regular_k4():
    assert generate_random_regular(4, 3, seed=11).edges == complete_graph(4).edges


def test_random_regular_two_regular():
    g = generate_random_regular(6, 2, seed=5)
    assert g.m == 6
    assert all(g.degree(v) == 2 for v in range(6))


def test_random_regular_parity():
    with pytest.raises(GraphError, match="even"):
        generate_random_regular(5, 3, seed=0)
    with pytest.raises(GraphError, match="d < n"):
        generate_random_regular(4, 4, seed=0)


def test_random_regular_deterministic():
    a = generate_random_regular(30, 3, seed=99)
    b = generate_random_regular(30, 3, seed=99)
    assert a.edges == b.edges


@given(n=st.integers(4, 40), d=st.integers(1, 4), seed=st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_random_regular_is_simple_and_regular(n, d, seed):
    if (n * d) % 2 or d >= n:
        return
    g = generate_random_regular(n, d, seed)
    assert all(g.degree(v) == d for v in range(n))
    assert list(g.edges) == sorted(g.edges)
    assert all(u < v for u, v in g.edges)


def test_cycle_canonical_form(c6):
    a = Cycle.from_vertices(c6, [0, 1, 2, 3, 4, 5])
    b = Cycle.from_vertices(c6, [3, 2, 1, 0, 5, 4])
    assert a == b
    assert a.edges[0] == 0
    assert a.edges[1] < a.edges[-1]
    for i, e in enumerate(a.edges):
        assert set(c6.edges[e]) == {a.vertices[i], a.vertices[(i + 1) % 6]}


def test_enumerate_c6(c6):
    cycles = enumerate_cycles_upto(c6, 6)
    assert len(cycles) == 1 and len(cycles[0]) == 6


def test_enumerate_k4_matches_permutation_oracle(k4):
    counts = cycles_by_permutation(k4, 4)
    assert counts == {3: 4, 4: 3}
    cycles = enumerate_cycles_upto(k4, 4)
    assert sum(1 for c in cycles if len(c) == 3) == 4
    assert sum(1 for c in cycles if len(c) == 4) == 3


def test_enumerate_k33_matches_permutation_oracle(k33):
    counts = cycles_by_permutation(k33, 6)
    assert counts == {3: 0, 4: 9, 5: 0, 6: 6}
    cycles = enumerate_cycles_upto(k33, 6)
    assert [len(c) for c in cycles] == [4] * 9 + [6] * 6
    assert all(c.is_even for c in cycles)


@pytest.mark.parametrize(
    "g",
    [complete_graph(5), hypercube_graph(3), complete_bipartite_graph(3, 4), generate_random_regular(10, 3, 4)],
    ids=["K5", "Q3", "K34", "rr10"],
)
def test_enumerate_matches_networkx(g):
    G = nx.Graph(list(g.edges))
    expected = {}
    for cyc in nx.simple_cycles(G, length_bound=g.n):
        expected[len(cyc)] = expected.get(len(cyc), 0) + 1
    cycles = enumerate_cycles_upto(g, g.n)
    got = {}
    for c in cycles:
        got[len(c)] = got.get(len(c), 0) + 1
    assert got == expected
    assert len(set(cycles)) == len(cycles)
    for c in cycles:
        assert len(set(c.vertices)) == len(c)
        assert c.is_even == (len(c) % 2 == 0)


def test_induced_subgraph(cube):
    sub, parent = induced_subgraph(cube, [0, 1, 2, 3])
    assert sub.n == 4 and sub.m == 4
    assert [cube.edges[e] for e in parent] == [(0, 1), (0, 2), (1, 3), (2, 3)]
