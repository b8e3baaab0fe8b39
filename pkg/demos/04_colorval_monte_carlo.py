"""How often does a prescribed cycle come out bichromatic?

ColorVal replays a sequence of (edge, edge, k) triples and succeeds when
every prescribed 2k-cycle is bichromatic at its turn. Its success
probability is bounded in closed form; here we estimate it by simulation.
"""
from __future__ import annotations

from acyclic_coloring import complete_bipartite_graph, hypercube_graph
from acyclic_coloring.validator import lemma5_bound, lemma5_simplified_bound, monte_carlo_success
from acyclic_coloring.witness import AdmissibleTriple

k33 = complete_bipartite_graph(3, 3)
S = [AdmissibleTriple(0, 3, 3)]
for gamma in (0.5, 1.0, 1.569):
    est, err = monte_carlo_success(k33, S, gamma, 20_000, seed=0)
    print(f"K33 gamma={gamma:<5} estimate {est:.5f} +- {err:.5f}   "
          f"bound {lemma5_bound(S, gamma, 3):.5f}   simplified {lemma5_simplified_bound(S, gamma, 3):.5f}")

cube = hypercube_graph(3)
e = cube.edge_id(0, 1)
f = cube.adjacency[1][1]
for k in (3, 4):
    T = [AdmissibleTriple(e, f, k)]
    est, err = monte_carlo_success(cube, T, 1.0, 20_000, seed=1)
    print(f"Q3 k={k}: estimate {est:.5f} +- {err:.5f}   bound {lemma5_bound(T, 1.0, 3):.5f}")

# longer sequences: the bound shrinks geometrically and so does the estimate
for n in (1, 2, 3):
    est, err = monte_carlo_success(k33, S * n, 0.5, 20_000, seed=2)
    print(f"K33 n={n}: estimate {est:.5f}   bound {lemma5_bound(S * n, 0.5, 3):.5f}")
