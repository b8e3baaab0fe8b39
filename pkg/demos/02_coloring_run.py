"""Coloring a random cubic graph, and watching recursion happen.

With the default gamma the algorithm rarely has to recolor anything. Shrinking
gamma to 0.3 leaves only K = 2 colors to sample from, and the recolor
procedure starts doing real work.
"""
from __future__ import annotations

from collections import Counter

from acyclic_coloring import complete_bipartite_graph, generate_random_regular, is_acyclic_proper, run

g = generate_random_regular(200, 3, seed=1)
state, record, stats = run(g, 1.569, seed=1)
print(f"n={g.n} m={g.m} N={state.n_colors} K={state.quota}")
print(f"steps={stats.n_steps} phases={stats.n_phases} instants={stats.instants} acyclic={stats.verified}")
print("color histogram:", sorted(Counter(state.color).items()))

k33 = complete_bipartite_graph(3, 3)
depths = Counter()
for seed in range(2000):
    _, rec, st = run(k33, 0.3, seed)
    assert st.verified
    depths[len(rec)] += 1
print("\nK33 at gamma=0.3, distribution of the number of recolor steps:")
for k in sorted(depths):
    print(f"  {k:2d} steps: {depths[k]:4d} runs")

# a run with a nested call: the second step was made from inside the first
_, rec, _ = run(k33, 0.3, 77)
for i, s in enumerate(rec.steps):
    print(f"step {i}: edge {s.edge} cycle {s.cycle.edges} seed {s.seed} parent {s.parent}")
print("final coloring acyclic:", is_acyclic_proper(run(k33, 0.3, 77)[0], k33))
