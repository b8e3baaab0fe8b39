"""Turning a run into a witness forest.

Every recolor step becomes a vertex labelled (edge, cycle). Nested calls hang
under the call that redrew their edge, and leaves pad every internal vertex
to |C| - 2 children. The canonical encoding of the forest determines the
sequence of steps.
"""
from __future__ import annotations

from acyclic_coloring import complete_bipartite_graph, run
from acyclic_coloring.witness import admissible_sequence_of, build_forest, check_properties, encode_forest, format_forest

g = complete_bipartite_graph(3, 3)
_, record, _ = run(g, 0.3, 77)
F = build_forest(record, g)
print(format_forest(F))
print("property violations:", check_properties(F, g, record) or "none")
print("internal vertices:", F.internal_count, "= steps:", len(record))
print("encoding:", encode_forest(F).decode())

print("\nadmissible sequence read off the forest:")
for t in admissible_sequence_of(F, g):
    print(f"  ({t.first}, {t.second}, k={t.k})")

# injectivity in practice: distinct step sequences never share an encoding
seen = {}
for seed in range(5000):
    _, rec, _ = run(g, 0.3, seed)
    seen.setdefault(encode_forest(build_forest(rec, g)), set()).add(rec.labels())
print(f"\n5000 runs: {len(seen)} encodings, collisions: {sum(len(v) > 1 for v in seen.values())}")
