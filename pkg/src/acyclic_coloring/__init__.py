"""Randomized acyclic edge coloring with ``ceil((2 + gamma)(Delta - 1)) + 1``
colors, its witness-forest bookkeeping, the validation algorithm, and the
generating-function bound that makes ``gamma = 1.569`` sufficient.
"""
from .bicycle import (
    badly_colored_edges,
    bichromatic_cycle_through,
    brute_force_acyclic,
    is_acyclic_proper,
    smallest_bichromatic_cycle,
)
from .bounds import gamma_threshold, phi_E, q_sequence, rho, weight_wk
from .engine import ExecutionRecord, RunStats, StepRecord, recolor, run, seed_of
from .errors import InvariantViolation, StepCapExceeded
from .graph import (
    Cycle,
    Graph,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_cycles_upto,
    generate_random_regular,
    hypercube_graph,
    parse_graph,
    path_graph,
    read_graph,
)
from .palette import (
    ColoringState,
    RandomStream,
    ScriptedStream,
    assign_random,
    available_colors,
    initial_coloring,
    num_colors,
    quota,
)
from .validator import (
    colorval_run,
    is_admissible,
    lemma5_bound,
    lemma5_simplified_bound,
    monte_carlo_success,
)
from .witness import (
    AdmissibleTriple,
    WitnessForest,
    admissible_sequence_of,
    build_forest,
    check_properties,
    encode_forest,
)

__version__ = "0.1.0"
