"""Select maximally independent committees from social graphs.

A committee is a fixed-size set of nodes; its quality is the
geodesic-distance independence of its members. The package provides
the graph layer (loading, distances, network metrics), the fitness,
an adaptive BPSO + local-search hybrid solver with four baselines,
and a seeded benchmark harness, all behind one CLI.
"""

__version__ = "0.1.0"

from committee_select.bandit import BanditState, relative_reward
from committee_select.bench import ExperimentPlan, cell_seed, run_plan, summarize
from committee_select.bpso import SwarmConfig, repair_to_size, sigmoid
from committee_select.fitness import (
    Committee,
    FitnessEvaluator,
    FitnessValue,
    fitness,
    random_committee,
)
from committee_select.graph import (
    DisconnectedGraphError,
    Graph,
    GraphLoadError,
    GraphMetrics,
    UnreachablePairError,
    centralities,
    degree_histogram,
    global_metrics,
    load_edge_list,
    pairwise_distances,
    shortest_path_lengths,
    write_edge_list,
)
from committee_select.local_search import (
    AnnealConfig,
    HillClimbConfig,
    acceptance_probability,
    hill_climb,
    simulated_annealing,
    swap_neighbor,
)
from committee_select.solvers import (
    ALGORITHMS,
    GAConfig,
    SolveResult,
    SolverConfig,
    run,
    run_baseline,
    run_hybrid,
    stop_criterion,
)

__all__ = [
    "ALGORITHMS",
    "AnnealConfig",
    "BanditState",
    "Committee",
    "DisconnectedGraphError",
    "ExperimentPlan",
    "FitnessEvaluator",
    "FitnessValue",
    "GAConfig",
    "Graph",
    "GraphLoadError",
    "GraphMetrics",
    "HillClimbConfig",
    "SolveResult",
    "SolverConfig",
    "SwarmConfig",
    "UnreachablePairError",
    "acceptance_probability",
    "cell_seed",
    "centralities",
    "degree_histogram",
    "fitness",
    "global_metrics",
    "hill_climb",
    "load_edge_list",
    "pairwise_distances",
    "random_committee",
    "relative_reward",
    "repair_to_size",
    "run",
    "run_baseline",
    "run_hybrid",
    "run_plan",
    "shortest_path_lengths",
    "sigmoid",
    "simulated_annealing",
    "stop_criterion",
    "summarize",
    "swap_neighbor",
    "write_edge_list",
]
