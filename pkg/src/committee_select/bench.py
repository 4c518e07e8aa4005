"""Experiment harness: seeded (algorithm, k, run) grids over one graph.

Every cell's seed is a pure function of (base seed, algorithm, k, run
index), so plan order and worker count never change any trace. One
trace file is written per cell; the summary (final-fitness statistics
per algorithm and k, plus the hybrid's relative improvement over each
baseline) is recomputed from the trace files themselves so it is
reproducible from the artifacts alone. Failed cells are recorded and
skipped; the rest of the plan continues.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from committee_select.bpso import SwarmConfig
from committee_select.graph import global_metrics, load_edge_list
from committee_select.solvers import ALGORITHMS, SolverConfig, run
from committee_select.trace import format_float, read_trace, write_trace

# Stable per-algorithm component for cell seeding; never reorder.
ALGO_SEED_IDS = {"hybrid": 0, "bpso": 1, "ga": 2, "sa": 3, "hc": 4}

SUMMARY_HEADER = ["algorithm", "k", "runs", "mean", "std", "min", "max", "hybrid_gain"]


@dataclass
class ExperimentPlan:
    graph_path: str
    k_values: list
    algorithms: list
    out_dir: str
    runs: int = 5
    base_seed: int = 0
    iterations: int = 500
    ls_budget: int = 100
    workers: int = 1
    largest_component: bool = True

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if not self.algorithms:
            raise ValueError("need at least one algorithm")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}")
        for k in self.k_values:
            if k < 2:
                raise ValueError("k values must be >= 2")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def cells(self):
        return [
            (algo, k, run)
            for k in self.k_values
            for algo in self.algorithms
            for run in range(self.runs)
        ]


@dataclass
class PlanResult:
    out_dir: str
    trace_paths: list
    summary_path: str
    curves_path: str
    summary_rows: list
    failures: list = field(default_factory=list)


def cell_seed(base_seed, algorithm, k, run_index):
    """Deterministic per-cell seed, independent of plan order."""
    seq = np.random.SeedSequence(
        [int(base_seed), ALGO_SEED_IDS[algorithm], int(k), int(run_index)]
    )
    return int(seq.generate_state(1, np.uint64)[0])


def _cell_config(algorithm, k, seed, iterations, ls_budget):
    return SolverConfig(
        algorithm=algorithm,
        k=k,
        seed=seed,
        swarm=SwarmConfig(max_iterations=iterations),
        ls_budget=ls_budget,
    )


def trace_filename(algorithm, k, run_index, seed):
    return f"{algorithm}_k{k}_run{run_index:02d}_seed{seed}.csv"


# Worker-process state: the graph is loaded once per worker, not per cell.
_WORKER = {}


def _init_worker(graph_path, largest_component, diameter, graph_label):
    _WORKER["graph"] = load_edge_list(
        graph_path, restrict_to_largest_component=largest_component
    )
    _WORKER["diameter"] = diameter
    _WORKER["label"] = graph_label


def _run_cell(args):
    algorithm, k, run_index, seed, iterations, ls_budget, out_dir = args
    try:
        cfg = _cell_config(algorithm, k, seed, iterations, ls_budget)
        result = run(_WORKER["graph"], _WORKER["diameter"], cfg,
                     graph_label=_WORKER["label"])
        result.trace.run_index = run_index
        path = os.path.join(out_dir, trace_filename(algorithm, k, run_index, seed))
        write_trace(result.trace, path)
        return {"cell": (algorithm, k, run_index), "seed": seed, "path": path,
                "final": result.best_fitness.value, "error": None}
    except Exception as exc:
        return {"cell": (algorithm, k, run_index), "seed": seed, "path": None,
                "final": None, "error": f"{type(exc).__name__}: {exc}"}


def run_plan(plan):
    """Execute every cell, write traces, and summarize the final fitnesses."""
    os.makedirs(plan.out_dir, exist_ok=True)
    g = load_edge_list(plan.graph_path,
                       restrict_to_largest_component=plan.largest_component)
    diameter = global_metrics(g).diameter
    label = os.path.basename(str(plan.graph_path)).replace(" ", "_")

    tasks = [
        (algo, k, run_index,
         cell_seed(plan.base_seed, algo, k, run_index),
         plan.iterations, plan.ls_budget, plan.out_dir)
        for algo, k, run_index in plan.cells()
    ]

    if plan.workers == 1:
        _init_worker(plan.graph_path, plan.largest_component, diameter, label)
        outcomes = [_run_cell(t) for t in tasks]
    else:
        with ProcessPoolExecutor(
            max_workers=plan.workers,
            initializer=_init_worker,
            initargs=(plan.graph_path, plan.largest_component, diameter, label),
        ) as pool:
            outcomes = list(pool.map(_run_cell, tasks))

    failures = [o for o in outcomes if o["error"] is not None]
    trace_paths = sorted(o["path"] for o in outcomes if o["path"] is not None)
    if failures:
        _write_failures(plan.out_dir, failures)

    traces = [read_trace(p) for p in trace_paths]
    summary_rows = summarize(traces)
    summary_path = os.path.join(plan.out_dir, "summary.csv")
    curves_path = os.path.join(plan.out_dir, "curves.csv")
    _write_summary(summary_rows, summary_path, plan)
    _write_curves(traces, curves_path)
    return PlanResult(
        out_dir=plan.out_dir,
        trace_paths=trace_paths,
        summary_path=summary_path,
        curves_path=curves_path,
        summary_rows=summary_rows,
        failures=failures,
    )


def summarize(traces):
    """Final-fitness statistics per (algorithm, k) from run traces.

    All traces must come from the same graph. Returns rows sorted by
    (algorithm, k); std is the population standard deviation. Baseline
    rows carry the hybrid's relative improvement over them
    ((hybrid_mean - mean) / mean) when hybrid runs are present.
    """
    if not traces:
        raise ValueError("no traces to summarize")
    labels = {t.graph_label for t in traces}
    if len(labels) > 1:
        raise ValueError(f"traces come from different graphs: {sorted(labels)}")

    groups = {}
    for t in traces:
        groups.setdefault((t.algorithm, t.k), []).append(t.final_best_fitness)

    hybrid_means = {
        k: float(np.mean(v)) for (algo, k), v in groups.items() if algo == "hybrid"
    }
    rows = []
    for (algo, k) in sorted(groups):
        finals = np.array(groups[(algo, k)], dtype=np.float64)
        gain = None
        if algo != "hybrid" and k in hybrid_means:
            gain = (hybrid_means[k] - float(finals.mean())) / float(finals.mean())
        rows.append(
            {
                "algorithm": algo,
                "k": k,
                "runs": int(finals.size),
                "mean": float(finals.mean()),
                "std": float(finals.std()),  # population std (ddof=0)
                "min": float(finals.min()),
                "max": float(finals.max()),
                "hybrid_gain": gain,
            }
        )
    return rows


def mean_convergence_curves(traces):
    """Pointwise mean best fitness per iteration for each (algorithm, k).

    Runs that stopped early hold their final best fitness for the
    remaining iterations (a converged run's best no longer changes).
    """
    groups = {}
    for t in traces:
        groups.setdefault((t.algorithm, t.k), []).append(t)
    curves = {}
    for key, ts in sorted(groups.items()):
        horizon = max(t.rows[-1].iteration for t in ts)
        acc = np.zeros(horizon + 1, dtype=np.float64)
        for t in ts:
            # rows cover contiguous iterations 0..last; beyond that the
            # run has stopped and its best stays at the final value
            series = np.full(horizon + 1, t.rows[-1].best_fitness)
            for r in t.rows:
                series[r.iteration] = r.best_fitness
            acc += series
        curves[key] = acc / len(ts)
    return curves


def _write_failures(out_dir, failures):
    path = os.path.join(out_dir, "failures.csv")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("algorithm,k,run,seed,error\n")
        for f in failures:
            algo, k, run_index = f["cell"]
            err = f["error"].replace(",", ";")
            fh.write(f"{algo},{k},{run_index},{f['seed']},{err}\n")
    return path


def _write_summary(rows, path, plan):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# final best-fitness summary; std is the population standard deviation\n")
        fh.write(
            f"# base_seed={plan.base_seed} iterations={plan.iterations} "
            f"runs={plan.runs} ls_budget={plan.ls_budget}\n"
        )
        fh.write(",".join(SUMMARY_HEADER) + "\n")
        for r in rows:
            gain = "" if r["hybrid_gain"] is None else format_float(r["hybrid_gain"])
            fh.write(
                f"{r['algorithm']},{r['k']},{r['runs']},{format_float(r['mean'])},"
                f"{format_float(r['std'])},{format_float(r['min'])},"
                f"{format_float(r['max'])},{gain}\n"
            )


def _write_curves(traces, path):
    curves = mean_convergence_curves(traces)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("algorithm,k,iteration,mean_best_fitness\n")
        for (algo, k), series in sorted(curves.items()):
            for i, value in enumerate(series):
                fh.write(f"{algo},{k},{i},{format_float(float(value))}\n")
