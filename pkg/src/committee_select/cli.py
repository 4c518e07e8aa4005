"""Command-line interface: metrics, solve, bench, degree-hist.

Batch-oriented and fully reproducible: every randomized subcommand
either takes --seed or synthesizes one and prints it. Exit codes:
0 success, 1 usage error, 2 data/graph error.
"""

import argparse
import json
import os
import secrets
import sys

from committee_select import __version__
from committee_select.bench import ExperimentPlan, run_plan
from committee_select.bpso import SwarmConfig
from committee_select.graph import (
    DisconnectedGraphError,
    GraphLoadError,
    UnreachablePairError,
    centralities,
    degree_histogram,
    global_metrics,
    load_edge_list,
)
from committee_select.local_search import AnnealConfig, HillClimbConfig
from committee_select.solvers import ALGORITHMS, GAConfig, SolverConfig, run

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this artifact reserves 2 for data errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _add_graph_options(sub):
    sub.add_argument("graph", help="edge-list file (two ids per line, '#' comments)")
    sub.add_argument("--largest-component", action="store_true",
                     help="keep only the largest connected component")


def _add_solver_options(sub):
    sub.add_argument("--iters", type=int, default=500,
                     help="swarm/GA generations (stop criterion)")
    sub.add_argument("--population", type=int, default=30, help="swarm size")
    sub.add_argument("--inertia", type=float, default=2.0,
                     help="velocity inertia coefficient")
    sub.add_argument("--cognitive", type=float, default=2.0,
                     help="personal-best learning coefficient")
    sub.add_argument("--social", type=float, default=2.0,
                     help="collective-best learning coefficient")
    sub.add_argument("--vmax", type=float, default=6.0, help="velocity clamp")
    sub.add_argument("--topology", choices=("global", "ring"), default="global",
                     help="swarm best-sharing topology")
    sub.add_argument("--hc-iters", type=int, default=3000,
                     help="standalone hill-climbing iteration budget")
    sub.add_argument("--temp-max", type=float, default=1000.0,
                     help="annealing start temperature")
    sub.add_argument("--temp-min", type=float, default=1.0,
                     help="annealing stop temperature")
    sub.add_argument("--cooling", type=float, default=0.99,
                     help="geometric cooling rate")
    sub.add_argument("--moves-per-temp", type=int, default=1,
                     help="annealing proposals per temperature")
    sub.add_argument("--exploration", type=float, default=0.01,
                     help="bandit exploration scaling factor")
    sub.add_argument("--ls-budget", type=int, default=100,
                     help="local-search evaluations per hybrid iteration (0 disables)")
    sub.add_argument("--ga-population", type=int, default=50, help="GA population")
    sub.add_argument("--ga-tournament", type=int, default=2, help="GA tournament size")
    sub.add_argument("--ga-mutation", type=float, default=0.1, help="GA mutation rate")
    sub.add_argument("--ga-elitism", type=int, default=1, help="GA elite survivors")


def build_parser():
    parser = _Parser(prog="committee-select",
                     description="Select maximally independent committees "
                                 "from a social graph.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_metrics = subs.add_parser(
        "metrics", help="whole-graph statistics, optionally with per-node "
        "centralities for a committee",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_graph_options(p_metrics)
    p_metrics.add_argument("--committee", default=None,
                           help="comma-separated original node ids to report "
                           "degree/betweenness/closeness for")
    p_metrics.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p_hist = subs.add_parser("degree-hist", help="degree histogram as CSV",
                             formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_graph_options(p_hist)
    p_hist.add_argument("--out", default=None, help="write CSV here instead of stdout")

    p_solve = subs.add_parser(
        "solve", help="run one seeded solve and write the result document",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_graph_options(p_solve)
    p_solve.add_argument("--k", type=int, required=True, help="committee size (>= 2)")
    p_solve.add_argument("--algo", choices=ALGORITHMS, default="hybrid")
    p_solve.add_argument("--seed", type=int, default=None,
                         help="RNG seed (synthesized and printed when omitted)")
    p_solve.add_argument("--out", default=None, help="write JSON here instead of stdout")
    _add_solver_options(p_solve)

    p_bench = subs.add_parser(
        "bench", help="run an (algorithm x k x run) experiment grid",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_graph_options(p_bench)
    p_bench.add_argument("--k", default="3,4,5",
                         help="comma-separated committee sizes")
    p_bench.add_argument("--algos", default=",".join(ALGORITHMS),
                         help="comma-separated algorithms")
    p_bench.add_argument("--runs", type=int, default=5, help="runs per cell")
    p_bench.add_argument("--seed", type=int, default=None,
                         help="base seed (synthesized and printed when omitted)")
    p_bench.add_argument("--iters", type=int, default=500,
                         help="swarm/GA generations per run")
    p_bench.add_argument("--ls-budget", type=int, default=100,
                         help="hybrid local-search evaluations per iteration")
    p_bench.add_argument("--workers", type=int, default=0,
                         help="parallel worker processes (0 = all cores)")
    p_bench.add_argument("--out", required=True, help="output directory")
    return parser


def _resolve_seed(seed):
    if seed is None:
        seed = secrets.randbits(32)
        print(f"seed={seed}", file=sys.stderr)
    return seed


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_metrics(args):
    g = load_edge_list(args.graph,
                       restrict_to_largest_component=args.largest_component)
    metrics = global_metrics(g)
    doc = {"node_count": g.node_count, "edge_count": g.edge_count}
    doc.update(metrics.as_dict())
    if args.committee:
        original = [int(x) for x in args.committee.split(",")]
        internal = g.to_internal(original)
        rows = centralities(g, internal)
        for row, orig in zip(rows, original):
            row["node"] = orig
        doc["committee_centralities"] = rows
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_degree_hist(args):
    g = load_edge_list(args.graph,
                       restrict_to_largest_component=args.largest_component)
    lines = ["degree,count"]
    lines += [f"{d},{c}" for d, c in degree_histogram(g)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _solver_config(args, algorithm, k, seed, iters, ls_budget):
    return SolverConfig(
        algorithm=algorithm,
        k=k,
        seed=seed,
        swarm=SwarmConfig(
            inertia=args.inertia,
            cognitive_coeff=args.cognitive,
            social_coeff=args.social,
            velocity_clamp=args.vmax,
            population=args.population,
            max_iterations=iters,
            topology=args.topology,
        ),
        hill=HillClimbConfig(max_iterations=args.hc_iters),
        anneal=AnnealConfig(
            temp_max=args.temp_max,
            temp_min=args.temp_min,
            cooling_rate=args.cooling,
            moves_per_temp=args.moves_per_temp,
        ),
        ga=GAConfig(
            population=args.ga_population,
            tournament_size=args.ga_tournament,
            mutation_rate=args.ga_mutation,
            elitism=args.ga_elitism,
        ),
        exploration_scale=args.exploration,
        ls_budget=ls_budget,
    )


def _cmd_solve(args):
    seed = _resolve_seed(args.seed)
    try:
        cfg = _solver_config(args, args.algo, args.k, seed, args.iters,
                             args.ls_budget)
    except ValueError as exc:
        print(f"committee-select solve: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    g = load_edge_list(args.graph,
                       restrict_to_largest_component=args.largest_component)
    diameter = global_metrics(g).diameter
    result = run(g, diameter, cfg, graph_label="cli")
    _emit(json.dumps(result.as_dict(), indent=2) + "\n", args.out)
    return 0


def _cmd_bench(args):
    seed = _resolve_seed(args.seed)
    workers = args.workers if args.workers > 0 else (os.cpu_count() or 1)
    try:
        plan = ExperimentPlan(
            graph_path=args.graph,
            k_values=[int(x) for x in args.k.split(",")],
            algorithms=[a.strip() for a in args.algos.split(",")],
            out_dir=args.out,
            runs=args.runs,
            base_seed=seed,
            iterations=args.iters,
            ls_budget=args.ls_budget,
            workers=workers,
            largest_component=args.largest_component,
        )
    except ValueError as exc:
        print(f"committee-select bench: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    result = run_plan(plan)
    print(f"wrote {len(result.trace_paths)} traces to {result.out_dir}")
    print(f"summary: {result.summary_path}")
    if result.failures:
        print(f"{len(result.failures)} cell(s) failed; see failures.csv",
              file=sys.stderr)
    for row in result.summary_rows:
        gain = ("" if row["hybrid_gain"] is None
                else f"  hybrid_gain={row['hybrid_gain']:+.4f}")
        print(f"  {row['algorithm']:>7} k={row['k']}: "
              f"mean={row['mean']:.6f} std={row['std']:.6f}{gain}")
    return 0


_COMMANDS = {
    "metrics": _cmd_metrics,
    "degree-hist": _cmd_degree_hist,
    "solve": _cmd_solve,
    "bench": _cmd_bench,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # -h/--version exit 0; usage errors exit 1
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return _COMMANDS[args.command](args)
    except (GraphLoadError, DisconnectedGraphError, UnreachablePairError) as exc:
        print(f"committee-select {args.command}: error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"committee-select {args.command}: error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except ValueError as exc:
        print(f"committee-select {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
