"""Solver runs: the adaptive hybrid and the four baselines.

The hybrid interleaves one BPSO generation with one bandit-selected,
budget-bounded local search applied to the current global best; the
local search result replaces the global best when it improves it.
Baselines share the result and trace schema: plain BPSO (the hybrid
with local search disabled), standalone simulated annealing and hill
climbing at their full standalone budgets, and a generational GA.

Every run owns two independent RNG streams derived from its seed, one
for the population algorithm and one for local search proposals, so a
hybrid run and a plain BPSO run with the same seed share identical
swarm randomness.
"""

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from committee_select.bandit import BanditState, relative_reward
from committee_select.bpso import SwarmConfig, init_swarm, swarm_step
from committee_select.fitness import Committee, FitnessEvaluator, random_committee
from committee_select.graph import DisconnectedGraphError, is_connected
from committee_select.local_search import (
    AnnealConfig,
    HillClimbConfig,
    hill_climb,
    simulated_annealing,
    swap_neighbor,
)
from committee_select.trace import RunTrace

ALGORITHMS = ("hybrid", "bpso", "ga", "sa", "hc")
LOCAL_SEARCH_ARMS = ("hc", "sa")


@dataclass
class GAConfig:
    population: int = 50
    tournament_size: int = 2
    mutation_rate: float = 0.1
    elitism: int = 1

    def __post_init__(self):
        if self.population < 2:
            raise ValueError("population must be at least 2")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if not 0 <= self.mutation_rate <= 1:
            raise ValueError("mutation_rate must be in [0, 1]")
        if not 0 <= self.elitism < self.population:
            raise ValueError("elitism must be in [0, population)")


@dataclass
class SolverConfig:
    algorithm: str = "hybrid"
    k: int = 3
    seed: int = 0
    swarm: SwarmConfig = field(default_factory=SwarmConfig)
    hill: HillClimbConfig = field(default_factory=HillClimbConfig)
    anneal: AnnealConfig = field(default_factory=AnnealConfig)
    ga: GAConfig = field(default_factory=GAConfig)
    exploration_scale: float = 0.01  # bandit scaling factor
    ls_budget: int = 100  # evaluations per local-search call inside the hybrid

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.ls_budget < 0:
            raise ValueError("ls_budget must be >= 0")

    def echo(self):
        d = asdict(self)
        return d


@dataclass
class SolveResult:
    algorithm: str
    k: int
    seed: int
    best_members: tuple  # internal node ids
    best_members_original: tuple  # ids from the source file
    best_fitness: object  # FitnessValue
    trace: RunTrace
    config: dict
    total_evaluations: int
    wall_time_s: float
    bandit_audit: list = field(default_factory=list)

    def as_dict(self):
        return {
            "algorithm": self.algorithm,
            "k": self.k,
            "seed": self.seed,
            "best_committee": list(self.best_members_original),
            "best_committee_internal": list(self.best_members),
            "best_fitness": self.best_fitness.as_dict(),
            "total_evaluations": self.total_evaluations,
            "wall_time_s": self.wall_time_s,
            "config": self.config,
            "bandit_audit": self.bandit_audit,
            "trace": self.trace.row_dicts(),
        }


def stop_criterion(iteration, max_iterations):
    """True once the iteration budget is spent."""
    return iteration >= max_iterations


def _rng_streams(seed):
    """Independent (main, local-search) generators for one run."""
    main = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 1])))
    local = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 2])))
    return main, local


def _check_inputs(g, cfg):
    if not is_connected(g):
        raise DisconnectedGraphError(
            "solver requires a connected graph; load with "
            "restrict_to_largest_component=True"
        )
    if cfg.k >= g.node_count:
        # swap moves need at least one non-member; k = n is the whole graph
        raise ValueError(
            f"k={cfg.k} must be smaller than the node count {g.node_count}"
        )


def _result(g, cfg, committee, fit, trace, evaluator, t0, audit=None):
    return SolveResult(
        algorithm=cfg.algorithm,
        k=cfg.k,
        seed=cfg.seed,
        best_members=committee.members,
        best_members_original=tuple(g.to_original(committee.members)),
        best_fitness=fit,
        trace=trace,
        config=cfg.echo(),
        total_evaluations=evaluator.evaluations,
        wall_time_s=time.perf_counter() - t0,
        bandit_audit=audit or [],
    )


def run_hybrid(g, diameter, cfg, graph_label=""):
    """BPSO generations interleaved with bandit-selected local search."""
    _check_inputs(g, cfg)
    t0 = time.perf_counter()
    rng_main, rng_local = _rng_streams(cfg.seed)
    evaluator = FitnessEvaluator(g, diameter)
    swarm = init_swarm(g, cfg.k, cfg.swarm, rng_main, evaluator)
    bandit = BanditState(len(LOCAL_SEARCH_ARMS), cfg.exploration_scale)
    audit = []
    trace = RunTrace(cfg.algorithm, cfg.k, cfg.seed, graph_label=graph_label)
    trace.append(0, swarm.global_best_fitness.value, "", evaluator.evaluations,
                 _ms(t0))

    iteration = 0
    while not stop_criterion(iteration, cfg.swarm.max_iterations):
        iteration += 1
        swarm_step(swarm, evaluator)
        arm_label = ""
        if cfg.ls_budget > 0:
            arm = bandit.select()
            arm_label = LOCAL_SEARCH_ARMS[arm]
            before = swarm.global_best_fitness
            improved, improved_fit = _apply_arm(
                arm_label, swarm.global_best_committee, before, g, diameter,
                cfg, rng_local, evaluator,
            )
            reward = relative_reward(before.value, improved_fit.value)
            bandit.update(arm, reward)
            audit.append(
                {
                    "iteration": iteration,
                    "arm": arm_label,
                    "reward": reward,
                    "quality": list(bandit.quality),
                }
            )
            if improved_fit.value > swarm.global_best_fitness.value:
                swarm.global_best_committee = improved
                swarm.global_best_fitness = improved_fit
        trace.append(iteration, swarm.global_best_fitness.value, arm_label,
                     evaluator.evaluations, _ms(t0))

    return _result(g, cfg, swarm.global_best_committee,
                   swarm.global_best_fitness, trace, evaluator, t0, audit)


def _apply_arm(arm_label, start, start_fit, g, diameter, cfg, rng, evaluator):
    if arm_label == "hc":
        budgeted = HillClimbConfig(max_iterations=cfg.ls_budget)
        return hill_climb(start, g, diameter, budgeted, rng, evaluator,
                          start_fitness=start_fit)
    anneal = AnnealConfig(
        temp_max=cfg.anneal.temp_max,
        temp_min=cfg.anneal.temp_min,
        cooling_rate=cfg.anneal.cooling_rate,
        moves_per_temp=cfg.anneal.moves_per_temp,
        max_evaluations=cfg.ls_budget,
    )
    return simulated_annealing(start, g, diameter, anneal, rng, evaluator,
                               start_fitness=start_fit)


def _ms(t0):
    return int((time.perf_counter() - t0) * 1000)


def run_baseline(g, diameter, cfg, graph_label=""):
    """Dispatch on cfg.algorithm: bpso, sa, hc, or ga."""
    _check_inputs(g, cfg)
    if cfg.algorithm == "bpso":
        return _run_bpso(g, diameter, cfg, graph_label)
    if cfg.algorithm == "sa":
        return _run_standalone_sa(g, diameter, cfg, graph_label)
    if cfg.algorithm == "hc":
        return _run_standalone_hc(g, diameter, cfg, graph_label)
    if cfg.algorithm == "ga":
        return _run_ga(g, diameter, cfg, graph_label)
    raise ValueError(f"not a baseline algorithm: {cfg.algorithm!r}")


def run(g, diameter, cfg, graph_label=""):
    """Run whichever algorithm the config names."""
    if cfg.algorithm == "hybrid":
        return run_hybrid(g, diameter, cfg, graph_label)
    return run_baseline(g, diameter, cfg, graph_label)


def _run_bpso(g, diameter, cfg, graph_label):
    """Plain BPSO: the hybrid loop with local search disabled."""
    t0 = time.perf_counter()
    rng_main, _ = _rng_streams(cfg.seed)
    evaluator = FitnessEvaluator(g, diameter)
    swarm = init_swarm(g, cfg.k, cfg.swarm, rng_main, evaluator)
    trace = RunTrace(cfg.algorithm, cfg.k, cfg.seed, graph_label=graph_label)
    trace.append(0, swarm.global_best_fitness.value, "", evaluator.evaluations,
                 _ms(t0))
    iteration = 0
    while not stop_criterion(iteration, cfg.swarm.max_iterations):
        iteration += 1
        swarm_step(swarm, evaluator)
        trace.append(iteration, swarm.global_best_fitness.value, "",
                     evaluator.evaluations, _ms(t0))
    return _result(g, cfg, swarm.global_best_committee,
                   swarm.global_best_fitness, trace, evaluator, t0)


def _run_standalone_sa(g, diameter, cfg, graph_label):
    t0 = time.perf_counter()
    rng_main, _ = _rng_streams(cfg.seed)
    evaluator = FitnessEvaluator(g, diameter)
    start = random_committee(g, cfg.k, rng_main)
    start_fit = evaluator.evaluate(start)
    trace = RunTrace(cfg.algorithm, cfg.k, cfg.seed, graph_label=graph_label)
    trace.append(0, start_fit.value, "", evaluator.evaluations, _ms(t0))

    def observer(step, best_fit, _used):
        trace.append(step, best_fit.value, "", evaluator.evaluations, _ms(t0))

    best, best_fit = simulated_annealing(
        start, g, diameter, cfg.anneal, rng_main, evaluator,
        start_fitness=start_fit, observer=observer,
    )
    return _result(g, cfg, best, best_fit, trace, evaluator, t0)


def _run_standalone_hc(g, diameter, cfg, graph_label):
    t0 = time.perf_counter()
    rng_main, _ = _rng_streams(cfg.seed)
    evaluator = FitnessEvaluator(g, diameter)
    start = random_committee(g, cfg.k, rng_main)
    start_fit = evaluator.evaluate(start)
    trace = RunTrace(cfg.algorithm, cfg.k, cfg.seed, graph_label=graph_label)
    trace.append(0, start_fit.value, "", evaluator.evaluations, _ms(t0))

    def observer(step, best_fit, _used):
        trace.append(step, best_fit.value, "", evaluator.evaluations, _ms(t0))

    best, best_fit = hill_climb(
        start, g, diameter, cfg.hill, rng_main, evaluator,
        start_fitness=start_fit, observer=observer,
    )
    return _result(g, cfg, best, best_fit, trace, evaluator, t0)


def _tournament(population, fitnesses, rng, size):
    picks = rng.integers(0, len(population), size=size)
    best = max(picks, key=lambda i: fitnesses[i].value)
    return population[best]


def _crossover_union(a, b, k, rng):
    union = sorted(set(a.members) | set(b.members))
    if len(union) == k:
        return Committee(tuple(union))
    chosen = rng.choice(len(union), size=k, replace=False)
    return Committee(tuple(union[i] for i in chosen))


def _run_ga(g, diameter, cfg, graph_label):
    """Generational GA: tournament parents, union-then-repair crossover,
    single-swap mutation, elite survival."""
    t0 = time.perf_counter()
    rng, _ = _rng_streams(cfg.seed)
    evaluator = FitnessEvaluator(g, diameter)
    ga = cfg.ga
    population = [random_committee(g, cfg.k, rng) for _ in range(ga.population)]
    fitnesses = [evaluator.evaluate(c) for c in population]
    best_i = max(range(ga.population), key=lambda i: fitnesses[i].value)
    best, best_fit = population[best_i], fitnesses[best_i]
    trace = RunTrace(cfg.algorithm, cfg.k, cfg.seed, graph_label=graph_label)
    trace.append(0, best_fit.value, "", evaluator.evaluations, _ms(t0))

    iteration = 0
    while not stop_criterion(iteration, cfg.swarm.max_iterations):
        iteration += 1
        elite_idx = sorted(range(ga.population),
                           key=lambda i: fitnesses[i].value, reverse=True)
        next_pop = [population[i] for i in elite_idx[: ga.elitism]]
        next_fit = [fitnesses[i] for i in elite_idx[: ga.elitism]]
        while len(next_pop) < ga.population:
            p1 = _tournament(population, fitnesses, rng, ga.tournament_size)
            p2 = _tournament(population, fitnesses, rng, ga.tournament_size)
            child = _crossover_union(p1, p2, cfg.k, rng)
            if rng.random() < ga.mutation_rate:
                child = swap_neighbor(child, g, rng)
            next_pop.append(child)
            next_fit.append(evaluator.evaluate(child))
        population, fitnesses = next_pop, next_fit
        gen_best = max(range(ga.population), key=lambda i: fitnesses[i].value)
        if fitnesses[gen_best].value > best_fit.value:
            best, best_fit = population[gen_best], fitnesses[gen_best]
        trace.append(iteration, best_fit.value, "", evaluator.evaluations,
                     _ms(t0))
    return _result(g, cfg, best, best_fit, trace, evaluator, t0)
