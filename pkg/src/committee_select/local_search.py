"""Local searches over committees with a single-member swap neighborhood.

Both searches honor a strict evaluation budget and return the best
committee ever visited, so the result can never be worse than the
start. An optional observer callback receives (step, best_fitness,
evaluations_used) after every proposal, which the solver layer uses to
build convergence traces.
"""

import math
from dataclasses import dataclass

# Instance sizes up to this many (node, member) combinations get an
# exhaustive one-swap scan with a local-optimum stop instead of random
# proposals.
EXHAUSTIVE_SCAN_LIMIT = 512


@dataclass
class HillClimbConfig:
    max_iterations: int = 3000

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class AnnealConfig:
    temp_max: float = 1000.0
    temp_min: float = 1.0
    cooling_rate: float = 0.99
    moves_per_temp: int = 1
    max_evaluations: int | None = None  # extra cap for budgeted hybrid calls

    def __post_init__(self):
        if not 0 < self.temp_min < self.temp_max:
            raise ValueError("need 0 < temp_min < temp_max")
        if not 0 < self.cooling_rate < 1:
            raise ValueError("cooling_rate must be in (0, 1)")
        if self.moves_per_temp < 1:
            raise ValueError("moves_per_temp must be >= 1")

    def temperature_steps(self):
        """Number of cooling steps before the temperature floor is crossed."""
        steps = 0
        t = self.temp_max
        while t >= self.temp_min:
            steps += 1
            t *= self.cooling_rate
        return steps


def swap_neighbor(committee, g, rng):
    """Replace one uniformly chosen member with a uniform non-member."""
    if committee.k >= g.node_count:
        raise ValueError("no non-member exists to swap in")
    members = committee.members
    out_member = members[int(rng.integers(len(members)))]
    member_set = set(members)
    while True:
        candidate = int(rng.integers(g.node_count))
        if candidate not in member_set:
            return committee.replace(out_member, candidate)


def hill_climb(start, g, diameter, cfg, rng, evaluator, start_fitness=None,
               observer=None):
    """First-improvement hill climbing from `start`.

    Small instances (node_count * k <= EXHAUSTIVE_SCAN_LIMIT) scan the
    full one-swap neighborhood in deterministic order and stop at a
    local optimum; larger ones take random swap proposals. At most
    cfg.max_iterations neighbor evaluations are spent either way.
    """
    current = start
    current_fit = start_fitness if start_fitness is not None else evaluator.evaluate(start)
    budget = cfg.max_iterations
    used = 0

    if g.node_count * start.k <= EXHAUSTIVE_SCAN_LIMIT:
        improved = True
        while improved and used < budget:
            improved = False
            member_set = set(current.members)
            for out_member in current.members:
                for in_member in range(g.node_count):
                    if in_member in member_set:
                        continue
                    if used >= budget:
                        break
                    candidate = current.replace(out_member, in_member)
                    fit = evaluator.evaluate(candidate)
                    used += 1
                    if fit.value > current_fit.value:
                        current, current_fit = candidate, fit
                        improved = True
                    if observer is not None:
                        observer(used, current_fit, used)
                    if improved:
                        break
                if improved or used >= budget:
                    break
    else:
        while used < budget:
            candidate = swap_neighbor(current, g, rng)
            fit = evaluator.evaluate(candidate)
            used += 1
            if fit.value > current_fit.value:
                current, current_fit = candidate, fit
            if observer is not None:
                observer(used, current_fit, used)
    return current, current_fit


def acceptance_probability(f_current, f_neighbor, temperature):
    """1 for non-worsening moves, else exp(-(loss)/temperature)."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    if f_neighbor >= f_current:
        return 1.0
    return math.exp(-(f_current - f_neighbor) / temperature)


def simulated_annealing(start, g, diameter, cfg, rng, evaluator,
                        start_fitness=None, observer=None):
    """Geometric-cooling annealing; returns the best committee visited.

    Worsening moves are accepted with probability
    exp(-loss/temperature); the walk itself may drift downhill but the
    returned solution is the best ever seen, never below the start.
    """
    current = start
    current_fit = start_fitness if start_fitness is not None else evaluator.evaluate(start)
    best, best_fit = current, current_fit
    used = 0
    cap = cfg.max_evaluations if cfg.max_evaluations is not None else math.inf

    temperature = cfg.temp_max
    while temperature >= cfg.temp_min and used < cap:
        for _ in range(cfg.moves_per_temp):
            if used >= cap:
                break
            candidate = swap_neighbor(current, g, rng)
            fit = evaluator.evaluate(candidate)
            used += 1
            if rng.random() < acceptance_probability(
                current_fit.value, fit.value, temperature
            ):
                current, current_fit = candidate, fit
                if fit.value > best_fit.value:
                    best, best_fit = candidate, fit
            if observer is not None:
                observer(used, best_fit, used)
        temperature *= cfg.cooling_rate
    return best, best_fit
