"""Binary particle swarm optimization over committee membership bits.

Each particle is a binary membership vector plus a real velocity
vector. Velocities follow the classic inertia/cognitive/social update
and are clamped; positions are resampled bitwise through a sigmoid of
the velocity, then repaired back to exactly k set bits.
"""

from dataclasses import dataclass

import numpy as np

from committee_select.fitness import Committee, random_committee


@dataclass
class SwarmConfig:
    inertia: float = 2.0
    cognitive_coeff: float = 2.0
    social_coeff: float = 2.0
    velocity_clamp: float = 6.0
    population: int = 30
    max_iterations: int = 500
    topology: str = "global"  # "global" or "ring"

    def __post_init__(self):
        if min(self.inertia, self.cognitive_coeff, self.social_coeff) < 0:
            raise ValueError("inertia and learning coefficients must be >= 0")
        if self.velocity_clamp <= 0:
            raise ValueError("velocity_clamp must be positive")
        if self.population < 2:
            raise ValueError("population must be at least 2")
        if self.topology not in ("global", "ring"):
            raise ValueError(f"unknown topology {self.topology!r}")


@dataclass
class Particle:
    position: np.ndarray  # uint8 membership bits, exactly k ones
    velocity: np.ndarray  # float64, clamped entrywise
    best_committee: Committee
    best_fitness: object  # FitnessValue
    best_bits: np.ndarray = None  # cached bit form of best_committee


@dataclass
class Swarm:
    particles: list
    k: int
    config: SwarmConfig
    rng: np.random.Generator
    global_best_committee: Committee
    global_best_fitness: object
    iteration: int = 0


def sigmoid(v):
    """Logistic transform of velocity into a bit-set probability."""
    return 1.0 / (1.0 + np.exp(-v))


def repair_to_size(position, k, rng):
    """Force exactly k set bits, flipping a random surplus or deficit.

    Bits not chosen for flipping are left untouched, so a feasible
    position passes through unchanged.
    """
    n = position.shape[0]
    if k > n:
        raise ValueError(f"k={k} exceeds vector length {n}")
    ones = np.flatnonzero(position)
    if ones.size > k:
        drop = rng.permutation(ones.size)[: ones.size - k]
        position[ones[drop]] = 0
    elif ones.size < k:
        zeros = np.flatnonzero(position == 0)
        add = rng.permutation(zeros.size)[: k - ones.size]
        position[zeros[add]] = 1
    return position


def _bits_of(committee, n):
    bits = np.zeros(n, dtype=np.uint8)
    bits[list(committee.members)] = 1
    return bits


def init_swarm(g, k, cfg, rng, evaluator):
    """Random committees as positions, velocities uniform in [-1, 1]."""
    particles = []
    for _ in range(cfg.population):
        committee = random_committee(g, k, rng)
        position = _bits_of(committee, g.node_count)
        velocity = rng.uniform(-1.0, 1.0, g.node_count)
        fit = evaluator.evaluate(committee)
        particles.append(
            Particle(position, velocity, committee, fit, position.copy())
        )
    best = max(particles, key=lambda p: p.best_fitness.value)
    return Swarm(
        particles=particles,
        k=k,
        config=cfg,
        rng=rng,
        global_best_committee=best.best_committee,
        global_best_fitness=best.best_fitness,
    )


def update_particle(p, guide_committee, k, cfg, rng, evaluator,
                    guide_bits=None):
    """One velocity/position/repair/evaluate cycle for a single particle.

    The guide committee is the swarm-level attractor (global best, or
    the ring-neighborhood best under the ring topology); callers that
    update a whole generation pass its bit form once via guide_bits.
    """
    n = p.position.shape[0]
    if p.best_bits is None:
        p.best_bits = _bits_of(p.best_committee, n)
    if guide_bits is None:
        guide_bits = _bits_of(guide_committee, n)
    pos = p.position.astype(np.float64)
    r1 = rng.random(n)
    r2 = rng.random(n)
    v = (
        cfg.inertia * p.velocity
        + cfg.cognitive_coeff * r1 * (p.best_bits - pos)
        + cfg.social_coeff * r2 * (guide_bits - pos)
    )
    np.maximum(v, -cfg.velocity_clamp, out=v)
    np.minimum(v, cfg.velocity_clamp, out=v)
    p.velocity = v
    draws = rng.random(n)
    p.position = (draws < sigmoid(v)).view(np.uint8)
    repair_to_size(p.position, k, rng)
    committee = Committee(tuple(np.flatnonzero(p.position).tolist()))
    fit = evaluator.evaluate(committee)
    if fit.value > p.best_fitness.value:
        p.best_committee = committee
        p.best_fitness = fit
        p.best_bits = p.position.copy()
    return p


def _ring_bests(snapshot):
    pop = len(snapshot)
    guides = []
    for i in range(pop):
        ring = (snapshot[(i - 1) % pop], snapshot[i], snapshot[(i + 1) % pop])
        guides.append(max(ring, key=lambda cf: cf[1].value)[0])
    return guides


def swarm_step(swarm, evaluator):
    """One synchronous generation; guides frozen at generation start."""
    cfg = swarm.config
    n = swarm.particles[0].position.shape[0]
    if cfg.topology == "ring":
        snapshot = [(p.best_committee, p.best_fitness) for p in swarm.particles]
        guides = _ring_bests(snapshot)
        guide_bits = [_bits_of(gc, n) for gc in guides]
    else:
        guides = [swarm.global_best_committee] * len(swarm.particles)
        guide_bits = [_bits_of(swarm.global_best_committee, n)] * len(swarm.particles)
    for p, guide, bits in zip(swarm.particles, guides, guide_bits):
        update_particle(p, guide, swarm.k, cfg, swarm.rng, evaluator,
                        guide_bits=bits)
    best = max(swarm.particles, key=lambda p: p.best_fitness.value)
    if best.best_fitness.value > swarm.global_best_fitness.value:
        swarm.global_best_committee = best.best_committee
        swarm.global_best_fitness = best.best_fitness
    swarm.iteration += 1
    return swarm
