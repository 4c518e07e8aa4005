import math

import numpy as np
import pytest

import oracles
from committee_select import (
    FitnessEvaluator,
    Graph,
    SwarmConfig,
    repair_to_size,
    sigmoid,
)
from committee_select.bpso import init_swarm, swarm_step, update_particle


def make_swarm(g, k, seed, **cfg_kwargs):
    cfg = SwarmConfig(**cfg_kwargs)
    rng = np.random.default_rng(seed)
    ev = FitnessEvaluator(g, 3)
    return init_swarm(g, k, cfg, rng, ev), ev


class TestSigmoid:
    def test_zero(self):
        assert sigmoid(0.0) == 0.5

    def test_clamp_endpoints(self):
        assert sigmoid(6.0) == pytest.approx(0.99753, abs=1e-5)
        assert sigmoid(-6.0) == pytest.approx(0.00247, abs=1e-5)

    def test_strictly_increasing(self):
        vs = np.linspace(-6, 6, 200)
        ps = sigmoid(vs)
        assert (np.diff(ps) > 0).all()

    def test_symmetry_and_bounds(self):
        vs = np.linspace(-6, 6, 500)
        ps = sigmoid(vs)
        assert ((ps > 0.0024) & (ps < 0.9976)).all()
        np.testing.assert_allclose(sigmoid(-vs), 1 - ps, atol=1e-12)


class TestRepair:
    def test_feasible_unchanged(self, rng):
        bits = np.zeros(12, dtype=np.uint8)
        bits[[1, 4, 7, 9]] = 1
        out = repair_to_size(bits.copy(), 4, rng)
        assert np.array_equal(out, bits)

    def test_surplus_cleared_within_support(self, rng):
        bits = np.zeros(14, dtype=np.uint8)
        bits[[1, 4, 7, 9, 12]] = 1
        out = repair_to_size(bits, 4, rng)
        assert out.sum() == 4
        assert set(np.flatnonzero(out)) <= {1, 4, 7, 9, 12}

    def test_deficit_filled(self, rng):
        bits = np.zeros(10, dtype=np.uint8)
        out = repair_to_size(bits, 3, rng)
        assert out.sum() == 3

    def test_untouched_bits_preserved(self, rng):
        bits = np.zeros(10, dtype=np.uint8)
        bits[[2, 5]] = 1
        out = repair_to_size(bits, 3, rng)
        assert out[2] == 1 and out[5] == 1 and out.sum() == 3

    def test_k_too_large(self, rng):
        with pytest.raises(ValueError):
            repair_to_size(np.zeros(3, dtype=np.uint8), 4, rng)


class TestSwarmConfig:
    def test_defaults(self):
        cfg = SwarmConfig()
        assert cfg.inertia == 2.0
        assert cfg.cognitive_coeff == 2.0
        assert cfg.social_coeff == 2.0
        assert cfg.velocity_clamp == 6.0
        assert cfg.population == 30
        assert cfg.max_iterations == 500
        assert cfg.topology == "global"

    def test_validation(self):
        with pytest.raises(ValueError):
            SwarmConfig(population=1)
        with pytest.raises(ValueError):
            SwarmConfig(velocity_clamp=0)
        with pytest.raises(ValueError):
            SwarmConfig(topology="mesh")


class TestUpdateParticle:
    def test_velocity_clamped(self, p4, rng):
        swarm, ev = make_swarm(p4, 2, 0, population=3)
        p = swarm.particles[0]
        p.velocity = np.full(4, 100.0)
        update_particle(p, swarm.global_best_committee, 2, swarm.config, rng, ev)
        assert (np.abs(p.velocity) <= 6.0).all()

    def test_zero_velocity_at_consensus_stays_zero(self, p4):
        # pbest == guide == position forces zero velocity through the update
        swarm, ev = make_swarm(p4, 2, 1, population=3)
        p = swarm.particles[0]
        p.velocity = np.zeros(4)
        guide = p.best_committee
        bits = np.zeros(4, dtype=np.uint8)
        bits[list(guide.members)] = 1
        p.position = bits.copy()
        rng = np.random.default_rng(5)
        update_particle(p, guide, 2, swarm.config, rng, ev)
        assert (p.velocity == 0).all()
        assert p.position.sum() == 2

    def test_deterministic_given_seed(self, p4):
        results = []
        for _ in range(2):
            swarm, ev = make_swarm(p4, 2, 3, population=3)
            p = swarm.particles[1]
            rng = np.random.default_rng(99)
            update_particle(p, swarm.global_best_committee, 2, swarm.config,
                            rng, ev)
            results.append((p.position.copy(), p.velocity.copy()))
        assert np.array_equal(results[0][0], results[1][0])
        assert np.array_equal(results[0][1], results[1][1])


class TestSwarmStep:
    def test_positions_feasible_after_step(self, triangle, rng):
        swarm, ev = make_swarm(triangle, 2, 7, population=2)
        swarm_step(swarm, ev)
        for p in swarm.particles:
            assert p.position.sum() == 2

    def test_global_best_monotone(self, rng):
        g = Graph.from_edges(oracles.random_connected_edges(rng, 12))
        for seed in range(10):
            cfg = SwarmConfig(population=6)
            r = np.random.default_rng(seed)
            ev = FitnessEvaluator(g, 4)
            swarm = init_swarm(g, 3, cfg, r, ev)
            prev = swarm.global_best_fitness.value
            for _ in range(15):
                swarm_step(swarm, ev)
                assert swarm.global_best_fitness.value >= prev
                prev = swarm.global_best_fitness.value

    def test_optimal_swarm_stays_optimal(self, p4):
        swarm, ev = make_swarm(p4, 2, 11, population=4)
        from committee_select import Committee

        best = Committee((0, 3))
        swarm.global_best_committee = best
        swarm.global_best_fitness = ev.evaluate(best)
        for _ in range(5):
            swarm_step(swarm, ev)
        assert swarm.global_best_fitness.value == 1.0
        assert swarm.global_best_committee == best

    def test_fixed_seed_identical_trace(self, rng):
        g = Graph.from_edges(oracles.random_connected_edges(rng, 10))
        traces = []
        for _ in range(2):
            cfg = SwarmConfig(population=4)
            r = np.random.default_rng(17)
            ev = FitnessEvaluator(g, 4)
            swarm = init_swarm(g, 3, cfg, r, ev)
            trace = [swarm.global_best_fitness.value]
            for _ in range(10):
                swarm_step(swarm, ev)
                trace.append(swarm.global_best_fitness.value)
            traces.append(trace)
        assert traces[0] == traces[1]

    def test_velocity_bound_holds_over_many_steps(self, rng):
        g = Graph.from_edges(oracles.random_connected_edges(rng, 10))
        cfg = SwarmConfig(population=4)
        r = np.random.default_rng(23)
        ev = FitnessEvaluator(g, 4)
        swarm = init_swarm(g, 3, cfg, r, ev)
        for _ in range(50):
            swarm_step(swarm, ev)
            for p in swarm.particles:
                assert (np.abs(p.velocity) <= 6.0).all()

    def test_ring_topology_runs_and_improves(self, rng):
        g = Graph.from_edges([(i, i + 1) for i in range(5)])
        cfg = SwarmConfig(population=5, topology="ring")
        r = np.random.default_rng(3)
        ev = FitnessEvaluator(g, 5)
        swarm = init_swarm(g, 2, cfg, r, ev)
        for _ in range(30):
            swarm_step(swarm, ev)
        assert swarm.global_best_fitness.value == 1.0
        assert swarm.iteration == 30
