import json
from pathlib import Path

import pytest

import oracles
from committee_select.cli import main


@pytest.fixture
def graph_file(tmp_path, rng):
    edges = oracles.random_connected_edges(rng, 10)
    path = tmp_path / "g.txt"
    path.write_text("\n".join(f"{u} {v}" for u, v in edges) + "\n")
    return str(path)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("0 1\n1 2\n2 3\n")
    return str(path)


class TestUsageErrors:
    def test_no_command(self, capsys):
        assert main([]) == 1

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_unknown_flag(self, graph_file, capsys):
        assert main(["metrics", graph_file, "--frobnicate"]) == 1

    def test_k_below_two(self, p4_file, capsys):
        code = main(["solve", p4_file, "--k", "1", "--seed", "0"])
        assert code == 1
        assert "at least 2" in capsys.readouterr().err

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert main(["solve", "--help"]) == 0


class TestDataErrors:
    def test_missing_graph(self, tmp_path, capsys):
        assert main(["metrics", str(tmp_path / "nope.txt")]) == 2

    def test_disconnected_without_flag(self, tmp_path, capsys):
        path = tmp_path / "d.txt"
        path.write_text("0 1\n2 3\n")
        assert main(["metrics", str(path)]) == 2
        assert "largest" in capsys.readouterr().err

    def test_disconnected_with_flag_ok(self, tmp_path, capsys):
        path = tmp_path / "d.txt"
        path.write_text("0 1\n1 2\n5 6\n")
        assert main(["metrics", str(path), "--largest-component"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["node_count"] == 3


class TestMetrics:
    def test_p4_document(self, p4_file, capsys):
        assert main(["metrics", p4_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["node_count"] == 4
        assert doc["edge_count"] == 3
        assert doc["diameter"] == 3
        assert doc["average_degree"] == 1.5

    def test_committee_centralities_in_original_ids(self, tmp_path, capsys):
        path = tmp_path / "p3.txt"
        path.write_text("10 20\n20 30\n")
        assert main(["metrics", str(path), "--committee", "20,10"]) == 0
        doc = json.loads(capsys.readouterr().out)
        rows = {r["node"]: r for r in doc["committee_centralities"]}
        assert rows[20]["degree"] == 2
        assert rows[20]["betweenness"] == 1.0
        assert rows[10]["betweenness"] == 0.0

    def test_out_file(self, p4_file, tmp_path, capsys):
        out = tmp_path / "m.json"
        assert main(["metrics", p4_file, "--out", str(out)]) == 0
        assert json.loads(out.read_text())["diameter"] == 3


class TestDegreeHist:
    def test_star_histogram(self, tmp_path, capsys):
        path = tmp_path / "star.txt"
        path.write_text("0 1\n0 2\n0 3\n")
        assert main(["degree-hist", str(path)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "degree,count"
        assert out[1:] == ["1,3", "3,1"]


class TestSolve:
    def test_result_file_and_rerun_identical(self, p4_file, tmp_path, capsys):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        args = ["solve", p4_file, "--k", "2", "--algo", "hybrid", "--seed", "7",
                "--iters", "10", "--population", "5"]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        doc = json.loads(out1.read_text())
        assert doc["best_committee"] == [0, 3]
        assert doc["best_fitness"]["value"] == 1.0
        m1 = oracles.mask_result_json(out1.read_text())
        m2 = oracles.mask_result_json(out2.read_text())
        assert m1 == m2

    def test_seed_synthesized_and_printed(self, p4_file, tmp_path, capsys):
        args = ["solve", p4_file, "--k", "2", "--iters", "3",
                "--population", "4"]
        assert main(args) == 0
        err = capsys.readouterr().err
        assert "seed=" in err

    def test_all_algorithms_run(self, p4_file, capsys):
        for algo in ("hybrid", "bpso", "ga", "sa", "hc"):
            args = ["solve", p4_file, "--k", "2", "--algo", algo, "--seed", "1",
                    "--iters", "5", "--population", "4"]
            assert main(args) == 0, algo
            doc = json.loads(capsys.readouterr().out)
            assert doc["algorithm"] == algo

    def test_config_echo_present(self, p4_file, capsys):
        args = ["solve", p4_file, "--k", "2", "--seed", "3", "--iters", "2",
                "--population", "4", "--inertia", "0.9"]
        assert main(args) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["config"]["swarm"]["inertia"] == 0.9
        assert doc["config"]["seed"] == 3


class TestBench:
    def test_tiny_plan(self, graph_file, tmp_path, capsys):
        out = tmp_path / "bench"
        args = ["bench", graph_file, "--k", "2", "--algos", "hybrid,hc",
                "--runs", "2", "--seed", "5", "--iters", "4", "--workers", "1",
                "--out", str(out)]
        assert main(args) == 0
        assert (out / "summary.csv").exists()
        traces = list(out.glob("*_k2_*.csv"))
        assert len(traces) == 4


class TestHelpDefaults:
    def test_solve_help_shows_published_defaults(self, capsys):
        import re

        main(["solve", "--help"])
        # collapse argparse line wrapping before matching
        text = " ".join(capsys.readouterr().out.split())
        defaults = {
            "inertia": "2.0",
            "cognitive": "2.0",
            "social": "2.0",
            "vmax": "6.0",
            "hc-iters": "3000",
            "temp-max": "1000.0",
            "temp-min": "1.0",
            "cooling": "0.99",
            "exploration": "0.01",
        }
        for flag, value in defaults.items():
            pattern = rf"--{flag}\b.{{0,120}}?\(default: {re.escape(value)}\)"
            assert re.search(pattern, text), f"--{flag} default {value} not shown"
