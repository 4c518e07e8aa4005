"""Per-iteration convergence traces and their tabular file format.

One trace = one seeded solver run. Files carry a single '#' metadata
comment line, then the header
`iteration,best_fitness,selected_ls,evaluations,elapsed_ms` and one
row per iteration, so any external plotting tool can consume them.
"""

import csv
from dataclasses import dataclass, field

TRACE_HEADER = ["iteration", "best_fitness", "selected_ls", "evaluations", "elapsed_ms"]


@dataclass
class TraceRow:
    iteration: int
    best_fitness: float
    selected_ls: str  # "hc", "sa", or "" when no local search ran
    evaluations: int  # cumulative fitness evaluations
    elapsed_ms: int  # cumulative wall time; the one non-reproducible field


@dataclass
class RunTrace:
    algorithm: str
    k: int
    seed: int
    run_index: int = 0
    graph_label: str = ""
    rows: list = field(default_factory=list)

    def append(self, iteration, best_fitness, selected_ls, evaluations, elapsed_ms):
        if self.rows:
            last = self.rows[-1]
            if iteration <= last.iteration:
                raise ValueError("trace iterations must be strictly increasing")
            if best_fitness < last.best_fitness:
                raise ValueError("trace best fitness must be non-decreasing")
        self.rows.append(
            TraceRow(iteration, best_fitness, selected_ls, evaluations, elapsed_ms)
        )

    @property
    def final_best_fitness(self):
        return self.rows[-1].best_fitness

    def row_dicts(self):
        return [
            {
                "iteration": r.iteration,
                "best_fitness": r.best_fitness,
                "selected_ls": r.selected_ls,
                "evaluations": r.evaluations,
                "elapsed_ms": r.elapsed_ms,
            }
            for r in self.rows
        ]


def format_float(x):
    """Shortest repr that round-trips; keeps files byte-stable."""
    return repr(float(x))


def write_trace(trace, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(
            f"# algorithm={trace.algorithm} k={trace.k} run={trace.run_index} "
            f"seed={trace.seed} graph={trace.graph_label}\n"
        )
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        for r in trace.rows:
            writer.writerow(
                [r.iteration, format_float(r.best_fitness), r.selected_ls,
                 r.evaluations, r.elapsed_ms]
            )


def read_trace(path):
    with open(path, "r", encoding="utf-8") as fh:
        meta_line = fh.readline()
        if not meta_line.startswith("#"):
            raise ValueError(f"{path}: missing trace metadata line")
        meta = dict(item.split("=", 1) for item in meta_line[1:].split())
        reader = csv.reader(fh)
        header = next(reader)
        if header != TRACE_HEADER:
            raise ValueError(f"{path}: unexpected trace header {header}")
        trace = RunTrace(
            algorithm=meta["algorithm"],
            k=int(meta["k"]),
            seed=int(meta["seed"]),
            run_index=int(meta["run"]),
            graph_label=meta.get("graph", ""),
        )
        for row in reader:
            trace.rows.append(
                TraceRow(int(row[0]), float(row[1]), row[2], int(row[3]), int(row[4]))
            )
    return trace
