"""
``parcom bench``: strong and weak scaling measurements.

Strong mode runs one fixed graph over every thread count. Weak mode scales
the planted graph with the thread count: nodes and blocks grow by
threads / first threads while p_out shrinks by the same factor, keeping the
expected degrees constant. Rows go to stdout, ``bench.csv`` and
``bench.json``.
"""
import argparse
import csv
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional

from ..config.settings import EngineSettings
from ..detection.registry import ALGORITHMS, detect
from ..exceptions import ConfigurationError
from ..generators.planted import PlantedPartitionSpec, generate_planted
from ..graph.graph import Graph
from ..graph.scheduler import set_worker_budget
from ..monitoring.run_report import summarize_runs
from .common import add_graph_arguments, load_graph, parse_threads_list, positive_int, write_json
from .generate import add_generator_arguments

logger = logging.getLogger(__name__)

CSV_NAME = "bench.csv"
JSON_NAME = "bench.json"


@dataclass
class BenchRow:
    """Averaged figures of one thread count."""
    threads: int
    nodes: int
    edges: int
    seconds: float
    speedup: float
    modularity: Optional[float]
    edges_per_second: float


def add_parser(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("bench", parents=parents, help="Scaling benchmark")
    parser.add_argument("--mode", choices=["strong", "weak"], default="strong", help="Scaling mode")
    parser.add_argument("--algo", choices=ALGORITHMS, default="plm", help="Algorithm")
    add_graph_arguments(parser, required=False)
    add_generator_arguments(parser, nodes=100000, blocks=1000)
    parser.add_argument("--seed", type=int, default=0, help="Generator and detection seed")
    parser.add_argument("--threads-list", type=parse_threads_list, default=[1, 2, 4],
                        help="Comma-separated thread counts")
    parser.add_argument("--runs", type=positive_int, default=1, help="Repetitions per thread count")
    parser.add_argument("--output-dir", default="bench-results", help="Directory for CSV and JSON data")
    parser.set_defaults(handler=run)


def _measure(
    args: argparse.Namespace,
    settings: EngineSettings,
    g: Graph,
    threads: int,
    descriptor: str
) -> BenchRow:
    set_worker_budget(threads)
    reports = []
    for r in range(args.runs):
        _, report = detect(args.algo, g, settings, args.seed + r, threads)
        report.input_descriptor = descriptor
        reports.append(report)
    summary = summarize_runs(reports)
    logger.info(f"{threads} threads: {summary['mean_seconds']:.3f}s")
    return BenchRow(
        threads=threads,
        nodes=g.node_count,
        edges=g.edge_count,
        seconds=summary["mean_seconds"],
        speedup=1.0,
        modularity=summary["best_modularity"],
        edges_per_second=summary["mean_edges_per_second"],
    )


def _planted(args: argparse.Namespace, factor: float, threads: int) -> Graph:
    spec = PlantedPartitionSpec(
        n=int(round(args.nodes * factor)),
        k=max(1, int(round(args.blocks * factor))),
        p_in=args.p_in,
        p_out=args.p_out / factor,
        seed=args.seed,
    )
    g, _ = generate_planted(spec, threads)
    return g


def collect_rows(args: argparse.Namespace, settings: EngineSettings) -> List[BenchRow]:
    """Measure every thread count of the list.

    Raises:
        ConfigurationError: For weak mode on an input file or a descending thread list
    """
    rows: List[BenchRow] = []
    if args.mode == "strong":
        if args.input:
            g = load_graph(args.input, args.format, args.merge_duplicates)
            descriptor = str(args.input)
        else:
            g = _planted(args, 1.0, max(args.threads_list))
            descriptor = f"planted(n={args.nodes},k={args.blocks})"
        for threads in args.threads_list:
            rows.append(_measure(args, settings, g, threads, descriptor))
    else:
        if args.input:
            raise ConfigurationError("Weak scaling needs generated graphs; drop --input")
        if args.threads_list != sorted(args.threads_list):
            raise ConfigurationError(
                f"Weak scaling needs an ascending --threads-list, got {args.threads_list}"
            )
        base = args.threads_list[0]
        for threads in args.threads_list:
            factor = threads / base
            g = _planted(args, factor, threads)
            descriptor = f"planted(n={g.node_count},factor={factor:g})"
            rows.append(_measure(args, settings, g, threads, descriptor))

    reference = rows[0].seconds
    for row in rows:
        row.speedup = reference / row.seconds if row.seconds > 0 else 0.0
    return rows


def write_rows(rows: List[BenchRow], output_dir: Path, mode: str, algo: str) -> None:
    output_dir.mkdir(parents=True, exist_ok=True)
    records = [asdict(row) for row in rows]
    with open(output_dir / CSV_NAME, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(records[0]))
        writer.writeheader()
        writer.writerows(records)
    write_json(output_dir / JSON_NAME, {"mode": mode, "algorithm": algo, "rows": records})


def format_table(rows: List[BenchRow]) -> str:
    lines = [f"{'threads':>8} {'nodes':>10} {'edges':>12} {'seconds':>10} "
             f"{'speedup':>8} {'modularity':>11} {'edges/s':>12}"]
    for row in rows:
        modularity = f"{row.modularity:.6f}" if row.modularity is not None else "n/a"
        lines.append(
            f"{row.threads:>8} {row.nodes:>10} {row.edges:>12} {row.seconds:>10.4f} "
            f"{row.speedup:>8.2f} {modularity:>11} {row.edges_per_second:>12.0f}"
        )
    return "\n".join(lines) + "\n"


def run(args: argparse.Namespace, settings: EngineSettings) -> int:
    rows = collect_rows(args, settings)
    write_rows(rows, Path(args.output_dir), args.mode, args.algo)
    print(format_table(rows), end="")
    return 0
