"""
``parcom detect``: run a detection algorithm on a graph file.
"""
import argparse
import logging
from typing import List

from ..config.settings import EngineSettings, update_section
from ..detection.registry import ALGORITHMS, detect
from ..graph.scheduler import set_worker_budget
from ..io.community_graph import write_community_graph
from ..io.partition_file import write_partition
from ..monitoring.run_report import RunReport, summarize_runs
from ..quality.partition import Partition
from .common import add_graph_arguments, load_graph, parse_threads, positive_int, resolve_threads, write_json

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("detect", parents=parents, help="Detect communities")
    parser.add_argument("--algo", choices=ALGORITHMS, default="plm", help="Algorithm")
    add_graph_arguments(parser)
    parser.add_argument("--threads", type=parse_threads, default=None, help="Worker count or 'auto'")
    parser.add_argument("--theta", type=int, default=None, help="Label propagation update threshold")
    parser.add_argument("--gamma", type=float, default=None, help="Modularity resolution")
    parser.add_argument("--ensemble", type=positive_int, default=None, help="Ensemble size")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the first run")
    parser.add_argument("--runs", type=positive_int, default=1, help="Repetitions, seeded seed+r")
    parser.add_argument("--output", default=None, help="Partition file of the best run")
    parser.add_argument("--report", default=None, help="JSON report file")
    parser.add_argument("--community-graph", default=None, help="METIS file of the community graph")
    parser.set_defaults(handler=run)


def apply_overrides(settings: EngineSettings, args: argparse.Namespace) -> EngineSettings:
    """Fold algorithm flags into the settings."""
    if args.theta is not None:
        settings = update_section(settings, "plp", theta=args.theta)
    if args.gamma is not None:
        settings = update_section(settings, "louvain", gamma=args.gamma)
    if args.ensemble is not None:
        settings = update_section(settings, "ensemble", ensemble_size=args.ensemble)
    return settings


def run(args: argparse.Namespace, settings: EngineSettings) -> int:
    workers = resolve_threads(args.threads, settings.runtime.threads)
    set_worker_budget(workers)
    settings = apply_overrides(settings, args)
    g = load_graph(args.input, args.format, args.merge_duplicates)

    partitions: List[Partition] = []
    reports: List[RunReport] = []
    for r in range(args.runs):
        z, report = detect(args.algo, g, settings, args.seed + r, workers)
        report.input_descriptor = str(args.input)
        partitions.append(z)
        reports.append(report)
        logger.info(
            f"Run {r + 1}/{args.runs}: modularity {report.modularity}, "
            f"{report.community_count} communities in {report.total_seconds:.3f}s"
        )

    summary = summarize_runs(reports)
    best = summary["best_run"]
    if args.output:
        write_partition(partitions[best], args.output)
    if args.community_graph:
        write_community_graph(g, partitions[best], args.community_graph, workers)
    if args.report:
        write_json(args.report, {"summary": summary, "runs": [r.to_record() for r in reports]})

    print(reports[best].to_text(), end="")
    if args.runs > 1:
        print(f"runs: {summary['runs']}")
        print(f"mean_seconds: {summary['mean_seconds']:.6f}")
        print(f"mean_modularity: {summary['mean_modularity']}")
    return 0
