"""
``parcom score``: evaluate a partition file against a graph.
"""
import argparse
import logging
from typing import List

from ..config.settings import EngineSettings
from ..io.partition_file import read_partition
from ..quality.measures import graph_rand_index
from ..quality.report import evaluate
from .common import add_graph_arguments, load_graph

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("score", parents=parents, help="Score a partition")
    add_graph_arguments(parser)
    parser.add_argument("--partition", required=True, help="Partition file to score")
    parser.add_argument("--reference", default=None, help="Reference partition for the Rand index")
    parser.add_argument("--gamma", type=float, default=1.0, help="Modularity resolution")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: EngineSettings) -> int:
    g = load_graph(args.input, args.format, args.merge_duplicates)
    z = read_partition(args.partition)
    z.check_covers(g)
    report = evaluate(g, z, args.gamma)
    print(report.to_text(), end="")
    if args.reference:
        reference = read_partition(args.reference)
        reference.check_covers(g)
        print(f"rand_index: {graph_rand_index(g, z, reference)}")
    return 0
