"""
``parcom generate``: write a planted partition graph and its ground truth.
"""
import argparse
import logging
from typing import List

from ..config.settings import EngineSettings
from ..generators.planted import PlantedPartitionSpec, expected_edge_count, generate_planted
from ..graph.scheduler import set_worker_budget
from ..io.edge_list import write_edge_list
from ..io.metis import write_metis
from ..io.partition_file import write_partition
from .common import GRAPH_FORMATS, parse_threads, positive_int, resolve_threads

logger = logging.getLogger(__name__)


def add_generator_arguments(parser: argparse.ArgumentParser, nodes: int, blocks: int) -> None:
    parser.add_argument("--nodes", type=int, default=nodes, help="Node count")
    parser.add_argument("--blocks", type=positive_int, default=blocks, help="Block count")
    parser.add_argument("--p-in", type=float, default=0.1, help="Intra-block edge probability")
    parser.add_argument("--p-out", type=float, default=0.002, help="Inter-block edge probability")


def add_parser(subparsers, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("generate", parents=parents, help="Generate a planted partition graph")
    add_generator_arguments(parser, nodes=1000, blocks=10)
    parser.add_argument("--seed", type=int, default=0, help="Generator seed")
    parser.add_argument("--threads", type=parse_threads, default=None, help="Worker count or 'auto'")
    parser.add_argument("--output", required=True, help="Graph file")
    parser.add_argument("--format", choices=GRAPH_FORMATS, default="metis", help="Graph file format")
    parser.add_argument("--ground-truth", default=None, help="Block partition file")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: EngineSettings) -> int:
    workers = resolve_threads(args.threads, settings.runtime.threads)
    set_worker_budget(workers)
    spec = PlantedPartitionSpec(args.nodes, args.blocks, args.p_in, args.p_out, args.seed)
    g, truth = generate_planted(spec, workers)
    if args.format == "edges":
        write_edge_list(g, args.output)
    else:
        write_metis(g, args.output)
    if args.ground_truth:
        write_partition(truth, args.ground_truth)
    print(f"nodes: {g.node_count}")
    print(f"edges: {g.edge_count}")
    print(f"expected_edges: {expected_edge_count(spec):.1f}")
    return 0
