"""
Shared pieces of the detection algorithms.
"""
from typing import Callable, Tuple

from ..graph.graph import Graph
from ..monitoring.run_report import RunReport
from ..quality.measures import coverage, modularity
from ..quality.partition import Partition

# detector(graph, seed, workers) -> (partition, report)
Detector = Callable[[Graph, int, int], Tuple[Partition, RunReport]]


def new_report(algorithm: str, g: Graph, workers: int, seed: int) -> RunReport:
    return RunReport(
        algorithm=algorithm,
        workers=workers,
        seed=seed,
        node_count=g.node_count,
        edge_count=g.edge_count,
    )


def attach_quality(report: RunReport, g: Graph, z: Partition, gamma: float = 1.0) -> None:
    """Store modularity, coverage and community count of ``z`` in ``report``."""
    report.community_count = z.community_count()
    report.coverage = coverage(g, z)
    report.modularity = modularity(g, z, gamma) if g.total_edge_weight > 0 else None
