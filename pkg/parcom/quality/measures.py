"""
Quality measures for community detection solutions.

All measures are pure vectorized reductions over the adjacency arrays.
Self-loops always count as intra-community.
"""
import logging

import numpy as np

from ..exceptions import PartitionMismatchError, UndefinedQualityError
from ..graph.graph import Graph
from .partition import Partition

logger = logging.getLogger(__name__)


def intra_community_weight(g: Graph, z: Partition) -> float:
    """Total weight of edges whose endpoints share a community."""
    z.check_covers(g)
    sources = g.entry_sources()
    same = z.assignment[sources] == z.assignment[g.targets]
    loops = sources == g.targets
    return float(
        g.weights[same & ~loops].sum() / 2.0 + g.weights[loops].sum()
    )


def community_volumes(g: Graph, z: Partition) -> np.ndarray:
    """vol(C) for every id below the partition's upper bound."""
    z.check_covers(g)
    return np.bincount(
        z.assignment, weights=g.volumes(), minlength=z.upper_bound
    ).astype(np.float64)


def coverage(g: Graph, z: Partition) -> float:
    """Fraction of edge weight inside communities; 0 for graphs of weight 0."""
    z.check_covers(g)
    if g.total_edge_weight == 0:
        return 0.0
    return intra_community_weight(g, z) / g.total_edge_weight


def modularity(g: Graph, z: Partition, gamma: float = 1.0) -> float:
    """Modularity with resolution ``gamma`` scaling the expected-weight term.

    Raises:
        UndefinedQualityError: If the graph has zero total edge weight
    """
    z.check_covers(g)
    total = g.total_edge_weight
    if total == 0:
        raise UndefinedQualityError("Modularity is undefined for a graph with zero edge weight")
    vols = community_volumes(g, z)
    penalty = float(np.dot(vols, vols)) / (4.0 * total * total)
    return intra_community_weight(g, z) / total - gamma * penalty


def graph_rand_index(g: Graph, a: Partition, b: Partition) -> float:
    """Fraction of edges on which two partitions agree.

    An edge agrees when both partitions put its endpoints together or both
    separate them. Only connected pairs are compared, not all node pairs.

    Raises:
        UndefinedQualityError: If the graph has no edges
    """
    a.check_covers(g)
    b.check_covers(g)
    if g.edge_count == 0:
        raise UndefinedQualityError("Rand index is undefined for a graph without edges")
    u, v, _ = g.edge_arrays()
    same_a = a.assignment[u] == a.assignment[v]
    same_b = b.assignment[u] == b.assignment[v]
    return float(np.count_nonzero(same_a == same_b)) / g.edge_count


def check_same_length(*partitions: Partition) -> None:
    """Raise unless all partitions have the same length."""
    if not partitions:
        return
    expected = len(partitions[0])
    for z in partitions[1:]:
        if len(z) != expected:
            raise PartitionMismatchError(expected, len(z))
