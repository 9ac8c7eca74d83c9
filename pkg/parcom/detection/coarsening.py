"""
Graph coarsening along a partition and prolongation back to the fine graph.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..exceptions import MappingRangeError, NonCompactPartitionError
from ..graph.graph import Graph
from ..graph.scheduler import GuidedScheduler
from ..quality.partition import Partition

logger = logging.getLogger(__name__)


@dataclass
class CoarseningResult:
    """Coarse graph and the fine-to-coarse node map."""
    coarse: Graph
    pi: np.ndarray

    @property
    def fine_node_count(self) -> int:
        return len(self.pi)


def coarsen(g: Graph, z: Partition, workers: Optional[int] = None) -> CoarseningResult:
    """Contract every community of ``z`` into one node.

    Weights between communities are summed into coarse edges, weights inside
    a community (fine self-loops included) into a coarse self-loop. The coarse
    graph is identical for any worker count.

    Raises:
        PartitionMismatchError: If ``z`` does not cover ``g``
        NonCompactPartitionError: If community ids are not 0..k-1
    """
    z.check_covers(g)
    if not z.is_compact():
        raise NonCompactPartitionError(
            details={"upper_bound": z.upper_bound, "communities": z.community_count()}
        )
    pi = z.assignment.copy()
    coarse_count = int(pi.max()) + 1 if len(pi) else 0
    offsets, targets, weights = g.offsets, g.targets, g.weights

    def map_range(_: None, start: int, stop: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        lo, hi = offsets[start], offsets[stop]
        sources = np.repeat(
            np.arange(start, stop, dtype=np.int64), np.diff(offsets[start:stop + 1])
        )
        ends = targets[lo:hi]
        keep = ends >= sources
        a = pi[sources[keep]]
        b = pi[ends[keep]]
        return np.minimum(a, b), np.maximum(a, b), weights[lo:hi][keep]

    parts = GuidedScheduler(workers).run(g.node_count, map_range)
    if parts:
        lower = np.concatenate([p[0] for p in parts])
        upper = np.concatenate([p[1] for p in parts])
        summed = np.concatenate([p[2] for p in parts])
    else:
        lower = upper = np.zeros(0, dtype=np.int64)
        summed = np.zeros(0, dtype=np.float64)

    if len(lower):
        order = np.lexsort((upper, lower))
        lower, upper, summed = lower[order], upper[order], summed[order]
        boundary = np.concatenate(
            [[True], (lower[1:] != lower[:-1]) | (upper[1:] != upper[:-1])]
        )
        starts = np.flatnonzero(boundary)
        summed = np.add.reduceat(summed, starts)
        lower, upper = lower[starts], upper[starts]

    coarse = Graph.from_pairs(coarse_count, lower, upper, summed)
    logger.debug(f"Coarsened {g!r} into {coarse!r}")
    return CoarseningResult(coarse, pi)


def prolong(z_coarse: Partition, pi: np.ndarray) -> Partition:
    """Fine partition assigning every fine node its coarse node's community.

    Raises:
        MappingRangeError: If ``pi`` points outside the coarse partition
    """
    pi = np.asarray(pi, dtype=np.int64)
    if len(pi) and (pi.min() < 0 or pi.max() >= len(z_coarse)):
        raise MappingRangeError(
            f"Node map targets [{int(pi.min())}, {int(pi.max())}] "
            f"exceed coarse node count {len(z_coarse)}"
        )
    return Partition(z_coarse.assignment[pi], z_coarse.upper_bound)
