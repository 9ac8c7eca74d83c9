"""
Brute-force modularity optimum for tiny graphs, used as a test oracle.
"""
from typing import Iterator, Tuple

import numpy as np

from ..exceptions import QualityError
from ..graph.graph import Graph
from .measures import modularity
from .partition import Partition

MAX_EXHAUSTIVE_NODES = 10


def iter_set_partitions(n: int) -> Iterator[np.ndarray]:
    """All set partitions of n elements as restricted growth strings."""
    if n == 0:
        yield np.zeros(0, dtype=np.int64)
        return
    labels = [0] * n
    maxima = [0] * n
    while True:
        yield np.array(labels, dtype=np.int64)
        i = n - 1
        while i > 0 and labels[i] == maxima[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        maxima[i] = max(maxima[i - 1], labels[i])
        for j in range(i + 1, n):
            labels[j] = 0
            maxima[j] = maxima[i]


def best_modularity(g: Graph, gamma: float = 1.0) -> Tuple[float, Partition]:
    """Maximum modularity over all set partitions.

    Raises:
        QualityError: For graphs above the enumeration limit
    """
    if g.node_count > MAX_EXHAUSTIVE_NODES:
        raise QualityError(
            f"Exhaustive search limited to {MAX_EXHAUSTIVE_NODES} nodes, got {g.node_count}"
        )
    best_value = -np.inf
    best = None
    for labels in iter_set_partitions(g.node_count):
        candidate = Partition(labels)
        value = modularity(g, candidate, gamma)
        if value > best_value:
            best_value, best = value, candidate
    return float(best_value), best
