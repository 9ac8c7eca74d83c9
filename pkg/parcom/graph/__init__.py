"""
Graph storage module for parcom.

Adjacency-array graphs with volume accessors and guided parallel iteration.
"""

from .graph import (
    EdgeList,
    Graph,
    build_graph,
    for_edges_parallel,
    for_nodes_parallel,
    volume,
)
from .scheduler import (
    GuidedScheduler,
    get_worker_budget,
    resolve_workers,
    set_worker_budget,
)

__all__ = [
    'EdgeList', 'Graph', 'build_graph', 'for_edges_parallel',
    'for_nodes_parallel', 'volume', 'GuidedScheduler', 'get_worker_budget',
    'resolve_workers', 'set_worker_budget',
]
