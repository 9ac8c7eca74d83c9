"""
Quality module for parcom.

Partitions and the measures used to judge them: coverage, modularity with a
resolution parameter and the graph-structural Rand index.
"""

from .exhaustive import best_modularity, iter_set_partitions
from .measures import (
    community_volumes,
    coverage,
    graph_rand_index,
    intra_community_weight,
    modularity,
)
from .partition import Partition, compact, singleton_partition
from .report import QualityReport, evaluate

__all__ = [
    'best_modularity', 'iter_set_partitions', 'community_volumes', 'coverage',
    'graph_rand_index', 'intra_community_weight', 'modularity', 'Partition',
    'compact', 'singleton_partition', 'QualityReport', 'evaluate',
]
