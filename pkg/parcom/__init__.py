"""
parcom - shared-memory parallel community detection.

Label propagation, the Louvain method with optional refinement and ensemble
preprocessing over weighted undirected graphs, with modularity, coverage and
graph-structural Rand index evaluation.
"""

__version__ = "0.1.0"

from .detection import detect, run_epp, run_plm, run_plmr, run_plp
from .graph import Graph, build_graph
from .quality import Partition, coverage, graph_rand_index, modularity

__all__ = [
    'detect', 'run_epp', 'run_plm', 'run_plmr', 'run_plp', 'Graph', 'build_graph',
    'Partition', 'coverage', 'graph_rand_index', 'modularity',
]
