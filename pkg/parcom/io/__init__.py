"""
IO module for parcom.

Readers and writers for METIS and edge-list graphs, partition files and
community graphs.
"""

from .community_graph import sizes_path, write_community_graph
from .edge_list import read_edge_list, read_edge_list_with_ids, write_edge_list
from .metis import GraphFileHeader, parse_header, read_metis, write_metis
from .partition_file import read_partition, write_partition

__all__ = [
    'sizes_path', 'write_community_graph', 'read_edge_list', 'read_edge_list_with_ids',
    'write_edge_list', 'GraphFileHeader', 'parse_header', 'read_metis', 'write_metis',
    'read_partition', 'write_partition',
]
