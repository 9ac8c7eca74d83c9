"""
Generators module for parcom.

Seeded synthetic graphs with planted ground-truth communities.
"""

from .planted import (
    PlantedPartitionSpec,
    expected_degrees,
    expected_edge_count,
    generate_planted,
)

__all__ = ['PlantedPartitionSpec', 'expected_degrees', 'expected_edge_count', 'generate_planted']
