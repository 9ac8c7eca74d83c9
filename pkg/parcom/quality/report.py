"""
Summary of a partition's quality.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..graph.graph import Graph
from .measures import coverage, modularity
from .partition import Partition


@dataclass
class QualityReport:
    """Quality figures of one partition."""
    modularity: Optional[float]
    coverage: float
    community_count: int
    size_histogram: Dict[int, int] = field(default_factory=dict)
    gamma: float = 1.0

    def to_text(self) -> str:
        """Flat ``key: value`` block."""
        lines = [
            f"modularity: {self.modularity if self.modularity is not None else 'undefined'}",
            f"coverage: {self.coverage}",
            f"community_count: {self.community_count}",
            f"gamma: {self.gamma}",
        ]
        for size, count in sorted(self.size_histogram.items()):
            lines.append(f"size_{size}: {count}")
        return "\n".join(lines) + "\n"

    def to_record(self) -> Dict[str, Any]:
        """JSON-ready record."""
        return {
            "modularity": self.modularity,
            "coverage": self.coverage,
            "community_count": self.community_count,
            "gamma": self.gamma,
            "size_histogram": {str(k): v for k, v in sorted(self.size_histogram.items())},
        }


def evaluate(g: Graph, z: Partition, gamma: float = 1.0) -> QualityReport:
    """Compute all quality figures. Modularity is None for zero-weight graphs."""
    mod = modularity(g, z, gamma) if g.total_edge_weight > 0 else None
    return QualityReport(
        modularity=mod,
        coverage=coverage(g, z),
        community_count=z.community_count(),
        size_histogram=z.size_histogram(),
        gamma=gamma,
    )
