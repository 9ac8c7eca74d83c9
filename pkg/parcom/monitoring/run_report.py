"""
Run reports for detection algorithms.

This module records per-phase wall times, per-iteration traces and the
resulting quality of one detection run, and serializes them for the
command line report emitter.
"""
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List, Optional

import psutil

logger = logging.getLogger(__name__)


@dataclass
class PhaseRecord:
    """Wall time of one algorithm phase."""
    name: str
    level: int
    seconds: float


@dataclass
class IterationRecord:
    """One label propagation iteration or move pass."""
    iteration: int
    active: int
    updated: int
    seconds: float
    level: int = 0


@dataclass
class RunReport:
    """Timings and quality of a single detection run."""
    algorithm: str
    workers: int
    seed: int
    input_descriptor: str = ""
    node_count: int = 0
    edge_count: int = 0
    phases: List[PhaseRecord] = field(default_factory=list)
    iterations: List[IterationRecord] = field(default_factory=list)
    modularity: Optional[float] = None
    coverage: Optional[float] = None
    community_count: int = 0
    total_seconds: float = 0.0
    peak_rss_mb: float = 0.0
    started_at: datetime = field(default_factory=datetime.now)
    extras: Dict[str, Any] = field(default_factory=dict)

    @contextmanager
    def phase(self, name: str, level: int = 0) -> Iterator[None]:
        """Time the enclosed block with a monotonic clock."""
        start = time.perf_counter()
        try:
            yield
        finally:
            seconds = time.perf_counter() - start
            self.phases.append(PhaseRecord(name, level, seconds))
            logger.debug(f"{self.algorithm}: phase {name} level {level} took {seconds:.6f}s")

    def record_iteration(
        self,
        iteration: int,
        active: int,
        updated: int,
        seconds: float,
        level: int = 0
    ) -> None:
        self.iterations.append(IterationRecord(iteration, active, updated, seconds, level))

    def absorb(self, other: "RunReport", prefix: str, level_offset: int = 0) -> None:
        """Copy another run's phases and iterations under a name prefix."""
        for p in other.phases:
            self.phases.append(PhaseRecord(f"{prefix}{p.name}", p.level + level_offset, p.seconds))
        for it in other.iterations:
            self.iterations.append(
                IterationRecord(it.iteration, it.active, it.updated, it.seconds, it.level + level_offset)
            )

    def phase_seconds(self, name: Optional[str] = None) -> float:
        """Sum of phase times, optionally restricted to one phase name."""
        return sum(p.seconds for p in self.phases if name is None or p.name == name)

    def finish(self, seconds: float) -> None:
        """Set total time and sample resident memory."""
        self.total_seconds = seconds
        try:
            self.peak_rss_mb = psutil.Process().memory_info().rss / (1024 * 1024)
        except psutil.Error as e:
            logger.warning(f"Could not sample memory usage: {str(e)}")

    @property
    def edges_per_second(self) -> float:
        if self.total_seconds <= 0:
            return 0.0
        return self.edge_count / self.total_seconds

    @property
    def level_count(self) -> int:
        levels = {p.level for p in self.phases}
        return len(levels)

    def to_record(self) -> Dict[str, Any]:
        """JSON-ready record of this run."""
        return {
            "algorithm": self.algorithm,
            "workers": self.workers,
            "seed": self.seed,
            "input": self.input_descriptor,
            "nodes": self.node_count,
            "edges": self.edge_count,
            "modularity": self.modularity,
            "coverage": self.coverage,
            "community_count": self.community_count,
            "total_seconds": self.total_seconds,
            "edges_per_second": self.edges_per_second,
            "peak_rss_mb": self.peak_rss_mb,
            "started_at": self.started_at.isoformat(),
            "phases": [
                {"name": p.name, "level": p.level, "seconds": p.seconds}
                for p in self.phases
            ],
            "iterations": [
                {
                    "iteration": it.iteration,
                    "level": it.level,
                    "active": it.active,
                    "updated": it.updated,
                    "seconds": it.seconds,
                }
                for it in self.iterations
            ],
            "extras": self.extras,
        }

    def to_text(self) -> str:
        """Flat ``key: value`` block."""
        lines = [
            f"algorithm: {self.algorithm}",
            f"workers: {self.workers}",
            f"seed: {self.seed}",
            f"input: {self.input_descriptor}",
            f"nodes: {self.node_count}",
            f"edges: {self.edge_count}",
            f"modularity: {self.modularity}",
            f"coverage: {self.coverage}",
            f"community_count: {self.community_count}",
            f"total_seconds: {self.total_seconds:.6f}",
            f"edges_per_second: {self.edges_per_second:.1f}",
        ]
        totals: Dict[str, float] = {}
        for p in self.phases:
            totals[p.name] = totals.get(p.name, 0.0) + p.seconds
        for name, seconds in totals.items():
            lines.append(f"phase_{name}_seconds: {seconds:.6f}")
        return "\n".join(lines) + "\n"


def summarize_runs(reports: List[RunReport]) -> Dict[str, Any]:
    """Average figures over repeated runs and pick the best by modularity."""
    if not reports:
        return {"runs": 0}
    scored = [r.modularity if r.modularity is not None else float("-inf") for r in reports]
    best = max(range(len(reports)), key=lambda i: (scored[i], -i))
    modularities = [r.modularity for r in reports if r.modularity is not None]
    return {
        "runs": len(reports),
        "best_run": best,
        "mean_seconds": sum(r.total_seconds for r in reports) / len(reports),
        "mean_modularity": sum(modularities) / len(modularities) if modularities else None,
        "best_modularity": reports[best].modularity,
        "mean_community_count": sum(r.community_count for r in reports) / len(reports),
        "mean_edges_per_second": sum(r.edges_per_second for r in reports) / len(reports),
    }
