"""
Parallel Louvain method with optional refinement.

Each level runs local-move passes until no node moves, contracts the
communities into a coarse graph and recurses on it. The coarse solution is
prolonged back; with refinement enabled another move phase polishes it on
every level on the way up.
"""
import logging
import time
from typing import Optional, Tuple

import numpy as np

from ..config.settings import LouvainConfig
from ..exceptions import InvariantViolationError, PartitionError, UndefinedQualityError
from ..graph.graph import Graph
from ..graph.scheduler import GuidedScheduler, resolve_workers
from ..monitoring.run_report import RunReport
from ..quality.measures import community_volumes
from ..quality.partition import Partition, singleton_partition
from .base import attach_quality, new_report
from .coarsening import coarsen, prolong
from .kernels import make_scratch, move_sweep

logger = logging.getLogger(__name__)


class CommunityVolumes:
    """Volume of every community id below a partition's upper bound."""

    def __init__(self, values: np.ndarray):
        self.values = np.ascontiguousarray(values, dtype=np.float64)

    @classmethod
    def from_partition(cls, g: Graph, z: Partition) -> "CommunityVolumes":
        return cls(community_volumes(g, z))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, community: int) -> float:
        return float(self.values[community])

    def total(self) -> float:
        return float(self.values.sum())

    def move(self, node_volume: float, source: int, target: int) -> None:
        """Account for a node of volume ``node_volume`` changing community."""
        self.values[source] -= node_volume
        self.values[target] += node_volume

    def verify(self, g: Graph, z: Partition, rtol: float = 1e-9) -> None:
        """Raise unless the stored volumes match a fresh recomputation.

        Raises:
            InvariantViolationError: On any mismatch
        """
        expected = community_volumes(g, z)
        if len(expected) != len(self.values) or not np.allclose(
            self.values, expected, rtol=rtol, atol=rtol * max(1.0, 2.0 * g.total_edge_weight)
        ):
            raise InvariantViolationError(
                "Community volumes diverged from the partition",
                {"stored_total": self.total(), "expected_total": float(expected.sum())}
            )


def delta_mod(
    g: Graph,
    z: Partition,
    vols: CommunityVolumes,
    u: int,
    target: int,
    gamma: float = 1.0,
    check: bool = False
) -> float:
    """Modularity change of moving ``u`` from its community into ``target``.

    Args:
        g: Graph with positive total edge weight
        z: Current partition
        vols: Volumes matching ``z``
        u: Node to move
        target: Destination community id
        gamma: Resolution
        check: Recompute and compare ``vols`` first

    Raises:
        InvariantViolationError: If ``check`` finds inconsistent volumes
        UndefinedQualityError: If the graph has zero edge weight
    """
    z.check_covers(g)
    g.degree(u)  # range check
    if check:
        vols.verify(g, z)
    current = z[u]
    if target == current:
        return 0.0
    if not 0 <= target < len(vols):
        raise PartitionError(f"Community {target} outside [0, {len(vols)})")
    total = g.total_edge_weight
    if total == 0:
        raise UndefinedQualityError("Modularity is undefined for a graph with zero edge weight")

    neighbors = g.neighbors(u)
    weights = g.neighbor_weights(u)
    proper = neighbors != u
    communities = z.assignment[neighbors[proper]]
    weights = weights[proper]
    to_target = float(weights[communities == target].sum())
    to_current = float(weights[communities == current].sum())
    vol_u = g.volume(u)
    return (to_target - to_current) / total + gamma * (
        vols[current] - vol_u - vols[target]
    ) * vol_u / (2.0 * total * total)


def move_phase(
    g: Graph,
    z: Partition,
    cfg: Optional[LouvainConfig] = None,
    report: Optional[RunReport] = None,
    level: int = 0
) -> Tuple[Partition, bool]:
    """Move nodes to their best neighboring community until nothing moves.

    Returns:
        Resulting partition (same id range as ``z``) and whether any node moved
    """
    cfg = cfg or LouvainConfig()
    z.check_covers(g)
    workers = resolve_workers(cfg.workers)
    n = g.node_count
    if n == 0 or g.total_edge_weight == 0:
        return z.copy(), False

    zeta = z.assignment.copy()
    label_bound = z.upper_bound
    node_volumes = g.volumes()
    vols = community_volumes(g, z)
    order = np.arange(n, dtype=np.int64)
    deterministic = workers == 1
    scheduler = GuidedScheduler(workers)
    max_degree = g.max_degree
    total = g.total_edge_weight

    def make_state():
        return make_scratch(label_bound, max_degree)

    def sweep(scratch, start: int, stop: int) -> int:
        affinity, touched = scratch
        return move_sweep(
            g.offsets, g.targets, g.weights, node_volumes, zeta, vols, total,
            cfg.gamma, order, start, stop, deterministic, affinity, touched
        )

    changed = False
    for pass_index in range(1, cfg.max_move_iterations + 1):
        tick = time.perf_counter()
        moved = sum(int(r) for r in scheduler.run(n, sweep, make_state))
        # concurrent in-place updates may have raced
        vols[:] = np.bincount(zeta, weights=node_volumes, minlength=label_bound)
        seconds = time.perf_counter() - tick
        if report is not None:
            report.record_iteration(pass_index, n, moved, seconds, level)
        logger.debug(f"Level {level} pass {pass_index}: moved {moved} nodes")
        if moved == 0:
            break
        changed = True
    else:
        logger.debug(f"Level {level}: move pass cap {cfg.max_move_iterations} reached")

    return Partition(zeta, label_bound), changed


def _run_level(g: Graph, cfg: LouvainConfig, workers: int, report: RunReport, level: int) -> Partition:
    with report.phase("move", level):
        z, changed = move_phase(g, singleton_partition(g), cfg, report, level)
    if not changed:
        return z
    if level + 1 >= cfg.max_levels:
        logger.warning(f"Level cap {cfg.max_levels} reached")
        return z

    with report.phase("coarsen", level):
        z = z.compact()
        result = coarsen(g, z, workers)
    logger.info(
        f"Level {level}: {g.node_count} nodes contracted to {result.coarse.node_count}"
    )
    coarse_z = _run_level(result.coarse, cfg, workers, report, level + 1)

    with report.phase("prolong", level):
        z = prolong(coarse_z, result.pi)
    if cfg.refine:
        with report.phase("refine", level):
            z, _ = move_phase(g, z, cfg, report, level)
    return z


def run_plm(g: Graph, cfg: Optional[LouvainConfig] = None) -> Tuple[Partition, RunReport]:
    """Multilevel modularity maximization.

    A graph of zero edge weight yields the singleton partition.

    Returns:
        Compacted partition and the run report
    """
    cfg = cfg or LouvainConfig()
    workers = resolve_workers(cfg.workers)
    cfg = cfg.model_copy(update={"workers": workers})
    report = new_report("plmr" if cfg.refine else "plm", g, workers, cfg.seed)
    report.extras["gamma"] = cfg.gamma

    if g.total_edge_weight > 0 and cfg.gamma > 2.0 * g.total_edge_weight:
        logger.warning(
            f"Resolution {cfg.gamma} exceeds twice the total edge weight "
            f"{g.total_edge_weight}; expect singleton communities"
        )

    logger.info(f"Starting {report.algorithm} on {g!r} with {workers} workers")
    started = time.perf_counter()
    z = _run_level(g, cfg, workers, report, 0).compact()
    attach_quality(report, g, z, cfg.gamma)
    report.extras["levels"] = report.level_count
    report.finish(time.perf_counter() - started)
    logger.info(
        f"{report.algorithm} finished with {report.community_count} communities, "
        f"modularity {report.modularity}"
    )
    return z, report


def run_plmr(g: Graph, cfg: Optional[LouvainConfig] = None) -> Tuple[Partition, RunReport]:
    """Multilevel modularity maximization with a refining move phase per level."""
    cfg = cfg or LouvainConfig()
    return run_plm(g, cfg.model_copy(update={"refine": True}))
