"""
Ensemble preprocessing.

Several fast base detectors run on the input graph at once. Nodes that all of
them put together form the core communities, which are contracted into a
smaller graph; a final detector solves that graph and its result is
prolonged back to the input.
"""
import logging
import time
from functools import partial
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import EnsembleConfig, LouvainConfig, PlpConfig
from ..exceptions import DetectionError, UnknownAlgorithmError
from ..graph.graph import Graph
from ..graph.scheduler import GuidedScheduler, resolve_workers
from ..monitoring.run_report import RunReport
from ..quality.measures import check_same_length
from ..quality.partition import Partition
from .base import Detector, attach_quality, new_report
from .coarsening import coarsen, prolong
from .louvain import run_plm, run_plmr
from .plp import run_plp

logger = logging.getLogger(__name__)

DJB2_SEED = 5381
_MASK64 = (1 << 64) - 1


def djb2(data: bytes) -> int:
    """64-bit djb2 hash of a byte string."""
    h = DJB2_SEED
    for byte in data:
        h = (h * 33 + byte) & _MASK64
    return h


def _check_solutions(solutions: Sequence[Partition]) -> int:
    if not solutions:
        raise DetectionError("At least one solution is required")
    check_same_length(*solutions)
    return len(solutions[0])


def combine_exact(solutions: Sequence[Partition]) -> Partition:
    """Meet of the partitions: nodes share a community iff they share one in every solution.

    Raises:
        PartitionMismatchError: If solution lengths differ
    """
    n = _check_solutions(solutions)
    if n == 0:
        return Partition(np.zeros(0, dtype=np.int64), 0)
    stacked = np.stack([z.assignment for z in solutions], axis=1)
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1).astype(np.int64)
    return Partition(inverse, int(inverse.max()) + 1)


def hash_assignments(solutions: Sequence[Partition], workers: Optional[int] = None) -> np.ndarray:
    """djb2 of every node's ids, each as 8 little-endian bytes, in solution order."""
    n = _check_solutions(solutions)
    multiplier = np.uint64(33)
    byte_mask = np.uint64(0xFF)
    shifts = [np.uint64(s) for s in range(0, 64, 8)]

    def hash_range(_: None, start: int, stop: int) -> np.ndarray:
        h = np.full(stop - start, DJB2_SEED, dtype=np.uint64)
        for z in solutions:
            ids = z.assignment[start:stop].astype(np.uint64)
            for shift in shifts:
                h = h * multiplier + ((ids >> shift) & byte_mask)
        return h

    parts = GuidedScheduler(workers).run(n, hash_range)
    if not parts:
        return np.zeros(0, dtype=np.uint64)
    return np.concatenate(parts)


def combine_hashed(solutions: Sequence[Partition], workers: Optional[int] = None) -> Partition:
    """Meet of the partitions computed through per-node hashes, then compacted.

    Distinct id tuples sharing a hash are merged; use ``count_hash_collisions``
    to detect that case.

    Raises:
        PartitionMismatchError: If solution lengths differ
    """
    hashes = hash_assignments(solutions, workers)
    if len(hashes) == 0:
        return Partition(np.zeros(0, dtype=np.int64), 0)
    _, inverse = np.unique(hashes, return_inverse=True)
    inverse = inverse.reshape(-1).astype(np.int64)
    return Partition(inverse, int(inverse.max()) + 1)


def count_hash_collisions(
    solutions: Sequence[Partition],
    hashed: Optional[Partition] = None
) -> int:
    """Number of exact core communities lost to hash collisions."""
    exact = combine_exact(solutions)
    hashed = hashed if hashed is not None else combine_hashed(solutions)
    return exact.community_count() - hashed.community_count()


def make_detector(
    name: str,
    plp_config: Optional[PlpConfig] = None,
    louvain_config: Optional[LouvainConfig] = None,
    diversify: bool = False
) -> Detector:
    """Detector callable for a base or final algorithm name.

    With ``diversify`` label propagation always shuffles its start labels and
    visit order by seed, so runs with distinct seeds give distinct solutions.

    Raises:
        UnknownAlgorithmError: For names other than plp, plm and plmr
    """
    plp_template = plp_config or PlpConfig()
    if diversify:
        plp_template = plp_template.model_copy(update={"randomize_order": True})
    louvain_template = louvain_config or LouvainConfig()

    def plp(g: Graph, seed: int, workers: int) -> Tuple[Partition, RunReport]:
        return run_plp(g, plp_template.model_copy(update={"seed": seed, "workers": workers}))

    def plm(g: Graph, seed: int, workers: int) -> Tuple[Partition, RunReport]:
        return run_plm(g, louvain_template.model_copy(update={"seed": seed, "workers": workers}))

    def plmr(g: Graph, seed: int, workers: int) -> Tuple[Partition, RunReport]:
        return run_plmr(g, louvain_template.model_copy(update={"seed": seed, "workers": workers}))

    detectors = {"plp": plp, "plm": plm, "plmr": plmr}
    if name not in detectors:
        raise UnknownAlgorithmError(name)
    return detectors[name]


def run_epp(
    g: Graph,
    cfg: Optional[EnsembleConfig] = None,
    base: Optional[Detector] = None,
    final: Optional[Detector] = None,
    plp_config: Optional[PlpConfig] = None,
    louvain_config: Optional[LouvainConfig] = None
) -> Tuple[Partition, RunReport]:
    """Ensemble preprocessing with a final detector on the core graph.

    Args:
        g: Input graph
        cfg: Ensemble configuration
        base: Base detector; ``cfg.base`` when omitted
        final: Final detector; ``cfg.final`` when omitted
        plp_config: Template for label propagation detectors
        louvain_config: Template for Louvain detectors

    Returns:
        Compacted partition and the run report
    """
    cfg = cfg or EnsembleConfig()
    budget = resolve_workers(cfg.workers)
    size = cfg.ensemble_size
    per_base = max(1, budget // size)
    base_name = cfg.base if base is None else getattr(base, "__name__", "custom")
    final_name = cfg.final if final is None else getattr(final, "__name__", "custom")
    base = base or make_detector(cfg.base, plp_config, louvain_config, diversify=True)
    final = final or make_detector(cfg.final, plp_config, louvain_config)

    report = new_report(f"epp({size},{base_name},{final_name})", g, budget, cfg.seed)
    logger.info(
        f"Starting ensemble of {size} x {base_name} with {per_base} workers each, "
        f"final {final_name}"
    )
    started = time.perf_counter()

    with report.phase("base"):
        tasks: List[Callable[[], Tuple[Partition, RunReport]]] = [
            partial(base, g, cfg.seed + i, per_base) for i in range(size)
        ]
        outcomes = GuidedScheduler(min(size, budget)).map_concurrent(tasks)
    solutions = [z for z, _ in outcomes]
    report.extras["base_modularity"] = [r.modularity for _, r in outcomes]

    with report.phase("combine"):
        if cfg.combine == "exact":
            core = combine_exact(solutions)
        else:
            core = combine_hashed(solutions, budget)
            if logger.isEnabledFor(logging.DEBUG):
                collisions = count_hash_collisions(solutions, core)
                report.extras["hash_collisions"] = collisions
                if collisions:
                    logger.warning(f"{collisions} core communities merged by hash collisions")
    report.extras["core_communities"] = core.community_count()
    logger.info(f"Ensemble core has {core.community_count()} communities")

    with report.phase("coarsen"):
        result = coarsen(g, core, budget)

    with report.phase("final"):
        coarse_z, final_report = final(result.coarse, cfg.seed, budget)
    report.absorb(final_report, "final:", level_offset=1)

    with report.phase("prolong"):
        z = prolong(coarse_z, result.pi).compact()

    attach_quality(report, g, z)
    report.finish(time.perf_counter() - started)
    logger.info(
        f"Ensemble finished with {report.community_count} communities, "
        f"modularity {report.modularity}"
    )
    return z, report
