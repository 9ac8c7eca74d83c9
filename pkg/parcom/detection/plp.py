"""
Parallel label propagation.

Every node starts in its own community and repeatedly adopts the label of
maximal incident weight among its neighbors. Only nodes whose neighborhood
changed in the previous iteration are evaluated again, and the loop stops once
an iteration updates no more than ``theta`` nodes.
"""
import logging
import time
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..config.settings import PlpConfig
from ..exceptions import IsolatedNodeError
from ..graph.graph import Graph
from ..graph.scheduler import GuidedScheduler, resolve_workers
from ..monitoring.run_report import RunReport
from ..quality.partition import Partition, singleton_partition
from .base import attach_quality, new_report
from .kernels import count_unstable, dominant_label_kernel, make_scratch, plp_sweep

logger = logging.getLogger(__name__)


@dataclass
class LabelState:
    """Mutable state of one propagation run."""
    labels: Partition
    active: np.ndarray
    updated_count: int

    @classmethod
    def initial(
        cls,
        g: Graph,
        initial: Optional[Partition] = None,
        rng: Optional[np.random.Generator] = None
    ) -> "LabelState":
        """All nodes active; singleton labels unless a start partition is given.

        With ``rng`` the singleton labels are a random permutation of the node ids.
        """
        if initial is None and rng is not None:
            labels = Partition(rng.permutation(g.node_count).astype(np.int64), g.node_count)
        elif initial is None:
            labels = singleton_partition(g)
        else:
            initial.check_covers(g)
            labels = initial.copy()
        return cls(labels, np.ones(g.node_count, dtype=np.bool_), g.node_count)

    @property
    def active_count(self) -> int:
        return int(np.count_nonzero(self.active))


def dominant_label(g: Graph, z: Partition, u: int, deterministic: bool = True) -> int:
    """Label of maximal incident weight around ``u``.

    The current label is kept when it ties the maximum. Remaining ties go to
    the smallest label, or to the first one met when ``deterministic`` is off.

    Raises:
        InvalidNodeError: If ``u`` is not a node of ``g``
        IsolatedNodeError: If ``u`` has no neighbors
    """
    z.check_covers(g)
    degree = g.degree(u)
    if degree == 0:
        raise IsolatedNodeError(int(u))
    tally, touched = make_scratch(z.upper_bound, degree)
    return int(dominant_label_kernel(
        g.offsets, g.targets, g.weights, z.assignment, int(u), deterministic, tally, touched
    ))


def is_stable(g: Graph, z: Partition) -> bool:
    """True when no node with neighbors would change its label."""
    z.check_covers(g)
    if g.node_count == 0:
        return True
    tally, touched = make_scratch(z.upper_bound, g.max_degree)
    unstable = count_unstable(g.offsets, g.targets, g.weights, z.assignment, tally, touched)
    return int(unstable) == 0


def run_plp(
    g: Graph,
    cfg: Optional[PlpConfig] = None,
    initial: Optional[Partition] = None
) -> Tuple[Partition, RunReport]:
    """Run label propagation until at most ``theta`` nodes change per iteration.

    Args:
        g: Input graph
        cfg: Algorithm configuration
        initial: Start labels; singletons when omitted

    Returns:
        Final labels (ids are a subset of the start ids) and the run report
    """
    cfg = cfg or PlpConfig()
    workers = resolve_workers(cfg.workers)
    n = g.node_count
    theta = cfg.resolve_theta(n)
    report = new_report("plp", g, workers, cfg.seed)
    report.extras["theta"] = theta

    rng = np.random.default_rng(cfg.seed)
    state = LabelState.initial(g, initial, rng if cfg.randomize_order else None)
    labels = state.labels.assignment
    next_active = np.zeros(n, dtype=np.bool_)
    order = np.arange(n, dtype=np.int64)
    deterministic = workers == 1
    scheduler = GuidedScheduler(workers)
    label_bound = state.labels.upper_bound
    max_degree = g.max_degree

    def make_state():
        return make_scratch(label_bound, max_degree)

    def sweep(scratch, start: int, stop: int) -> Tuple[int, int]:
        tally, touched = scratch
        return plp_sweep(
            g.offsets, g.targets, g.weights, labels, state.active, next_active,
            order, start, stop, deterministic, tally, touched
        )

    logger.info(f"Starting label propagation on {g!r} with {workers} workers, theta={theta}")
    started = time.perf_counter()
    iteration = 0
    with report.phase("propagate"):
        while state.updated_count > theta and iteration < cfg.max_iterations:
            iteration += 1
            tick = time.perf_counter()
            if cfg.randomize_order:
                order[:] = rng.permutation(n)

            active = state.active_count
            results = scheduler.run(n, sweep, make_state)
            state.updated_count = sum(int(r[0]) for r in results)
            evaluated = sum(int(r[1]) for r in results)

            state.active, next_active = next_active, state.active
            next_active[:] = False

            seconds = time.perf_counter() - tick
            report.record_iteration(iteration, active, state.updated_count, seconds)
            logger.debug(
                f"Iteration {iteration}: active {active}, evaluated {evaluated}, updated {state.updated_count}"
            )

    if state.updated_count > theta:
        logger.warning(
            f"Label propagation stopped at the iteration cap {cfg.max_iterations} "
            f"with {state.updated_count} updates"
        )

    result = Partition(labels, label_bound)
    attach_quality(report, g, result)
    report.extras["iterations"] = iteration
    report.finish(time.perf_counter() - started)
    logger.info(
        f"Label propagation finished after {iteration} iterations "
        f"with {report.community_count} communities"
    )
    return result, report
