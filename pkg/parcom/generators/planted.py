"""
Planted partition graphs with known communities.

Nodes are split into ``k`` contiguous blocks whose sizes differ by at most
one. Every pair inside a block is an edge with probability ``p_in``, every
pair across blocks with ``p_out``. Row ``u`` (pairs u < v) draws from its own
Philox stream keyed by (seed, u), so rows can be generated in any order and
on any number of threads with identical output.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..exceptions import GeneratorParameterError
from ..graph.graph import Graph
from ..graph.scheduler import GuidedScheduler
from ..quality.partition import Partition

logger = logging.getLogger(__name__)

_SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class PlantedPartitionSpec:
    """Parameters of a planted partition graph."""
    n: int
    k: int
    p_in: float
    p_out: float
    seed: int = 0

    def validate(self) -> None:
        """Raise GeneratorParameterError for out-of-range parameters."""
        if self.n < 0:
            raise GeneratorParameterError(f"Node count must be nonnegative, got {self.n}")
        if self.k < 1 or (self.n > 0 and self.k > self.n):
            raise GeneratorParameterError(f"Block count {self.k} outside [1, {self.n}]")
        if not 0.0 <= self.p_out <= self.p_in <= 1.0:
            raise GeneratorParameterError(
                f"Probabilities must satisfy 0 <= p_out <= p_in <= 1, "
                f"got p_in={self.p_in}, p_out={self.p_out}"
            )
        if not 0 <= self.seed < _SEED_LIMIT:
            raise GeneratorParameterError(f"Seed {self.seed} outside [0, 2^64)")

    def block_of(self) -> np.ndarray:
        """Block id of every node."""
        return (np.arange(self.n, dtype=np.int64) * self.k) // max(self.n, 1)

    def block_sizes(self) -> np.ndarray:
        return np.bincount(self.block_of(), minlength=self.k)


def _row_stream(seed: int, u: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) | u))


def _sample_segment(rng: np.random.Generator, start: int, stop: int, p: float) -> np.ndarray:
    """Positions in [start, stop) chosen independently with probability p."""
    length = stop - start
    if length <= 0 or p <= 0.0:
        return np.zeros(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(start, stop, dtype=np.int64)
    chosen: List[np.ndarray] = []
    position = start - 1
    while True:
        expected = (stop - position) * p
        batch = int(expected + 4.0 * np.sqrt(expected) + 8)
        gaps = rng.geometric(p, size=batch)
        positions = position + np.cumsum(gaps)
        inside = positions[positions < stop]
        chosen.append(inside)
        if len(inside) < batch:
            break
        position = int(positions[-1])
    return np.concatenate(chosen).astype(np.int64)


def generate_planted(
    spec: PlantedPartitionSpec,
    workers: Optional[int] = None
) -> Tuple[Graph, Partition]:
    """Generate a planted partition graph.

    Returns:
        The graph and the block partition used as ground truth

    Raises:
        GeneratorParameterError: If ``spec`` is out of range
    """
    spec.validate()
    n, k = spec.n, spec.k
    blocks = spec.block_of()
    # first node of the following block
    block_end = ((blocks + 1) * n + k - 1) // k

    def generate_rows(_: None, start: int, stop: int) -> Tuple[np.ndarray, np.ndarray]:
        sources: List[np.ndarray] = []
        targets: List[np.ndarray] = []
        for u in range(start, stop):
            rng = _row_stream(spec.seed, u)
            end = int(block_end[u])
            row = np.concatenate([
                _sample_segment(rng, u + 1, end, spec.p_in),
                _sample_segment(rng, end, n, spec.p_out),
            ])
            sources.append(np.full(len(row), u, dtype=np.int64))
            targets.append(row)
        if not sources:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        return np.concatenate(sources), np.concatenate(targets)

    parts = GuidedScheduler(workers).run(n, generate_rows)
    if parts:
        lower = np.concatenate([p[0] for p in parts])
        upper = np.concatenate([p[1] for p in parts])
    else:
        lower = upper = np.zeros(0, dtype=np.int64)

    graph = Graph.from_pairs(n, lower, upper, np.ones(len(lower), dtype=np.float64))
    truth = Partition(blocks, k)
    logger.info(
        f"Generated planted partition {graph!r} with {k} blocks, "
        f"expected edges {expected_edge_count(spec):.1f}"
    )
    return graph, truth


def _pair_counts(spec: PlantedPartitionSpec) -> Tuple[float, float]:
    sizes = spec.block_sizes().astype(np.float64)
    intra = float((sizes * (sizes - 1) / 2.0).sum())
    total = spec.n * (spec.n - 1) / 2.0
    return intra, total - intra


def expected_edge_count(spec: PlantedPartitionSpec) -> float:
    """Expected number of edges."""
    intra, inter = _pair_counts(spec)
    return intra * spec.p_in + inter * spec.p_out


def expected_degrees(spec: PlantedPartitionSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Expected intra-block and inter-block degree of every node."""
    sizes = spec.block_sizes()[spec.block_of()].astype(np.float64)
    return (sizes - 1) * spec.p_in, (spec.n - sizes) * spec.p_out
