"""
Weighted undirected graph storage.

Graphs are kept as adjacency arrays (CSR): ``offsets`` of length n + 1 and
parallel ``targets`` / ``weights`` arrays. An edge {u, v} with u != v is
stored in both endpoint lists; a self-loop {u, u} is stored once in u's list.
Adjacency lists are sorted by neighbor id. Graphs are not modified after
construction; coarsening produces new graphs.
"""
import logging
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DuplicateEdgeError,
    GraphError,
    InvalidNodeError,
    InvalidWeightError,
)
from .scheduler import GuidedScheduler

logger = logging.getLogger(__name__)


class EdgeList:
    """Edges as parallel endpoint and weight arrays."""

    def __init__(
        self,
        sources: Sequence[int],
        targets: Sequence[int],
        weights: Optional[Sequence[float]] = None
    ):
        """Initialize the edge list.

        Args:
            sources: First endpoints
            targets: Second endpoints
            weights: Edge weights, 1.0 each when omitted
        """
        self.sources = np.asarray(sources, dtype=np.int64).reshape(-1)
        self.targets = np.asarray(targets, dtype=np.int64).reshape(-1)
        if weights is None:
            self.weights = np.ones(len(self.sources), dtype=np.float64)
        else:
            self.weights = np.asarray(weights, dtype=np.float64).reshape(-1)
        if not (len(self.sources) == len(self.targets) == len(self.weights)):
            raise GraphError(
                "Edge list arrays differ in length",
                details={
                    "sources": len(self.sources),
                    "targets": len(self.targets),
                    "weights": len(self.weights),
                }
            )

    @classmethod
    def from_tuples(cls, edges: Iterable[Sequence[Any]]) -> "EdgeList":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples."""
        sources, targets, weights = [], [], []
        for edge in edges:
            if len(edge) not in (2, 3):
                raise GraphError(f"Edge {edge!r} must have 2 or 3 fields")
            sources.append(edge[0])
            targets.append(edge[1])
            weights.append(edge[2] if len(edge) == 3 else 1.0)
        return cls(sources, targets, weights)

    def __len__(self) -> int:
        return len(self.sources)

    def __iter__(self) -> Iterator[Tuple[int, int, float]]:
        for u, v, w in zip(self.sources, self.targets, self.weights):
            yield int(u), int(v), float(w)


class Graph:
    """Undirected weighted graph in adjacency-array form."""

    def __init__(self, offsets: np.ndarray, targets: np.ndarray, weights: np.ndarray):
        """Wrap prebuilt CSR arrays. Use ``build_graph`` for validated input.

        Args:
            offsets: Row offsets, length n + 1
            targets: Neighbor ids, sorted within each row
            weights: Positive weights parallel to ``targets``
        """
        self.offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        self.targets = np.ascontiguousarray(targets, dtype=np.int64)
        self.weights = np.ascontiguousarray(weights, dtype=np.float64)
        self.node_count = len(self.offsets) - 1

        sources = self.entry_sources()
        loops = sources == self.targets
        loop_count = int(loops.sum())
        self.edge_count = (len(self.targets) - loop_count) // 2 + loop_count
        self.total_edge_weight = float(
            self.weights[~loops].sum() / 2.0 + self.weights[loops].sum()
        )
        self._volumes = np.bincount(
            sources,
            weights=np.where(loops, 2.0 * self.weights, self.weights),
            minlength=self.node_count
        ).astype(np.float64)

    @classmethod
    def from_pairs(
        cls,
        node_count: int,
        lower: np.ndarray,
        upper: np.ndarray,
        weights: np.ndarray
    ) -> "Graph":
        """Build from unique unordered pairs without validation."""
        lower = np.asarray(lower, dtype=np.int64)
        upper = np.asarray(upper, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.float64)
        proper = lower != upper
        src = np.concatenate([lower, upper[proper]])
        dst = np.concatenate([upper, lower[proper]])
        wgt = np.concatenate([weights, weights[proper]])
        order = np.lexsort((dst, src))
        src, dst, wgt = src[order], dst[order], wgt[order]
        offsets = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=node_count), out=offsets[1:])
        return cls(offsets, dst, wgt)

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.node_count:
            raise InvalidNodeError(int(u), self.node_count)

    def entry_sources(self) -> np.ndarray:
        """Source node of every adjacency entry."""
        return np.repeat(
            np.arange(self.node_count, dtype=np.int64), np.diff(self.offsets)
        )

    def degree(self, u: int) -> int:
        """Number of adjacency entries of ``u`` (a self-loop counts once)."""
        self._check_node(u)
        return int(self.offsets[u + 1] - self.offsets[u])

    @property
    def max_degree(self) -> int:
        if self.node_count == 0:
            return 0
        return int(np.diff(self.offsets).max())

    def neighbors(self, u: int) -> np.ndarray:
        self._check_node(u)
        return self.targets[self.offsets[u]:self.offsets[u + 1]]

    def neighbor_weights(self, u: int) -> np.ndarray:
        self._check_node(u)
        return self.weights[self.offsets[u]:self.offsets[u + 1]]

    def self_loop_weight(self, u: int) -> float:
        nbrs = self.neighbors(u)
        hit = np.searchsorted(nbrs, u)
        if hit < len(nbrs) and nbrs[hit] == u:
            return float(self.neighbor_weights(u)[hit])
        return 0.0

    def volume(self, u: int) -> float:
        """Weighted degree with the self-loop counted twice."""
        self._check_node(u)
        return float(self._volumes[u])

    def volumes(self) -> np.ndarray:
        """Volumes of all nodes. The returned array must not be modified."""
        return self._volumes

    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Each undirected edge once as (u, v, w) with u <= v."""
        sources = self.entry_sources()
        keep = self.targets >= sources
        return sources[keep], self.targets[keep], self.weights[keep]

    def iter_edges(self) -> Iterator[Tuple[int, int, float]]:
        for u, v, w in zip(*self.edge_arrays()):
            yield int(u), int(v), float(w)

    @property
    def has_self_loops(self) -> bool:
        return bool((self.entry_sources() == self.targets).any())

    def check_symmetry(self) -> bool:
        """True when every entry (u, v, w) with u != v has its mirror (v, u, w)."""
        sources = self.entry_sources()
        proper = sources != self.targets
        s, t, w = sources[proper], self.targets[proper], self.weights[proper]
        forward = np.lexsort((t, s))
        backward = np.lexsort((s, t))
        return bool(
            np.array_equal(s[forward], t[backward])
            and np.array_equal(t[forward], s[backward])
            and np.array_equal(w[forward], w[backward])
        )

    def allclose(self, other: "Graph", rtol: float = 1e-12) -> bool:
        """Structural equality with weights compared up to ``rtol``."""
        return (
            np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
            and np.allclose(self.weights, other.weights, rtol=rtol, atol=0.0)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"Graph(n={self.node_count}, m={self.edge_count}, "
            f"total_edge_weight={self.total_edge_weight:g})"
        )


def build_graph(
    node_count: int,
    edges: Union[EdgeList, Iterable[Sequence[Any]]],
    merge_duplicates: bool = False
) -> Graph:
    """Build a validated graph.

    Args:
        node_count: Number of nodes n
        edges: Edge list or iterable of (u, v[, w]) tuples
        merge_duplicates: Sum the weights of repeated unordered pairs
            instead of rejecting them

    Returns:
        Graph with m = number of distinct unordered pairs

    Raises:
        InvalidNodeError: Endpoint outside [0, n)
        InvalidWeightError: Nonpositive or non-finite weight
        DuplicateEdgeError: Repeated pair without ``merge_duplicates``
    """
    if node_count < 0:
        raise GraphError(f"Node count must be nonnegative, got {node_count}")
    if not isinstance(edges, EdgeList):
        edges = EdgeList.from_tuples(edges)

    u, v, w = edges.sources, edges.targets, edges.weights
    bad = (u < 0) | (u >= node_count) | (v < 0) | (v >= node_count)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        offender = int(u[i]) if not 0 <= u[i] < node_count else int(v[i])
        raise InvalidNodeError(offender, node_count, {"edge_index": i})
    invalid = ~np.isfinite(w) | (w <= 0)
    if invalid.any():
        i = int(np.flatnonzero(invalid)[0])
        raise InvalidWeightError(
            f"Edge {{{int(u[i])}, {int(v[i])}}} has invalid weight {float(w[i])}",
            {"edge_index": i}
        )

    lower = np.minimum(u, v)
    upper = np.maximum(u, v)
    order = np.lexsort((upper, lower))
    lower, upper, w = lower[order], upper[order], w[order]
    repeated = (lower[1:] == lower[:-1]) & (upper[1:] == upper[:-1])
    if repeated.any():
        if not merge_duplicates:
            i = int(np.flatnonzero(repeated)[0]) + 1
            raise DuplicateEdgeError(int(lower[i]), int(upper[i]))
        starts = np.flatnonzero(np.concatenate([[True], ~repeated]))
        w = np.add.reduceat(w, starts)
        lower, upper = lower[starts], upper[starts]
        logger.debug(f"Merged {int(repeated.sum())} duplicate edge entries")

    graph = Graph.from_pairs(node_count, lower, upper, w)
    logger.debug(f"Built {graph!r}")
    return graph


def volume(g: Graph, u: int) -> float:
    """Volume of node ``u``: incident weight with the self-loop counted twice."""
    return g.volume(u)


def for_nodes_parallel(
    g: Graph,
    action: Callable[[int], None],
    workers: Optional[int] = None
) -> None:
    """Apply ``action`` exactly once to every node.

    Ranges are handed out with guided scheduling. With one worker nodes are
    visited in ascending id order. ``action`` runs concurrently on several
    threads when more workers are used.
    """
    def task(_: None, start: int, stop: int) -> None:
        for u in range(start, stop):
            action(u)

    GuidedScheduler(workers).run(g.node_count, task)


def for_edges_parallel(
    g: Graph,
    action: Callable[[int, int, float], None],
    workers: Optional[int] = None
) -> None:
    """Apply ``action(u, v, w)`` exactly once to every undirected edge (u <= v)."""
    offsets, targets, weights = g.offsets, g.targets, g.weights

    def task(_: None, start: int, stop: int) -> None:
        for u in range(start, stop):
            for e in range(offsets[u], offsets[u + 1]):
                v = int(targets[e])
                if v >= u:
                    action(u, v, float(weights[e]))

    GuidedScheduler(workers).run(g.node_count, task)
