"""
Dense node-to-community assignments.
"""
from typing import Dict, Iterable, List, Optional

import numpy as np

from ..exceptions import PartitionError, PartitionMismatchError
from ..graph.graph import Graph


class Partition:
    """Assignment of every node to exactly one community id.

    ``upper_bound`` is strictly greater than every id in use.
    """

    def __init__(self, assignment: Iterable[int], upper_bound: Optional[int] = None):
        self.assignment = np.ascontiguousarray(
            np.asarray(assignment, dtype=np.int64).reshape(-1)
        )
        if len(self.assignment) and self.assignment.min() < 0:
            raise PartitionError("Community ids must be nonnegative")
        observed = int(self.assignment.max()) + 1 if len(self.assignment) else 0
        if upper_bound is None:
            upper_bound = observed
        elif upper_bound < observed:
            raise PartitionError(
                f"Upper bound {upper_bound} does not exceed community id {observed - 1}"
            )
        self.upper_bound = int(upper_bound)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, u: int) -> int:
        return int(self.assignment[u])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.assignment, other.assignment)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Partition(n={len(self)}, communities={self.community_count()})"

    def copy(self) -> "Partition":
        return Partition(self.assignment.copy(), self.upper_bound)

    def to_list(self) -> List[int]:
        return self.assignment.tolist()

    def community_sizes(self) -> np.ndarray:
        """Size of every id below the upper bound, zero for unused ids."""
        return np.bincount(self.assignment, minlength=self.upper_bound)

    def community_count(self) -> int:
        """Number of nonempty communities."""
        return int(np.count_nonzero(self.community_sizes()))

    def size_histogram(self) -> Dict[int, int]:
        sizes = self.community_sizes()
        values, counts = np.unique(sizes[sizes > 0], return_counts=True)
        return {int(s): int(c) for s, c in zip(values, counts)}

    def members(self, community: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == community)

    def is_compact(self) -> bool:
        """True when the ids in use are exactly 0..k-1."""
        if len(self) == 0:
            return True
        return self.community_count() == int(self.assignment.max()) + 1

    def compact(self) -> "Partition":
        """Remap ids to [0, k) in increasing order of the old ids."""
        return compact(self)

    def refines(self, other: "Partition") -> bool:
        """True when every community of ``self`` lies inside one of ``other``."""
        if len(self) != len(other):
            raise PartitionMismatchError(len(self), len(other))
        if len(self) == 0:
            return True
        pairs = np.unique(
            np.stack([self.assignment, other.assignment], axis=1), axis=0
        )
        return len(np.unique(pairs[:, 0])) == len(pairs)

    def check_covers(self, g: Graph) -> None:
        """Raise when the partition length differs from the node count."""
        if len(self) != g.node_count:
            raise PartitionMismatchError(g.node_count, len(self))


def singleton_partition(g: Graph) -> Partition:
    """Every node in its own community, community id = node id."""
    return Partition(np.arange(g.node_count, dtype=np.int64), g.node_count)


def compact(z: Partition) -> Partition:
    """Community ids remapped to [0, k), preserving same-community relations."""
    if len(z) == 0:
        return Partition(z.assignment.copy(), 0)
    _, inverse = np.unique(z.assignment, return_inverse=True)
    inverse = inverse.reshape(-1).astype(np.int64)
    return Partition(inverse, int(inverse.max()) + 1)
