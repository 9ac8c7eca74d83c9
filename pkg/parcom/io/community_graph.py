"""
Community graph export for external visualization.
"""
import logging
from pathlib import Path
from typing import Optional, Union

from ..detection.coarsening import coarsen
from ..graph.graph import Graph
from ..quality.partition import Partition
from .metis import write_metis

logger = logging.getLogger(__name__)

SIZES_SUFFIX = ".sizes"


def sizes_path(path: Union[str, Path]) -> Path:
    """Sidecar file next to ``path`` holding ``community_id size`` lines."""
    path = Path(path)
    return path.with_name(path.name + SIZES_SUFFIX)


def write_community_graph(
    g: Graph,
    z: Partition,
    path: Union[str, Path],
    workers: Optional[int] = None
) -> None:
    """Write the graph of communities in weighted METIS plus a community size sidecar.

    Raises:
        NonCompactPartitionError: If ``z`` is not compacted
    """
    result = coarsen(g, z, workers)
    write_metis(result.coarse, path, weighted=True)
    with open(sizes_path(path), "w") as f:
        for community, size in enumerate(z.community_sizes()):
            f.write(f"{community} {int(size)}\n")
    logger.info(f"Wrote community graph {result.coarse!r} to {path}")
