"""
Whitespace-separated edge lists: one ``u v [w]`` per line.
"""
import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from ..exceptions import DuplicateEdgeError, EdgeListFormatError, GraphError
from ..graph.graph import EdgeList, Graph, build_graph

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")
MAX_ID = (1 << 63) - 1

PathLike = Union[str, Path]


def _parse_line(tokens: List[str], line_no: int) -> Tuple[int, int, float]:
    if len(tokens) not in (2, 3):
        raise EdgeListFormatError(f"Line {line_no}: expected 'u v [w]', got {len(tokens)} fields")
    try:
        u, v = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise EdgeListFormatError(f"Line {line_no}: malformed node id")
    if min(u, v) < 0 or max(u, v) > MAX_ID:
        raise EdgeListFormatError(f"Line {line_no}: node id outside [0, 2^63)")
    w = 1.0
    if len(tokens) == 3:
        try:
            w = float(tokens[2])
        except ValueError:
            raise EdgeListFormatError(f"Line {line_no}: malformed weight '{tokens[2]}'")
    return u, v, w


def read_edge_list_with_ids(
    path: PathLike,
    merge_duplicates: bool = False
) -> Tuple[Graph, np.ndarray]:
    """Read an edge list and densify ids.

    Returns:
        The graph and the original id of every dense node (ascending)

    Raises:
        EdgeListFormatError: Malformed line, invalid weight, or a duplicate
            pair without ``merge_duplicates``
        OSError: If the file cannot be read
    """
    sources: List[int] = []
    targets: List[int] = []
    weights: List[float] = []
    with open(path, "r") as f:
        for line_no, line in enumerate(f, start=1):
            tokens = line.split()
            if not tokens or tokens[0].startswith(COMMENT_PREFIXES):
                continue
            u, v, w = _parse_line(tokens, line_no)
            sources.append(u)
            targets.append(v)
            weights.append(w)

    raw_sources = np.asarray(sources, dtype=np.int64)
    raw_targets = np.asarray(targets, dtype=np.int64)
    original_ids, dense = np.unique(
        np.concatenate([raw_sources, raw_targets]), return_inverse=True
    )
    dense = dense.reshape(-1).astype(np.int64)
    count = len(raw_sources)
    edges = EdgeList(dense[:count], dense[count:], np.asarray(weights, dtype=np.float64))
    try:
        graph = build_graph(len(original_ids), edges, merge_duplicates=merge_duplicates)
    except DuplicateEdgeError as e:
        raise EdgeListFormatError(
            f"{path}: duplicate edge {{{int(original_ids[e.u])}, {int(original_ids[e.v])}}}; "
            f"enable duplicate merging to sum weights"
        )
    except GraphError as e:
        raise EdgeListFormatError(f"{path}: {e.message}", {"cause": e.error_code})
    logger.info(f"Read {graph!r} from {path}")
    return graph, original_ids.astype(np.int64)


def read_edge_list(path: PathLike, merge_duplicates: bool = False) -> Graph:
    """Read an edge list; node ids are densified in ascending order of the original ids."""
    graph, _ = read_edge_list_with_ids(path, merge_duplicates)
    return graph


def write_edge_list(g: Graph, path: PathLike) -> None:
    """Write every undirected edge once as ``u v w`` with u <= v.

    Isolated nodes have no line and are lost on reading back.
    """
    with open(path, "w") as f:
        for u, v, w in g.iter_edges():
            weight = str(int(w)) if w.is_integer() else repr(w)
            f.write(f"{u} {v} {weight}\n")
    logger.debug(f"Wrote {g!r} to {path}")
