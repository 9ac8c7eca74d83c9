"""
METIS adjacency format.

Layout: optional ``%`` comment lines, a header ``n m [fmt]`` and then one line
per node listing its 1-indexed neighbors, with each neighbor followed by the
edge weight when ``fmt`` announces edge weights. A self-loop is listed once.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

from ..exceptions import GraphError, MetisFormatError
from ..graph.graph import EdgeList, Graph, build_graph

logger = logging.getLogger(__name__)

WEIGHTED_CODES = ("1", "001")
UNWEIGHTED_CODES = ("0", "000")
MAX_ID = (1 << 63) - 1

PathLike = Union[str, Path]


@dataclass
class GraphFileHeader:
    """Parsed METIS header."""
    n: int
    m: int
    fmt: Optional[str] = None

    @property
    def weighted(self) -> bool:
        return self.fmt in WEIGHTED_CODES


def _parse_int(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MetisFormatError(f"Line {line_no}: malformed integer '{token}'")
    if value > MAX_ID or value < -MAX_ID:
        raise MetisFormatError(f"Line {line_no}: integer '{token}' exceeds 64 bits")
    return value


def _parse_weight(token: str, line_no: int) -> float:
    try:
        return float(int(token))
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise MetisFormatError(f"Line {line_no}: malformed weight '{token}'")


def _lines(path: PathLike) -> Iterator[Tuple[int, str]]:
    """Non-comment lines with their 1-based line numbers."""
    with open(path, "r") as f:
        for line_no, line in enumerate(f, start=1):
            if line.startswith("%"):
                continue
            yield line_no, line


def parse_header(line: str, line_no: int = 1) -> GraphFileHeader:
    """Parse ``n m [fmt]``.

    Raises:
        MetisFormatError: For missing fields or node-weight format codes
    """
    tokens = line.split()
    if len(tokens) < 2 or len(tokens) > 4:
        raise MetisFormatError(f"Line {line_no}: header must be 'n m [fmt]', got '{line.strip()}'")
    n = _parse_int(tokens[0], line_no)
    m = _parse_int(tokens[1], line_no)
    if n < 0 or m < 0:
        raise MetisFormatError(f"Line {line_no}: negative node or edge count")
    fmt = tokens[2] if len(tokens) >= 3 else None
    if fmt is not None and fmt not in WEIGHTED_CODES + UNWEIGHTED_CODES:
        raise MetisFormatError(
            f"Line {line_no}: unsupported format code '{fmt}'; node weights are not supported"
        )
    return GraphFileHeader(n, m, fmt)


def read_metis(path: PathLike) -> Graph:
    """Read a METIS graph file.

    Raises:
        MetisFormatError: Malformed header or entries, asymmetric adjacency,
            or an edge count differing from the header
        OSError: If the file cannot be read
    """
    lines = _lines(path)
    header: Optional[GraphFileHeader] = None
    for line_no, line in lines:
        if line.strip():
            header = parse_header(line, line_no)
            break
    if header is None:
        raise MetisFormatError(f"{path}: missing header")

    sources: List[int] = []
    targets: List[int] = []
    weights: List[float] = []
    node = 0
    for line_no, line in lines:
        if node >= header.n:
            if line.strip():
                raise MetisFormatError(f"Line {line_no}: more than {header.n} node lines")
            continue
        tokens = line.split()
        if header.weighted:
            if len(tokens) % 2:
                raise MetisFormatError(f"Line {line_no}: neighbor without weight")
            pairs = zip(tokens[0::2], tokens[1::2])
            for id_token, weight_token in pairs:
                targets.append(_parse_int(id_token, line_no) - 1)
                weights.append(_parse_weight(weight_token, line_no))
                sources.append(node)
        else:
            for id_token in tokens:
                targets.append(_parse_int(id_token, line_no) - 1)
                weights.append(1.0)
                sources.append(node)
        node += 1
    # editors drop trailing empty lines
    if node < header.n:
        logger.debug(f"{path}: {header.n - node} trailing node lines missing, treated as isolated")

    src = np.asarray(sources, dtype=np.int64)
    dst = np.asarray(targets, dtype=np.int64)
    wgt = np.asarray(weights, dtype=np.float64)
    out_of_range = (dst < 0) | (dst >= header.n)
    if out_of_range.any():
        i = int(np.flatnonzero(out_of_range)[0])
        raise MetisFormatError(
            f"Node {int(src[i]) + 1} lists neighbor {int(dst[i]) + 1} outside [1, {header.n}]"
        )

    forward = dst > src
    backward = dst < src
    f_order = np.lexsort((dst[forward], src[forward]))
    b_order = np.lexsort((src[backward], dst[backward]))
    if not (
        forward.sum() == backward.sum()
        and np.array_equal(src[forward][f_order], dst[backward][b_order])
        and np.array_equal(dst[forward][f_order], src[backward][b_order])
        and np.array_equal(wgt[forward][f_order], wgt[backward][b_order])
    ):
        raise MetisFormatError(f"{path}: adjacency is not symmetric")

    keep = dst >= src
    try:
        graph = build_graph(header.n, EdgeList(src[keep], dst[keep], wgt[keep]))
    except GraphError as e:
        raise MetisFormatError(f"{path}: {e.message}", {"cause": e.error_code})
    if graph.edge_count != header.m:
        raise MetisFormatError(
            f"{path}: header announces {header.m} edges, adjacency holds {graph.edge_count}"
        )
    logger.info(f"Read {graph!r} from {path}")
    return graph


def _format_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def write_metis(g: Graph, path: PathLike, weighted: Optional[bool] = None) -> None:
    """Write ``g`` in METIS format.

    Args:
        g: Graph to write
        path: Output file
        weighted: Emit edge weights; automatic when omitted (any weight other than 1)
    """
    if weighted is None:
        weighted = bool(np.any(g.weights != 1.0))
    with open(path, "w") as f:
        header = f"{g.node_count} {g.edge_count}"
        f.write(f"{header} 1\n" if weighted else f"{header}\n")
        for u in range(g.node_count):
            lo, hi = g.offsets[u], g.offsets[u + 1]
            if weighted:
                fields = [
                    f"{int(v) + 1} {_format_weight(w)}"
                    for v, w in zip(g.targets[lo:hi], g.weights[lo:hi])
                ]
            else:
                fields = [str(int(v) + 1) for v in g.targets[lo:hi]]
            f.write(" ".join(fields) + "\n")
    logger.debug(f"Wrote {g!r} to {path}")
