"""
Graph builders and hypothesis strategies shared by the test suite.
"""
from typing import List

import numpy as np
from hypothesis import strategies as st

from parcom.graph import Graph, build_graph
from parcom.quality import Partition

BARBELL_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
TWO_TRIANGLE_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]

BARBELL_METIS = "6 7\n2 3\n1 3\n1 2 4\n3 5 6\n4 6\n4 5\n"


def random_graph(
    seed: int,
    n: int,
    p: float,
    weighted: bool = False,
    self_loops: bool = False
) -> Graph:
    """G(n, p) graph, optionally with integer weights in [1, 4] and self-loops."""
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=0 if self_loops else 1)
    keep = rng.random(len(iu)) < p
    u, v = iu[keep], iv[keep]
    if weighted:
        w = rng.integers(1, 5, size=len(u)).astype(np.float64)
    else:
        w = np.ones(len(u), dtype=np.float64)
    return build_graph(n, list(zip(u.tolist(), v.tolist(), w.tolist())))


def random_partition(seed: int, n: int, k: int) -> Partition:
    rng = np.random.default_rng(seed)
    return Partition(rng.integers(0, k, size=n))


def components(g: Graph) -> np.ndarray:
    """Connected component id of every node."""
    parent = list(range(g.node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.iter_edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return np.array([find(u) for u in range(g.node_count)], dtype=np.int64)


def same_clustering(a: Partition, b: Partition) -> bool:
    """True when both partitions group the nodes identically."""
    return a.refines(b) and b.refines(a)


@st.composite
def graphs(
    draw,
    min_nodes: int = 1,
    max_nodes: int = 12,
    weighted: bool = True,
    self_loops: bool = True
) -> Graph:
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u if self_loops else u + 1, n)]
    chosen: List = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    weight = st.integers(1, 5) if weighted else st.just(1)
    weights = draw(st.lists(weight, min_size=len(chosen), max_size=len(chosen)))
    return build_graph(n, [(u, v, float(w)) for (u, v), w in zip(chosen, weights)])


@st.composite
def graphs_with_partitions(draw, max_nodes: int = 12, weighted: bool = True):
    g = draw(graphs(max_nodes=max_nodes, weighted=weighted))
    k = draw(st.integers(1, g.node_count))
    labels = draw(st.lists(st.integers(0, k - 1), min_size=g.node_count, max_size=g.node_count))
    return g, Partition(labels, k)
