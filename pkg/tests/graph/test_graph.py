"""
Tests for adjacency-array graph storage.
"""
import threading

import numpy as np
import pytest
from hypothesis import given, settings

from parcom.exceptions import DuplicateEdgeError, GraphError, InvalidNodeError, InvalidWeightError
from parcom.graph import EdgeList, build_graph, for_edges_parallel, for_nodes_parallel, volume
from tests.helpers import graphs, random_graph


def test_barbell_counts(barbell):
    assert barbell.node_count == 6
    assert barbell.edge_count == 7
    assert barbell.total_edge_weight == 7.0
    assert barbell.volumes().tolist() == [2.0, 2.0, 3.0, 3.0, 2.0, 2.0]
    assert barbell.max_degree == 3
    assert barbell.neighbors(2).tolist() == [0, 1, 3]
    assert barbell.check_symmetry()


def test_self_loop_counts_twice_in_volume():
    g = build_graph(2, [(0, 0, 2.0), (0, 1, 1.0)])
    assert g.edge_count == 2
    assert g.total_edge_weight == 3.0
    assert g.degree(0) == 2
    assert volume(g, 0) == 5.0
    assert volume(g, 1) == 1.0
    assert g.self_loop_weight(0) == 2.0
    assert g.self_loop_weight(1) == 0.0
    assert g.has_self_loops


def test_empty_graph():
    g = build_graph(0, [])
    assert g.node_count == 0
    assert g.edge_count == 0
    assert g.total_edge_weight == 0.0
    assert g.max_degree == 0


def test_node_out_of_range():
    with pytest.raises(InvalidNodeError):
        build_graph(3, [(0, 3)])
    g = build_graph(3, [(0, 1)])
    with pytest.raises(InvalidNodeError):
        g.degree(5)


def test_duplicate_edges():
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (1, 0)])
    merged = build_graph(2, [(0, 1, 1.5), (1, 0, 0.5)], merge_duplicates=True)
    assert merged.edge_count == 1
    assert merged.neighbor_weights(0).tolist() == [2.0]


@pytest.mark.parametrize("weight", [0.0, -1.0, float("nan"), float("inf")])
def test_invalid_weights(weight):
    with pytest.raises(InvalidWeightError):
        build_graph(2, [(0, 1, weight)])


def test_edge_list_length_mismatch():
    with pytest.raises(GraphError):
        EdgeList([0, 1], [1])


def test_edge_arrays_list_each_edge_once(barbell):
    u, v, w = barbell.edge_arrays()
    assert len(u) == barbell.edge_count
    assert np.all(u <= v)
    assert sorted(barbell.iter_edges())[0] == (0, 1, 1.0)


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_handshake(g):
    assert np.isclose(g.volumes().sum(), 2.0 * g.total_edge_weight)
    assert g.check_symmetry()


def test_for_nodes_parallel_visits_every_node_once():
    g = build_graph(1000, [])
    seen = []
    lock = threading.Lock()

    def action(u):
        with lock:
            seen.append(u)

    for_nodes_parallel(g, action, workers=4)
    assert sorted(seen) == list(range(1000))


def test_for_nodes_parallel_single_worker_is_ordered(barbell):
    seen = []
    for_nodes_parallel(barbell, seen.append, workers=1)
    assert seen == list(range(6))


def test_for_edges_parallel_visits_every_edge_once():
    g = random_graph(3, 300, 0.05, weighted=True, self_loops=True)
    seen = []
    lock = threading.Lock()

    def action(u, v, w):
        with lock:
            seen.append((u, v, w))

    for_edges_parallel(g, action, workers=4)
    assert sorted(seen) == sorted(g.iter_edges())
