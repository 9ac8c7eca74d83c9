"""
Tests for edge-list files.
"""
import tempfile
from pathlib import Path
from typing import Tuple

import numpy as np
import pytest
from hypothesis import given, settings

from parcom.exceptions import EdgeListFormatError
from parcom.graph import Graph, build_graph
from parcom.io import read_edge_list, read_edge_list_with_ids, read_metis, write_edge_list, write_metis
from tests.helpers import graphs


def without_isolated(g: Graph) -> Tuple[Graph, np.ndarray]:
    """The graph on its non-isolated nodes, renumbered in ascending order."""
    kept = np.flatnonzero(np.diff(g.offsets) > 0)
    new_id = {int(u): i for i, u in enumerate(kept)}
    edges = [(new_id[u], new_id[v], w) for u, v, w in g.iter_edges()]
    return build_graph(len(kept), edges), kept


def test_ids_are_densified_in_ascending_order(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("# snapshot\n100 7\n7 42\n\n% trailing comment\n42 100 2.5\n")
    g, ids = read_edge_list_with_ids(path)
    assert ids.tolist() == [7, 42, 100]
    assert g.node_count == 3
    assert g.neighbors(0).tolist() == [1, 2]
    assert g.neighbor_weights(1).tolist() == [1.0, 2.5]


def test_duplicate_pair_is_rejected(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("10 20\n20 10\n")
    with pytest.raises(EdgeListFormatError) as e:
        read_edge_list(path)
    assert "{10, 20}" in str(e.value)


def test_duplicates_merge_on_request(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("10 20\n20 10 3\n")
    g = read_edge_list(path, merge_duplicates=True)
    assert g.edge_count == 1
    assert g.total_edge_weight == 4.0


@pytest.mark.parametrize("text", ["1\n", "1 2 3 4\n", "a b\n", "-1 2\n", "1 2 heavy\n", "1 2 -1\n"])
def test_malformed_lines(tmp_path, text):
    path = tmp_path / "bad.edges"
    path.write_text(text)
    with pytest.raises(EdgeListFormatError):
        read_edge_list(path)


def test_written_edges_read_back(tmp_path, barbell):
    path = tmp_path / "g.edges"
    write_edge_list(barbell, path)
    assert path.read_text().splitlines()[0] == "0 1 1"
    assert read_edge_list(path) == barbell


@given(graphs(max_nodes=20))
@settings(max_examples=100, deadline=None)
def test_random_graphs_read_back_without_isolated_nodes(g):
    expected, kept = without_isolated(g)
    with tempfile.TemporaryDirectory() as directory:
        path = Path(directory) / "g.edges"
        write_edge_list(g, path)
        read, ids = read_edge_list_with_ids(path)
    assert ids.tolist() == kept.tolist()
    assert read == expected


@given(graphs(max_nodes=20))
@settings(max_examples=100, deadline=None)
def test_metis_and_edge_list_describe_the_same_graph(g):
    g, _ = without_isolated(g)
    with tempfile.TemporaryDirectory() as directory:
        edges_path = Path(directory) / "g.edges"
        metis_path = Path(directory) / "g.graph"
        write_edge_list(g, edges_path)
        write_metis(g, metis_path)
        from_edges = read_edge_list(edges_path)
        from_metis = read_metis(metis_path)
    assert from_edges == from_metis == g
