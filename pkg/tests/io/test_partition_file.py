"""
Tests for partition files and community graph export.
"""
import pytest

from parcom.exceptions import NonCompactPartitionError, PartitionFormatError
from parcom.io import (read_metis, read_partition, sizes_path, write_community_graph,
                       write_partition)
from parcom.quality import Partition


def test_partition_round_trip(tmp_path):
    path = tmp_path / "z.part"
    write_partition(Partition([0, 0, 3, 1]), path)
    assert path.read_text() == "0\n0\n3\n1\n"
    assert read_partition(path) == Partition([0, 0, 3, 1])


@pytest.mark.parametrize("text", ["0\nx\n", "0\n-2\n"])
def test_bad_partition_files(tmp_path, text):
    path = tmp_path / "z.part"
    path.write_text(text)
    with pytest.raises(PartitionFormatError):
        read_partition(path)


def test_community_graph(tmp_path, barbell, triangle_partition):
    path = tmp_path / "communities.graph"
    write_community_graph(barbell, triangle_partition, path)
    coarse = read_metis(path)
    assert coarse.node_count == 2
    assert coarse.self_loop_weight(0) == 3.0
    assert coarse.neighbor_weights(0).tolist() == [3.0, 1.0]
    assert sizes_path(path).read_text() == "0 3\n1 3\n"


def test_community_graph_needs_compact_partition(tmp_path, barbell):
    with pytest.raises(NonCompactPartitionError):
        write_community_graph(barbell, Partition([0, 0, 0, 2, 2, 2]), tmp_path / "c.graph")
