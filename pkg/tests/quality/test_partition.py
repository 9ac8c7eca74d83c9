"""
Tests for partitions.
"""
import pytest

from parcom.exceptions import PartitionError, PartitionMismatchError
from parcom.quality import Partition, compact, singleton_partition


def test_compact_keeps_order_of_old_ids():
    z = Partition([5, 5, 2, 9])
    assert not z.is_compact()
    assert z.community_count() == 3
    assert compact(z).to_list() == [1, 1, 0, 2]
    assert z.compact().is_compact()


def test_sizes_and_members():
    z = Partition([0, 0, 1, 3])
    assert z.community_sizes().tolist() == [2, 1, 0, 1]
    assert z.size_histogram() == {1: 2, 2: 1}
    assert z.members(0).tolist() == [0, 1]


def test_refines(barbell):
    singles = singleton_partition(barbell)
    halves = Partition([0, 0, 0, 1, 1, 1])
    assert singles.refines(halves)
    assert not halves.refines(singles)
    with pytest.raises(PartitionMismatchError):
        halves.refines(Partition([0]))


def test_invalid_partitions():
    with pytest.raises(PartitionError):
        Partition([-1, 0])
    with pytest.raises(PartitionError):
        Partition([0, 4], upper_bound=3)


def test_empty_partition_is_compact():
    z = Partition([])
    assert len(z) == 0
    assert z.is_compact()
    assert z.compact().upper_bound == 0
