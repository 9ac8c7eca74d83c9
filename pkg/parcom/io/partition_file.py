"""
Partition files: line i holds the community id of node i.
"""
import logging
from pathlib import Path
from typing import List, Union

from ..exceptions import PartitionError, PartitionFormatError
from ..quality.partition import Partition

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def write_partition(z: Partition, path: PathLike) -> None:
    with open(path, "w") as f:
        for community in z.assignment:
            f.write(f"{int(community)}\n")
    logger.debug(f"Wrote {z!r} to {path}")


def read_partition(path: PathLike) -> Partition:
    """Read one nonnegative community id per line; blank lines are skipped.

    Raises:
        PartitionFormatError: For malformed or negative ids
    """
    ids: List[int] = []
    with open(path, "r") as f:
        for line_no, line in enumerate(f, start=1):
            token = line.strip()
            if not token:
                continue
            try:
                ids.append(int(token))
            except ValueError:
                raise PartitionFormatError(f"Line {line_no}: malformed community id '{token}'")
    try:
        return Partition(ids)
    except (PartitionError, OverflowError) as e:
        raise PartitionFormatError(f"{path}: {str(e)}")
