"""
Helpers shared by the command line subcommands.
"""
import argparse
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import psutil

from ..exceptions import ConfigurationError
from ..graph.graph import Graph
from ..io.edge_list import read_edge_list
from ..io.metis import read_metis

logger = logging.getLogger(__name__)

GRAPH_FORMATS = ("metis", "edges")
AUTO_THREADS = "auto"


def physical_cores() -> int:
    """Physical core count, falling back to logical CPUs."""
    return psutil.cpu_count(logical=False) or os.cpu_count() or 1


def parse_threads(value: str) -> int:
    """argparse type for a positive thread count or ``auto``."""
    if value == AUTO_THREADS:
        return physical_cores()
    try:
        threads = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid thread count '{value}'")
    if threads < 1:
        raise argparse.ArgumentTypeError(f"thread count must be positive, got {threads}")
    return threads


def parse_threads_list(value: str) -> List[int]:
    """argparse type for a comma-separated list of thread counts."""
    items = [item.strip() for item in value.split(",") if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError("thread list is empty")
    return [parse_threads(item) for item in items]


def common_parent() -> argparse.ArgumentParser:
    """Options accepted by every subcommand."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", default=None, help="JSON settings file")
    parent.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (default: PARCOM_LOG_LEVEL or settings)"
    )
    return parent


def add_graph_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--input", required=required, help="Graph file")
    parser.add_argument("--format", choices=GRAPH_FORMATS, default="metis", help="Graph file format")
    parser.add_argument(
        "--merge-duplicates",
        action="store_true",
        help="Sum weights of repeated edge-list pairs instead of failing"
    )


def load_graph(path: Union[str, Path], fmt: str, merge_duplicates: bool = False) -> Graph:
    """Read a graph in the given format.

    Raises:
        ConfigurationError: For an unknown format
    """
    if fmt == "metis":
        return read_metis(path)
    if fmt == "edges":
        return read_edge_list(path, merge_duplicates=merge_duplicates)
    raise ConfigurationError(f"Unknown graph format '{fmt}'")


def write_json(path: Union[str, Path], record: Dict[str, Any]) -> None:
    path = Path(path)
    if path.parent:
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(record, f, indent=2)
    logger.debug(f"Wrote report {path}")


def resolve_threads(requested: Optional[int], default: int) -> int:
    return requested if requested is not None else default


def positive_int(value: str) -> int:
    """argparse type for integers >= 1."""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer '{value}'")
    if number < 1:
        raise argparse.ArgumentTypeError(f"value must be positive, got {number}")
    return number
