"""
Tests for the METIS reader and writer.
"""
import os
import tempfile
from pathlib import Path

import pytest
from hypothesis import given, settings

from parcom.graph import build_graph
from parcom.io import parse_header, read_metis, write_metis
from parcom.exceptions import MetisFormatError
from tests.helpers import BARBELL_METIS, graphs

CORPUS_NAME = "as-22july06.graph"


def write_text(directory: Path, text: str, name: str = "g.graph") -> Path:
    path = directory / name
    path.write_text(text)
    return path


def test_read_barbell(tmp_path, barbell):
    g = read_metis(write_text(tmp_path, BARBELL_METIS))
    assert g == barbell
    assert g.edge_count == 7


def test_comments_are_skipped(tmp_path, barbell):
    text = "% generated\n" + BARBELL_METIS.replace("1 3\n", "% row two follows\n1 3\n", 1)
    assert read_metis(write_text(tmp_path, text)) == barbell


def test_weighted_format(tmp_path):
    g = read_metis(write_text(tmp_path, "3 2 1\n2 5\n1 5 3 2\n2 2\n"))
    assert g.neighbor_weights(1).tolist() == [5.0, 2.0]
    assert g.total_edge_weight == 7.0


def test_self_loop_listed_once(tmp_path):
    g = read_metis(write_text(tmp_path, "2 2\n1 2\n1\n"))
    assert g.edge_count == 2
    assert g.self_loop_weight(0) == 1.0
    assert g.volume(0) == 3.0


def test_missing_trailing_lines_are_isolated(tmp_path):
    g = read_metis(write_text(tmp_path, "3 1\n2\n1\n"))
    assert g.node_count == 3
    assert g.degree(2) == 0


@pytest.mark.parametrize("text,fragment", [
    ("", "missing header"),
    ("3\n", "header"),
    ("2 1 011\n2\n1\n", "node weights"),
    ("2 1\n3\n1\n", "outside"),
    ("3 1\n2\n\n\n", "symmetric"),
    ("3 2\n2\n1\n\n", "announces 2 edges"),
    ("2 1\n2\n1\n1\n", "more than 2 node lines"),
    ("2 1\nx\n1\n", "malformed integer"),
    ("2 1 1\n2\n1 1\n", "without weight"),
    ("2 1 1\n2 0\n1 0\n", "invalid weight"),
    ("2 1\n99999999999999999999\n1\n", "64 bits"),
])
def test_malformed_files(tmp_path, text, fragment):
    with pytest.raises(MetisFormatError) as e:
        read_metis(write_text(tmp_path, text))
    assert fragment in str(e.value)


def test_header_fields():
    header = parse_header("10 20 001")
    assert (header.n, header.m, header.weighted) == (10, 20, True)
    assert not parse_header("10 20").weighted


def test_missing_file_raises_os_error(tmp_path):
    with pytest.raises(OSError):
        read_metis(tmp_path / "absent.graph")


def test_writer_emits_unweighted_header(tmp_path, barbell):
    path = tmp_path / "out.graph"
    write_metis(barbell, path)
    assert path.read_text() == BARBELL_METIS


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_written_graph_reads_back(g):
    with tempfile.TemporaryDirectory() as directory:
        path = Path(directory) / "g.graph"
        write_metis(g, path)
        assert read_metis(path) == g


def test_fractional_weights_survive(tmp_path):
    g = build_graph(3, [(0, 1, 0.1), (1, 2, 2.5), (2, 2, 1.0 / 3.0)])
    path = tmp_path / "w.graph"
    write_metis(g, path)
    assert read_metis(path) == g


def corpus_file() -> Path:
    directory = Path(os.getenv("PARCOM_CORPUS_DIR", Path(__file__).parents[1] / "data"))
    return directory / CORPUS_NAME


@pytest.mark.skipif(not corpus_file().exists(), reason="autonomous systems snapshot not available")
def test_autonomous_systems_snapshot():
    g = read_metis(corpus_file())
    assert g.node_count == 22963
    assert g.edge_count == 48436
    assert g.check_symmetry()
