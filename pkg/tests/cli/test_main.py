"""
End-to-end tests of the command line.
"""
import csv
import json

import pytest

from parcom.cli.common import parse_threads, parse_threads_list, physical_cores
from parcom.io import read_metis, read_partition, sizes_path
from parcom.main import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main
from tests.helpers import BARBELL_METIS

pytestmark = pytest.mark.usefixtures("no_env")


@pytest.fixture
def barbell_file(tmp_path):
    path = tmp_path / "barbell.graph"
    path.write_text(BARBELL_METIS)
    return path


def test_detect_writes_partition_and_report(tmp_path, barbell_file, capsys):
    output = tmp_path / "z.part"
    report = tmp_path / "report.json"
    code = main([
        "detect", "--algo", "plm", "--input", str(barbell_file), "--threads", "1",
        "--output", str(output), "--report", str(report),
    ])
    assert code == EXIT_OK
    z = read_partition(output).to_list()
    assert z[0] == z[1] == z[2] != z[3] == z[4] == z[5]
    record = json.loads(report.read_text())
    assert record["summary"]["runs"] == 1
    assert record["runs"][0]["algorithm"] == "plm"
    assert record["runs"][0]["modularity"] == pytest.approx(5 / 14)
    out = capsys.readouterr().out
    assert "community_count: 2" in out


@pytest.mark.parametrize("algo", ["plp", "plmr", "epp"])
def test_detect_every_algorithm(barbell_file, algo, capsys):
    assert main(["detect", "--algo", algo, "--input", str(barbell_file), "--ensemble", "2"]) == EXIT_OK
    assert "algorithm:" in capsys.readouterr().out


def test_detect_repeated_runs(tmp_path, barbell_file, capsys):
    report = tmp_path / "report.json"
    code = main([
        "detect", "--input", str(barbell_file), "--runs", "3", "--seed", "4",
        "--report", str(report), "--community-graph", str(tmp_path / "c.graph"),
    ])
    assert code == EXIT_OK
    record = json.loads(report.read_text())
    assert [run["seed"] for run in record["runs"]] == [4, 5, 6]
    assert read_metis(tmp_path / "c.graph").node_count >= 1
    assert sizes_path(tmp_path / "c.graph").exists()
    assert "mean_seconds:" in capsys.readouterr().out


def test_detect_edge_list_input(tmp_path, capsys):
    path = tmp_path / "g.edges"
    path.write_text("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n")
    assert main(["detect", "--input", str(path), "--format", "edges", "--gamma", "1.0"]) == EXIT_OK
    assert "community_count: 2" in capsys.readouterr().out


def test_label_propagation_writes_compact_outputs(tmp_path, barbell_file):
    output = tmp_path / "z.part"
    community_graph = tmp_path / "c.graph"
    code = main([
        "detect", "--algo", "plp", "--input", str(barbell_file), "--threads", "1",
        "--output", str(output), "--community-graph", str(community_graph),
    ])
    assert code == EXIT_OK
    z = read_partition(output)
    assert z.is_compact()
    coarse = read_metis(community_graph)
    assert coarse.node_count == z.community_count()
    rows = [line.split() for line in sizes_path(community_graph).read_text().splitlines()]
    assert [int(row[0]) for row in rows] == list(range(coarse.node_count))
    assert sum(int(row[1]) for row in rows) == 6


def test_seeded_single_thread_detection_is_repeatable(tmp_path, barbell_file):
    outputs = [tmp_path / "first.part", tmp_path / "second.part"]
    for output in outputs:
        code = main([
            "detect", "--algo", "plp", "--input", str(barbell_file), "--theta", "0",
            "--threads", "1", "--seed", "7", "--output", str(output),
        ])
        assert code == EXIT_OK
    assert outputs[0].read_text() == outputs[1].read_text()


def test_score_with_reference(tmp_path, barbell_file, capsys):
    partition = tmp_path / "z.part"
    partition.write_text("0\n0\n0\n1\n1\n1\n")
    reference = tmp_path / "ref.part"
    reference.write_text("0\n0\n0\n0\n0\n0\n")
    code = main([
        "score", "--input", str(barbell_file), "--partition", str(partition),
        "--reference", str(reference),
    ])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    values = dict(line.split(": ", 1) for line in out.splitlines())
    assert float(values["modularity"]) == pytest.approx(5 / 14)
    assert float(values["rand_index"]) == pytest.approx(6 / 7)


def test_generate_and_score_ground_truth(tmp_path, capsys):
    graph = tmp_path / "planted.graph"
    truth = tmp_path / "planted.part"
    code = main([
        "generate", "--nodes", "200", "--blocks", "4", "--p-in", "0.2", "--p-out", "0.01",
        "--seed", "2", "--output", str(graph), "--ground-truth", str(truth),
    ])
    assert code == EXIT_OK
    assert read_metis(graph).node_count == 200
    assert read_partition(truth).community_count() == 4
    assert "expected_edges:" in capsys.readouterr().out


def test_bench_strong_scaling(tmp_path, capsys):
    output_dir = tmp_path / "bench"
    code = main([
        "bench", "--mode", "strong", "--algo", "plp", "--nodes", "300", "--blocks", "3",
        "--threads-list", "1,2", "--output-dir", str(output_dir),
    ])
    assert code == EXIT_OK
    with open(output_dir / "bench.csv") as f:
        rows = list(csv.DictReader(f))
    assert [int(row["threads"]) for row in rows] == [1, 2]
    assert float(rows[0]["speedup"]) == 1.0
    record = json.loads((output_dir / "bench.json").read_text())
    assert record["mode"] == "strong"
    assert "speedup" in capsys.readouterr().out


def test_bench_weak_scaling_grows_graph(tmp_path):
    output_dir = tmp_path / "bench"
    code = main([
        "bench", "--mode", "weak", "--algo", "plm", "--nodes", "100", "--blocks", "2",
        "--threads-list", "1,2", "--output-dir", str(output_dir),
    ])
    assert code == EXIT_OK
    rows = json.loads((output_dir / "bench.json").read_text())["rows"]
    assert [row["nodes"] for row in rows] == [100, 200]


def test_bench_weak_scaling_rejects_input(tmp_path, barbell_file):
    code = main([
        "bench", "--mode", "weak", "--input", str(barbell_file),
        "--output-dir", str(tmp_path / "bench"),
    ])
    assert code == EXIT_USAGE



def test_bench_weak_scaling_rejects_descending_threads(tmp_path):
    code = main([
        "bench", "--mode", "weak", "--algo", "plp", "--nodes", "100", "--blocks", "2",
        "--threads-list", "2,1", "--output-dir", str(tmp_path / "bench"),
    ])
    assert code == EXIT_USAGE

@pytest.mark.parametrize("argv", [
    [],
    ["cluster"],
    ["detect"],
    ["detect", "--input", "g.graph", "--algo", "infomap"],
    ["detect", "--input", "g.graph", "--threads", "0"],
    ["detect", "--input", "g.graph", "--runs", "0"],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "detect" in capsys.readouterr().out


def test_missing_input_file(tmp_path):
    assert main(["detect", "--input", str(tmp_path / "absent.graph")]) == EXIT_USAGE


def test_malformed_input_file(tmp_path):
    path = tmp_path / "bad.graph"
    path.write_text("3 1\n2\n\n\n")
    assert main(["detect", "--input", str(path)]) == EXIT_USAGE


def test_partition_length_mismatch(tmp_path, barbell_file):
    partition = tmp_path / "short.part"
    partition.write_text("0\n0\n")
    assert main(["score", "--input", str(barbell_file), "--partition", str(partition)]) == EXIT_USAGE


def test_invariant_failure_maps_to_internal_exit(monkeypatch, barbell_file):
    from parcom.cli import detect as detect_command
    from parcom.exceptions import InvariantViolationError

    def broken(*args, **kwargs):
        raise InvariantViolationError("community volumes drifted")

    monkeypatch.setattr(detect_command, "detect", broken)
    assert main(["detect", "--input", str(barbell_file)]) == EXIT_INTERNAL


def test_thread_arguments():
    assert parse_threads("auto") == physical_cores()
    assert parse_threads("3") == 3
    assert parse_threads_list("1, 2,4") == [1, 2, 4]
