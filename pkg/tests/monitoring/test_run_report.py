"""
Tests for run reports.
"""
import json

import pytest

from parcom.monitoring import RunReport, summarize_runs


def make_report(modularity, seconds):
    report = RunReport("plm", workers=2, seed=0, node_count=10, edge_count=20)
    with report.phase("move", 0):
        pass
    report.record_iteration(1, 10, 4, 0.01)
    report.modularity = modularity
    report.finish(seconds)
    return report


def test_record_is_json_ready():
    report = make_report(0.4, 2.0)
    record = json.loads(json.dumps(report.to_record()))
    assert record["algorithm"] == "plm"
    assert record["edges_per_second"] == 10.0
    assert record["phases"][0]["name"] == "move"
    assert record["iterations"][0]["updated"] == 4
    assert report.peak_rss_mb > 0
    assert "phase_move_seconds" in report.to_text()


def test_absorb_prefixes_phases():
    outer = RunReport("epp", workers=1, seed=0)
    outer.absorb(make_report(0.1, 1.0), "final:", level_offset=1)
    assert outer.phases[0].name == "final:move"
    assert outer.phases[0].level == 1
    assert outer.phase_seconds("final:move") >= 0.0


def test_summary_picks_best_modularity():
    summary = summarize_runs([make_report(0.3, 1.0), make_report(0.5, 3.0), make_report(0.5, 2.0)])
    assert summary["runs"] == 3
    assert summary["best_run"] == 1
    assert summary["mean_seconds"] == pytest.approx(2.0)
    assert summary["best_modularity"] == 0.5
    assert summarize_runs([]) == {"runs": 0}
