"""
Monitoring module for parcom.

Run reports with phase timings, iteration traces and memory figures.
"""

from .run_report import IterationRecord, PhaseRecord, RunReport, summarize_runs

__all__ = ['IterationRecord', 'PhaseRecord', 'RunReport', 'summarize_runs']
