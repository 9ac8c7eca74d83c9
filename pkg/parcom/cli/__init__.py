"""
Command line subcommands: detect, score, generate and bench.
"""

from . import bench, detect, generate, score

SUBCOMMANDS = (detect, score, generate, bench)

__all__ = ['bench', 'detect', 'generate', 'score', 'SUBCOMMANDS']
