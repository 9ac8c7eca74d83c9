"""
Detection module for parcom.

Label propagation, the Louvain method with and without refinement, and
ensemble preprocessing, all running on a shared worker budget.
"""

from .base import Detector
from .coarsening import CoarseningResult, coarsen, prolong
from .ensemble import (
    combine_exact,
    combine_hashed,
    count_hash_collisions,
    djb2,
    make_detector,
    run_epp,
)
from .louvain import CommunityVolumes, delta_mod, move_phase, run_plm, run_plmr
from .plp import LabelState, dominant_label, is_stable, run_plp
from .registry import ALGORITHMS, detect

__all__ = [
    'Detector', 'CoarseningResult', 'coarsen', 'prolong', 'combine_exact',
    'combine_hashed', 'count_hash_collisions', 'djb2', 'make_detector', 'run_epp',
    'CommunityVolumes', 'delta_mod', 'move_phase', 'run_plm', 'run_plmr',
    'LabelState', 'dominant_label', 'is_stable', 'run_plp', 'ALGORITHMS', 'detect',
]
