"""
Algorithm selection by name.
"""
import logging
from typing import Tuple

from ..config.settings import EngineSettings
from ..exceptions import UnknownAlgorithmError
from ..graph.graph import Graph
from ..monitoring.run_report import RunReport
from ..quality.partition import Partition
from .ensemble import run_epp
from .louvain import run_plm, run_plmr
from .plp import run_plp

logger = logging.getLogger(__name__)

ALGORITHMS = ("plp", "plm", "plmr", "epp")


def detect(
    name: str,
    g: Graph,
    settings: EngineSettings,
    seed: int,
    workers: int
) -> Tuple[Partition, RunReport]:
    """Run the named algorithm with its configured section, seed and worker count.

    The returned partition is always compacted.

    Raises:
        UnknownAlgorithmError: For names outside ALGORITHMS
    """
    overrides = {"seed": seed, "workers": workers}
    if name == "plp":
        z, report = run_plp(g, settings.plp.model_copy(update=overrides))
        return z.compact(), report
    if name == "plm":
        return run_plm(g, settings.louvain.model_copy(update=overrides))
    if name == "plmr":
        return run_plmr(g, settings.louvain.model_copy(update=overrides))
    if name == "epp":
        return run_epp(
            g,
            settings.ensemble.model_copy(update=overrides),
            plp_config=settings.plp,
            louvain_config=settings.louvain,
        )
    raise UnknownAlgorithmError(name, {"known": list(ALGORITHMS)})
