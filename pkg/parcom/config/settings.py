"""
Configuration management for parcom.

This module handles algorithm defaults, the worker budget and logging
settings. Values are read from a JSON file, overridden from the environment
(a ``.env`` file is honored) and validated with pydantic models.
"""
import json
import logging
import math
import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from ..exceptions import ConfigurationError, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "default_config.json"

ENV_THREADS = "PARCOM_THREADS"
ENV_LOG_LEVEL = "PARCOM_LOG_LEVEL"
ENV_CORPUS_DIR = "PARCOM_CORPUS_DIR"

BaseDetector = Literal["plp", "plm", "plmr"]


def default_theta(node_count: int) -> int:
    """Update threshold n * 1e-5, floored, never below 1."""
    return max(1, math.floor(node_count * 1e-5))


class PlpConfig(BaseModel):
    """Configuration for parallel label propagation."""
    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    theta: Optional[int] = Field(default=None, ge=0)
    max_iterations: int = Field(default=100, ge=1)
    randomize_order: bool = False
    seed: int = 0
    workers: Optional[int] = Field(default=None, ge=1)

    def resolve_theta(self, node_count: int) -> int:
        """Return the configured threshold or the size-dependent default."""
        if self.theta is None:
            return default_theta(node_count)
        return self.theta


class LouvainConfig(BaseModel):
    """Configuration for the parallel Louvain method and its refinement."""
    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    gamma: float = Field(default=1.0, ge=0.0)
    max_move_iterations: int = Field(default=32, ge=1)
    max_levels: int = Field(default=64, ge=1)
    seed: int = 0
    refine: bool = False
    workers: Optional[int] = Field(default=None, ge=1)


class EnsembleConfig(BaseModel):
    """Configuration for ensemble preprocessing."""
    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    ensemble_size: int = Field(default=4, ge=1)
    base: BaseDetector = "plp"
    final: BaseDetector = "plmr"
    seed: int = 0
    workers: Optional[int] = Field(default=None, ge=1)
    combine: Literal["hashed", "exact"] = "hashed"


class RuntimeConfig(BaseModel):
    """Process-wide runtime settings."""
    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    threads: int = Field(default=1, ge=1)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    corpus_dir: Optional[str] = None


class EngineSettings(BaseModel):
    """All configuration sections."""
    model_config = ConfigDict(extra="forbid")

    # engine runs seed the label propagation order; a bare PlpConfig keeps node order
    plp: PlpConfig = Field(default_factory=lambda: PlpConfig(randomize_order=True))
    louvain: LouvainConfig = Field(default_factory=LouvainConfig)
    ensemble: EnsembleConfig = Field(default_factory=EnsembleConfig)
    runtime: RuntimeConfig = Field(default_factory=RuntimeConfig)


def _env_overrides() -> Dict[str, Any]:
    """Collect runtime overrides from the environment."""
    load_dotenv(override=False)
    runtime: Dict[str, Any] = {}
    if os.getenv(ENV_THREADS):
        runtime["threads"] = os.environ[ENV_THREADS]
    if os.getenv(ENV_LOG_LEVEL):
        runtime["log_level"] = os.environ[ENV_LOG_LEVEL].upper()
    if os.getenv(ENV_CORPUS_DIR):
        runtime["corpus_dir"] = os.environ[ENV_CORPUS_DIR]
    return runtime


def _validate(data: Dict[str, Any]) -> EngineSettings:
    try:
        return EngineSettings.model_validate(data)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid configuration: {e}", {"errors": e.errors()})


def load_settings(
    config_path: Optional[Union[str, Path]] = None,
    use_environment: bool = True
) -> EngineSettings:
    """Load engine configuration.

    Args:
        config_path: JSON file to read; the packaged defaults when omitted
        use_environment: Apply PARCOM_* environment overrides

    Returns:
        Validated settings

    Raises:
        ConfigurationError: If the file cannot be read
        ValidationError: If a value is out of range
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (json.JSONDecodeError, OSError) as e:
        raise ConfigurationError(f"Failed to load configuration {path}: {str(e)}")

    if use_environment:
        overrides = _env_overrides()
        if overrides:
            data.setdefault("runtime", {}).update(overrides)
            logger.debug(f"Applied environment overrides: {sorted(overrides)}")

    return _validate(data)


def save_settings(settings: EngineSettings, config_path: Union[str, Path]) -> None:
    """Persist settings as JSON."""
    path = Path(config_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(path, "w") as f:
            json.dump(settings.model_dump(), f, indent=4)
    except OSError as e:
        raise ConfigurationError(f"Failed to save configuration {path}: {str(e)}")


def update_section(settings: EngineSettings, section: str, **values: Any) -> EngineSettings:
    """Return a copy of ``settings`` with one section updated.

    Raises:
        ValidationError: For unknown sections, unknown keys or bad values
    """
    if section not in EngineSettings.model_fields:
        raise ValidationError(f"Unknown configuration section '{section}'")
    data = settings.model_dump()
    unknown = set(values) - set(data[section])
    if unknown:
        raise ValidationError(
            f"Unknown keys for section '{section}': {sorted(unknown)}"
        )
    data[section].update(values)
    return _validate(data)
