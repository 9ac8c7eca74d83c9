"""
Configuration module for parcom.

Provides validated algorithm and runtime settings loaded from JSON with
environment overrides.
"""

from .settings import (
    EngineSettings,
    EnsembleConfig,
    LouvainConfig,
    PlpConfig,
    RuntimeConfig,
    default_theta,
    load_settings,
    save_settings,
    update_section,
)

__all__ = [
    'EngineSettings', 'EnsembleConfig', 'LouvainConfig', 'PlpConfig',
    'RuntimeConfig', 'default_theta', 'load_settings', 'save_settings',
    'update_section',
]
