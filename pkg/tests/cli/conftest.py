"""
Fixtures for command line tests.
"""
import logging

import pytest


@pytest.fixture(autouse=True)
def restore_root_logger():
    """``main`` reconfigures the root logger; put the test runner's handlers back."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)


@pytest.fixture
def no_env(monkeypatch):
    for name in ("PARCOM_THREADS", "PARCOM_LOG_LEVEL", "PARCOM_CORPUS_DIR"):
        monkeypatch.delenv(name, raising=False)
