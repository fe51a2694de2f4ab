import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from click.testing import CliRunner

from core.models import Probability


@pytest.fixture
def fair_die():
    return Probability(1, 6)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def clean_env(monkeypatch):
    """Remove PEPYS_* overrides that may leak in from the developer's shell."""
    for var in ("PEPYS_ENUM_CAP", "PEPYS_WORKERS", "PEPYS_SEED"):
        monkeypatch.delenv(var, raising=False)
    return monkeypatch
