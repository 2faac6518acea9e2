# tests/conftest.py
# ShuffleLDP v1.0.0 - Fixture condivise
# ============================================================================

import sys
from pathlib import Path

import pytest

# Aggiungi root al path per import
ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from core.randomness import RandomnessStream  # noqa: E402


@pytest.fixture
def rng():
    """Stream deterministico per i test (seed 12345, stream 0)."""
    return RandomnessStream(12345, 0)
