"""Test configuration for the brauer_lab package."""

import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path so 'brauer_lab' can be imported when
# tests are executed from the repository root.
ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture
def cache_file(tmp_path):
    """A fresh result-cache path with the in-memory cache cleared around the test."""
    from brauer_lab import cache_utils

    cache_utils.clear_memory_cache()
    yield str(tmp_path / "results.jsonl")
    cache_utils.clear_memory_cache()
