"""Shared fixtures: corpus analyses are computed once per session and reused."""

from __future__ import annotations

import pytest

from distlap.graphs import enumerate_connected
from distlap.verify import analyze


@pytest.fixture(scope="session")
def corpus_analyses():
    """GraphAnalysis records for every connected isomorphism class, n = 1..7."""
    return {n: [analyze(g) for g in enumerate_connected(n)] for n in range(1, 8)}
