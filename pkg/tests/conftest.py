"""Shared fixtures and hypothesis strategies for the suite.

Random graphs come from a seeded G(n, p) sampler so failures reproduce;
hypothesis-generated graphs are drawn as (order, upper-triangle code)
pairs, which makes shrinking meaningful (smaller code = fewer edges).
"""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from detourlab import Graph

from oracles import code_to_adj

settings.register_profile(
    "detourlab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    max_examples=60,
)
settings.load_profile("detourlab")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """One G(n, p) sample as a Graph value."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_graph_corpus(seed: int, count: int, n_lo: int, n_hi: int) -> list[Graph]:
    """A reproducible mixed-density corpus; edge probability cycles thin/medium/dense."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(n_lo, n_hi)
        p = (0.15, 0.3, 0.5, 0.75)[k % 4]
        out.append(random_graph(rng, n, p))
    return out


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    code = draw(st.integers(0, (1 << m) - 1)) if m else 0
    return Graph(n, code_to_adj(n, code))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xDE70)


# One line per acceptance criterion, filled in by tests/test_acceptance.py and
# echoed after the run (stdout capture would otherwise swallow passing lines).
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
