from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ssdgraph.graph import Digraph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

SAMPLES = Path(__file__).resolve().parent.parent / "samples"

# Nine-vertex graph: s=0, v1..v8 = 1..8.  A leaf of the forward dominator
# tree (v8) belongs to no minimal removable set.
NINE_ARCS = [
    (1, 2), (2, 3), (3, 4), (4, 2), (4, 7), (1, 5),
    (5, 6), (6, 7), (7, 8), (8, 1), (0, 1), (1, 0),
]
NINE_LABELS = ["s"] + [f"v{i}" for i in range(1, 9)]

# s=0, a=1, b=2, v=3: every vertex is a child of s in the forward tree.
STAR_ARCS = [(0, 1), (1, 3), (3, 2), (2, 0), (1, 0), (0, 2), (2, 3), (3, 1)]

# Reversed 5-cycle v1..v5 = 0..4 with a detour v1 -> u1 <-> u2 -> u3 -> v2
# (u1..u3 = 5..7).  Its strongly connected system is SSD but not SD.
DETOUR_ARCS = [
    (1, 0), (2, 1), (3, 2), (4, 3), (0, 4),
    (0, 5), (5, 6), (6, 5), (6, 7), (7, 1),
]


@pytest.fixture
def nine() -> Digraph:
    return Digraph.from_arcs(9, NINE_ARCS, NINE_LABELS)


@pytest.fixture
def star() -> Digraph:
    return Digraph.from_arcs(4, STAR_ARCS)


@pytest.fixture
def detour() -> Digraph:
    return Digraph.from_arcs(8, DETOUR_ARCS)


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 7) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph.from_arcs(n, chosen)


@st.composite
def strong_digraphs(draw, min_n: int = 2, max_n: int = 7) -> Digraph:
    """Random digraphs made strongly connected by overlaying a Hamiltonian cycle."""
    g = draw(digraphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    cycle = [(perm[i], perm[(i + 1) % g.n]) for i in range(g.n)]
    return Digraph.from_arcs(g.n, g.arcs() + cycle)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
