from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from hyperinterlace.hypergraph import Edge, Hypergraph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def hyperedge_loop():
    """Three vertices, one 3-edge and a loop on v1, all coefficients 1."""
    return Hypergraph.build(["v1", "v2", "v3"], {"e1": {"v1": 1, "v2": 1, "v3": 1}, "l": {"v1": 1}})


@pytest.fixture
def triangle():
    """Unweighted simple triangle, each edge oriented +1/-1."""
    return Hypergraph.build(
        ["v1", "v2", "v3"],
        {"e12": {"v1": 1, "v2": -1}, "e13": {"v1": 1, "v3": -1}, "e23": {"v2": 1, "v3": -1}},
    )


coefficients = st.one_of(
    st.sampled_from([1.0, -1.0, 0.5, -2.0]),
    st.floats(0.1, 3.0),
    st.floats(-3.0, -0.1),
)


@st.composite
def hypergraphs(draw, max_vertices=8, max_edges=8, no_isolated=True, empty_edges=True):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(1 if no_isolated else 0, max_edges))
    vertices = [f"v{i + 1}" for i in range(n)]
    members = []
    for _ in range(m):
        subset = draw(st.lists(st.sampled_from(range(n)), min_size=0 if empty_edges else 1, max_size=n, unique=True))
        members.append({i: draw(coefficients) for i in sorted(subset)})
    if no_isolated:
        covered = {i for mem in members for i in mem}
        for i in range(n):
            if i not in covered:
                members[draw(st.integers(0, m - 1))][i] = draw(coefficients)
    edges = tuple(
        Edge(f"e{j + 1}", tuple((vertices[i], mem[i]) for i in sorted(mem))) for j, mem in enumerate(members)
    )
    return Hypergraph(tuple(vertices), edges)


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
