import numpy as np
import pytest
from hypothesis import strategies as st

from mixedmoore.graph import MixedGraph


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20161, help="seed for randomized tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@st.composite
def mixed_graphs(draw, max_n=10):
    """Small random simple mixed graphs (digons allowed, no arc parallel to an edge)."""
    n = draw(st.integers(1, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = {(min(p), max(p)) for p in draw(st.lists(pairs, max_size=2 * n))}
    arcs = {p for p in draw(st.lists(pairs, max_size=2 * n)) if (min(p), max(p)) not in edges}
    return MixedGraph(range(n), edges, arcs)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or report.failed:
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        mark = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name.replace('test_criterion_', 'criterion ')}")
