import pytest

from pcgroups.graph import (
    CommutationGraph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)
from pcgroups.reproduction import builtin


@pytest.fixture(scope="session")
def gamma1():
    return builtin("gamma1")


@pytest.fixture(scope="session")
def gamma2():
    return builtin("gamma2")


def k3_plus_k1():
    return disjoint_union(complete_graph(3), CommutationGraph(["w"]))


def small_fixture_graphs():
    """The graphs with at most five vertices used for oracle comparisons."""
    return {
        "gamma1": builtin("gamma1"),
        "C5": cycle_graph(5),
        "C5bar": complement(cycle_graph(5)),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "K3+K1": k3_plus_k1(),
    }


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {msg}")
