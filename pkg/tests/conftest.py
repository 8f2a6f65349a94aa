"""Shared fixtures: certified test graphs and their known optima.

The expected values below were produced by exhaustive enumeration and
are re-derived inside the tests by an independent naive loop, so the
package's vectorized solver is never its own oracle.
"""

import pytest

from qaflow import Graph

# name -> (n_vertices, edges, max_cut, solutions as MSB-first words)
FIXTURE_TABLE = {
    "a": (5, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)],
          5, ("01010", "10101")),
    "d4": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4)],
           5, ("01010", "01110", "10001", "10101")),
    "d6": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)],
           4, ("00001", "00011", "00101", "11010", "11100", "11110")),
    "k3": (3, [(0, 1), (0, 2), (1, 2)],
           2, ("001", "010", "011", "100", "101", "110")),
    "k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
           4, ("0011", "0101", "0110", "1001", "1010", "1100")),
}


def make_graph(name: str) -> Graph:
    n, edges, _, _ = FIXTURE_TABLE[name]
    return Graph(n, edges)


def expected_maxcut(name: str) -> int:
    return FIXTURE_TABLE[name][2]


def expected_solutions(name: str) -> tuple:
    return FIXTURE_TABLE[name][3]


@pytest.fixture
def graph_a() -> Graph:
    return make_graph("a")


@pytest.fixture
def graph_d4() -> Graph:
    return make_graph("d4")


@pytest.fixture
def graph_d6() -> Graph:
    return make_graph("d6")


@pytest.fixture
def graph_k4() -> Graph:
    return make_graph("k4")
