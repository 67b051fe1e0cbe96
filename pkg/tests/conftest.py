"""Shared graphs and hypothesis strategies for the ordercert test suite."""

import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from ordercert.graph import Graph, from_edge_list


def cycle(n):
    """C_n on 0..n-1."""
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    """P_n on 0..n-1."""
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    """K_n on 0..n-1."""
    return from_edge_list(n, itertools.combinations(range(n), 2))



def to_nx(g):
    """Copy a Graph into networkx, keeping vertex order."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h

@st.composite
def graphs(draw, min_n=0, max_n=7):
    """Random labelled graphs on at most max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_ordering(draw, min_n=0, max_n=7):
    """A random graph together with a random permutation of its vertices."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    order = draw(st.permutations(list(range(g.n))))
    return g, tuple(order)


@pytest.fixture
def c4():
    """The 4-cycle 0-1-2-3-0."""
    return cycle(4)


@pytest.fixture
def p3():
    """The path 0-1-2."""
    return path(3)


@pytest.fixture
def p4():
    """The path 0-1-2-3."""
    return path(4)


@pytest.fixture
def k3_pendant():
    """Triangle 0-1-2 with the pendant vertex 3 on 0."""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def two_k2():
    """Two disjoint edges."""
    return from_edge_list(4, [(0, 1), (2, 3)])


@pytest.fixture
def spider():
    """K_{1,3} with every edge subdivided once; leaves 4, 5, 6."""
    return from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


@pytest.fixture
def empty_graph():
    """The graph with no vertices."""
    return Graph(0, ())
