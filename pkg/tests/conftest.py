"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from symbreak import Graph, build_graph
from symbreak.isomorphism import graph_from_pair_mask


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    num_pairs = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << num_pairs) - 1))
    return graph_from_pair_mask(n, mask)


@st.composite
def graphs_with_permutation(draw, min_n: int = 1, max_n: int = 6):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, tuple(perm)


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """The graph with vertex v renamed to perm[v]."""
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return build_graph(g.n, edges)


@pytest.fixture
def order7_path() -> str:
    import os

    return os.path.join(os.path.dirname(__file__), "data", "order7.g6")
