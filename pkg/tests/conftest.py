import random
from itertools import combinations

import hypothesis
import pytest
from hypothesis import strategies as st

from mixedqt.graphs import Graph, MixedGraph

hypothesis.settings.register_profile("suite", deadline=None, max_examples=60)
hypothesis.settings.load_profile("suite")


@st.composite
def graphs(draw, max_n=8, max_edges=None):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    if max_edges is not None and len(edges) > max_edges:
        edges = set(sorted(edges)[:max_edges])
    return Graph(n, frozenset(edges))


@st.composite
def mixed_graphs(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    states = draw(st.lists(st.integers(min_value=0, max_value=2),
                           min_size=len(g.edges), max_size=len(g.edges)))
    kept, arcs = set(), set()
    for e, s in zip(sorted(g.edges), states):
        if s == 0:
            kept.add(e)
        elif s == 1:
            arcs.add(e)
        else:
            arcs.add((e[1], e[0]))
    return MixedGraph(g.n, frozenset(kept), frozenset(arcs))


@pytest.fixture(scope="session")
def deg3_corpus():
    """Every connected graph with at most 7 vertices and maximum degree 3."""
    from mixedqt.generate import connected_graphs

    return list(connected_graphs(7, max_degree=3))


@pytest.fixture(scope="session")
def triangle_free_corpus():
    """Every connected triangle-free graph with at most 8 vertices."""
    from mixedqt.generate import connected_graphs

    return list(connected_graphs(8, triangle_free=True))


@pytest.fixture()
def rng():
    return random.Random(20260810)
