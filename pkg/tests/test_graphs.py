import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from mixedqt.graphs import (
    Graph,
    MixedGraph,
    complete_graph,
    cut_vertices,
    cycle_graph,
    delete_vertices,
    edge_subgraph,
    find_odd_cycle,
    bipartition,
    girth,
    has_odd_cycle,
    independent_vertex_cuts,
    mixed_square,
    net_graph,
    path_graph,
    prism_graph,
    square_dipath_witnesses,
    triangle_free_edges,
    underlying,
    undirected_square,
)

from conftest import graphs, mixed_graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestTypes:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(1, 1)}))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, frozenset({(0, 2)}))

    def test_edges_normalised(self):
        g = Graph(3, frozenset({(2, 0)}))
        assert g.edges == frozenset({(0, 2)})

    def test_digon_rejected(self):
        with pytest.raises(ValueError):
            MixedGraph(2, arcs=frozenset({(0, 1), (1, 0)}))

    def test_edge_and_arc_on_same_pair_rejected(self):
        with pytest.raises(ValueError):
            MixedGraph(2, edges=frozenset({(0, 1)}), arcs=frozenset({(1, 0)}))

    def test_arc_loop_rejected(self):
        with pytest.raises(ValueError):
            MixedGraph(2, arcs=frozenset({(1, 1)}))


class TestUnderlying:
    def test_arc_and_edge(self):
        m = MixedGraph(3, edges=frozenset({(1, 2)}), arcs=frozenset({(0, 1)}))
        assert underlying(m).edges == frozenset({(0, 1), (1, 2)})

    def test_directed_cycle(self):
        m = MixedGraph(5, arcs=frozenset((i, (i + 1) % 5) for i in range(5)))
        assert underlying(m) == cycle_graph(5)

    def test_empty(self):
        assert underlying(MixedGraph(3)) == Graph(3)


class TestMixedSquare:
    def test_two_dipath_closes_triangle(self):
        m = MixedGraph(3, arcs=frozenset({(0, 1), (1, 2)}))
        sq = mixed_square(m)
        assert sq.edges == frozenset({(0, 2)})
        assert underlying(sq) == complete_graph(3)

    def test_directed_five_cycle_squares_to_k5(self):
        m = MixedGraph(5, arcs=frozenset((i, (i + 1) % 5) for i in range(5)))
        assert undirected_square(m) == complete_graph(5)

    def test_oriented_star_squares_to_k4_minus_edge(self):
        # x=0 -> c=1, c -> y=2, c -> z=3; expected pairs derived by scanning
        # every 2-dipath by hand over the arc list
        m = MixedGraph(4, arcs=frozenset({(0, 1), (1, 2), (1, 3)}))
        added = {(u, v) for (t1, h1) in m.arcs for (t2, h2) in m.arcs
                 if h1 == t2 and t1 != h2
                 for (u, v) in [(min(t1, h2), max(t1, h2))]}
        assert added == {(0, 2), (0, 3)}
        sq = mixed_square(m)
        assert sq.edges == frozenset(added)
        under = underlying(sq)
        assert len(under.edges) == 5 and not under.has_edge(2, 3)

    def test_three_arc_path_gives_same_square_shape(self):
        # a->b->c->d squares to K4 minus the pair {a, d}; together with the
        # oriented-star case this exhibits two non-isomorphic oriented roots
        # with the same undirected square
        m = MixedGraph(4, arcs=frozenset({(0, 1), (1, 2), (2, 3)}))
        sq = undirected_square(m)
        assert sq.edges == frozenset(combinations(range(4), 2)) - {(0, 3)}

    def test_existing_adjacency_not_duplicated(self):
        # pair at directed distance two that is already an arc stays an arc
        m = MixedGraph(3, arcs=frozenset({(0, 1), (1, 2), (0, 2)}))
        sq = mixed_square(m)
        assert sq.edges == frozenset() and sq.arcs == m.arcs

    def test_arc_free_graph_unchanged(self):
        m = MixedGraph(4, edges=cycle_graph(4).edges)
        assert undirected_square(m) == cycle_graph(4)

    @given(mixed_graphs())
    def test_square_grows_underlying(self, m):
        assert underlying(m).edges <= underlying(mixed_square(m)).edges

    @given(mixed_graphs())
    def test_square_idempotent(self, m):
        sq = mixed_square(m)
        assert mixed_square(sq) == sq

    @given(mixed_graphs())
    def test_added_edges_have_checkable_dipath_witnesses(self, m):
        sq = mixed_square(m)
        witnesses = square_dipath_witnesses(m)
        assert set(witnesses) == set(sq.edges - m.edges)
        for e, (u, w, v) in witnesses.items():
            assert (u, w) in m.arcs and (w, v) in m.arcs
            assert e == (min(u, v), max(u, v))


class TestTriangleFreeEdges:
    def test_cycle_all_edges(self):
        g = cycle_graph(5)
        assert triangle_free_edges(g) == g.edges

    def test_triangle_none(self):
        assert triangle_free_edges(complete_graph(3)) == frozenset()

    def test_net_pendants(self):
        g = net_graph()
        assert triangle_free_edges(g) == frozenset({(0, 3), (1, 4), (2, 5)})

    @given(graphs())
    def test_edge_subgraph_of_result_is_triangle_free(self, g):
        sub, _ = edge_subgraph(g, triangle_free_edges(g))
        assert triangle_free_edges(sub) == sub.edges


class TestEdgeSubgraph:
    def test_two_disjoint_edges_of_k4(self):
        sub, ids = edge_subgraph(complete_graph(4), {(0, 1), (2, 3)})
        assert sub.n == 4 and sub.edges == frozenset({(0, 1), (2, 3)})
        assert ids == (0, 1, 2, 3)

    def test_empty_subset(self):
        sub, ids = edge_subgraph(complete_graph(4), set())
        assert sub == Graph(0) and ids == ()

    def test_net_pendants_make_perfect_matching(self):
        sub, ids = edge_subgraph(net_graph(), triangle_free_edges(net_graph()))
        assert sub.n == 6 and len(sub.edges) == 3
        assert all(sub.degree(v) == 1 for v in range(6))

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            edge_subgraph(cycle_graph(4), {(0, 2)})


class TestOddCycles:
    def test_c5_has_one(self):
        assert has_odd_cycle(cycle_graph(5))

    def test_c6_has_none(self):
        assert not has_odd_cycle(cycle_graph(6))

    def test_tree_has_none(self):
        assert not has_odd_cycle(path_graph(6))

    @given(graphs())
    def test_certificate_or_colouring(self, g):
        cyc = find_odd_cycle(g)
        parts = bipartition(g)
        if cyc is None:
            v1, v2 = parts
            assert all((u in v1) != (v in v1) for u, v in g.edges)
        else:
            assert parts is None
            assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert g.has_edge(a, b)

    @given(graphs())
    def test_matches_networkx_bipartiteness(self, g):
        assert (find_odd_cycle(g) is None) == nx.is_bipartite(to_nx(g))


class TestGirth:
    def test_known_values(self):
        assert girth(cycle_graph(5)) == 5
        assert girth(complete_graph(4)) == 3
        assert girth(path_graph(4)) == math.inf

    @given(graphs())
    def test_matches_networkx(self, g):
        expected = nx.girth(to_nx(g))
        assert girth(g) == expected


class TestCutVertices:
    def test_path_centre(self):
        assert cut_vertices(path_graph(3)) == frozenset({1})

    def test_cycle_none(self):
        assert cut_vertices(cycle_graph(5)) == frozenset()

    def test_net_triangle(self):
        assert cut_vertices(net_graph()) == frozenset({0, 1, 2})

    @given(graphs())
    def test_matches_networkx(self, g):
        assert cut_vertices(g) == frozenset(nx.articulation_points(to_nx(g)))


class TestIndependentVertexCuts:
    def test_net_contains_pendant_cut(self):
        cuts = independent_vertex_cuts(net_graph())
        sides = {(i, frozenset({v1, v2})) for i, v1, v2 in cuts}
        assert (frozenset({0}), frozenset({frozenset({3}),
                                           frozenset({1, 2, 4, 5})})) in sides

    def test_complete_graph_has_none(self):
        assert independent_vertex_cuts(complete_graph(4)) == []

    def test_clause_gadget_literal_cut(self):
        from mixedqt.reduction import clause_gadget

        g, _, _ = clause_gadget()
        cuts = independent_vertex_cuts(g)
        wanted = (frozenset({1, 4, 7}), frozenset({0, 5, 8}), frozenset({2, 3, 6}))
        assert wanted in cuts

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            independent_vertex_cuts(Graph(2))

    @given(graphs(max_n=6))
    def test_returned_triples_satisfy_definition(self, g):
        from mixedqt.graphs import is_connected

        if not is_connected(g):
            return
        everything = frozenset(range(g.n))
        for i, v1, v2 in independent_vertex_cuts(g):
            assert i | v1 | v2 == everything
            assert not (i & v1 or i & v2 or v1 & v2)
            assert v1 and v2
            assert not any(g.has_edge(a, b) for a, b in combinations(sorted(i), 2))
            for v in i:
                assert g.adj[v] & v1 and g.adj[v] & v2
            assert not any(g.adj[a] & v2 for a in v1)


class TestDeleteVertices:
    def test_relabelling(self):
        g = prism_graph()
        h, kept = delete_vertices(g, {1})
        assert h.n == 5 and kept == (0, 2, 3, 4, 5)
        assert h.edges == frozenset({(0, 1), (0, 2), (1, 4), (2, 3), (3, 4), (2, 4)})

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delete_vertices(Graph(2), {2})
