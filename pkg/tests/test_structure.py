import itertools
import random

import pytest
from hypothesis import given

from mixedqt.graphs import (
    Graph,
    MixedGraph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    net_graph,
    path_graph,
    prism_graph,
)
from mixedqt.solver import (
    PartialOrientation,
    VertexStatus,
    WitnessError,
    decide_qt,
    enumerate_qt,
    verify_witness,
    vertex_status,
)
from mixedqt.structure import (
    RemovalStep,
    RemovalTrace,
    decide_deg3,
    decide_girth4,
    embed_universal,
    find_net,
    is_removable,
    orient_deg3,
    parse_trace,
    reduce_removable,
    reinsert_removable,
    removable_vertices,
    serialize_trace,
)
from mixedqt.generate import random_connected_graph

from conftest import graphs


def house_graph():
    """Triangle 0,1,2 with pendant edges 1-3 and 2-4; vertex 0 is removable."""
    return Graph(5, frozenset({(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)}))


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, frozenset(outer + inner + spokes))


class TestRemovable:
    def test_house_apex_removable(self):
        assert is_removable(house_graph(), 0)

    def test_k4_minus_edge_degree_two_not_removable(self):
        g = Graph(4, frozenset({(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}))
        assert not is_removable(g, 0) and not is_removable(g, 3)

    def test_degree_three_not_removable(self):
        assert not any(is_removable(prism_graph(), v) for v in range(6))

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError):
            is_removable(complete_graph(5), 0)

    def test_reduce_house(self):
        reduced, trace = reduce_removable(house_graph())
        assert reduced.n == 4 and len(reduced.edges) == 3
        assert trace.steps == (RemovalStep(0, 1, 2, 3, 4),)
        assert trace.kept == (1, 2, 3, 4)

    def test_reduce_c6_identity(self):
        reduced, trace = reduce_removable(cycle_graph(6))
        assert reduced == cycle_graph(6) and trace.steps == ()

    def test_order_independent(self, deg3_corpus):
        # deleting the removable set one vertex at a time, in any order,
        # matches the all-at-once reduction
        rng = random.Random(7)
        hit = 0
        for g in deg3_corpus:
            removable = removable_vertices(g)
            if not removable:
                continue
            hit += 1
            reduced, _ = reduce_removable(g)
            orders = set(itertools.permutations(removable)) if len(removable) < 4 \
                else {tuple(rng.sample(removable, len(removable))) for _ in range(6)}
            for order in orders:
                current, ids = g, list(range(g.n))
                for orig in order:
                    local = ids.index(orig)
                    assert is_removable(current, local)
                    current, kept = delete_vertices(current, {local})
                    ids = [ids[i] for i in kept]
                assert current == reduced
        assert hit > 0

    def test_no_new_removables_after_single_deletion(self, deg3_corpus):
        for g in deg3_corpus:
            removable = removable_vertices(g)
            for u in removable:
                h, kept = delete_vertices(g, {u})
                survivors = {orig: i for i, orig in enumerate(kept)}
                expected = frozenset(survivors[v] for v in removable if v != u)
                assert frozenset(removable_vertices(h)) == expected


class TestReinsert:
    def test_house_round_trip(self):
        g = house_graph()
        reduced, trace = reduce_removable(g)
        w = decide_qt(reduced)
        full = reinsert_removable(w, trace)
        assert full.base == g
        assert verify_witness(g, full.mixed).ok
        assert len(full.mixed.arcs) + len(full.mixed.edges) == 5

    def test_empty_trace_identity(self):
        g = cycle_graph(6)
        w = decide_qt(g)
        trace = RemovalTrace(6, (), tuple(range(6)))
        again = reinsert_removable(w, trace)
        assert again.mixed == w.mixed

    def test_random_round_trips(self, rng):
        done = 0
        while done < 30:
            g = random_connected_graph(rng.randint(5, 9), 3, rng)
            if not removable_vertices(g):
                continue
            reduced, trace = reduce_removable(g)
            w = decide_qt(reduced)
            if w is None:
                assert decide_qt(g) is None
                continue
            full = reinsert_removable(w, trace)
            assert verify_witness(g, full.mixed).ok
            done += 1

    def test_invalid_witness_rejected(self):
        g = house_graph()
        reduced, trace = reduce_removable(g)
        bogus = PartialOrientation(reduced, MixedGraph(reduced.n, edges=reduced.edges))
        with pytest.raises(WitnessError):
            reinsert_removable(bogus, trace)

    def test_size_mismatch_rejected(self):
        w = decide_qt(cycle_graph(4))
        trace = RemovalTrace(6, (), (0, 1, 2))
        with pytest.raises(WitnessError):
            reinsert_removable(w, trace)


class TestTraceFormat:
    def test_round_trip(self):
        _, trace = reduce_removable(house_graph())
        text = serialize_trace(trace)
        assert text == "r 0 1 2 3 4\n"
        assert parse_trace(text, 5) == trace

    def test_empty(self):
        assert parse_trace("", 4) == RemovalTrace(4, (), (0, 1, 2, 3))

    def test_bad_lines(self):
        from mixedqt.formats import GraphFormatError

        with pytest.raises(GraphFormatError):
            parse_trace("r 0 1\n", 5)
        with pytest.raises(GraphFormatError):
            parse_trace("r 0 1 2 3 9\n", 5)


class TestFindNet:
    def test_net_itself(self):
        hit = find_net(net_graph())
        assert hit is not None
        assert set(hit.triangle) == {0, 1, 2} and set(hit.pendants) == {3, 4, 5}

    def test_k4_none(self):
        assert find_net(complete_graph(4)) is None

    def test_prism_found(self):
        hit = find_net(prism_graph())
        assert hit is not None
        tri = set(hit.triangle)
        assert tri in ({0, 1, 2}, {3, 4, 5})
        assert set(hit.pendants) == {0, 1, 2, 3, 4, 5} - tri


class TestDecideDeg3:
    def test_known_answers(self):
        assert decide_deg3(complete_graph(4))
        assert decide_deg3(cycle_graph(6))
        assert not decide_deg3(cycle_graph(7))
        assert not decide_deg3(prism_graph())
        assert not decide_deg3(net_graph())

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            decide_deg3(complete_graph(5))

    def test_orient_deg3_agrees_and_verifies(self, deg3_corpus):
        for g in deg3_corpus:
            answer = decide_deg3(g)
            w = orient_deg3(g)
            assert (w is not None) == answer
            if w is not None:
                assert verify_witness(g, w.mixed).ok

    def test_decision_path_never_searches(self, deg3_corpus, monkeypatch, rng):
        # the boolean decider is reduction + subgraph detection + a
        # 2-colouring; backtracking must never be reached, whatever the size
        import mixedqt.solver as solver_module

        def bomb(*args, **kwargs):
            raise AssertionError("decide_deg3 invoked the backtracking solver")

        monkeypatch.setattr(solver_module, "_flat_solve", bomb)
        for g in deg3_corpus:
            decide_deg3(g)
        for n in (20, 40, 80):
            decide_deg3(random_connected_graph(n, 3, rng))


class TestDecideGirth4:
    def test_c4_two_sources_two_sinks(self):
        w = decide_girth4(cycle_graph(4))
        assert w is not None and verify_witness(cycle_graph(4), w.mixed).ok
        statuses = [vertex_status(w.mixed, v) for v in range(4)]
        assert statuses.count(VertexStatus.SOURCE) == 2
        assert statuses.count(VertexStatus.SINK) == 2

    def test_c5_none(self):
        assert decide_girth4(cycle_graph(5)) is None

    def test_petersen_none(self):
        assert decide_girth4(petersen_graph()) is None

    def test_triangle_rejected(self):
        with pytest.raises(ValueError):
            decide_girth4(complete_graph(3))

    def test_agrees_with_enumeration(self, triangle_free_corpus):
        for g in triangle_free_corpus:
            w = decide_girth4(g)
            expected = next(iter(enumerate_qt(g)), None) is not None
            assert (w is not None) == expected
            if w is not None:
                assert verify_witness(g, w.mixed).ok


class TestEmbedUniversal:
    def test_single_edge(self):
        square, root = embed_universal(path_graph(2))
        assert square == complete_graph(3)
        assert root.arcs == frozenset({(0, 2), (2, 1)})

    def test_edgeless(self):
        square, root = embed_universal(Graph(3))
        assert square == Graph(3) and root == MixedGraph(3)

    def test_c5_becomes_orientable(self):
        g = cycle_graph(5)
        square, root = embed_universal(g)
        assert square.n == 10
        assert decide_qt(g) is None
        from mixedqt.graphs import mixed_square

        assert verify_witness(square, mixed_square(root)).ok

    @given(graphs(max_n=8))
    def test_postconditions(self, g):
        from mixedqt.graphs import mixed_square

        square, root = embed_universal(g)
        induced = frozenset(e for e in square.edges if e[0] < g.n and e[1] < g.n)
        assert induced == g.edges
        assert verify_witness(square, mixed_square(root)).ok
