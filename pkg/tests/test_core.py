import random
from fractions import Fraction

import pytest

from graphstrength import (
    GraphCutOracle,
    Hypergraph,
    HypergraphCutOracle,
    Labeling,
    NodeSet,
    WeightedGraph,
    graph_cut,
    hypergraph_cut,
    labeling_cost,
    symmetrize,
    verify_cut_oracle,
)
from graphstrength.exceptions import (
    DataError,
    IncompleteLabelingError,
    NotSubmodularError,
    UniverseMismatchError,
)

from util import path_graph, random_graph, random_node_set


class TestWeightedGraph:
    def test_duplicate_edges_merge(self):
        g = WeightedGraph(3, [(0, 1, 2), (1, 0, 3)])
        assert g.edges == ((0, 1, 5),)

    def test_self_loop_rejected(self):
        with pytest.raises(DataError):
            WeightedGraph(3, [(1, 1, 1)])

    def test_negative_weight_rejected(self):
        with pytest.raises(DataError):
            WeightedGraph(3, [(0, 1, -1)])

    def test_out_of_range_edge(self):
        with pytest.raises(UniverseMismatchError):
            WeightedGraph(2, [(0, 2, 1)])

    def test_float_weights_tracked(self):
        g = WeightedGraph(3, [(0, 1, 0.5)])
        assert not g.integer_weighted
        with pytest.raises(DataError):
            g.require_integer_weights()

    def test_rational_scaling(self):
        g = WeightedGraph.from_rational_edges(
            3, [(0, 1, Fraction(1, 2)), (1, 2, Fraction(1, 3))]
        )
        assert g.weight_scale == 6
        assert g.edges == ((0, 1, 3), (1, 2, 2))
        assert g.integer_weighted

    def test_relabel(self):
        g = path_graph(3)
        r = g.relabel([2, 1, 0])
        assert r.edges == ((0, 1, 1), (1, 2, 1))
        with pytest.raises(ValueError):
            g.relabel([0, 0, 1])

    def test_weighted_degree(self):
        g = path_graph(4)
        assert [g.weighted_degree(v) for v in range(4)] == [1, 2, 2, 1]

    def test_adjacency_matrix(self):
        g = WeightedGraph(3, [(0, 1, 2)])
        m = g.adjacency_matrix().todense()
        assert m[0, 1] == 2 and m[1, 0] == 2 and m[2, 2] == 0


class TestHypergraph:
    def test_empty_hyperedge_rejected(self):
        with pytest.raises(DataError):
            Hypergraph(3, [(1, [])])

    def test_bad_weight_rejected(self):
        with pytest.raises(DataError):
            Hypergraph(3, [(-1, [0])])
        with pytest.raises(DataError):
            Hypergraph(3, [(0.5, [0])])

    def test_relabel(self):
        h = Hypergraph(3, [(2, [0, 1])])
        r = h.relabel([2, 0, 1])
        assert r.hyperedges == ((2, NodeSet(3, [0, 2])),)


class TestGraphCut:
    def test_path_interior_node(self):
        # 4-node path, cutting out the second node severs two unit edges
        assert graph_cut(path_graph(4), NodeSet(4, [1])) == 2

    def test_normalization(self):
        g = path_graph(4)
        assert graph_cut(g, NodeSet.empty(4)) == 0
        assert graph_cut(g, NodeSet.full(4)) == 0

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            graph_cut(path_graph(4), NodeSet(3, [0]))


class TestHypergraphCut:
    def test_straddle(self):
        h = Hypergraph(3, [(1, [0, 1, 2])])
        assert hypergraph_cut(h, NodeSet(3, [0])) == 1
        assert hypergraph_cut(h, NodeSet(3, [0, 1, 2])) == 0

    def test_chain_of_pairs(self):
        h = Hypergraph(4, [(1, [0, 1]), (1, [1, 2]), (1, [2, 3])])
        assert hypergraph_cut(h, NodeSet(4, [0, 1])) == 1

    def test_matches_graph_cut_on_pair_edges(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_graph(rng, n_max=8)
            h = Hypergraph(g.node_count, [(w, [u, v]) for u, v, w in g.edges])
            for _ in range(10):
                s = random_node_set(rng, g.node_count)
                assert graph_cut(g, s) == hypergraph_cut(h, s)


class TestSymmetrize:
    def test_graph_cut_doubles(self):
        g = path_graph(4)
        base = GraphCutOracle(g)
        sym = symmetrize(base.evaluate, 4, 0)
        for mask in range(16):
            s = NodeSet.from_mask(4, mask)
            assert sym(s) == 2 * base(s)

    def test_modular_collapses_to_zero(self):
        sym = symmetrize(lambda s: len(s), 4)
        for mask in range(16):
            assert sym(NodeSet.from_mask(4, mask)) == 0

    def test_coverage_function(self):
        covers = {0: {"x"}, 1: {"x", "y"}, 2: {"z"}}

        def coverage(s):
            return len(set().union(*(covers[i] for i in s)) if s else set())

        sym = symmetrize(coverage, 3)
        full = coverage(NodeSet.full(3))
        for mask in range(8):
            s = NodeSet.from_mask(3, mask)
            expected = coverage(s) + coverage(s.complement()) - full
            assert sym(s) == expected
        verify_cut_oracle(sym, samples=50)

    def test_negative_values_rejected(self):
        # A strictly supermodular input drives the symmetrized form negative.
        sym = symmetrize(lambda s: len(s) ** 2, 3)
        with pytest.raises(NotSubmodularError):
            sym(NodeSet(3, [0]))

    def test_non_integer_rejected(self):
        with pytest.raises(NotSubmodularError):
            symmetrize(lambda s: 0.5 * len(s), 3)


class TestLabelingCost:
    def test_path_split(self):
        o = GraphCutOracle(path_graph(4))
        assert labeling_cost(o, Labeling.total([1, 1, 0, 0])) == 1

    def test_constant_labelings_cost_zero(self):
        o = GraphCutOracle(path_graph(4))
        assert labeling_cost(o, Labeling.constant(4, 1)) == 0
        assert labeling_cost(o, Labeling.constant(4, 0)) == 0

    def test_partial_rejected(self):
        o = GraphCutOracle(path_graph(4))
        with pytest.raises(IncompleteLabelingError):
            labeling_cost(o, Labeling.partial(4, {0: 1}))

    def test_flip_invariance(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_graph(rng, n_max=8)
            o = GraphCutOracle(g)
            y = Labeling(g.node_count, random_node_set(rng, g.node_count))
            assert labeling_cost(o, y) == labeling_cost(o, y.flip())


class TestOracleContract:
    def test_graph_oracle_passes_spot_check(self):
        rng = random.Random(3)
        for _ in range(5):
            verify_cut_oracle(GraphCutOracle(random_graph(rng, n_max=7)), samples=60)

    def test_hypergraph_oracle_passes_spot_check(self):
        h = Hypergraph(5, [(2, [0, 1, 2]), (1, [2, 3]), (3, [4]), (1, [0, 4])])
        verify_cut_oracle(HypergraphCutOracle(h), samples=80)

    def test_submodularity_sampled(self):
        rng = random.Random(9)
        for _ in range(10):
            g = random_graph(rng, n_max=7)
            o = GraphCutOracle(g)
            n = g.node_count
            for _ in range(30):
                a = random_node_set(rng, n)
                b = random_node_set(rng, n)
                assert o(a) + o(b) >= o(a | b) + o(a & b)
                assert o(a) == o(a.complement())

    def test_broken_oracle_detected(self):
        class Lopsided(GraphCutOracle):
            def evaluate(self, s):
                return super().evaluate(s) + (1 if 0 in s else 0)

        with pytest.raises(NotSubmodularError):
            verify_cut_oracle(Lopsided(path_graph(4)), samples=80)

    def test_float_graph_rejected_by_oracle(self):
        with pytest.raises(DataError):
            GraphCutOracle(WeightedGraph(3, [(0, 1, 0.5)]))
