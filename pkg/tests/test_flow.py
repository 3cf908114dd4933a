import itertools
import random
from fractions import Fraction

import pytest

from graphstrength import (
    FlowNetwork,
    Hypergraph,
    NodeSet,
    WeightedGraph,
    graph_cut,
    hypergraph_cut,
    hypergraph_flow,
    hypergraph_strength_network,
    min_st_cut,
    seeded_min_cut,
    strength_network,
)
from graphstrength import enumeration as en
from graphstrength.exceptions import ContradictorySeedsError

from util import path_graph, random_graph, random_hypergraph, random_node_set


def exhaustive_min_cut(net: FlowNetwork) -> int:
    """Minimum over all source/sink-respecting partitions, by enumeration."""
    n = net.node_count
    inf = net.infinite_capacity()
    arcs = [(u, v, inf if c is None else c) for u, v, c in net.arcs()]
    best = None
    others = [i for i in range(n) if i not in (net.source, net.sink)]
    for bits in itertools.product([0, 1], repeat=len(others)):
        side = {net.source: 0, net.sink: 1}
        side.update(dict(zip(others, bits)))
        value = sum(c for u, v, c in arcs if side[u] == 0 and side[v] == 1)
        if best is None or value < best:
            best = value
    return best


class TestMinStCut:
    def test_unit_path(self):
        net = FlowNetwork(4, source=0, sink=3)
        for u, v in [(0, 1), (1, 2), (2, 3)]:
            net.add_arc(u, v, 1)
            net.add_arc(v, u, 1)
        value, sink_side = min_st_cut(net)
        assert value == 1
        assert 3 in sink_side and 0 not in sink_side

    def test_zero_capacity(self):
        net = FlowNetwork(3, source=0, sink=2)
        net.add_arc(0, 1, 0)
        net.add_arc(1, 2, 0)
        value, sink_side = min_st_cut(net)
        assert value == 0
        assert sink_side == NodeSet(3, [1, 2])

    def test_parallel_arcs(self):
        net = FlowNetwork(2, source=0, sink=1)
        net.add_arc(0, 1, 1)
        net.add_arc(0, 1, 1)
        value, _ = min_st_cut(net)
        assert value == 2

    def test_infinite_arc_never_cut(self):
        net = FlowNetwork(3, source=0, sink=2)
        net.add_infinite_arc(0, 1)
        net.add_arc(1, 2, 5)
        value, sink_side = min_st_cut(net)
        assert value == 5
        assert sink_side == NodeSet(3, [2])

    def test_exhaustive_equivalence(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(2, 7)
            net = FlowNetwork(n, source=0, sink=n - 1)
            for u in range(n):
                for v in range(n):
                    if u != v and rng.random() < 0.5:
                        if rng.random() < 0.07:
                            net.add_infinite_arc(u, v)
                        else:
                            net.add_arc(u, v, rng.randint(0, 5))
            value, sink_side = min_st_cut(net)
            assert value == exhaustive_min_cut(net)
            # the reported side is itself a cut of that value
            inf = net.infinite_capacity()
            paid = sum(
                (inf if c is None else c)
                for u, v, c in net.arcs()
                if u not in sink_side and v in sink_side
            )
            assert paid == value
            assert net.source not in sink_side and net.sink in sink_side


class TestStrengthNetwork:
    def test_path_third(self):
        g = path_graph(4)
        net = strength_network(g, NodeSet(4, [0]), Fraction(1, 3))
        value, sink_side = min_st_cut(net)
        shifted = value - 1 * 3  # p=1, three free nodes
        assert shifted == 0
        assert sink_side.mask & 0b1111 == 0b1110  # T = {1,2,3}

    def test_s_equals_v(self):
        g = path_graph(4)
        net = strength_network(g, NodeSet.full(4), Fraction(1, 2))
        value, sink_side = min_st_cut(net)
        assert value == 0
        assert sink_side.mask & 0b1111 == 0

    def test_path_half(self):
        g = path_graph(4)
        net = strength_network(g, NodeSet(4, [0]), Fraction(1, 2))
        value, _ = min_st_cut(net)
        # d*cut - p*|T| shifted by p*|free|: min is -1 at T={1,2,3}, d=2
        assert value - 1 * 3 == -1

    def test_matches_enumeration(self):
        rng = random.Random(23)
        for _ in range(40):
            g = random_graph(rng, n_max=8)
            n = g.node_count
            cuts = en.graph_cut_table(g)
            pcs = en.popcount_table(n)
            for _ in range(4):
                s = random_node_set(rng, n)
                p, d = rng.randint(0, 6), rng.randint(1, 6)
                net = strength_network(g, s, Fraction(p, d))
                value, sink_side = min_st_cut(net)
                free = s.complement()
                shifted = value - (Fraction(p, d).numerator) * len(free)
                # rebuild p, d in lowest terms to mirror the construction
                lam = Fraction(p, d)
                shifted = value - lam.numerator * len(free)
                expect, expect_mask = en.min_shifted_over_subsets(
                    cuts, pcs, free, lam.numerator, lam.denominator
                )
                assert shifted == expect
                t_mask = sink_side.mask & ((1 << n) - 1) & free.mask
                assert t_mask == expect_mask
                t = NodeSet.from_mask(n, t_mask)
                assert lam.denominator * graph_cut(g, t) - lam.numerator * len(t) == expect


class TestSeededMinCut:
    def test_path_example(self):
        g = path_graph(4)
        value, side = seeded_min_cut(g, NodeSet(4, [1]), NodeSet(4, [2]))
        assert value == 1
        assert side == NodeSet(4, [0, 1])

    def test_no_seeds(self):
        g = path_graph(4)
        value, side = seeded_min_cut(g, NodeSet.empty(4), NodeSet.empty(4))
        assert value == 0
        assert side == NodeSet.empty(4)

    def test_disconnected_triangles(self):
        g = WeightedGraph(
            6, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)]
        )
        value, side = seeded_min_cut(g, NodeSet(6, [0]), NodeSet(6, [3]))
        assert value == 0
        assert side == NodeSet(6, [0, 1, 2])

    def test_overlapping_seeds_rejected(self):
        g = path_graph(3)
        with pytest.raises(ContradictorySeedsError):
            seeded_min_cut(g, NodeSet(3, [0]), NodeSet(3, [0]))

    def test_matches_enumeration(self):
        rng = random.Random(31)
        for _ in range(40):
            g = random_graph(rng, n_max=8)
            n = g.node_count
            cuts = en.graph_cut_table(g)
            while True:
                pos = random_node_set(rng, n)
                neg = random_node_set(rng, n) - pos
                if pos.isdisjoint(neg):
                    break
            value, side = seeded_min_cut(g, pos, neg)
            expect, expect_mask = en.min_constrained_cut(cuts, n, pos, neg)
            assert value == expect
            assert side.mask == expect_mask
            assert pos.issubset(side) and side.isdisjoint(neg)


class TestHypergraphFlow:
    def test_single_hyperedge_seeded(self):
        h = Hypergraph(3, [(1, [0, 1, 2])])
        value, side = seeded_min_cut(h, NodeSet(3, [0]), NodeSet(3, [2]))
        assert value == 1
        assert 0 in side and 2 not in side

    def test_singleton_never_cut(self):
        h = Hypergraph(2, [(5, [0]), (1, [0, 1])])
        value, _ = seeded_min_cut(h, NodeSet(2, [0]), NodeSet(2, [1]))
        assert value == 1

    def test_pair_edges_match_graph(self):
        rng = random.Random(37)
        for _ in range(20):
            g = random_graph(rng, n_max=7)
            h = Hypergraph(g.node_count, [(w, [u, v]) for u, v, w in g.edges])
            n = g.node_count
            while True:
                pos = random_node_set(rng, n)
                neg = random_node_set(rng, n) - pos
                if pos.isdisjoint(neg):
                    break
            assert seeded_min_cut(g, pos, neg) == seeded_min_cut(h, pos, neg)
            s = random_node_set(rng, n)
            lam = Fraction(rng.randint(0, 5), rng.randint(1, 5))
            gnet = strength_network(g, s, lam)
            hnet = hypergraph_strength_network(h, s, lam)
            assert min_st_cut(gnet)[0] == min_st_cut(hnet)[0]

    def test_forced_partition_pays_straddle_weight(self):
        # Fixing every original node's side, the optimal auxiliary placement
        # pays exactly the weight of straddling hyperedges.
        rng = random.Random(41)
        for _ in range(25):
            h = random_hypergraph(rng, n_max=8, m_max=6)
            n = h.node_count
            s = random_node_set(rng, n)
            net, _ = hypergraph_flow(h)
            for v in s:
                net.add_infinite_arc(n, v)
            for v in s.complement():
                net.add_infinite_arc(v, n + 1)
            value, _ = min_st_cut(net)
            assert value == hypergraph_cut(h, s)

    def test_aux_map_shape(self):
        h = Hypergraph(4, [(1, [0, 1]), (2, [1, 2, 3])])
        net, aux = hypergraph_flow(h)
        assert len(aux) == 2
        assert net.node_count == 4 + 2 + 4
