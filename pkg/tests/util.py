"""Shared generators and small fixed graph families for the tests."""

import random

from graphstrength import Hypergraph, NodeSet, WeightedGraph


def random_graph(rng: random.Random, n_max: int = 12, w_max: int = 6, p: float = 0.5) -> WeightedGraph:
    n = rng.randint(2, n_max)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, w_max)))
    return WeightedGraph(n, edges)


def random_hypergraph(rng: random.Random, n_max: int = 8, m_max: int = 6, w_max: int = 5) -> Hypergraph:
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    edges = []
    for _ in range(m):
        size = rng.randint(1, n)
        members = rng.sample(range(n), size)
        edges.append((rng.randint(1, w_max), members))
    return Hypergraph(n, edges)


def random_node_set(rng: random.Random, n: int) -> NodeSet:
    return NodeSet.from_mask(n, rng.randrange(1 << n))


def path_graph(n: int, w: int = 1) -> WeightedGraph:
    return WeightedGraph(n, [(i, i + 1, w) for i in range(n - 1)])


def cycle_graph(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(i, (i + 1) % n, 1) for i in range(n)])


def star_graph(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(0, i, 1) for i in range(1, n)])


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(u, v, 1) for u in range(n) for v in range(u + 1, n)])


def two_cliques(size: int, bridged: bool = True) -> WeightedGraph:
    """Two same-size cliques, optionally joined by a single unit edge."""
    edges = []
    for base in (0, size):
        for u in range(base, base + size):
            for v in range(u + 1, base + size):
                edges.append((u, v, 1))
    if bridged:
        edges.append((size - 1, size, 1))
    return WeightedGraph(2 * size, edges)


def connected_suite(n_max: int = 7, rng_seed: int = 7, extra: int = 6):
    """Fixed family of connected unit-weight graphs with up to n_max nodes."""
    graphs = []
    for n in range(2, n_max + 1):
        graphs.append(path_graph(n))
        if n >= 3:
            graphs.append(cycle_graph(n))
            graphs.append(star_graph(n))
    graphs.append(complete_graph(4))
    graphs.append(complete_graph(5))
    rng = random.Random(rng_seed)
    while extra > 0:
        g = random_graph(rng, n_max=n_max, w_max=1, p=0.5)
        if is_connected(g):
            graphs.append(g)
            extra -= 1
    return graphs


def is_connected(g: WeightedGraph) -> bool:
    n = g.node_count
    adj = [[] for _ in range(n)]
    for u, v, w in g.edges:
        if w:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def cubic_suite():
    """Fixed 3-regular graphs with at most 10 nodes."""
    k4 = complete_graph(4)
    prism6 = WeightedGraph(
        6,
        [(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 4, 1), (4, 5, 1), (5, 3, 1),
         (0, 3, 1), (1, 4, 1), (2, 5, 1)],
    )
    k33 = WeightedGraph(
        6, [(u, v, 1) for u in (0, 1, 2) for v in (3, 4, 5)]
    )
    cube8 = WeightedGraph(
        8,
        [(u, v, 1)
         for u in range(8) for v in range(u + 1, 8)
         if bin(u ^ v).count("1") == 1],
    )
    wagner8 = WeightedGraph(
        8,
        [(i, (i + 1) % 8, 1) for i in range(8)] + [(i, i + 4, 1) for i in range(4)],
    )
    petersen10 = WeightedGraph(
        10,
        [(i, (i + 1) % 5, 1) for i in range(5)]
        + [(i, i + 5, 1) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5, 1) for i in range(5)],
    )
    prism10 = WeightedGraph(
        10,
        [(i, (i + 1) % 5, 1) for i in range(5)]
        + [(5 + i, 5 + (i + 1) % 5, 1) for i in range(5)]
        + [(i, i + 5, 1) for i in range(5)],
    )
    graphs = [k4, prism6, k33, cube8, wagner8, petersen10, prism10]
    for g in graphs:
        assert all(g.weighted_degree(v) == 3 for v in range(g.node_count))
    return graphs
