"""Exact s-t maximum-flow / minimum-cut and the cut reductions built on it.

Capacities are Python integers, so flow values and cut sides are exact.
"Infinite" capacity is materialized as one plus the sum of all finite
capacities, which no finite cut can prefer.  The solver is a blocking-flow
(Dinic) method; after the final phase the sink side is reported as the set of
nodes unreachable from the source in the residual network, which fixes a
deterministic minimizer among all minimum cuts.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .exceptions import ContradictorySeedsError, UniverseMismatchError
from .graphs import Hypergraph, WeightedGraph
from .sets import NodeSet

__all__ = [
    "FlowNetwork",
    "min_st_cut",
    "strength_network",
    "hypergraph_strength_network",
    "seeded_min_cut",
    "hypergraph_flow",
]


class FlowNetwork:
    """Append-only arc list network with distinguished source and sink."""

    def __init__(self, node_count: int, source: int, sink: int):
        if node_count < 2:
            raise ValueError("network needs at least source and sink")
        if not (0 <= source < node_count and 0 <= sink < node_count):
            raise ValueError("source/sink outside the node range")
        if source == sink:
            raise ValueError("source and sink must differ")
        self.source = source
        self.sink = sink
        self._heads: list[int] = []
        self._caps: list[int] = []
        self._adj: list[list[int]] = [[] for _ in range(node_count)]
        self._infinite: list[int] = []

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def arc_count(self) -> int:
        return len(self._heads) // 2

    def add_node(self) -> int:
        self._adj.append([])
        return len(self._adj) - 1

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        """Directed arc ``u -> v``; a zero-capacity reverse arc is paired."""
        n = self.node_count
        if not (0 <= u < n and 0 <= v < n):
            raise UniverseMismatchError(f"arc ({u}, {v}) outside network of size {n}")
        if not isinstance(capacity, int) or capacity < 0:
            raise ValueError(f"capacity must be a non-negative integer, got {capacity!r}")
        a = len(self._heads)
        self._heads += [v, u]
        self._caps += [capacity, 0]
        self._adj[u].append(a)
        self._adj[v].append(a + 1)

    def add_infinite_arc(self, u: int, v: int) -> None:
        """Arc whose capacity is materialized as 1 + sum of finite capacities."""
        self.add_arc(u, v, 0)
        self._infinite.append(len(self._heads) - 2)

    def infinite_capacity(self) -> int:
        return 1 + sum(self._caps)

    def arcs(self) -> list[tuple[int, int, int | None]]:
        """Forward arcs as ``(tail, head, capacity)``; infinite ones carry None."""
        inf = set(self._infinite)
        out = []
        for a in range(0, len(self._heads), 2):
            cap = None if a in inf else self._caps[a]
            out.append((self._heads[a + 1], self._heads[a], cap))
        return out


def min_st_cut(net: FlowNetwork) -> tuple[int, NodeSet]:
    """Minimum s-t cut value and the sink-side node set.

    The value equals the maximum flow.  The returned sink side is the set of
    nodes not reachable from the source in the residual network, a
    deterministic choice among all minimum cuts.  The network itself is not
    mutated; repeated solves are independent.
    """
    n = net.node_count
    s, t = net.source, net.sink
    heads = net._heads
    cap = list(net._caps)
    inf_cap = net.infinite_capacity()
    for a in net._infinite:
        cap[a] = inf_cap
    adj = net._adj

    flow = 0
    level = [-1] * n
    while True:
        # BFS phase: level graph over residual arcs.
        for i in range(n):
            level[i] = -1
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in adj[u]:
                v = heads[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        if level[t] < 0:
            break
        # Blocking flow: iterative advance/retreat with arc pointers.
        it = [0] * n
        path: list[int] = []
        u = s
        while True:
            if u == t:
                bottleneck = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= bottleneck
                    cap[a ^ 1] += bottleneck
                flow += bottleneck
                for i, a in enumerate(path):
                    if cap[a] == 0:
                        path = path[:i]
                        break
                u = s if not path else heads[path[-1]]
                continue
            advanced = False
            while it[u] < len(adj[u]):
                a = adj[u][it[u]]
                v = heads[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if advanced:
                continue
            level[u] = -1
            if u == s:
                break
            a = path.pop()
            u = heads[a ^ 1]

    # Residual reachability from the source fixes the reported cut side.
    seen = [False] * n
    seen[s] = True
    q = deque([s])
    while q:
        u = q.popleft()
        for a in adj[u]:
            v = heads[a]
            if cap[a] > 0 and not seen[v]:
                seen[v] = True
                q.append(v)
    sink_mask = 0
    for v in range(n):
        if not seen[v]:
            sink_mask |= 1 << v
    return flow, NodeSet.from_mask(n, sink_mask)


def strength_network(g: WeightedGraph, s: NodeSet, lam: Fraction) -> FlowNetwork:
    """Network whose min cut solves ``min over T disjoint from s`` of
    ``d*cut(T) - p*|T|``, shifted by ``p * |V \\ s|``, where ``lam = p/d``.

    Graph weights are multiplied by ``d`` and added as arcs in both
    directions; members of ``s`` hang off the source with infinite capacity;
    every free node gets an arc of capacity ``p`` into the sink.  The
    minimizing ``T`` is the sink side intersected with the free nodes.
    """
    g.require_integer_weights()
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    if s.n != g.node_count:
        raise UniverseMismatchError("seed set over a different universe")
    p, d = lam.numerator, lam.denominator
    n = g.node_count
    net = FlowNetwork(n + 2, source=n, sink=n + 1)
    for u, v, w in g.edges:
        if w:
            net.add_arc(u, v, d * w)
            net.add_arc(v, u, d * w)
    for u in s:
        net.add_infinite_arc(n, u)
    for v in s.complement():
        net.add_arc(v, n + 1, p)
    return net


def hypergraph_strength_network(h: Hypergraph, s: NodeSet, lam: Fraction) -> FlowNetwork:
    """Hypergraph counterpart of :func:`strength_network` using the
    two-auxiliary-node hyperedge gadget."""
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    if s.n != h.node_count:
        raise UniverseMismatchError("seed set over a different universe")
    p, d = lam.numerator, lam.denominator
    n = h.node_count
    net, _ = hypergraph_flow(h, multiplier=d)
    for u in s:
        net.add_infinite_arc(n, u)
    for v in s.complement():
        net.add_arc(v, n + 1, p)
    return net


def hypergraph_flow(h: Hypergraph, multiplier: int = 1) -> tuple[FlowNetwork, list[tuple[int, int]]]:
    """Flow gadget making hypergraph cut computable by s-t min cut.

    Per hyperedge of weight ``w``, two auxiliary nodes ``e1, e2`` are added
    with an arc ``e1 -> e2`` of capacity ``multiplier * w``; every member
    feeds ``e1`` and is fed by ``e2`` with infinite capacity.  Any s-t cut
    over the original nodes then pays exactly the weight of straddling
    hyperedges.  Source and sink are created at indices ``n`` and ``n + 1``
    but left unconnected, so callers can overlay seed or budget arcs.

    Returns the network and the ``(e1, e2)`` pair per hyperedge.
    """
    if not isinstance(multiplier, int) or multiplier < 1:
        raise ValueError("multiplier must be a positive integer")
    n = h.node_count
    net = FlowNetwork(n + 2, source=n, sink=n + 1)
    aux: list[tuple[int, int]] = []
    for w, members in h.hyperedges:
        e1 = net.add_node()
        e2 = net.add_node()
        net.add_arc(e1, e2, multiplier * w)
        for v in members:
            net.add_infinite_arc(v, e1)
            net.add_infinite_arc(e2, v)
        aux.append((e1, e2))
    return net, aux


def seeded_min_cut(
    g: WeightedGraph | Hypergraph,
    pos: NodeSet,
    neg: NodeSet,
) -> tuple[int, NodeSet]:
    """Minimum cut value over sets containing ``pos`` and avoiding ``neg``.

    Returns ``(value, one_side)`` where ``one_side`` attains the minimum and
    ties are broken toward the smallest such set (the source-reachable side).
    """
    n = g.node_count
    if pos.n != n or neg.n != n:
        raise UniverseMismatchError("seed sets over a different universe")
    if not pos.isdisjoint(neg):
        raise ContradictorySeedsError(
            f"seed sets overlap on {list(pos & neg)}"
        )
    if isinstance(g, Hypergraph):
        net, _ = hypergraph_flow(g)
    else:
        g.require_integer_weights()
        net = FlowNetwork(n + 2, source=n, sink=n + 1)
        for u, v, w in g.edges:
            if w:
                net.add_arc(u, v, w)
                net.add_arc(v, u, w)
    for u in pos:
        net.add_infinite_arc(n, u)
    for v in neg:
        net.add_infinite_arc(v, n + 1)
    value, sink_side = min_st_cut(net)
    original = (1 << n) - 1
    one_side = NodeSet.from_mask(n, ~sink_side.mask & original)
    return value, one_side
