"""Exhaustive subset enumeration for desk-scale instances.

These routines evaluate cut quantities over every subset of a (small) node
universe.  They are deliberately independent of the flow-based reductions so
the two routes can certify each other; everything here is direct enumeration
over bitmask-indexed tables.

The enumeration cap is 22 free nodes (about 4M subsets).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

import numpy as np

from .exceptions import DeskScaleLimitError
from .graphs import Hypergraph, WeightedGraph
from .sets import NodeSet

__all__ = [
    "ENUMERATION_LIMIT",
    "graph_cut_table",
    "hypergraph_cut_table",
    "popcount_table",
    "min_ratio_over_subsets",
    "min_shifted_over_subsets",
    "min_constrained_cut",
    "enumerate_shifted_min",
    "enumerate_seeded_min",
    "enumerate_min_ratio",
]

ENUMERATION_LIMIT = 22


def check_enumeration_size(free_nodes: int) -> None:
    if free_nodes > ENUMERATION_LIMIT:
        raise DeskScaleLimitError(free_nodes, ENUMERATION_LIMIT)


def graph_cut_table(g: WeightedGraph) -> np.ndarray:
    """Cut value of every subset, indexed by bitmask."""
    g.require_integer_weights()
    check_enumeration_size(g.node_count)
    masks = np.arange(1 << g.node_count, dtype=np.int64)
    cut = np.zeros(1 << g.node_count, dtype=np.int64)
    for u, v, w in g.edges:
        if w:
            cut += w * (((masks >> u) ^ (masks >> v)) & 1)
    return cut


def hypergraph_cut_table(h: Hypergraph) -> np.ndarray:
    """Hyperedge-straddle weight of every subset, indexed by bitmask."""
    check_enumeration_size(h.node_count)
    masks = np.arange(1 << h.node_count, dtype=np.int64)
    cut = np.zeros(1 << h.node_count, dtype=np.int64)
    for w, members in h.hyperedges:
        if w:
            m = members.mask
            inter = masks & m
            cut += w * ((inter != 0) & (inter != m))
    return cut


def popcount_table(n: int) -> np.ndarray:
    """Population count of every mask below ``2**n``."""
    check_enumeration_size(n)
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pc += (masks >> b) & 1
    return pc


def min_ratio_over_subsets(
    cuts: np.ndarray, pcs: np.ndarray, free: NodeSet
) -> Fraction | float:
    """Exact minimum of ``cut(T) / |T|`` over nonempty ``T`` within ``free``.

    Returns ``math.inf`` when ``free`` is empty.  The minimum per cardinality
    is taken vectorized, then the handful of per-cardinality candidates are
    compared with exact rational arithmetic.
    """
    if not free:
        return math.inf
    masks = np.arange(len(cuts), dtype=np.int64)
    outside = np.int64(~free.mask & (len(cuts) - 1))
    sub = (masks & outside) == 0
    best: Fraction | None = None
    for c in range(1, len(free) + 1):
        sel = sub & (pcs == c)
        if not sel.any():
            continue
        cand = Fraction(int(cuts[sel].min()), c)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def min_shifted_over_subsets(
    cuts: np.ndarray, pcs: np.ndarray, free: NodeSet, p: int, d: int
) -> tuple[int, int]:
    """Minimum of ``d*cut(T) - p*|T|`` over ``T`` within ``free``.

    Returns ``(value, mask)`` where ``mask`` is the union of all minimizers
    (the unique inclusion-maximal minimizer, by submodularity), matching the
    deterministic side reported by the flow route.
    """
    masks = np.arange(len(cuts), dtype=np.int64)
    outside = np.int64(~free.mask & (len(cuts) - 1))
    sel = (masks & outside) == 0
    vals = d * cuts[sel] - p * pcs[sel]
    m = int(vals.min())
    argmasks = masks[sel][vals == m]
    return m, int(np.bitwise_or.reduce(argmasks))


def min_constrained_cut(
    cuts: np.ndarray, n: int, pos: NodeSet, neg: NodeSet
) -> tuple[int, int]:
    """Minimum cut over sets containing ``pos`` and avoiding ``neg``.

    Returns ``(value, mask)`` with ``mask`` the intersection of all
    minimizers (the unique inclusion-minimal minimizer), matching the flow
    route's tie-break.
    """
    masks = np.arange(len(cuts), dtype=np.int64)
    pos_m = np.int64(pos.mask)
    neg_m = np.int64(neg.mask)
    sel = ((masks & pos_m) == pos_m) & ((masks & neg_m) == 0)
    vals = cuts[sel]
    m = int(vals.min())
    argmasks = masks[sel][vals == m]
    return m, int(np.bitwise_and.reduce(argmasks))


def _free_submasks(free: NodeSet):
    """Yield every submask of ``free.mask``, including zero."""
    fm = free.mask
    sub = fm
    while True:
        yield fm ^ sub  # ascending-ish deterministic order
        if sub == 0:
            return
        sub = (sub - 1) & fm


def enumerate_shifted_min(
    evaluate: Callable[[NodeSet], int], n: int, free: NodeSet, p: int, d: int
) -> tuple[int, NodeSet]:
    """Generic-oracle version of :func:`min_shifted_over_subsets`."""
    check_enumeration_size(len(free))
    best = 0
    best_mask = 0
    for mask in _free_submasks(free):
        t = NodeSet.from_mask(n, mask)
        val = d * evaluate(t) - p * len(t)
        if val < best:
            best = val
            best_mask = mask
        elif val == best:
            best_mask |= mask
    return best, NodeSet.from_mask(n, best_mask)


def enumerate_seeded_min(
    evaluate: Callable[[NodeSet], int], n: int, pos: NodeSet, neg: NodeSet
) -> tuple[int, NodeSet]:
    """Generic-oracle constrained minimization with minimal-set tie-break."""
    free = (pos | neg).complement()
    check_enumeration_size(len(free))
    best: int | None = None
    best_mask = 0
    for mask in _free_submasks(free):
        s = NodeSet.from_mask(n, mask | pos.mask)
        val = evaluate(s)
        if best is None or val < best:
            best = val
            best_mask = s.mask
        elif val == best:
            best_mask &= s.mask
    assert best is not None
    return best, NodeSet.from_mask(n, best_mask)


def enumerate_min_ratio(
    evaluate: Callable[[NodeSet], int], n: int, free: NodeSet
) -> Fraction | float:
    """Generic-oracle exact minimum of ``cut(T)/|T|`` over nonempty T."""
    if not free:
        return math.inf
    check_enumeration_size(len(free))
    best: Fraction | None = None
    for mask in _free_submasks(free):
        if mask == 0:
            continue
        t = NodeSet.from_mask(n, mask)
        cand = Fraction(evaluate(t), len(t))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best
