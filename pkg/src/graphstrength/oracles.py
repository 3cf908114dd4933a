"""Symmetric submodular cut oracles over a node universe.

Every oracle evaluates a normalized, symmetric, submodular, non-negative,
integer-valued set function: graph cut, hypergraph cut, or the symmetrized
form ``f(S) + f(V \\ S) - f(V)`` of an arbitrary submodular ``f``.  Graph and
hypergraph oracles additionally expose exact flow-based minimization; the
generic symmetrized oracle falls back to desk-scale enumeration.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Integral
from typing import Callable

from . import enumeration, flow
from .exceptions import (
    IncompleteLabelingError,
    NotSubmodularError,
    UniverseMismatchError,
)
from .graphs import Hypergraph, WeightedGraph
from .sets import Labeling, NodeSet

__all__ = [
    "CutOracle",
    "GraphCutOracle",
    "HypergraphCutOracle",
    "SymmetrizedOracle",
    "graph_cut",
    "hypergraph_cut",
    "symmetrize",
    "labeling_cost",
    "verify_cut_oracle",
]


def graph_cut(g: WeightedGraph, s: NodeSet) -> int:
    """Total weight of edges with exactly one endpoint in ``s``."""
    g.require_integer_weights()
    if s.n != g.node_count:
        raise UniverseMismatchError(
            f"set over universe {s.n}, graph has {g.node_count} nodes"
        )
    m = s.mask
    total = 0
    for u, v, w in g.edges:
        if ((m >> u) ^ (m >> v)) & 1:
            total += w
    return total


def hypergraph_cut(h: Hypergraph, s: NodeSet) -> int:
    """Total weight of hyperedges with members on both sides of ``s``."""
    if s.n != h.node_count:
        raise UniverseMismatchError(
            f"set over universe {s.n}, hypergraph has {h.node_count} nodes"
        )
    m = s.mask
    total = 0
    for w, members in h.hyperedges:
        inter = members.mask & m
        if inter != 0 and inter != members.mask:
            total += w
    return total


class CutOracle(ABC):
    """Evaluable symmetric submodular set function with exact minimizers.

    Subclasses provide :meth:`evaluate`; flow-backed variants override the
    minimization hooks, the default implementations enumerate subsets up to
    the desk-scale limit.
    """

    variant: str = "generic"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("oracle universe must be nonempty")
        self.n = n

    def __call__(self, s: NodeSet) -> int:
        if s.n != self.n:
            raise UniverseMismatchError(
                f"set over universe {s.n}, oracle over {self.n}"
            )
        return self.evaluate(s)

    @abstractmethod
    def evaluate(self, s: NodeSet) -> int:
        raise NotImplementedError

    def shifted_min(self, s: NodeSet, lam: Fraction) -> tuple[Fraction, NodeSet]:
        """``min over T within the complement of s`` of ``cut(T) - lam*|T|``.

        Returns the exact minimum and the inclusion-maximal minimizer.
        """
        lam = Fraction(lam)
        free = s.complement()
        value, t = enumeration.enumerate_shifted_min(
            self.evaluate, self.n, free, lam.numerator, lam.denominator
        )
        return Fraction(value, lam.denominator), t

    def seeded_min(self, pos: NodeSet, neg: NodeSet) -> tuple[int, NodeSet]:
        """``min cut(S)`` over ``pos <= S <= V - neg``; minimal-set tie-break."""
        return enumeration.enumerate_seeded_min(self.evaluate, self.n, pos, neg)


class GraphCutOracle(CutOracle):
    """Graph cut function, minimized exactly by s-t flow."""

    variant = "graph-cut"

    def __init__(self, graph: WeightedGraph):
        graph.require_integer_weights()
        super().__init__(graph.node_count)
        self.graph = graph

    def evaluate(self, s: NodeSet) -> int:
        return graph_cut(self.graph, s)

    def shifted_min(self, s: NodeSet, lam: Fraction) -> tuple[Fraction, NodeSet]:
        lam = Fraction(lam)
        net = flow.strength_network(self.graph, s, lam)
        cut_value, sink_side = flow.min_st_cut(net)
        return _extract_shifted(cut_value, sink_side, s, lam)

    def seeded_min(self, pos: NodeSet, neg: NodeSet) -> tuple[int, NodeSet]:
        return flow.seeded_min_cut(self.graph, pos, neg)


class HypergraphCutOracle(CutOracle):
    """Hypergraph cut function, minimized via the hyperedge flow gadget."""

    variant = "hypergraph-cut"

    def __init__(self, hypergraph: Hypergraph):
        super().__init__(hypergraph.node_count)
        self.hypergraph = hypergraph

    def evaluate(self, s: NodeSet) -> int:
        return hypergraph_cut(self.hypergraph, s)

    def shifted_min(self, s: NodeSet, lam: Fraction) -> tuple[Fraction, NodeSet]:
        lam = Fraction(lam)
        net = flow.hypergraph_strength_network(self.hypergraph, s, lam)
        cut_value, sink_side = flow.min_st_cut(net)
        return _extract_shifted(cut_value, sink_side, s, lam)

    def seeded_min(self, pos: NodeSet, neg: NodeSet) -> tuple[int, NodeSet]:
        return flow.seeded_min_cut(self.hypergraph, pos, neg)


def _extract_shifted(
    cut_value: int, sink_side: NodeSet, s: NodeSet, lam: Fraction
) -> tuple[Fraction, NodeSet]:
    n = s.n
    free = s.complement()
    t_mask = sink_side.mask & ((1 << n) - 1) & free.mask
    shifted = cut_value - lam.numerator * len(free)
    return Fraction(shifted, lam.denominator), NodeSet.from_mask(n, t_mask)


class SymmetrizedOracle(CutOracle):
    """``f(S) + f(V \\ S) - f(V)`` for a caller-supplied submodular ``f``.

    Submodularity of ``f`` is the caller's responsibility (see
    :func:`verify_cut_oracle` for a sampling check); negative values surface
    as :class:`NotSubmodularError` at evaluation time.
    """

    variant = "symmetrized-generic"

    def __init__(self, f: Callable[[NodeSet], int], n: int, f_full: int | None = None):
        super().__init__(n)
        self._f = f
        if f_full is None:
            f_full = f(NodeSet.full(n))
        self._f_full = _as_int(f_full)

    def evaluate(self, s: NodeSet) -> int:
        value = _as_int(self._f(s)) + _as_int(self._f(s.complement())) - self._f_full
        if value < 0:
            raise NotSubmodularError(
                f"symmetrized value {value} is negative on {s!r}; "
                "the supplied function is not submodular (or f(V) is wrong)"
            )
        return value


def _as_int(v) -> int:
    if isinstance(v, Integral):
        return int(v)
    raise NotSubmodularError(
        f"oracle values must be integers, got {type(v).__name__}"
    )


def symmetrize(
    f: Callable[[NodeSet], int], n: int, f_full: int | None = None
) -> SymmetrizedOracle:
    """Wrap an arbitrary submodular ``f`` as a symmetric normalized oracle."""
    return SymmetrizedOracle(f, n, f_full)


def labeling_cost(oracle: CutOracle, y: Labeling) -> int:
    """Cut cost of a total labeling: the oracle applied to its 1-labeled set.

    By symmetry this is invariant under flipping all labels.
    """
    if y.n != oracle.n:
        raise UniverseMismatchError("labeling over a different universe")
    if not y.is_total():
        raise IncompleteLabelingError("labeling cost needs a total labeling")
    return oracle(y.ones)


def verify_cut_oracle(
    oracle: CutOracle, samples: int = 100, seed: int = 0
) -> None:
    """Spot-check normalization, symmetry, non-negativity and submodularity.

    Deterministic given ``seed``; raises :class:`NotSubmodularError` on the
    first violated inequality.  Passing is evidence, not proof.
    """
    n = oracle.n
    empty = NodeSet.empty(n)
    full = NodeSet.full(n)
    if oracle(empty) != 0 or oracle(full) != 0:
        raise NotSubmodularError("oracle is not normalized: nonzero on empty or full set")
    rng = random.Random(seed)
    limit = 1 << n
    for _ in range(samples):
        a = NodeSet.from_mask(n, rng.randrange(limit))
        b = NodeSet.from_mask(n, rng.randrange(limit))
        va, vb = oracle(a), oracle(b)
        if va < 0 or vb < 0:
            raise NotSubmodularError("oracle takes a negative value")
        if va != oracle(a.complement()):
            raise NotSubmodularError(f"oracle is not symmetric on {a!r}")
        if va + vb < oracle(a | b) + oracle(a & b):
            raise NotSubmodularError(
                f"submodularity violated on {a!r}, {b!r}"
            )
