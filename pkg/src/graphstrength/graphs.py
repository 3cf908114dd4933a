"""Weighted graphs and hypergraphs over an indexed node universe.

Cut-based optimization requires integer edge weights; rational weights are
cleared to integers at ingestion by multiplying through with the least common
denominator, recorded in ``weight_scale`` so user-facing quantities can be
rescaled back.  Real-valued (e.g. Gaussian kernel) weights are accepted too,
but only the label-propagation predictor can consume such graphs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import scipy.sparse as sp

from .exceptions import DataError, UniverseMismatchError
from .sets import NodeSet

__all__ = ["WeightedGraph", "Hypergraph"]


class WeightedGraph:
    """Undirected graph with non-negative weights, at most one edge per pair."""

    __slots__ = ("node_count", "edges", "weight_scale", "integer_weighted")

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int, int | float]] = (),
        *,
        weight_scale: int = 1,
    ):
        if node_count < 1:
            raise ValueError("graph needs at least one node")
        if weight_scale < 1:
            raise ValueError("weight scale must be a positive integer")
        acc: dict[tuple[int, int], int | float] = {}
        any_float = False
        for u, v, w in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise UniverseMismatchError(
                    f"edge ({u}, {v}) outside universe of size {node_count}"
                )
            if u == v:
                raise DataError(f"self-loop at node {u} is not allowed")
            if isinstance(w, float):
                if not math.isfinite(w):
                    raise DataError(f"edge ({u}, {v}) has non-finite weight")
                any_float = True
            elif not isinstance(w, int):
                raise DataError(
                    f"edge ({u}, {v}) weight must be int or float, got {type(w).__name__}"
                )
            if w < 0:
                raise DataError(f"edge ({u}, {v}) has negative weight {w}")
            key = (u, v) if u < v else (v, u)
            acc[key] = acc.get(key, 0) + w
        if any_float and weight_scale != 1:
            raise DataError("weight scaling applies to integer graphs only")
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(
            self,
            "edges",
            tuple(sorted((u, v, w) for (u, v), w in acc.items())),
        )
        object.__setattr__(self, "weight_scale", weight_scale)
        object.__setattr__(self, "integer_weighted", not any_float)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    @classmethod
    def from_rational_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int, Fraction | int]],
    ) -> "WeightedGraph":
        """Build an integer graph by clearing rational weights.

        All weights are multiplied by the least common denominator of the
        reduced weights, which becomes ``weight_scale``.
        """
        items = [(u, v, Fraction(w)) for u, v, w in edges]
        scale = 1
        for _, _, w in items:
            scale = scale * w.denominator // math.gcd(scale, w.denominator)
        scaled = [(u, v, int(w * scale)) for u, v, w in items]
        return cls(node_count, scaled, weight_scale=scale)

    def require_integer_weights(self) -> None:
        if not self.integer_weighted:
            raise DataError(
                "this operation needs integer edge weights; "
                "real-weighted graphs are supported by label propagation only"
            )

    def weighted_degree(self, v: int) -> int | float:
        if not 0 <= v < self.node_count:
            raise UniverseMismatchError(
                f"node {v} outside universe of size {self.node_count}"
            )
        return sum(w for a, b, w in self.edges if a == v or b == v)

    def adjacency_matrix(self) -> sp.csr_matrix:
        """Symmetric adjacency as a sparse float matrix."""
        n = self.node_count
        if not self.edges:
            return sp.csr_matrix((n, n))
        rows, cols, vals = [], [], []
        for u, v, w in self.edges:
            rows += [u, v]
            cols += [v, u]
            vals += [float(w), float(w)]
        return sp.csr_matrix((vals, (rows, cols)), shape=(n, n))

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Graph with node ``i`` renamed ``perm[i]``."""
        _check_permutation(perm, self.node_count)
        return WeightedGraph(
            self.node_count,
            ((perm[u], perm[v], w) for u, v, w in self.edges),
            weight_scale=self.weight_scale,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.edges == other.edges
            and self.weight_scale == other.weight_scale
        )

    def __hash__(self) -> int:
        return hash((self.node_count, self.edges, self.weight_scale))

    def __repr__(self) -> str:
        return (
            f"WeightedGraph(node_count={self.node_count}, "
            f"edges={len(self.edges)}, scale={self.weight_scale})"
        )


class Hypergraph:
    """Weighted hyperedges over an indexed node universe."""

    __slots__ = ("node_count", "hyperedges", "weight_scale")

    def __init__(
        self,
        node_count: int,
        hyperedges: Iterable[tuple[int, Iterable[int] | NodeSet]] = (),
        *,
        weight_scale: int = 1,
    ):
        if node_count < 1:
            raise ValueError("hypergraph needs at least one node")
        if weight_scale < 1:
            raise ValueError("weight scale must be a positive integer")
        stored = []
        for w, members in hyperedges:
            if not isinstance(w, int) or w < 0:
                raise DataError(f"hyperedge weight must be a non-negative integer, got {w!r}")
            ns = members if isinstance(members, NodeSet) else NodeSet(node_count, members)
            if ns.n != node_count:
                raise UniverseMismatchError("hyperedge members outside the node universe")
            if not ns:
                raise DataError("empty hyperedges are not allowed")
            stored.append((w, ns))
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "hyperedges", tuple(stored))
        object.__setattr__(self, "weight_scale", weight_scale)

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @classmethod
    def from_rational_edges(
        cls,
        node_count: int,
        hyperedges: Iterable[tuple[Fraction | int, Iterable[int]]],
    ) -> "Hypergraph":
        items = [(Fraction(w), tuple(members)) for w, members in hyperedges]
        for w, _ in items:
            if w < 0:
                raise DataError(f"hyperedge weight {w} is negative")
        scale = 1
        for w, _ in items:
            scale = scale * w.denominator // math.gcd(scale, w.denominator)
        scaled = [(int(w * scale), members) for w, members in items]
        return cls(node_count, scaled, weight_scale=scale)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        _check_permutation(perm, self.node_count)
        n = self.node_count
        return Hypergraph(
            n,
            ((w, NodeSet(n, (perm[i] for i in members))) for w, members in self.hyperedges),
            weight_scale=self.weight_scale,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.hyperedges == other.hyperedges
            and self.weight_scale == other.weight_scale
        )

    def __hash__(self) -> int:
        return hash((self.node_count, self.hyperedges, self.weight_scale))

    def __repr__(self) -> str:
        return (
            f"Hypergraph(node_count={self.node_count}, "
            f"hyperedges={len(self.hyperedges)}, scale={self.weight_scale})"
        )


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError("relabeling requires a permutation of 0..n-1")
