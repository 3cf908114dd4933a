"""Builders that turn raw data into graphs and hypergraphs.

Feature vectors become symmetrized k-nearest-neighbor graphs, either
unweighted or with Gaussian kernel weights whose bandwidth comes from a
distance heuristic.  Star-rating triples become a preference hypergraph: per
user, one hyperedge over the items rated above 3 and one over those rated
below 3.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Iterable

import numpy as np

from .exceptions import DataError, DegenerateBandwidthError
from .graphs import Hypergraph, WeightedGraph

__all__ = ["knn_graph", "sigma_heuristic", "ratings_to_hypergraph"]


def _distance_matrix(points: np.ndarray) -> np.ndarray:
    sq = np.sum(points**2, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (points @ points.T)
    np.maximum(d2, 0.0, out=d2)
    return np.sqrt(d2)


def _as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise DataError("points must form a non-empty 2-d array")
    if not np.isfinite(arr).all():
        raise DataError("points must have finite coordinates")
    return arr


def _neighbor_order(dist_row: np.ndarray, self_index: int) -> np.ndarray:
    # Stable sort on distance with index as the tie-breaker, self excluded.
    n = len(dist_row)
    order = np.lexsort((np.arange(n), dist_row))
    return order[order != self_index]


def sigma_heuristic(points, k: int = 10) -> float:
    """One third of the average distance to the k-th nearest neighbor."""
    arr = _as_points(points)
    n = len(arr)
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < k + 1:
        raise DataError(f"need at least {k + 1} points for k={k}")
    dist = _distance_matrix(arr)
    kth = [dist[i][_neighbor_order(dist[i], i)[k - 1]] for i in range(n)]
    sigma = float(np.mean(kth)) / 3.0
    if sigma == 0.0:
        raise DegenerateBandwidthError(
            "all pairwise distances used by the heuristic are zero"
        )
    return sigma


def knn_graph(points, k: int = 10, weighted: bool = False) -> WeightedGraph:
    """Symmetrized union of directed k-nearest-neighbor relations.

    Distance ties are broken toward the lower index.  The unweighted variant
    assigns weight 1 per edge; the weighted variant assigns Gaussian kernel
    weights ``exp(-d^2 / (2 sigma^2))`` with ``sigma`` from
    :func:`sigma_heuristic` and yields a real-weighted graph.
    """
    arr = _as_points(points)
    n = len(arr)
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < k + 1:
        raise DataError(f"need at least {k + 1} points for k={k}")
    dist = _distance_matrix(arr)
    pairs: set[tuple[int, int]] = set()
    for i in range(n):
        for j in _neighbor_order(dist[i], i)[:k]:
            pairs.add((min(i, int(j)), max(i, int(j))))
    if weighted:
        sigma = sigma_heuristic(arr, k)
        denom = 2.0 * sigma * sigma
        edges = [
            (u, v, float(math.exp(-(dist[u, v] ** 2) / denom)))
            for u, v in sorted(pairs)
        ]
    else:
        edges = [(u, v, 1) for u, v in sorted(pairs)]
    return WeightedGraph(n, edges)


def ratings_to_hypergraph(
    ratings: Iterable[tuple[str, str, Fraction | int | float]],
    min_ratings: int = 10,
) -> tuple[Hypergraph, tuple[str, ...]]:
    """Preference hypergraph over sufficiently-rated items.

    Items with at most ``min_ratings`` ratings are dropped.  Per user, the
    kept items rated strictly above 3 form one unit-weight hyperedge and
    those rated strictly below 3 another; ratings of exactly 3 contribute to
    neither, empty edges are omitted, singleton edges are kept (they never
    straddle a cut).  Returns the hypergraph and the item id per node index.
    """
    triples: list[tuple[str, str, Fraction]] = []
    counts: Counter[str] = Counter()
    for user, item, stars in ratings:
        stars = Fraction(stars)
        if not 1 <= stars <= 5:
            raise DataError(f"rating {stars} for item {item!r} outside [1, 5]")
        triples.append((str(user), str(item), stars))
        counts[str(item)] += 1
    kept = sorted(item for item, c in counts.items() if c > min_ratings)
    index = {item: i for i, item in enumerate(kept)}
    if not kept:
        raise DataError(
            f"no item has more than {min_ratings} ratings; nothing to build"
        )
    liked: defaultdict[str, set[int]] = defaultdict(set)
    disliked: defaultdict[str, set[int]] = defaultdict(set)
    for user, item, stars in triples:
        node = index.get(item)
        if node is None:
            continue
        if stars > 3:
            liked[user].add(node)
        elif stars < 3:
            disliked[user].add(node)
    hyperedges = []
    for user in sorted(set(liked) | set(disliked)):
        for members in (liked.get(user), disliked.get(user)):
            if members:
                hyperedges.append((1, sorted(members)))
    return Hypergraph(len(kept), hyperedges), tuple(kept)
