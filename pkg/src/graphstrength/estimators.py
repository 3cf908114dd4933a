"""Scikit-learn style wrappers around the selection and prediction core.

These estimators take a square adjacency matrix (dense, sparse, or an
already-built :class:`~graphstrength.graphs.WeightedGraph` /
:class:`~graphstrength.graphs.Hypergraph`) so the algorithms compose with
pipelines, ``clone`` and ``get_params`` based tooling.  Labels follow the
semi-supervised convention: ``-1`` marks an unlabeled node.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClassifierMixin

from .exceptions import DataError
from .graphs import Hypergraph, WeightedGraph
from .oracles import CutOracle, GraphCutOracle, HypergraphCutOracle
from .prediction import label_prop_predict, mincut_predict
from .selection import select_for_budget, select_for_target
from .sets import Labeling, NodeSet

__all__ = ["StrengthSelector", "MincutClassifier", "QuadraticLabelPropagation"]


def _as_graph(X, *, integer: bool) -> WeightedGraph | Hypergraph:
    """Validate an adjacency input and build the internal graph type."""
    if isinstance(X, (WeightedGraph, Hypergraph)):
        return X
    if sp.issparse(X):
        dense = np.asarray(X.todense(), dtype=float)
    else:
        dense = np.asarray(X, dtype=float)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise DataError(f"adjacency must be square, got shape {dense.shape}")
    if dense.shape[0] == 0:
        raise DataError("adjacency must have at least one node")
    if not np.isfinite(dense).all():
        raise DataError("adjacency must be finite")
    if (dense < 0).any():
        raise DataError("adjacency weights must be non-negative")
    if not np.allclose(dense, dense.T):
        raise DataError("adjacency must be symmetric")
    if np.diagonal(dense).any():
        raise DataError("adjacency must have a zero diagonal")
    n = dense.shape[0]
    integral = np.equal(np.mod(dense, 1), 0).all()
    if integer and not integral:
        raise DataError(
            "this estimator needs integer edge weights; "
            "use QuadraticLabelPropagation for kernel-weighted graphs"
        )
    edges = []
    ii, jj = np.nonzero(dense)
    for u, v in zip(ii, jj):
        if u < v:
            w = dense[u, v]
            edges.append((int(u), int(v), int(w) if integral else float(w)))
    return WeightedGraph(n, edges)


def _oracle_for(data: WeightedGraph | Hypergraph) -> CutOracle:
    if isinstance(data, Hypergraph):
        return HypergraphCutOracle(data)
    return GraphCutOracle(data)


def _split_labels(y, n: int) -> tuple[NodeSet, Labeling]:
    arr = np.asarray(y)
    if arr.shape != (n,):
        raise DataError(f"labels must have shape ({n},), got {arr.shape}")
    assignments = {}
    for i, v in enumerate(arr):
        iv = int(v)
        if iv == -1:
            continue
        if iv not in (0, 1):
            raise DataError("labels must be 0, 1, or -1 for unlabeled")
        assignments[i] = iv
    labeled = NodeSet(n, assignments.keys())
    return labeled, Labeling.partial(n, assignments)


class StrengthSelector(BaseEstimator):
    """Select a labeled set by certified strength, target or budget mode.

    Parameters
    ----------
    target : rational, optional
        Grow the smallest greedy set whose strength reaches this level.
    budget : int, optional
        Alternatively, pick at most this many nodes and binary-search the
        best certifiable level.  Exactly one of ``target``/``budget`` must
        be given.
    rel_gap : rational, default 1/10000
        Relative stopping gap of the budget-mode binary search.

    Attributes
    ----------
    selected_ : ndarray of selected node indices
    strength_ : exact strength of the selected set (Fraction, or inf)
    result_ : the full SelectionResult with trace and witness
    """

    def __init__(self, target=None, budget=None, rel_gap=Fraction(1, 10000)):
        self.target = target
        self.budget = budget
        self.rel_gap = rel_gap

    def fit(self, X, y=None):
        if (self.target is None) == (self.budget is None):
            raise ValueError("set exactly one of target= or budget=")
        data = _as_graph(X, integer=True)
        oracle = _oracle_for(data)
        if self.target is not None:
            result = select_for_target(oracle, Fraction(str(self.target)))
        else:
            result = select_for_budget(
                oracle, int(self.budget), Fraction(str(self.rel_gap))
            )
        self.n_features_in_ = oracle.n
        self.result_ = result
        self.selected_ = np.array(sorted(result.chosen), dtype=int)
        self.strength_ = result.strength
        return self

    def get_support(self, indices: bool = False):
        if indices:
            return self.selected_.copy()
        mask = np.zeros(self.n_features_in_, dtype=bool)
        mask[self.selected_] = True
        return mask


class MincutClassifier(ClassifierMixin, BaseEstimator):
    """Transductive minimum-cut completion of partial binary labels.

    ``fit(X, y)`` takes the adjacency and labels with ``-1`` for unlabeled
    nodes; the completion is stored in ``transduction_`` and returned by
    ``predict()``.
    """

    def fit(self, X, y):
        data = _as_graph(X, integer=True)
        oracle = _oracle_for(data)
        labeled, y_l = _split_labels(y, oracle.n)
        predicted = mincut_predict(oracle, labeled, y_l)
        self.classes_ = np.array([0, 1])
        self.transduction_ = np.array(predicted.as_list(), dtype=int)
        return self

    def predict(self, X=None):
        return self.transduction_.copy()


class QuadraticLabelPropagation(ClassifierMixin, BaseEstimator):
    """Label propagation via the quadratic smoothness criterion.

    Accepts real-valued (e.g. Gaussian kernel) adjacencies.  ``mu`` weighs
    the smoothness term and ``mu * eps`` the ridge term.
    """

    def __init__(self, mu: float = 1e-6, eps: float = 1e-6):
        self.mu = mu
        self.eps = eps

    def fit(self, X, y):
        data = _as_graph(X, integer=False)
        if not isinstance(data, WeightedGraph):
            raise DataError("label propagation works on graphs, not hypergraphs")
        labeled, y_l = _split_labels(y, data.node_count)
        predicted = label_prop_predict(data, labeled, y_l, mu=self.mu, eps=self.eps)
        self.classes_ = np.array([0, 1])
        self.transduction_ = np.array(predicted.as_list(), dtype=int)
        return self

    def predict(self, X=None):
        return self.transduction_.copy()
