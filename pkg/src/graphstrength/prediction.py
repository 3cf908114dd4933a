"""Transductive prediction from a labeled set, with a deterministic
error certificate.

Minimum-cut prediction completes partial labels by minimizing the labeling
cost subject to agreement with the seeds; number of mistakes against any
truth ``y`` is then at most ``(cost(y) + cost(prediction)) / strength(L)``,
deterministically.  Label propagation solves a quadratic smoothness
criterion per class column, applies class mass normalization and thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import (
    ConvergenceError,
    DegenerateNormalizationError,
    IncompleteLabelingError,
    UniverseMismatchError,
)
from .graphs import WeightedGraph
from .oracles import CutOracle, labeling_cost
from .sets import Labeling, NodeSet
from .strength import strength

__all__ = [
    "PredictionReport",
    "mincut_predict",
    "label_prop_scores",
    "label_prop_predict",
    "class_mass_normalize",
    "error_certificate",
]


def _check_seed_labeling(n: int, labeled: NodeSet, y_l: Labeling) -> None:
    if labeled.n != n or y_l.n != n:
        raise UniverseMismatchError("labeled set or labels over a different universe")
    if y_l.defined != labeled:
        raise IncompleteLabelingError(
            "seed labels must be defined exactly on the labeled set"
        )


def mincut_predict(oracle: CutOracle, labeled: NodeSet, y_l: Labeling) -> Labeling:
    """Cost-minimizing total completion of the seed labels.

    The 1-labeled side of the prediction is the minimizer of the oracle over
    sets containing the positive seeds and avoiding the negative ones; ties
    go to the flow route's deterministic (minimal) side.
    """
    _check_seed_labeling(oracle.n, labeled, y_l)
    _, ones = oracle.seeded_min(y_l.ones, y_l.zeros)
    return Labeling(oracle.n, ones)


def label_prop_scores(
    g: WeightedGraph,
    labeled: NodeSet,
    y_l: Labeling,
    mu: float = 1e-6,
    eps: float = 1e-6,
    max_iter: int = 100_000,
    tol: float = 1e-8,
) -> np.ndarray:
    """Per-class score columns of the quadratic smoothness criterion.

    Column ``c`` minimizes ``sum_L (f_i - [y_i = c])^2 +
    mu * sum_edges w_ij (f_i - f_j)^2 + mu * eps * sum_i f_i^2`` by diagonal
    relaxation, iterated until both the largest update and the largest
    optimality-condition residual fall below ``tol``.
    """
    _check_seed_labeling(g.node_count, labeled, y_l)
    if not labeled:
        raise IncompleteLabelingError("label propagation needs at least one seed")
    n = g.node_count
    w = g.adjacency_matrix()
    deg = np.asarray(w.sum(axis=1)).ravel()
    is_labeled = np.zeros(n)
    for i in labeled:
        is_labeled[i] = 1.0
    diag = is_labeled + mu * deg + mu * eps

    targets = np.zeros((n, 2))
    for i in labeled:
        targets[i, y_l[i]] = 1.0

    scores = np.empty((n, 2))
    for c in range(2):
        b = is_labeled * targets[:, c]
        f = b / diag
        wf = mu * (w @ f)
        converged = False
        for _ in range(max_iter):
            f_next = (b + wf) / diag
            delta = float(np.max(np.abs(f_next - f)))
            wf_next = mu * (w @ f_next)
            f = f_next
            wf = wf_next
            if delta < tol:
                residual = float(np.max(np.abs(diag * f - b - wf)))
                if residual <= tol:
                    converged = True
                    break
        if not converged:
            residual = float(np.max(np.abs(diag * f - b - wf)))
            raise ConvergenceError(
                f"label propagation did not converge in {max_iter} iterations",
                residual=residual,
            )
        scores[:, c] = f
    return scores


def label_prop_predict(
    g: WeightedGraph,
    labeled: NodeSet,
    y_l: Labeling,
    mu: float = 1e-6,
    eps: float = 1e-6,
) -> Labeling:
    """Label propagation with class mass normalization, thresholded to labels.

    This is the one predictor that accepts real-valued edge weights.
    """
    scores = label_prop_scores(g, labeled, y_l, mu=mu, eps=eps)
    counts = np.array([len(y_l.zeros), len(y_l.ones)], dtype=float)
    proportions = counts / counts.sum()
    decisions = class_mass_normalize(scores, proportions)
    return Labeling(g.node_count, NodeSet(g.node_count, np.flatnonzero(decisions == 1)))


def class_mass_normalize(scores: np.ndarray, proportions) -> np.ndarray:
    """Rescale class columns to the labeled proportions, then argmax per node.

    Each column is multiplied by ``proportion / column mass``; ties go to the
    lower class index.  A zero-mass column with nonzero proportion cannot be
    rescaled and is an error; with zero proportion the class is simply never
    predicted.
    """
    scores = np.asarray(scores, dtype=float)
    if scores.ndim != 2:
        raise ValueError("scores must be a nodes-by-classes array")
    proportions = np.asarray(proportions, dtype=float)
    if proportions.shape != (scores.shape[1],):
        raise ValueError("one proportion per class column is required")
    if (scores < 0).any():
        raise ValueError("class score columns must be non-negative")
    if (proportions < 0).any() or not math.isclose(
        float(proportions.sum()), 1.0, rel_tol=0, abs_tol=1e-9
    ):
        raise ValueError("proportions must be non-negative and sum to 1")
    masses = scores.sum(axis=0)
    factors = np.zeros_like(masses)
    for c, (mass, prop) in enumerate(zip(masses, proportions)):
        if mass == 0:
            if prop != 0:
                raise DegenerateNormalizationError(
                    f"class {c} has zero score mass but proportion {prop}"
                )
            factors[c] = 0.0
        else:
            factors[c] = prop / mass
    rescaled = scores * factors
    return np.argmax(rescaled, axis=1)


@dataclass(frozen=True)
class PredictionReport:
    """Deterministic error certificate for a prediction against a truth.

    ``bound_value`` is ``(cost_truth + cost_predicted) / strength(L)``; the
    number of disagreements never exceeds it.  When the strength of the
    labeled set is zero the bound is vacuous (infinite) and flagged.
    """

    predicted: Labeling
    disagreements: int
    cost_truth: int
    cost_predicted: int
    strength_value: Fraction | float
    bound_value: Fraction | float
    bound_holds: bool
    vacuous: bool
    labeled: NodeSet


def error_certificate(
    oracle: CutOracle,
    labeled: NodeSet,
    y: Labeling,
    y_prime: Labeling,
) -> PredictionReport:
    """Certify a prediction ``y_prime`` against the truth ``y``.

    If the prediction disagrees with the truth on some labeled nodes (as
    label propagation may), the labeled set is first shrunk to the agreement
    set, keeping the certificate sound.
    """
    if labeled.n != oracle.n or y.n != oracle.n or y_prime.n != oracle.n:
        raise UniverseMismatchError("inputs over a different universe")
    if not y.is_total() or not y_prime.is_total():
        raise IncompleteLabelingError("certificate needs total labelings")
    effective = labeled & y.agreement_set(y_prime)
    cert = strength(oracle, effective)
    disagreements = y.disagreements(y_prime)
    cost_truth = labeling_cost(oracle, y)
    cost_predicted = labeling_cost(oracle, y_prime)
    if cert.value == math.inf:
        bound: Fraction | float = Fraction(0)
        vacuous = False
    elif cert.value == 0:
        bound = math.inf
        vacuous = True
    else:
        bound = Fraction(cost_truth + cost_predicted) / cert.value
        vacuous = False
    return PredictionReport(
        predicted=y_prime,
        disagreements=disagreements,
        cost_truth=cost_truth,
        cost_predicted=cost_predicted,
        strength_value=cert.value,
        bound_value=bound,
        bound_holds=disagreements <= bound,
        vacuous=vacuous,
        labeled=effective,
    )
