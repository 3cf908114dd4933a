"""Network strength of a node set, certified exactly.

The strength of a set ``S`` is the minimum over nonempty ``T`` disjoint from
``S`` of ``cut(T) / |T|``: the least per-node cost an adversary pays to
separate nodes from ``S``.  It is computed by a descending-ratio iteration
whose inner step minimizes ``cut(T) - lam * |T|`` (exactly, via flow for cut
oracles), and is certified by the witness ``T`` attaining the ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import enumeration
from .exceptions import ConstructionUndefinedError, UniverseMismatchError
from .oracles import CutOracle, GraphCutOracle, HypergraphCutOracle
from .sets import Labeling, NodeSet

__all__ = [
    "StrengthCertificate",
    "strength",
    "strength_deficit",
    "strength_by_enumeration",
    "adversarial_labeling",
]


@dataclass(frozen=True)
class StrengthCertificate:
    """Exact strength value with the witness set attaining it.

    ``value`` is ``math.inf`` exactly when ``S = V`` (empty witness); a value
    of zero means some nonempty zero-cut set avoids ``S``.  ``iterations``
    counts inner minimization solves.
    """

    value: Fraction | float
    witness: NodeSet
    iterations: int

    def is_finite(self) -> bool:
        return self.value != math.inf


def strength_deficit(
    oracle: CutOracle, s: NodeSet, lam: Fraction | int
) -> tuple[Fraction, NodeSet]:
    """``min over T disjoint from s`` of ``cut(T) - lam * |T|`` with minimizer.

    Always ``<= 0`` since the empty set scores zero; it is zero exactly when
    the strength of ``s`` is at least ``lam``.  The minimizer returned is the
    inclusion-maximal one.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    return oracle.shifted_min(s, lam)


def strength(oracle: CutOracle, s: NodeSet) -> StrengthCertificate:
    """Exact strength of ``s`` with witness.

    Starts from the full complement and repeatedly minimizes
    ``cut(T) - lam * |T|`` at the current ratio ``lam``; every step strictly
    lowers ``lam`` until the minimum hits zero, at which point the previous
    set attains the strength.
    """
    if s.n != oracle.n:
        raise UniverseMismatchError(
            f"set over universe {s.n}, oracle over {oracle.n}"
        )
    if s.is_full():
        return StrengthCertificate(math.inf, NodeSet.empty(oracle.n), 0)
    t = s.complement()
    cut_t = oracle(t)
    if cut_t == 0:
        return StrengthCertificate(Fraction(0), t, 0)
    iterations = 0
    while True:
        lam = Fraction(cut_t, len(t))
        value, t_next = oracle.shifted_min(s, lam)
        iterations += 1
        if value == 0:
            return StrengthCertificate(lam, t, iterations)
        t = t_next
        # cut(t) is recoverable from the scaled objective; re-deriving it
        # avoids a second oracle evaluation.
        num = int(value * lam.denominator) + lam.numerator * len(t)
        cut_t, rem = divmod(num, lam.denominator)
        assert rem == 0


def strength_by_enumeration(oracle: CutOracle, s: NodeSet) -> Fraction | float:
    """Strength of ``s`` by direct enumeration of all candidate sets.

    Independent of the flow reductions; limited to
    :data:`~graphstrength.enumeration.ENUMERATION_LIMIT` free nodes.  Graph
    and hypergraph oracles enumerate via vectorized cut tables, anything else
    by per-subset evaluation.
    """
    if s.n != oracle.n:
        raise UniverseMismatchError(
            f"set over universe {s.n}, oracle over {oracle.n}"
        )
    free = s.complement()
    if not free:
        return math.inf
    if oracle.n <= enumeration.ENUMERATION_LIMIT:
        if isinstance(oracle, GraphCutOracle):
            cuts = enumeration.graph_cut_table(oracle.graph)
            pcs = enumeration.popcount_table(oracle.n)
            return enumeration.min_ratio_over_subsets(cuts, pcs, free)
        if isinstance(oracle, HypergraphCutOracle):
            cuts = enumeration.hypergraph_cut_table(oracle.hypergraph)
            pcs = enumeration.popcount_table(oracle.n)
            return enumeration.min_ratio_over_subsets(cuts, pcs, free)
    return enumeration.enumerate_min_ratio(oracle.evaluate, oracle.n, free)


def adversarial_labeling(
    oracle: CutOracle, labeled: NodeSet
) -> tuple[Labeling, Labeling]:
    """Worst-case truth/prediction pair saturating the error bound.

    Returns ``(y, y_prime)`` where ``y_prime`` is all ones and ``y`` zeroes
    out the strength witness of ``labeled``.  The pair satisfies, exactly,

        (cost(y) + cost(y_prime)) / disagreements == strength(labeled),

    showing no bound of that shape can beat the strength denominator.
    Undefined when the strength is zero or infinite.
    """
    cert = strength(oracle, labeled)
    if cert.value == math.inf or cert.value == 0:
        raise ConstructionUndefinedError(
            f"adversarial construction needs finite nonzero strength, got {cert.value}"
        )
    n = oracle.n
    y_prime = Labeling.constant(n, 1)
    y = Labeling(n, cert.witness.complement())
    return y, y_prime
