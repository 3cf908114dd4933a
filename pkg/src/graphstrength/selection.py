"""Labeled-set selection by maximizing certified strength.

Two selection modes are provided.  Target mode greedily grows a set until
its strength reaches a requested level, exploiting that the deficit
``min over T disjoint from S of cut(T) - lam*|T|`` is a monotone submodular
function of ``S`` whose zero level set is exactly the feasible region; the
greedy is accelerated with a lazy (stale-bound) priority queue that provably
reproduces the naive pick sequence.  Budget mode binary-searches the target
level to the largest value the greedy can certify within the budget.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .oracles import CutOracle
from .sets import NodeSet
from .strength import StrengthCertificate, strength, strength_deficit

__all__ = [
    "SelectionResult",
    "select_for_target",
    "select_for_budget",
    "random_subset",
]

DEFAULT_RELATIVE_GAP = Fraction(1, 10000)


@dataclass(frozen=True)
class SelectionResult:
    """Chosen set with its re-certified strength and the greedy trace.

    ``strength`` is always recomputed from ``chosen`` (never the probe
    target), ``witness`` is the certifying adversary set, ``trace`` lists
    ``(node, deficit after adding)`` per greedy step, and ``evaluations``
    counts deficit solves spent during selection.
    """

    chosen: NodeSet
    strength: Fraction | float
    target: Fraction | None
    trace: tuple[tuple[int, Fraction], ...]
    evaluations: int
    witness: NodeSet | None = None

    @property
    def size(self) -> int:
        return len(self.chosen)


def _certified(
    chosen: NodeSet,
    oracle: CutOracle,
    target: Fraction | None,
    trace: list[tuple[int, Fraction]],
    evaluations: int,
) -> SelectionResult:
    cert: StrengthCertificate = strength(oracle, chosen)
    return SelectionResult(
        chosen=chosen,
        strength=cert.value,
        target=target,
        trace=tuple(trace),
        evaluations=evaluations,
        witness=cert.witness,
    )


def _lazy_greedy(
    oracle: CutOracle, lam: Fraction, limit: int | None = None
) -> tuple[NodeSet, list[tuple[int, Fraction]], int, Fraction]:
    """Greedy deficit maximization with lazy gain re-evaluation.

    Stale gains upper-bound fresh ones (diminishing returns), so popping the
    queue until the top entry is fresh yields exactly the naive argmax with
    ties broken toward the lowest node index.  Returns the chosen set, the
    per-step trace, the number of deficit evaluations, and the final deficit.
    """
    n = oracle.n
    chosen = NodeSet.empty(n)
    # evaluations counts candidate-gain solves, comparable to the naive
    # greedy's n + (n-1) + ... schedule; the baseline deficit is excluded.
    evaluations = 0
    f_current, _ = strength_deficit(oracle, chosen, lam)
    trace: list[tuple[int, Fraction]] = []
    if f_current == 0:
        return chosen, trace, evaluations, f_current

    heap: list[tuple[Fraction, int, int, Fraction]] = []
    for v in range(n):
        f_new, _ = strength_deficit(oracle, chosen.add(v), lam)
        evaluations += 1
        heap.append((f_current - f_new, v, 0, f_new))
    heapq.heapify(heap)

    while f_current < 0 and (limit is None or len(chosen) < limit):
        neg_gain, v, stamp, f_new = heapq.heappop(heap)
        if v in chosen:
            continue
        if stamp == len(chosen):
            chosen = chosen.add(v)
            f_current = f_new
            trace.append((v, f_current))
        else:
            f_new, _ = strength_deficit(oracle, chosen.add(v), lam)
            evaluations += 1
            heapq.heappush(heap, (f_current - f_new, v, len(chosen), f_new))
    return chosen, trace, evaluations, f_current


def select_for_target(oracle: CutOracle, target: Fraction | int) -> SelectionResult:
    """Smallest-effort greedy set whose strength provably reaches ``target``.

    The loop always terminates because the deficit of the full node set is
    zero; the returned set carries an exact strength certificate at least
    ``target``.
    """
    target = Fraction(target)
    if target < 0:
        raise ValueError("target strength must be non-negative")
    chosen, trace, evaluations, final = _lazy_greedy(oracle, target)
    assert final == 0
    return _certified(chosen, oracle, target, trace, evaluations)


def select_for_budget(
    oracle: CutOracle,
    k: int,
    rel_gap: Fraction | float = DEFAULT_RELATIVE_GAP,
) -> SelectionResult:
    """Best strength certifiable by the greedy within at most ``k`` nodes.

    Binary-searches the target level over ``[0, max single-node cut]``,
    running the greedy truncated at ``k`` nodes per probe and keeping the
    result of the largest feasible probe; the search stops once the relative
    gap between the feasibility bounds drops below ``rel_gap``.  With
    ``k >= n`` the full node set (infinite strength) is returned directly.
    """
    if k < 1:
        raise ValueError("budget must be at least 1")
    rel_gap = Fraction(rel_gap)
    if rel_gap <= 0:
        raise ValueError("relative gap must be positive")
    n = oracle.n
    if k >= n:
        full = NodeSet.full(n)
        return SelectionResult(
            chosen=full,
            strength=math.inf,
            target=None,
            trace=(),
            evaluations=0,
            witness=NodeSet.empty(n),
        )

    lam_hi = max(
        Fraction(oracle(NodeSet(n, [v]))) for v in range(n)
    )
    evaluations = 0
    if lam_hi == 0:
        chosen, trace, e, _ = _lazy_greedy(oracle, Fraction(0), limit=k)
        return _certified(chosen, oracle, Fraction(0), trace, e)

    def probe(lam: Fraction):
        nonlocal evaluations
        chosen, trace, e, final = _lazy_greedy(oracle, lam, limit=k)
        evaluations += e
        return chosen, trace, final == 0

    chosen, trace, feasible = probe(lam_hi)
    if feasible:
        return _certified(chosen, oracle, lam_hi, trace, evaluations)

    lo = Fraction(0)
    best_chosen, best_trace, _ = probe(lo)
    hi = lam_hi
    while (hi - lo) / hi >= rel_gap:
        mid = (lo + hi) / 2
        chosen, trace, feasible = probe(mid)
        if feasible:
            lo = mid
            best_chosen, best_trace = chosen, trace
        else:
            hi = mid
    return _certified(best_chosen, oracle, lo, best_trace, evaluations)


def random_subset(n: int, k: int, seed: int) -> NodeSet:
    """Uniform ``k``-subset of ``{0, ..., n-1}``, deterministic given ``seed``."""
    if not 0 <= k <= n:
        raise ValueError(f"cannot sample {k} nodes from a universe of {n}")
    rng = random.Random(seed)
    return NodeSet(n, rng.sample(range(n), k))
