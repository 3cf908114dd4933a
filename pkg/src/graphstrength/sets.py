"""Node sets over a fixed universe and binary labelings.

A :class:`NodeSet` is an immutable subset of ``{0, ..., n-1}`` backed by an
integer bitmask, so set algebra, cardinality and membership are exact and
cheap.  A :class:`Labeling` assigns labels in ``{0, 1}`` to some or all nodes
of the same universe.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .exceptions import IncompleteLabelingError, UniverseMismatchError

__all__ = ["NodeSet", "Labeling"]


class NodeSet:
    """Immutable subset of the node universe ``{0, ..., n-1}``."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = ()):
        if n < 0:
            raise ValueError("universe size must be non-negative")
        object.__setattr__(self, "n", n)
        mask = 0
        for i in members:
            if not 0 <= i < n:
                raise UniverseMismatchError(
                    f"node {i} outside universe of size {n}"
                )
            mask |= 1 << i
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("NodeSet is immutable")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "NodeSet":
        if mask < 0 or mask >> n:
            raise UniverseMismatchError(
                f"mask {mask:#x} outside universe of size {n}"
            )
        s = cls.__new__(cls)
        object.__setattr__(s, "n", n)
        object.__setattr__(s, "mask", mask)
        return s

    @classmethod
    def empty(cls, n: int) -> "NodeSet":
        return cls.from_mask(n, 0)

    @classmethod
    def full(cls, n: int) -> "NodeSet":
        return cls.from_mask(n, (1 << n) - 1)

    def _check_same_universe(self, other: "NodeSet") -> None:
        if self.n != other.n:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.n} vs {other.n}"
            )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and (self.mask >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __or__(self, other: "NodeSet") -> "NodeSet":
        self._check_same_universe(other)
        return NodeSet.from_mask(self.n, self.mask | other.mask)

    def __and__(self, other: "NodeSet") -> "NodeSet":
        self._check_same_universe(other)
        return NodeSet.from_mask(self.n, self.mask & other.mask)

    def __sub__(self, other: "NodeSet") -> "NodeSet":
        self._check_same_universe(other)
        return NodeSet.from_mask(self.n, self.mask & ~other.mask)

    def add(self, i: int) -> "NodeSet":
        """Return a copy with node ``i`` included."""
        if not 0 <= i < self.n:
            raise UniverseMismatchError(f"node {i} outside universe of size {self.n}")
        return NodeSet.from_mask(self.n, self.mask | (1 << i))

    def complement(self) -> "NodeSet":
        return NodeSet.from_mask(self.n, self.mask ^ ((1 << self.n) - 1))

    def issubset(self, other: "NodeSet") -> bool:
        self._check_same_universe(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "NodeSet") -> bool:
        self._check_same_universe(other)
        return self.mask & other.mask == 0

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"NodeSet({self.n}, {list(self)})"


class Labeling:
    """Partial or total assignment of ``{0, 1}`` labels to a node universe.

    Internally stored as two node sets: the nodes with a defined label and,
    among those, the nodes labeled 1.
    """

    __slots__ = ("n", "defined", "ones")

    def __init__(self, n: int, ones: NodeSet, defined: NodeSet | None = None):
        if defined is None:
            defined = NodeSet.full(n)
        if ones.n != n or defined.n != n:
            raise UniverseMismatchError("labeling sets must share the universe")
        if not ones.issubset(defined):
            raise ValueError("nodes labeled 1 must be labeled at all")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ones", ones)
        object.__setattr__(self, "defined", defined)

    def __setattr__(self, name, value):
        raise AttributeError("Labeling is immutable")

    @classmethod
    def total(cls, values: Iterable[int]) -> "Labeling":
        vals = list(values)
        n = len(vals)
        ones = NodeSet(n, (i for i, v in enumerate(vals) if _as_bit(v)))
        return cls(n, ones)

    @classmethod
    def partial(cls, n: int, assignments: Mapping[int, int]) -> "Labeling":
        defined = NodeSet(n, assignments.keys())
        ones = NodeSet(n, (i for i, v in assignments.items() if _as_bit(v)))
        return cls(n, ones, defined)

    @classmethod
    def constant(cls, n: int, label: int) -> "Labeling":
        ones = NodeSet.full(n) if _as_bit(label) else NodeSet.empty(n)
        return cls(n, ones)

    @property
    def zeros(self) -> NodeSet:
        return self.defined - self.ones

    def is_total(self) -> bool:
        return self.defined.is_full()

    def __getitem__(self, i: int) -> int:
        if i not in self.defined:
            raise KeyError(f"node {i} is unlabeled")
        return 1 if i in self.ones else 0

    def get(self, i: int, default=None):
        if i not in self.defined:
            return default
        return 1 if i in self.ones else 0

    def restrict(self, s: NodeSet) -> "Labeling":
        """Labels restricted to ``s`` (which must be labeled here)."""
        if not s.issubset(self.defined):
            raise IncompleteLabelingError("restriction target has unlabeled nodes")
        return Labeling(self.n, self.ones & s, s)

    def flip(self) -> "Labeling":
        return Labeling(self.n, self.defined - self.ones, self.defined)

    def disagreements(self, other: "Labeling") -> int:
        """Number of commonly-labeled nodes on which the labels differ."""
        if self.n != other.n:
            raise UniverseMismatchError("labelings over different universes")
        common = self.defined & other.defined
        return ((self.ones.mask ^ other.ones.mask) & common.mask).bit_count()

    def agreement_set(self, other: "Labeling") -> NodeSet:
        """Commonly-labeled nodes on which the labels agree."""
        if self.n != other.n:
            raise UniverseMismatchError("labelings over different universes")
        common = self.defined & other.defined
        return NodeSet.from_mask(
            self.n, common.mask & ~(self.ones.mask ^ other.ones.mask)
        )

    def as_list(self) -> list[int]:
        if not self.is_total():
            raise IncompleteLabelingError("labeling is partial")
        return [1 if i in self.ones else 0 for i in range(self.n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return (
            self.n == other.n
            and self.defined == other.defined
            and self.ones == other.ones
        )

    def __hash__(self) -> int:
        return hash((self.n, self.defined, self.ones))

    def __repr__(self) -> str:
        if self.is_total():
            return f"Labeling.total({self.as_list()})"
        pairs = {i: self[i] for i in self.defined}
        return f"Labeling.partial({self.n}, {pairs})"


def _as_bit(v) -> int:
    b = int(v)
    if b not in (0, 1):
        raise ValueError(f"labels must be 0 or 1, got {v!r}")
    return b
