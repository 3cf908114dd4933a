import pytest

from graphstrength import Labeling, NodeSet
from graphstrength.exceptions import IncompleteLabelingError, UniverseMismatchError


class TestNodeSet:
    def test_construction_and_membership(self):
        s = NodeSet(5, [0, 3])
        assert len(s) == 2
        assert 0 in s and 3 in s and 1 not in s
        assert s.members() == (0, 3)
        assert list(s) == [0, 3]

    def test_out_of_range_rejected(self):
        with pytest.raises(UniverseMismatchError):
            NodeSet(3, [3])
        with pytest.raises(UniverseMismatchError):
            NodeSet(3, [-1])
        with pytest.raises(UniverseMismatchError):
            NodeSet.from_mask(3, 1 << 3)

    def test_algebra(self):
        a = NodeSet(4, [0, 1])
        b = NodeSet(4, [1, 2])
        assert (a | b) == NodeSet(4, [0, 1, 2])
        assert (a & b) == NodeSet(4, [1])
        assert (a - b) == NodeSet(4, [0])
        assert a.complement() == NodeSet(4, [2, 3])
        assert a.add(3) == NodeSet(4, [0, 1, 3])
        assert a.issubset(a | b)
        assert not a.isdisjoint(b)
        assert a.isdisjoint(NodeSet(4, [2, 3]))

    def test_universe_mismatch_in_algebra(self):
        with pytest.raises(UniverseMismatchError):
            NodeSet(3, [0]) | NodeSet(4, [0])

    def test_full_empty(self):
        assert NodeSet.full(3).mask == 0b111
        assert NodeSet.full(3).is_full()
        assert not NodeSet.empty(3)
        assert NodeSet.empty(0).is_full()

    def test_equality_and_hash(self):
        assert NodeSet(4, [1]) == NodeSet(4, [1])
        assert NodeSet(4, [1]) != NodeSet(5, [1])
        assert len({NodeSet(4, [1]), NodeSet(4, [1])}) == 1

    def test_immutability(self):
        s = NodeSet(3, [0])
        with pytest.raises(AttributeError):
            s.mask = 7


class TestLabeling:
    def test_total(self):
        y = Labeling.total([1, 0, 1])
        assert y.is_total()
        assert y[0] == 1 and y[1] == 0
        assert y.ones == NodeSet(3, [0, 2])
        assert y.zeros == NodeSet(3, [1])
        assert y.as_list() == [1, 0, 1]

    def test_partial(self):
        y = Labeling.partial(4, {1: 1, 3: 0})
        assert not y.is_total()
        assert y.defined == NodeSet(4, [1, 3])
        assert y.get(0) is None
        with pytest.raises(KeyError):
            y[0]
        with pytest.raises(IncompleteLabelingError):
            y.as_list()

    def test_bad_label_value(self):
        with pytest.raises(ValueError):
            Labeling.total([0, 2])

    def test_flip(self):
        y = Labeling.partial(4, {1: 1, 3: 0})
        assert y.flip() == Labeling.partial(4, {1: 0, 3: 1})

    def test_restrict(self):
        y = Labeling.total([1, 0, 1])
        r = y.restrict(NodeSet(3, [0, 1]))
        assert r == Labeling.partial(3, {0: 1, 1: 0})
        with pytest.raises(IncompleteLabelingError):
            Labeling.partial(3, {0: 1}).restrict(NodeSet(3, [0, 1]))

    def test_disagreements_and_agreement(self):
        y = Labeling.total([1, 0, 1, 0])
        z = Labeling.total([1, 1, 0, 0])
        assert y.disagreements(z) == 2
        assert y.agreement_set(z) == NodeSet(4, [0, 3])
        assert y.disagreements(y) == 0

    def test_constant(self):
        assert Labeling.constant(3, 1).as_list() == [1, 1, 1]
        assert Labeling.constant(3, 0).as_list() == [0, 0, 0]
