import pytest
from fractions import Fraction

from proxiknap.errors import InstanceError
from proxiknap.model import (
    Item,
    SubsetSumInstance,
    clamp_multiplicities,
    normalize_knapsack,
    normalize_subset_sum,
    subset_sum_prefix_greedy,
)


def test_item_validation():
    with pytest.raises(InstanceError):
        Item(0, 1, 1)
    with pytest.raises(InstanceError):
        Item(1, -1, 1)
    with pytest.raises(InstanceError):
        Item(1, 1, 0)
    assert Item(2, 0, 1).efficiency == Fraction(0)


def test_normalize_sorts_by_exact_efficiency():
    # 333/1000 < 1/3: float comparison would get this wrong.
    items = [Item(1000, 333, 1), Item(3, 1, 1)]
    inst = normalize_knapsack(items, 10)
    assert inst.items[0].weight == 3
    assert inst.items[1].weight == 1000


def test_normalize_ties_weight_ascending():
    items = [Item(4, 8, 1), Item(2, 4, 1), Item(3, 6, 1)]
    inst = normalize_knapsack(items, 10)
    assert [it.weight for it in inst.items] == [2, 3, 4]


def test_normalize_rejects_oversized_aggregates():
    with pytest.raises(InstanceError):
        normalize_knapsack([Item(1, 1, 1 << 41)], 5)
    with pytest.raises(InstanceError):
        normalize_knapsack([Item(1, 1, 1)], -1)


def test_normalize_subset_sum_merges_duplicates():
    inst = normalize_subset_sum([(5, 2), (3, 1), (5, 4)], 20)
    assert inst.pairs == ((5, 6), (3, 1))


def test_prefix_greedy_stops_at_break():
    inst = SubsetSumInstance(((4, 3), (5, 2), (2, 5)), 15)
    g = subset_sum_prefix_greedy(inst)
    # 3 copies of 4 fit, then only 0 of 5 would leave rem 3 < 5: break there.
    assert g == (3, 0, 0)


def test_clamp_preserves_decision_bounds():
    inst = SubsetSumInstance(((2, 100), (3, 50)), 180)
    reduced, offset = clamp_multiplicities(inst)
    assert all(u <= 4 * inst.w_max for _, u in reduced.pairs)
    assert offset.fixed_weight + reduced.target == inst.target
    # every reduced count range maps into the original one
    for (w, u), lo in zip(inst.pairs, offset.lower_bounds):
        assert 0 <= lo <= u
