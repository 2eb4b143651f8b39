"""Canonical domain types and instance normalization.

Items carry integer weight, profit and multiplicity.  Knapsack instances are
kept sorted by exact-rational efficiency (profit/weight compared via
fractions, never floats); subset-sum instances keep one entry per distinct
weight.  The multiplicity clamp reduces every subset-sum multiplicity to at
most four times the maximum weight while preserving the decision answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InstanceError

# Ingestion bound on aggregate quantities.  Keeps every intermediate value
# (including sentinel arithmetic in the convolution kernels) well inside
# signed 64-bit range.
MAX_AGGREGATE = 1 << 40


@dataclass(frozen=True)
class Item:
    """A weighted item with a copy budget."""

    weight: int
    profit: int
    multiplicity: int

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise InstanceError(f"item weight must be >= 1, got {self.weight}")
        if self.profit < 0:
            raise InstanceError(f"item profit must be >= 0, got {self.profit}")
        if self.multiplicity < 1:
            raise InstanceError(
                f"item multiplicity must be >= 1, got {self.multiplicity}"
            )

    @property
    def efficiency(self) -> Fraction:
        return Fraction(self.profit, self.weight)


@dataclass(frozen=True)
class KnapsackInstance:
    items: tuple[Item, ...]
    capacity: int

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def w_max(self) -> int:
        return max((it.weight for it in self.items), default=0)

    @property
    def p_max(self) -> int:
        return max((it.profit for it in self.items), default=0)

    @property
    def total_weight(self) -> int:
        return sum(it.weight * it.multiplicity for it in self.items)

    @property
    def total_profit(self) -> int:
        return sum(it.profit * it.multiplicity for it in self.items)

    def distinct_weights(self) -> set[int]:
        return {it.weight for it in self.items}


@dataclass(frozen=True)
class SubsetSumInstance:
    pairs: tuple[tuple[int, int], ...]  # (weight, multiplicity), weights distinct
    target: int

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def w_max(self) -> int:
        return max((w for w, _ in self.pairs), default=0)

    @property
    def total_weight(self) -> int:
        return sum(w * u for w, u in self.pairs)


@dataclass(frozen=True)
class ReductionOffset:
    """Copies fixed in by the multiplicity clamp."""

    fixed_weight: int
    fixed_profit: int
    lower_bounds: tuple[int, ...]


def normalize_knapsack(raw: Iterable[Item], t: int) -> KnapsackInstance:
    """Sort items into the canonical efficiency-descending order.

    The total order is (efficiency desc, weight asc, original index); the
    break-item-relative tie rule is applied later because it depends on the
    break item.  An empty item list yields a valid empty instance.
    """
    if t < 0:
        raise InstanceError(f"capacity must be >= 0, got {t}")
    items = list(raw)
    _check_knapsack_magnitudes(items, t)
    order = sorted(
        range(len(items)),
        key=lambda i: (-items[i].efficiency, items[i].weight, i),
    )
    return KnapsackInstance(tuple(items[i] for i in order), t)


def normalize_subset_sum(
    raw: Iterable[tuple[int, int]], t: int
) -> SubsetSumInstance:
    """Merge duplicate weights, summing multiplicities."""
    merged: dict[int, int] = {}
    first_seen: dict[int, int] = {}
    for pos, (w, u) in enumerate(raw):
        if w < 1:
            raise InstanceError(f"weight must be >= 1, got {w}")
        if u < 1:
            raise InstanceError(f"multiplicity must be >= 1, got {u}")
        if w not in merged:
            first_seen[w] = pos
        merged[w] = merged.get(w, 0) + u
    pairs = tuple(
        (w, merged[w]) for w in sorted(merged, key=lambda w: first_seen[w])
    )
    total = sum(w * u for w, u in pairs)
    if total > MAX_AGGREGATE or abs(t) > MAX_AGGREGATE:
        raise InstanceError("instance magnitudes exceed the supported range")
    return SubsetSumInstance(pairs, t)


def subset_sum_prefix_greedy(inst: SubsetSumInstance) -> tuple[int, ...]:
    """Maximal prefix solution in input order (all efficiencies equal 1)."""
    counts = []
    rem = max(inst.target, 0)
    stopped = False
    for w, u in inst.pairs:
        if stopped:
            counts.append(0)
            continue
        take = min(u, rem // w)
        counts.append(take)
        rem -= take * w
        if take < u:
            stopped = True
    return tuple(counts)


def clamp_multiplicities(
    inst: SubsetSumInstance, g: Optional[Sequence[int]] = None
) -> tuple[SubsetSumInstance, ReductionOffset]:
    """Clamp every multiplicity to at most 4*w_max.

    ``g`` is a maximal prefix solution (computed here when omitted).  Copies
    below g_i - 2*w_max are forced in: their weight moves into the offset and
    out of the target.  The decision answer of the reduced instance equals
    the original's.
    """
    if g is None:
        g = subset_sum_prefix_greedy(inst)
    if len(g) != inst.n:
        raise InstanceError("greedy solution length does not match instance")
    wmax = inst.w_max
    lower = []
    new_pairs = []
    fixed_w = 0
    for (w, u), gi in zip(inst.pairs, g):
        lo = max(gi - 2 * wmax, 0)
        hi = min(u, gi + 2 * wmax)
        lower.append(lo)
        fixed_w += lo * w
        if hi - lo >= 1:
            new_pairs.append((w, hi - lo))
    new_target = inst.target - fixed_w
    offset = ReductionOffset(fixed_w, 0, tuple(lower))
    if new_target < 0:
        raise InstanceError("infeasible reduction: fixed weight exceeds target")
    return SubsetSumInstance(tuple(new_pairs), new_target), offset


def _check_knapsack_magnitudes(items: list[Item], t: int) -> None:
    n = len(items)
    if n == 0:
        return
    w_max = max(it.weight for it in items)
    p_max = max(it.profit for it in items)
    tot_w = sum(it.weight * it.multiplicity for it in items)
    tot_p = sum(it.profit * it.multiplicity for it in items)
    if (
        n * w_max * p_max > MAX_AGGREGATE
        or tot_w > MAX_AGGREGATE
        or tot_p > MAX_AGGREGATE
        or t > MAX_AGGREGATE
    ):
        raise InstanceError("instance magnitudes exceed the supported range")
