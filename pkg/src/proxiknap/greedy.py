"""Greedy prefix solutions and weight-class partitions.

The knapsack solver starts from a maximal prefix solution: items are taken
whole in efficiency order until the first item that no longer fits (the
break item), of which as many copies as possible are taken.  The partially
taken break item is split into a fully taken pseudo-item and a residual
item so that downstream code can assume the break item contributes zero.

Partitions group the distinct weights into classes with per-class bounds on
how much total weight an optimal solution can exchange within the class;
tighter bounds let the convolution arrays be truncated harder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionError
from .model import Item, KnapsackInstance, SubsetSumInstance


def log_ceil(w: int) -> int:
    """Ceiling of log2(w), floored at 1."""
    return max(1, math.ceil(math.log2(max(w, 2))))


@dataclass(frozen=True)
class PartitionConfig:
    """Constants scaling the partition thresholds and exchange bounds."""

    c_a: float = 1.0
    c_b: float = 1.0

    def __post_init__(self) -> None:
        if self.c_a <= 0 or self.c_b <= 0:
            raise ValueError("partition constants must be positive")


@dataclass(frozen=True)
class GreedySolution:
    """A maximal prefix solution with the break item split off.

    ``counts[i]`` is the number of copies taken of ``instance.items[i]``;
    it equals the full multiplicity for i < break_index and zero from
    break_index on.  ``parents[i]`` maps back to the index in the instance
    the solution was built from (the split halves share a parent).
    ``break_index == instance.n`` when every item fits.
    """

    instance: KnapsackInstance
    counts: tuple[int, ...]
    break_index: int
    parents: tuple[int, ...]

    @property
    def profit(self) -> int:
        return sum(c * it.profit for c, it in zip(self.counts, self.instance.items))

    @property
    def used_weight(self) -> int:
        return sum(c * it.weight for c, it in zip(self.counts, self.instance.items))

    @property
    def slack(self) -> int:
        return self.instance.capacity - self.used_weight


def greedy_prefix(inst: KnapsackInstance) -> GreedySolution:
    """Build the maximal prefix solution of an efficiency-sorted instance."""
    items = list(inst.items)
    rem = inst.capacity
    counts: list[int] = []
    parents: list[int] = []
    break_index = inst.n
    for i, it in enumerate(items):
        full = it.weight * it.multiplicity
        if full <= rem:
            counts.append(it.multiplicity)
            parents.append(i)
            rem -= full
            continue
        take = rem // it.weight
        if take > 0:
            # Split so the residual break item has zero taken copies.
            items[i : i + 1] = [
                Item(it.weight, it.profit, take),
                Item(it.weight, it.profit, it.multiplicity - take),
            ]
            counts.extend([take, 0])
            parents.extend([i, i])
            break_index = i + 1
            parents.extend(range(i + 1, inst.n))
        else:
            counts.append(0)
            parents.append(i)
            break_index = i
            parents.extend(range(i + 1, inst.n))
        counts.extend([0] * (inst.n - i - 1))
        break
    items, counts, parents = _order_ties_after_break(
        items, counts, parents, break_index
    )
    return GreedySolution(
        KnapsackInstance(tuple(items), inst.capacity),
        tuple(counts),
        break_index,
        tuple(parents),
    )


def _order_ties_after_break(
    items: list[Item], counts: list[int], parents: list[int], b: int
) -> tuple[list[Item], list[int], list[int]]:
    # Canonical tie order: among equal-efficiency items, weights ascend
    # before the break item (already true after normalization) and descend
    # after it.  Only runs strictly after b need reordering.
    i = b + 1
    while i < len(items):
        j = i
        eff = items[i].efficiency
        while j < len(items) and items[j].efficiency == eff:
            j += 1
        if j - i > 1:
            order = sorted(range(i, j), key=lambda x: (-items[x].weight, x))
            items[i:j] = [items[x] for x in order]
            counts[i:j] = [counts[x] for x in order]
            parents[i:j] = [parents[x] for x in order]
        i = j
    return items, counts, parents


@dataclass(frozen=True)
class WeightGroup:
    """A class of distinct weights with an exchange-weight bound."""

    weights: frozenset[int]
    bound: int


def unconditional_bound(w_max: int, capacity: int) -> int:
    """Exchange bound valid for any weight class."""
    if w_max == 0:
        return 0
    return min(2 * w_max * w_max, capacity)


SCHEMES = ("baseline", "two-way", "three-way")


def compute_partition(
    sol: GreedySolution, scheme: str, cfg: PartitionConfig | None = None
) -> tuple[WeightGroup, ...]:
    """Partition the distinct weights, sorted by ascending exchange bound."""
    if cfg is None:
        cfg = PartitionConfig()
    if scheme not in SCHEMES:
        raise ValueError(f"unknown partition scheme {scheme!r}")
    inst = sol.instance
    all_weights = inst.distinct_weights()
    cap = unconditional_bound(inst.w_max, inst.capacity)
    if not all_weights:
        return ()
    if scheme == "baseline":
        return (WeightGroup(frozenset(all_weights), cap),)

    w = inst.w_max
    lg = log_ceil(w)
    b = sol.break_index
    items = inst.items
    if scheme == "two-way":
        t_outer = math.ceil(2 * cfg.c_a * math.sqrt(w) * lg)
        far_bound = math.ceil(4 * cfg.c_b * w**1.5)
    else:
        t_outer = math.ceil(2 * cfg.c_a * w**0.6 * lg)
        far_bound = math.ceil(4 * cfg.c_b * w**1.4)
    near = _scan_distinct(items, range(b - 1, -1, -1), t_outer)
    near |= _scan_distinct(items, range(b, len(items)), t_outer)
    far = all_weights - near
    if scheme == "two-way":
        groups = [
            WeightGroup(frozenset(far), min(far_bound, cap)),
            WeightGroup(frozenset(near), cap),
        ]
        return tuple(g for g in sorted(groups, key=lambda g: g.bound) if g.weights)

    freq_thr = math.ceil(2 * w**0.2)
    t_inner = math.ceil(2 * cfg.c_a * w**0.4 * lg * lg)
    plus = _scan_frequent(items, range(b - 1, -1, -1), near, freq_thr, t_inner)
    plus |= _scan_frequent(items, range(b, len(items)), near, freq_thr, t_inner)
    mid = near - plus
    mid_bound = math.ceil(8 * cfg.c_b * w**1.8)
    groups = [
        WeightGroup(frozenset(far), min(far_bound, cap)),
        WeightGroup(frozenset(mid), min(mid_bound, cap)),
        WeightGroup(frozenset(plus), cap),
    ]
    return tuple(g for g in sorted(groups, key=lambda g: g.bound) if g.weights)


def _scan_distinct(items, order, limit: int) -> set[int]:
    # Extend from the break item until one more item would push the number
    # of distinct weights past the limit.
    seen: set[int] = set()
    for i in order:
        w = items[i].weight
        if w not in seen and len(seen) >= limit:
            break
        seen.add(w)
    return seen


def _scan_frequent(items, order, pool: set[int], freq_thr: int, limit: int) -> set[int]:
    # Same scan, but a weight only counts once it has accumulated freq_thr
    # copies among the scanned items.  Weights outside the pool are ignored.
    count: dict[int, int] = {}
    freq: set[int] = set()
    for i in order:
        it = items[i]
        w = it.weight
        if w not in pool:
            continue
        new_c = count.get(w, 0) + it.multiplicity
        if w not in freq and new_c >= freq_thr and len(freq) >= limit:
            break
        count[w] = new_c
        if new_c >= freq_thr:
            freq.add(w)
    return freq


def dense_greedy(
    inst: SubsetSumInstance, c_a: float = 1.0, strict: bool = True
) -> tuple[tuple[int, ...], set[int], set[int]]:
    """Maximal subset-sum solution anchored at the weight extremes.

    One copy of each of the largest ``thr`` distinct weights is selected
    up front, one copy of each of the smallest ``thr`` weights is reserved
    and never selected, then remaining copies fill greedily in input order.
    Returns (counts, selected_weights, reserved_weights).
    """
    w = inst.w_max
    thr = math.ceil(2 * c_a * math.sqrt(w) * log_ceil(w))
    ws = sorted({p[0] for p in inst.pairs})
    if len(ws) < 2 * thr:
        if strict:
            raise PreconditionError(
                f"need at least {2 * thr} distinct weights, got {len(ws)}"
            )
        thr = len(ws) // 2
    reserved_w = set(ws[:thr])
    selected_w = set(ws[len(ws) - thr :])
    counts = [0] * inst.n
    rem = inst.target
    for i, (wi, _) in enumerate(inst.pairs):
        if wi in selected_w:
            if wi > rem:
                if strict:
                    raise PreconditionError(
                        "anchored copies do not fit in the target"
                    )
                continue
            counts[i] = 1
            rem -= wi
    for i, (wi, ui) in enumerate(inst.pairs):
        avail = ui - counts[i] - (1 if wi in reserved_w else 0)
        extra = min(avail, rem // wi)
        if extra > 0:
            counts[i] += extra
            rem -= extra * wi
    return tuple(counts), selected_w, reserved_w
