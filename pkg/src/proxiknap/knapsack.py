"""Bounded knapsack solver built on greedy proximity and truncated convolution.

Starting from a maximal prefix solution, an optimal solution is expressed as
"delete some copies taken before the break item, add some copies from the
break item on".  Exact-weight profit profiles for deletions and additions
are built by convolving one equal-weight class at a time, with arrays
truncated according to the per-class exchange bounds of a weight partition.
With the baseline partition the truncation bound is unconditional; the
tighter partitions are re-checked by a verification loop that doubles their
bounds until the answer stabilizes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .conv import (
    NEG_THRESHOLD,
    concave_prefix,
    convolve_with_choices,
    prefix_argmaxima,
)
from .greedy import (
    GreedySolution,
    PartitionConfig,
    WeightGroup,
    compute_partition,
    greedy_prefix,
    unconditional_bound,
)
from .model import Item, KnapsackInstance, normalize_knapsack


@dataclass
class SolveStats:
    """Work counters, reported by the benchmark CLI."""

    conv_cells: int = 0
    passes: int = 0


@dataclass(frozen=True)
class SolverConfig:
    scheme: str = "three-way"
    partition: PartitionConfig = field(default_factory=PartitionConfig)
    verify: bool = True


@dataclass(frozen=True)
class KnapsackResult:
    value: int
    counts: tuple[int, ...]  # copies per input item
    stats: SolveStats


def solve_knapsack(
    items: Sequence[Item], capacity: int, config: SolverConfig | None = None
) -> KnapsackResult:
    """Solve bounded knapsack; returns the optimum and a witness."""
    if config is None:
        config = SolverConfig()
    stats = SolveStats()
    items = list(items)
    inst = normalize_knapsack(items, capacity)
    order = sorted(
        range(len(items)),
        key=lambda i: (-items[i].efficiency, items[i].weight, i),
    )
    sol = greedy_prefix(inst)
    value, sol_counts = _solve_sorted(sol, config, stats)
    norm_counts = [0] * inst.n
    for c, parent in zip(sol_counts, sol.parents):
        norm_counts[parent] += c
    input_counts = [0] * len(items)
    for pos, orig in enumerate(order):
        input_counts[orig] = norm_counts[pos]
    return KnapsackResult(value, tuple(input_counts), stats)


def _solve_sorted(
    sol: GreedySolution, config: SolverConfig, stats: SolveStats
) -> tuple[int, tuple[int, ...]]:
    if sol.break_index >= sol.instance.n:
        # Everything fits; the greedy solution is optimal.
        stats.passes += 1
        return sol.profit, sol.counts
    groups = compute_partition(sol, config.scheme, config.partition)
    cap = unconditional_bound(sol.instance.w_max, sol.instance.capacity)
    value, counts = solve_with_partition(sol, groups, stats)
    if not config.verify:
        return value, counts
    while any(g.bound < cap for g in groups):
        groups = tuple(
            WeightGroup(g.weights, min(2 * g.bound, cap)) for g in groups
        )
        groups = tuple(sorted(groups, key=lambda g: g.bound))
        new_value, new_counts = solve_with_partition(sol, groups, stats)
        if new_value == value:
            return new_value, new_counts
        value, counts = new_value, new_counts
    return value, counts


def solve_with_partition(
    sol: GreedySolution,
    groups: tuple[WeightGroup, ...],
    stats: SolveStats,
) -> tuple[int, tuple[int, ...]]:
    """One solve pass with fixed per-group truncation bounds."""
    stats.passes += 1
    inst = sol.instance
    b = sol.break_index
    base_profit = sol.profit
    slack = sol.slack

    # Deletion side: maximize negated profit, i.e. delete cheapest copies.
    minus_classes = _classes(inst.items[:b], range(b), negate=True)
    # Addition side: maximize profit of copies taken from the break item on.
    plus_classes = _classes(inst.items[b:], range(b, inst.n), negate=False)

    cap_minus = min(_array_cap(groups), sol.used_weight)
    cap_plus = min(_array_cap(groups), inst.capacity)
    x_minus, minus_steps = _convolve_side(
        minus_classes, groups, cap_minus, stats
    )
    x_plus, plus_steps = _convolve_side(plus_classes, groups, cap_plus, stats)

    le_len = len(x_minus) - 1 + slack
    x_plus_le, x_plus_arg = prefix_argmaxima(x_plus, extend_to=le_len)

    best_val = NEG_THRESHOLD
    best_t = 0
    for t_del, neg_p in enumerate(x_minus):
        if neg_p <= NEG_THRESHOLD:
            continue
        v = base_profit + neg_p + x_plus_le[t_del + slack]
        if v > best_val:
            best_val, best_t = v, t_del

    counts = list(sol.counts)
    for step_w, c, copy_order in _walk(minus_steps, best_t):
        _distribute(counts, copy_order, c, sign=-1)
    add_idx = x_plus_arg[best_t + slack]
    for step_w, c, copy_order in _walk(plus_steps, add_idx):
        _distribute(counts, copy_order, c, sign=+1)
    return best_val, tuple(counts)


def _array_cap(groups: tuple[WeightGroup, ...]) -> int:
    if not groups:
        return 0
    return len(groups) * groups[-1].bound


def _classes(items, indices, negate: bool):
    """Group copies by weight: weight -> list of (profit, item_idx, mult).

    The list is ordered the way copies are consumed: cheapest first when
    deleting (negate=True), most profitable first when adding.
    """
    by_w: dict[int, list[tuple[int, int, int]]] = {}
    for idx, it in zip(indices, items):
        p = -it.profit if negate else it.profit
        by_w.setdefault(it.weight, []).append((p, idx, it.multiplicity))
    for w in by_w:
        by_w[w].sort(key=lambda t: (-t[0], t[1]))
    return by_w


def _convolve_side(classes, groups, cap_side, stats):
    x = [0]
    steps: list[tuple[int, list[int], list[tuple[int, int, int]]]] = []
    for j, grp in enumerate(groups, start=1):
        limit = min(j * grp.bound, cap_side)
        for w in sorted(grp.weights):
            order = classes.get(w)
            if not order:
                continue
            prefix = concave_prefix(
                [(p, mult) for p, _, mult in order], limit // w if w else 0
            )
            x, choice = convolve_with_choices(x, prefix, w, limit)
            stats.conv_cells += len(x)
            steps.append((w, choice, order))
    return x, steps


def _walk(steps, idx: int):
    """Recover per-class copy counts from recorded choice arrays."""
    used = []
    for w, choice, order in reversed(steps):
        c = choice[idx] if idx < len(choice) else 0
        used.append((w, c, order))
        idx -= c * w
    if idx != 0:
        raise AssertionError("witness walk did not return to the origin")
    return reversed(used)


def _distribute(counts: list[int], copy_order, c: int, sign: int) -> None:
    for _, item_idx, mult in copy_order:
        if c <= 0:
            break
        take = min(c, mult)
        counts[item_idx] += sign * take
        c -= take
    if c > 0:
        raise AssertionError("witness distribution exceeded class capacity")
