"""Independent reference solvers used to cross-validate the fast paths.

These oracles deliberately share no code with the solver modules: plain
dynamic programs (vectorized with numpy) and brute-force enumeration, with
explicit resource caps so a misconfigured test fails loudly instead of
hanging.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ResourceLimitError
from .model import KnapsackInstance, SubsetSumInstance
from .sumset import AttainableSet

DEFAULT_CELL_CAP = 10_000_000


def _cell_cap() -> int:
    return int(os.environ.get("PROXIKNAP_ORACLE_CAP", DEFAULT_CELL_CAP))


@dataclass(frozen=True)
class OptResult:
    """An optimal solution: total profit plus copies taken per item."""

    value: int
    counts: tuple[int, ...]

    def weight(self, inst: KnapsackInstance) -> int:
        return sum(c * it.weight for c, it in zip(self.counts, inst.items))


def dp_knapsack(inst: KnapsackInstance) -> OptResult:
    """Classic 0-1 dynamic program over binary-split copies.

    Each item's multiplicity is split into power-of-two pieces so the DP is
    a plain 0-1 pass; take flags per piece give back an optimal witness.
    """
    t = inst.capacity
    pieces: list[tuple[int, int, int, int]] = []  # (weight, profit, item, copies)
    for idx, it in enumerate(inst.items):
        u = it.multiplicity
        chunk = 1
        while u > 0:
            c = min(chunk, u)
            pieces.append((it.weight * c, it.profit * c, idx, c))
            u -= c
            chunk *= 2
    if len(pieces) * (t + 1) > _cell_cap():
        raise ResourceLimitError(
            f"dp_knapsack needs {len(pieces) * (t + 1)} cells, cap {_cell_cap()}"
        )
    dp = np.zeros(t + 1, dtype=np.int64)
    takes: list[np.ndarray] = []
    for pw, pp, _, _ in pieces:
        if pw > t:
            takes.append(np.zeros(t + 1, dtype=bool))
            continue
        cand = np.full(t + 1, -1, dtype=np.int64)
        cand[pw:] = dp[: t + 1 - pw] + pp
        take = cand > dp
        dp = np.where(take, cand, dp)
        takes.append(take)
    counts = [0] * inst.n
    pos = int(np.argmax(dp))
    for (pw, _, idx, c), take in zip(reversed(pieces), reversed(takes)):
        if take[pos]:
            counts[idx] += c
            pos -= pw
    return OptResult(int(dp.max()), tuple(counts))


def brute_force_knapsack(inst: KnapsackInstance) -> OptResult:
    """Exhaustive enumeration of all copy vectors; tiny instances only."""
    combos = 1
    for it in inst.items:
        combos *= it.multiplicity + 1
        if combos > _cell_cap():
            raise ResourceLimitError("brute force space exceeds the cell cap")
    best_v, best_c = 0, tuple(0 for _ in inst.items)
    ranges = [range(it.multiplicity + 1) for it in inst.items]
    for counts in product(*ranges):
        w = sum(c * it.weight for c, it in zip(counts, inst.items))
        if w > inst.capacity:
            continue
        v = sum(c * it.profit for c, it in zip(counts, inst.items))
        if v > best_v:
            best_v, best_c = v, counts
    return OptResult(best_v, tuple(best_c))


def dp_sums_upto(inst: SubsetSumInstance, cap: int | None = None) -> AttainableSet:
    """All attainable subset sums up to cap, via a shift-or bitset sweep."""
    limit = inst.target if cap is None else cap
    limit = min(limit, inst.total_weight)
    if limit < 0:
        return AttainableSet(1, 0)
    full = (1 << (limit + 1)) - 1
    mask = 1
    for w, u in inst.pairs:
        # Binary-split the multiplicity so each weight costs O(log u) shifts.
        # Chunks whose own weight exceeds the limit can never contribute to a
        # kept sum and are skipped; smaller chunks already cover every count
        # below them.
        rem = u
        chunk = 1
        while rem > 0:
            c = min(chunk, rem)
            step = w * c
            if step <= limit:
                mask = (mask | (mask << step)) & full
            rem -= c
            chunk *= 2
    return AttainableSet(mask, limit)


def subset_sum_decision(inst: SubsetSumInstance) -> bool:
    """Reference decision answer for a bounded subset-sum instance."""
    if inst.target < 0 or inst.target > inst.total_weight:
        return False
    return inst.target in dp_sums_upto(inst)


def min_distance_optimal(
    inst: KnapsackInstance, g: tuple[int, ...]
) -> OptResult:
    """Optimal solution minimizing the copy-count distance to g.

    Among all maximum-profit solutions, returns one minimizing
    sum_i |g_i - z_i|.  Implemented as a single DP on the composite
    objective profit * K - distance with K large enough that profit always
    dominates.
    """
    if len(g) != inst.n:
        raise ValueError("greedy vector length does not match instance")
    t = inst.capacity
    total_u = sum(it.multiplicity for it in inst.items)
    K = 2 * total_u + 3
    cells = sum(it.multiplicity for it in inst.items) * (t + 1)
    if cells > _cell_cap():
        raise ResourceLimitError(
            f"min_distance_optimal needs {cells} cells, cap {_cell_cap()}"
        )
    NEG = np.int64(-(1 << 62))
    dp = np.full(t + 1, NEG, dtype=np.int64)
    dp[0] = 0
    choices: list[np.ndarray] = []
    for it, gi in zip(inst.items, g):
        new = np.full(t + 1, NEG, dtype=np.int64)
        ch = np.zeros(t + 1, dtype=np.int64)
        for c in range(min(it.multiplicity, t // it.weight) + 1):
            gain = c * it.profit * K - abs(gi - c)
            shift = c * it.weight
            cand = np.full(t + 1, NEG, dtype=np.int64)
            src = dp[: t + 1 - shift]
            cand[shift:] = np.where(src > NEG, src + gain, NEG)
            upd = cand > new
            new = np.where(upd, cand, new)
            ch = np.where(upd, c, ch)
        dp = new
        choices.append(ch)
    pos = int(np.argmax(dp))
    counts = [0] * inst.n
    for i in range(inst.n - 1, -1, -1):
        c = int(choices[i][pos])
        counts[i] = c
        pos -= c * inst.items[i].weight
    value = sum(c * it.profit for c, it in zip(counts, inst.items))
    return OptResult(value, tuple(counts))
