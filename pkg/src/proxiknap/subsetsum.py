"""Bounded subset-sum decision solvers.

Three strategies, picked by target size and weight diversity:

- direct: bitset sweep over all sums up to the target, good for small targets;
- layered: clamp multiplicities via greedy proximity, bundle copies into
  power-of-two groups, and decide membership in a base-2 combination of the
  per-layer sumsets;
- dense: anchor a maximal solution at the weight extremes, enumerate only
  sums of a bounded volume of deletions and additions around it, and match
  the target by a shifted intersection of the two sum sets.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .greedy import dense_greedy, log_ceil
from .model import (
    SubsetSumInstance,
    clamp_multiplicities,
    normalize_subset_sum,
)
from .sumset import (
    AttainableSet,
    SumsetStats,
    _conv_masks,
    kary_membership,
    multi_sumset,
)

COLOR_CODING_MAX_K = 8


@dataclass(frozen=True)
class SubsetSumConfig:
    c_a: float = 1.0
    c_b: float = 1.0
    algo: str = "auto"  # auto | direct | layered | dense
    sums_backend: str = "exact"  # exact | randomized
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.algo not in ("auto", "direct", "layered", "dense"):
            raise ValueError(f"unknown algo {self.algo!r}")
        if self.sums_backend not in ("exact", "randomized"):
            raise ValueError(f"unknown backend {self.sums_backend!r}")


@dataclass(frozen=True)
class SubsetSumResult:
    answer: bool
    algo: str
    stats: SumsetStats


def solve_subset_sum(
    pairs: Sequence[tuple[int, int]],
    target: int,
    config: SubsetSumConfig | None = None,
) -> SubsetSumResult:
    """Decide whether some copy selection sums exactly to the target."""
    if config is None:
        config = SubsetSumConfig()
    stats = SumsetStats()
    inst = normalize_subset_sum(pairs, target)
    sigma = inst.total_weight
    t = inst.target
    if t < 0 or t > sigma:
        return SubsetSumResult(False, "trivial", stats)
    if t == 0 or t == sigma:
        return SubsetSumResult(True, "trivial", stats)
    if t > sigma // 2:
        # Selecting weight t is the same as leaving out weight sigma - t.
        t = sigma - t
        inst = SubsetSumInstance(inst.pairs, t)

    w = inst.w_max
    lg = log_ceil(w)
    algo = config.algo
    if algo == "auto":
        if t < math.ceil(2 * config.c_a * w**1.5 * lg):
            algo = "direct"
        else:
            # The dense path needs enough distinct weights for its anchors,
            # the anchored copies must fit the target, and the reserved
            # copies must leave enough weight to reach it.
            thr = math.ceil(2 * config.c_a * math.sqrt(w) * lg)
            ws = sorted(wi for wi, _ in inst.pairs)
            if (
                len(ws) >= 2 * thr
                and sum(ws[-thr:]) <= t
                and sigma - sum(ws[:thr]) >= t
            ):
                algo = "dense"
            else:
                algo = "layered"

    if algo == "direct":
        full = bounded_sums_upto(inst.pairs, t, "exact")
        stats.record(full.mask)
        return SubsetSumResult(t in full, "direct", stats)
    if algo == "layered":
        return SubsetSumResult(solve_ss_layered(inst, stats), "layered", stats)
    rng = random.Random(config.seed)
    return SubsetSumResult(
        solve_ss_dense(inst, config, stats, rng), "dense", stats
    )


def binary_bundle(u: int) -> tuple[int, ...]:
    """Digits d with u = sum d[i] * 2^i, d[i] in [2, 4) except the last."""
    if u < 1:
        raise ValueError("multiplicity must be >= 1")
    digits = []
    while u >= 4:
        d = 2 + u % 2
        digits.append(d)
        u = (u - d) // 2
    digits.append(u)
    return tuple(digits)


def decompose_eta(eta: int, digits: Sequence[int]) -> tuple[int, ...]:
    """Split a copy count along bundle digits: eta = sum out[i] * 2^i.

    Each out[i] stays within digits[i].  Requires 0 <= eta <= the value the
    digits encode.
    """
    total = sum(d << i for i, d in enumerate(digits))
    if not 0 <= eta <= total:
        raise ValueError("eta outside the encoded range")
    out = []
    for d in digits[:-1]:
        r = eta % 2
        e0 = r + 2 if (r + 2 <= d and r + 2 <= eta) else r
        out.append(e0)
        eta = (eta - e0) // 2
    out.append(eta)
    if eta > digits[-1]:
        raise AssertionError("digit decomposition overflowed the last digit")
    return tuple(out)


def build_layers(inst: SubsetSumInstance) -> list[list[tuple[int, int]]]:
    """Bundle every weight's multiplicity; layer i holds (weight, d[i])."""
    n_layers = 0
    bundled = []
    for w, u in inst.pairs:
        digits = binary_bundle(u)
        bundled.append((w, digits))
        n_layers = max(n_layers, len(digits))
    layers: list[list[tuple[int, int]]] = [[] for _ in range(n_layers)]
    for w, digits in bundled:
        for i, d in enumerate(digits):
            if d > 0:
                layers[i].append((w, d))
    return layers


def layer_sumsets(
    layers: list[list[tuple[int, int]]],
    target: int,
    stats: Optional[SumsetStats] = None,
) -> list[AttainableSet]:
    """Per-layer attainable sums, capped by what the layer can contribute."""
    sets = []
    for i, layer in enumerate(layers):
        cap = min(sum(w * d for w, d in layer), target >> i)
        cap = max(cap, 0)
        parts = [
            AttainableSet.from_elements(range(0, (d + 1) * w, w), cap)
            for w, d in layer
        ]
        sets.append(multi_sumset(parts, cap, stats))
    return sets


def solve_ss_layered(
    inst: SubsetSumInstance, stats: Optional[SumsetStats] = None
) -> bool:
    """Decide membership via multiplicity clamping and base-2 layering."""
    reduced, _ = clamp_multiplicities(inst)
    t = reduced.target
    if t == 0:
        return True
    if t > reduced.total_weight:
        return False
    layers = build_layers(reduced)
    sets = layer_sumsets(layers, t, stats)
    return kary_membership(sets, 2, t, stats)


def solve_ss_dense(
    inst: SubsetSumInstance,
    config: SubsetSumConfig,
    stats: Optional[SumsetStats] = None,
    rng: Optional[random.Random] = None,
) -> bool:
    """Decide membership around an anchored maximal solution.

    Requires many distinct weights and a target between the anchored
    prefix's reach and half the total weight; the dispatcher guarantees
    both.
    """
    if rng is None:
        rng = random.Random(config.seed)
    counts, _, _ = dense_greedy(inst, config.c_a, strict=False)
    t0 = sum(c * w for c, (w, _) in zip(counts, inst.pairs))
    w = inst.w_max
    exchange = math.ceil(
        (4 * config.c_a + 2 * config.c_b) * w**1.5 * log_ceil(w)
    )
    t_prime = min(exchange, max(t0, inst.total_weight - t0))
    g_minus = [(wi, c) for c, (wi, _) in zip(counts, inst.pairs) if c > 0]
    g_plus = [
        (wi, ui - c) for c, (wi, ui) in zip(counts, inst.pairs) if ui - c > 0
    ]
    s_minus = bounded_sums_upto(g_minus, t_prime, config.sums_backend, rng)
    s_plus = bounded_sums_upto(g_plus, t_prime, config.sums_backend, rng)
    if stats is not None:
        stats.record(s_minus.mask)
        stats.record(s_plus.mask)
    diff = inst.target - t0
    if diff >= 0:
        return ((s_plus.mask >> diff) & s_minus.mask) != 0
    return ((s_minus.mask >> (-diff)) & s_plus.mask) != 0


def bounded_sums_upto(
    pairs: Sequence[tuple[int, int]],
    cap: int,
    backend: str = "exact",
    rng: Optional[random.Random] = None,
) -> AttainableSet:
    """Attainable sums of a bounded multiset, truncated to [0, cap].

    The exact backend is a bitset sweep.  The randomized backend layers
    0-1 pieces by magnitude and color-codes the sparse layers; it never
    reports a non-sum but can miss sums with small probability.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if backend == "exact":
        return _sums_exact(pairs, cap)
    if backend != "randomized":
        raise ValueError(f"unknown backend {backend!r}")
    return _sums_randomized(pairs, cap, rng or random.Random())


def _sums_exact(pairs, cap: int) -> AttainableSet:
    full = (1 << (cap + 1)) - 1
    mask = 1
    for w, u in pairs:
        rem, chunk = u, 1
        while rem > 0:
            c = min(chunk, rem)
            step = w * c
            if step <= cap:
                mask = (mask | (mask << step)) & full
            rem -= c
            chunk *= 2
    return AttainableSet(mask, cap)


def _split_pieces(pairs, cap: int) -> list[int]:
    pieces = []
    for w, u in pairs:
        rem, chunk = u, 1
        while rem > 0:
            c = min(chunk, rem)
            if w * c <= cap:
                pieces.append(w * c)
            rem -= c
            chunk *= 2
    return pieces


def _sums_randomized(pairs, cap: int, rng: random.Random) -> AttainableSet:
    remaining = _split_pieces(pairs, cap)
    mask = 1
    full = (1 << (cap + 1)) - 1
    j = 0
    while remaining:
        k = 2 ** (j + 1)
        lo = cap >> (j + 1)
        if k > COLOR_CODING_MAX_K or lo == 0:
            # Dense tail: small elements are cheap to sweep exactly.
            for p in remaining:
                mask = (mask | (mask << p)) & full
            break
        layer = [p for p in remaining if p > lo]
        remaining = [p for p in remaining if p <= lo]
        if layer:
            # Any subset of this layer summing to at most cap has fewer
            # than k elements.
            lmask = _color_coding(layer, cap, k, rng)
            mask = _conv_masks(mask, lmask, cap) | mask
        j += 1
    return AttainableSet(mask, cap)


def _color_coding(elems: list[int], cap: int, k: int, rng: random.Random) -> int:
    full = (1 << (cap + 1)) - 1
    rounds = math.ceil(math.log2(max(len(elems), 2))) + 3
    out = 1
    n_buckets = k * k
    for _ in range(rounds):
        buckets: list[list[int]] = [[] for _ in range(n_buckets)]
        for e in elems:
            buckets[rng.randrange(n_buckets)].append(e)
        acc = 1
        for bucket in buckets:
            shifted = 0
            for e in bucket:
                shifted |= acc << e
            acc = (acc | shifted) & full
        out |= acc
    return out & full
