"""Deterministic instance generators for benchmarks and tests.

Every family is seeded by the string ``"{seed}:{family}:{index}"`` so a
given (seed, family, index) triple always produces the same instance, on
any platform.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .model import Item

KNAPSACK_FAMILIES = (
    "uniform",
    "wmax-eq-n",
    "delta-adversarial",
)
SUBSETSUM_FAMILIES = (
    "uniform",
    "dense-weights",
    "sparse-weights",
)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str  # "knapsack" | "subsetsum"
    family: str
    n: int
    w_max: int
    seed: int
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("knapsack", "subsetsum"):
            raise ValueError(f"unknown kind {self.kind!r}")
        families = (
            KNAPSACK_FAMILIES if self.kind == "knapsack" else SUBSETSUM_FAMILIES
        )
        if self.family not in families:
            raise ValueError(
                f"unknown {self.kind} family {self.family!r}; "
                f"expected one of {families}"
            )
        if self.n < 1 or self.w_max < 1:
            raise ValueError("n and w_max must be >= 1")

    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}:{self.family}:{self.index}")


def generate_knapsack(spec: GeneratorSpec) -> tuple[list[Item], int]:
    """Produce (items, capacity) for a knapsack family."""
    if spec.kind != "knapsack":
        raise ValueError("spec is not a knapsack spec")
    rng = spec.rng()
    if spec.family == "uniform":
        items = [
            Item(
                rng.randint(1, spec.w_max),
                rng.randint(0, spec.w_max),
                rng.randint(1, 4),
            )
            for _ in range(spec.n)
        ]
    elif spec.family == "wmax-eq-n":
        # Weight scale tied to item count; capacity around n^2 keeps the
        # greedy break item in the middle of the instance.
        items = [
            Item(
                rng.randint(max(1, spec.w_max // 2), spec.w_max),
                rng.randint(1, spec.w_max),
                rng.randint(1, 3),
            )
            for _ in range(spec.n)
        ]
    else:  # delta-adversarial
        return _delta_adversarial(spec, rng)
    total = sum(it.weight * it.multiplicity for it in items)
    capacity = rng.randint(1, max(total, 1))
    return items, capacity


def _delta_adversarial(
    spec: GeneratorSpec, rng: random.Random
) -> tuple[list[Item], int]:
    """Instances where the optimum swaps many greedy copies.

    Band A items have weight w and just-above-proportional profit, band B
    items weight w - 1 at exactly proportional profit.  A capacity just
    below a multiple of w forces the optimum to trade A copies for B
    copies, so optimal solutions sit far from the greedy prefix.
    """
    w = max(2, min(spec.w_max, 2 + rng.randint(0, spec.w_max - 2)))
    q = max(2, spec.n // 2)
    scale = spec.w_max
    band_a = Item(w, w * scale + 1, q)
    band_b = Item(w - 1, (w - 1) * scale, q + 2)
    items = [band_a, band_b]
    for _ in range(max(0, spec.n - 2)):
        wf = rng.randint(1, spec.w_max)
        items.append(Item(wf, rng.randint(0, wf * scale // 2), rng.randint(1, 2)))
    s = max(1, (w - 1) // 2)
    capacity = q * w - s
    return items, capacity


def generate_subset_sum(
    spec: GeneratorSpec,
) -> tuple[list[tuple[int, int]], int]:
    """Produce (pairs, target) for a subset-sum family."""
    if spec.kind != "subsetsum":
        raise ValueError("spec is not a subset-sum spec")
    rng = spec.rng()
    if spec.family == "uniform":
        pairs = [
            (rng.randint(1, spec.w_max), rng.randint(1, 4))
            for _ in range(spec.n)
        ]
    elif spec.family == "dense-weights":
        # Many distinct weights spread over the full range.
        weights = rng.sample(
            range(1, spec.w_max + 1), min(spec.n, spec.w_max)
        )
        pairs = [(w, rng.randint(1, 3)) for w in weights]
    else:  # sparse-weights
        distinct = max(1, min(spec.n, max(2, spec.w_max // 8)))
        weights = rng.sample(range(1, spec.w_max + 1), distinct)
        pairs = [(w, rng.randint(1, 6 * spec.w_max)) for w in weights]
    total = sum(w * u for w, u in pairs)
    target = rng.randint(0, total)
    return pairs, target
