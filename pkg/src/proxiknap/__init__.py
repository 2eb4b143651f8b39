"""Bounded knapsack and bounded subset-sum solvers with benchmark tooling."""

from .errors import InstanceError, PreconditionError, ResourceLimitError
from .greedy import GreedySolution, PartitionConfig, WeightGroup, greedy_prefix
from .knapsack import KnapsackResult, SolveStats, SolverConfig, solve_knapsack
from .model import (
    Item,
    KnapsackInstance,
    SubsetSumInstance,
    normalize_knapsack,
    normalize_subset_sum,
)
from .subsetsum import SubsetSumConfig, SubsetSumResult, solve_subset_sum
from .sumset import AttainableSet, kary_membership, multi_sumset, pairwise_sumset

__version__ = "0.1.0"

__all__ = [
    "AttainableSet",
    "GreedySolution",
    "InstanceError",
    "Item",
    "KnapsackInstance",
    "KnapsackResult",
    "PartitionConfig",
    "PreconditionError",
    "ResourceLimitError",
    "SolveStats",
    "SolverConfig",
    "SubsetSumConfig",
    "SubsetSumInstance",
    "SubsetSumResult",
    "WeightGroup",
    "greedy_prefix",
    "kary_membership",
    "multi_sumset",
    "normalize_knapsack",
    "normalize_subset_sum",
    "pairwise_sumset",
    "solve_knapsack",
    "solve_subset_sum",
]
