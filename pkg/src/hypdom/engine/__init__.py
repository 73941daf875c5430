"""Hyperbolicity arithmetic, search and verification tools."""

from .classify import classify, compute_acc_val, is_acceptable, is_valuable
from .driver import EngineConfig, HyperbolicityResult, RunStats, compute_hyperbolicity
from .lemmas import bound_lemmas_check, lemma_sandwich_check
from .oracle import all_pairs_distances, brute_force_hyperbolicity
from .quad import QuadrupleResult, delta4, format_doubled, quad_delta, quad_tau, tau4
from .search import MemoryBudgetError

__all__ = [
    "EngineConfig", "HyperbolicityResult", "MemoryBudgetError", "QuadrupleResult", "RunStats",
    "all_pairs_distances", "bound_lemmas_check", "brute_force_hyperbolicity", "classify",
    "compute_acc_val", "compute_hyperbolicity", "delta4", "format_doubled", "is_acceptable",
    "is_valuable", "lemma_sandwich_check", "quad_delta", "quad_tau", "tau4",
]
