"""Seeded graph corpora shared by the unit and acceptance tests."""

import math
import random

from hypdom.generators import gen_grid_perturbed, gen_random_connected

PERTURBED_SEED = 1


def small_graph(seed):
    """Connected random graph with 5 <= n <= 35; density varies with the seed."""
    rng = random.Random(seed)
    n = rng.randint(5, 35)
    p = min(0.6, rng.uniform(1.0, 2.5) * math.log(n) / n)
    return gen_random_connected(n, p, seed)


def medium_graph(seed, n_max=200):
    rng = random.Random(10_000 + seed)
    n = rng.randint(20, n_max)
    p = min(0.5, rng.uniform(1.0, 3.0) * math.log(n) / n)
    return gen_random_connected(n, p, seed)


def small_corpus(count=200):
    return [small_graph(s) for s in range(count)]


def medium_corpus(count=50, n_max=200):
    return [medium_graph(s, n_max) for s in range(count)]


def perturbed(side, seed=PERTURBED_SEED, fraction=0.1):
    return gen_grid_perturbed(side, fraction, seed)
