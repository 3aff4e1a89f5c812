"""Seeded random tensor-sum maps for the property suites."""

from __future__ import annotations

import numpy as np

from preprank.exactlinalg import random_matrix, rank
from preprank.maxrank import FROM_Q, INTO_U, TensorSumMap


def random_blocks(rng, max_blocks=2, max_v=3, max_w=3):
    l = int(rng.integers(1, max_blocks + 1))
    return [(int(rng.integers(1, max_v + 1)), int(rng.integers(1, max_w + 1))) for _ in range(l)]


def random_T(field, rng, max_blocks=2, max_v=3, max_w=3, surjective=False) -> TensorSumMap:
    blocks = random_blocks(rng, max_blocks, max_v, max_w)
    n = sum(v * w for v, w in blocks)
    while True:
        u = int(rng.integers(1, n + 1))
        m = random_matrix(field, u, n, rng)
        if not surjective or rank(m) == u:
            return TensorSumMap(blocks, INTO_U, m)


def random_S(field, rng, max_blocks=2, max_v=3, max_w=3) -> TensorSumMap:
    """Injective fromQ map."""
    blocks = random_blocks(rng, max_blocks, max_v, max_w)
    n = sum(v * w for v, w in blocks)
    while True:
        q = int(rng.integers(1, n + 1))
        m = random_matrix(field, n, q, rng)
        if rank(m) == q:
            return TensorSumMap(blocks, FROM_Q, m)


def instances(seed, count):
    for i in range(count):
        yield i, np.random.default_rng([seed, i])
