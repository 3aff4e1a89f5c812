"""Graded polynomial ring ``k[x_1..x_r]`` and the Hochster–Laksov basis experiment.

Degree-``d`` monomials are exponent vectors ordered lexicographically,
largest first (``x_1^d`` comes first).  Forms are dense coefficient tuples in
that order.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import ProfileError
from .exactlinalg import FieldSpec, Matrix, rank, rng_for
from .maxrank import DEFAULT_THRESHOLD, DEFAULT_TRIALS, FAIL, PASS, Certificate


def n_of(r: int, d: int) -> int:
    """Dimension of the degree-``d`` piece in ``r`` variables."""
    if r < 1 or d < 0:
        raise ValueError("need r >= 1 and d >= 0")
    return math.comb(r + d - 1, d)


@lru_cache(maxsize=None)
def _monomials(r: int, d: int) -> tuple:
    if r == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        out.extend((e,) + rest for rest in _monomials(r - 1, d - e))
    return tuple(out)


class GradedPolyRing:
    def __init__(self, r: int, field: FieldSpec):
        if r < 1:
            raise ValueError("need at least one variable")
        self.r = r
        self.field = field

    def monomials(self, d: int) -> tuple:
        return _monomials(self.r, d)

    def index(self, d: int) -> dict:
        return {m: i for i, m in enumerate(self.monomials(d))}

    def variable(self, j: int) -> tuple:
        """``x_{j+1}`` as a degree-1 form."""
        f = self.field
        return tuple(f.one if i == j else f.zero for i in range(self.r))

    def random_form(self, d: int, rng) -> tuple:
        return tuple(self.field.random(rng) for _ in self.monomials(d))

    def multiply(self, F, d1: int, G, d2: int) -> tuple:
        """Product of a degree-``d1`` and a degree-``d2`` form."""
        f = self.field
        idx = self.index(d1 + d2)
        out = [f.zero] * len(idx)
        for m1, a in zip(self.monomials(d1), F):
            if not a:
                continue
            for m2, b in zip(self.monomials(d2), G):
                if b:
                    k = idx[tuple(x + y for x, y in zip(m1, m2))]
                    out[k] = f.add(out[k], f.mul(a, b))
        return tuple(out)


def hl_parameters(r: int, d: int) -> tuple[int, int]:
    """``(n, s)`` with ``(n-1) r < N(r, d+1) <= n r`` and ``s = N(r, d+1) - (n-1) r``."""
    N = n_of(r, d + 1)
    n = -(-N // r)
    return n, N - (n - 1) * r


def hl_products(ring: GradedPolyRing, d: int, forms) -> Matrix:
    """Columns ``x_j F_i`` for ``i < n`` and all ``j``, then ``x_j F_n`` for ``j <= s``."""
    n, s = hl_parameters(ring.r, d)
    cols = []
    for i, F in enumerate(forms):
        for j in range(ring.r if i < n - 1 else s):
            cols.append(ring.multiply(ring.variable(j), 1, F, d))
    return Matrix.from_columns(ring.field, n_of(ring.r, d + 1), cols)


def check_hl(r: int, d: int, trials: int = DEFAULT_TRIALS, seed: int = 1,
             field: FieldSpec | None = None, threshold: float = DEFAULT_THRESHOLD) -> Certificate:
    if d < 2:
        raise ProfileError("the statement assumes d >= 2")
    field = field or FieldSpec.prime(65521)
    ring = GradedPolyRing(r, field)
    n, s = hl_parameters(r, d)
    N = n_of(r, d + 1)
    passes = 0
    first_trial = None
    for i in range(trials):
        rng = rng_for(seed, i)
        forms = [ring.random_form(d, rng) for _ in range(n)]
        ok = rank(hl_products(ring, d, forms)) == N
        if first_trial is None:
            first_trial = ok
        passes += ok
    frac = passes / trials if trials else 0.0
    return Certificate("hochster_laksov", "sampled", field, trials, seed,
                       PASS if frac >= threshold else FAIL, 1 - frac, None,
                       {"r": r, "d": d, "n": n, "s": s, "N": N, "passes": passes,
                        "first_trial_pass": first_trial, "threshold": threshold})
