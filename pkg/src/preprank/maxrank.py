"""Maps between direct sums of tensor products and their maximal-rank properties.

A :class:`TensorSumMap` is either ``T: ⊕ V_i⊗W_i -> U`` (``direction ==
"intoU"``) or ``S: Q -> ⊕ V_i⊗W_i`` (``"fromQ"``).  Inside block ``i`` the
coordinate of ``v⊗w`` is ``v * dim W_i + w``, so an element of ``V_i⊗W_i``
is a ``dim V_i x dim W_i`` matrix read row-major.

The *right* properties quantify over subspaces ``W'_i ⊆ W_i``, the *left*
ones over ``V'_i ⊆ V_i``.  For ``intoU`` maps the test restricts ``T`` to
``⊕ V_i⊗W'_i`` (or ``⊕ V'_i⊗W_i``); for ``fromQ`` maps it composes ``S`` with
the projection onto ``⊕ V_i⊗(W_i/W'_i)`` (or ``⊕ (V_i/V'_i)⊗W_i``).

*Omnipresent* means every choice of subspaces gives a map of maximal rank.
Exhaustive mode enumerates all ``F_p``-rational choices; sampled mode draws
random ones, and any failure is a genuine counterexample.

*General* means a Zariski-dense open set of choices (for each dimension
profile) gives maximal rank.  Since maximal rank is an open condition and a
product of Grassmannians is irreducible, one good choice already proves the
profile.  Exhaustive mode therefore passes a profile iff some ``F_p``-point
is good and reports the exact failure fraction.  Sampled mode (over a large
prime) passes a profile iff the pass fraction reaches ``threshold``; per
trial the chance that a good open set is missed is roughly ``deg/p``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

from .errors import (BudgetExceededError, NotInjectiveError, NotSurjectiveError,
                     PreprankError, ProfileError, ZeroComponentError)
from .exactlinalg import (DEFAULT_ENUMERATION_BUDGET, FieldSpec, Matrix, Subspace,
                          _iter_subspaces, block_diag, count_subspaces,
                          gaussian_binomial, image_basis, kernel_basis, random_matrix, rank,
                          rng_for, sample_subspace)
from .representation import DirectSum, RepMorphism

INTO_U = "intoU"
FROM_Q = "fromQ"
RIGHT = "right"
LEFT = "left"
PASS = "PASS"
FAIL = "FAIL"
DEFAULT_TRIALS = 100
DEFAULT_THRESHOLD = 0.95


@dataclass(frozen=True)
class TensorSumMap:
    blocks: tuple
    direction: str
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.direction not in (INTO_U, FROM_Q):
            raise PreprankError(f"unknown direction {self.direction!r}")
        n = self.tensor_dim
        width = self.matrix.ncols if self.direction == INTO_U else self.matrix.nrows
        if width != n:
            raise PreprankError(f"matrix side {width} does not match Σ dimV·dimW = {n}")

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    @property
    def tensor_dim(self) -> int:
        return sum(v * w for v, w in self.blocks)

    @property
    def outer_dim(self) -> int:
        """``dim U`` for ``intoU`` maps, ``dim Q`` for ``fromQ`` maps."""
        return self.matrix.nrows if self.direction == INTO_U else self.matrix.ncols

    def block_offset(self, i: int) -> int:
        return sum(v * w for v, w in self.blocks[:i])

    def side_dims(self, side: str) -> list[int]:
        return [w if side == RIGHT else v for v, w in self.blocks]

    @property
    def injective(self) -> bool:
        return rank(self.matrix) == self.matrix.ncols

    @property
    def surjective(self) -> bool:
        return rank(self.matrix) == self.matrix.nrows


@dataclass(frozen=True)
class Witness:
    side: str
    subspaces: tuple
    rank: int
    shape: tuple

    def to_json(self):
        return {"side": self.side, "subspaces": [s.to_json() for s in self.subspaces],
                "rank": self.rank, "shape": list(self.shape)}


@dataclass
class Verdict:
    property: str
    mode: str
    field: FieldSpec
    trials: int | None
    seed: int | None
    result: str
    failure_fraction: float
    witness: Witness | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.result == PASS

    def to_json(self) -> dict:
        out = {
            "property": self.property,
            "mode": self.mode,
            "field": str(self.field),
            "trials": self.trials,
            "seed": self.seed,
            "result": self.result,
            "failure_fraction": self.failure_fraction,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


class Certificate(Verdict):
    """Outcome of a sampled basis experiment; serialized like a verdict."""


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Matrix):
        return [[str(e) for e in r] for r in x.rows]
    if isinstance(x, Subspace):
        return x.to_json()
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


# restriction along subspaces

def transformed_matrix(T: TensorSumMap, side: str, subspaces) -> Matrix:
    """The map whose rank the properties test, for one tuple of subspaces."""
    f = T.field
    parts = []
    for (dv, dw), sub in zip(T.blocks, subspaces):
        if T.direction == INTO_U:
            inc = sub.inclusion()
            parts.append(Matrix.identity(f, dv).kron(inc) if side == RIGHT
                         else inc.kron(Matrix.identity(f, dw)))
        else:
            proj = sub.quotient_projection()
            parts.append(Matrix.identity(f, dv).kron(proj) if side == RIGHT
                         else proj.kron(Matrix.identity(f, dw)))
    B = block_diag(f, parts)
    return T.matrix @ B if T.direction == INTO_U else B @ T.matrix


def _evaluate(T, side, subspaces):
    m = transformed_matrix(T, side, subspaces)
    r = rank(m)
    return r == min(m.nrows, m.ncols), r, m.shape


def recheck_witness(T: TensorSumMap, verdict: Verdict) -> bool:
    """True iff the recorded witness still yields a map without maximal rank."""
    w = verdict.witness
    if w is None:
        return False
    ok, r, shape = _evaluate(T, w.side, w.subspaces)
    return not ok and r == w.rank and shape == w.shape


def _short_circuit(T):
    # restrictions of an injective T stay injective; quotients of a surjective S stay surjective
    if T.direction == INTO_U and T.injective:
        return "injective"
    if T.direction == FROM_Q and T.surjective:
        return "surjective"
    return None


def _check_omnipresent(T, side, mode, trials, seed, budget):
    prop = f"{side}_omnipresent"
    f = T.field
    dims = T.side_dims(side)
    reason = _short_circuit(T)
    if reason is not None:
        return Verdict(prop, mode, f, trials if mode == "sampled" else None,
                       seed if mode == "sampled" else None, PASS, 0.0,
                       details={"short_circuit": reason})
    checked = failures = 0
    witness = None
    if mode == "exhaustive":
        if not f.is_prime:
            raise PreprankError("exhaustive mode needs a prime field")
        total = math.prod(count_subspaces(n, f) for n in dims)
        if total > budget:
            raise BudgetExceededError(total, budget)
        choices = [[s for k in range(n + 1) for s in _iter_subspaces(n, k, f)] for n in dims]
        for subs in itertools.product(*choices):
            ok, r, shape = _evaluate(T, side, subs)
            checked += 1
            if not ok:
                failures += 1
                if witness is None:
                    witness = Witness(side, subs, r, shape)
        trials_out, seed_out = None, None
    elif mode == "sampled":
        for i in range(trials):
            rng = rng_for(seed, i)
            subs = tuple(sample_subspace(n, int(rng.integers(0, n + 1)), f, rng) for n in dims)
            ok, r, shape = _evaluate(T, side, subs)
            checked += 1
            if not ok:
                failures += 1
                if witness is None:
                    witness = Witness(side, subs, r, shape)
        trials_out, seed_out = trials, seed
    else:
        raise PreprankError(f"unknown mode {mode!r}")
    return Verdict(prop, mode, f, trials_out, seed_out, PASS if failures == 0 else FAIL,
                   failures / checked if checked else 0.0, witness,
                   {"checked": checked, "failures": failures})


def _all_profiles(dims):
    return [tuple(p) for p in itertools.product(*(range(n + 1) for n in dims))]


def _check_general(T, side, mode, profiles, trials, seed, threshold, budget):
    prop = f"{side}_general"
    f = T.field
    dims = T.side_dims(side)
    if profiles is None:
        profiles = _all_profiles(dims)
    elif profiles and isinstance(profiles[0], int):
        profiles = [tuple(profiles)]
    profiles = [tuple(p) for p in profiles]
    for p in profiles:
        if len(p) != len(dims) or any(not 0 <= k <= n for k, n in zip(p, dims)):
            raise ProfileError(f"profile {p} does not fit block dimensions {dims}")
    if mode == "exhaustive":
        if not f.is_prime:
            raise PreprankError("exhaustive mode needs a prime field")
        total = sum(math.prod(gaussian_binomial(n, k, f.p) for n, k in zip(dims, p)) for p in profiles)
        if total > budget:
            raise BudgetExceededError(total, budget)
    elif mode != "sampled":
        raise PreprankError(f"unknown mode {mode!r}")

    report = []
    witness = None
    all_checked = all_failed = 0
    result = PASS
    for p in profiles:
        checked = failures = 0
        first_ok = None
        prof_witness = None
        if mode == "exhaustive":
            choices = [list(_iter_subspaces(n, k, f)) for n, k in zip(dims, p)]
            draws = itertools.product(*choices)
        else:
            draws = (tuple(sample_subspace(n, k, f, rng) for n, k in zip(dims, p))
                     for rng in (rng_for(seed, i) for i in range(trials)))
        for subs in draws:
            ok, r, shape = _evaluate(T, side, subs)
            if first_ok is None:
                first_ok = ok
            checked += 1
            if not ok:
                failures += 1
                if prof_witness is None:
                    prof_witness = Witness(side, subs, r, shape)
        if mode == "exhaustive":
            passed = failures < checked
        else:
            passed = checked > 0 and (checked - failures) / checked >= threshold
        if not passed:
            result = FAIL
            if witness is None:
                witness = prof_witness
        all_checked += checked
        all_failed += failures
        entry = {"profile": list(p), "checked": checked, "failures": failures, "passed": passed}
        if mode == "sampled":
            entry["first_trial_pass"] = bool(first_ok)
        report.append(entry)
    return Verdict(prop, mode, f, trials if mode == "sampled" else None,
                   seed if mode == "sampled" else None, result,
                   all_failed / all_checked if all_checked else 0.0, witness,
                   {"profiles": report, "threshold": threshold if mode == "sampled" else None})


def check_right_omnipresent(T: TensorSumMap, mode: str = "exhaustive", trials: int = DEFAULT_TRIALS,
                            seed: int = 1, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Verdict:
    return _check_omnipresent(T, RIGHT, mode, trials, seed, budget)


def check_left_omnipresent(T: TensorSumMap, mode: str = "exhaustive", trials: int = DEFAULT_TRIALS,
                           seed: int = 1, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Verdict:
    return _check_omnipresent(T, LEFT, mode, trials, seed, budget)


def check_left_general(T: TensorSumMap, profiles=None, trials: int = DEFAULT_TRIALS, seed: int = 1,
                       mode: str = "sampled", threshold: float = DEFAULT_THRESHOLD,
                       budget: int = DEFAULT_ENUMERATION_BUDGET) -> Verdict:
    """``profiles``: list of per-block dimensions of ``V'_i`` (default: all)."""
    return _check_general(T, LEFT, mode, profiles, trials, seed, threshold, budget)


def check_right_general(T: TensorSumMap, profiles=None, trials: int = DEFAULT_TRIALS, seed: int = 1,
                        mode: str = "sampled", threshold: float = DEFAULT_THRESHOLD,
                        budget: int = DEFAULT_ENUMERATION_BUDGET) -> Verdict:
    return _check_general(T, RIGHT, mode, profiles, trials, seed, threshold, budget)


# module morphisms as tensor maps

def from_module_morphism(g: RepMorphism, decomposition):
    """Regroup a morphism out of (or into) ``⊕ V_i^{n_i}`` as a tensor map.

    ``decomposition`` lists ``(V_i, n_i)``; the direct sum side of ``g`` must
    be exactly ``V_1`` repeated ``n_1`` times, then ``V_2`` ..., in order.
    Returns ``(T, h)`` with ``T h = g`` (or ``(S, h)`` with ``S = h f``), where
    ``h`` sends copy ``j`` of ``v ∈ V_i`` to ``v ⊗ e_ij``.
    """
    expanded = [comp for comp, n in decomposition for _ in range(n)]
    if isinstance(g.source, DirectSum) and list(g.source.summands) == expanded:
        direction, B = INTO_U, g.source
    elif isinstance(g.target, DirectSum) and list(g.target.summands) == expanded:
        direction, B = FROM_Q, g.target
    else:
        raise PreprankError("decomposition does not match either side of the morphism")
    f = g.field
    blocks = [(comp.dim, n) for comp, n in decomposition]
    n_tensor = sum(v * w for v, w in blocks)
    if n_tensor != B.dim:
        raise PreprankError("dimension mismatch between decomposition and direct sum")
    h_rows = [[f.zero] * B.dim for _ in range(n_tensor)]
    copy = 0
    offset = 0
    for comp, n in decomposition:
        embeds = [B.embedding(copy + j) for j in range(n)]
        for v in range(comp.dim):
            for j in range(n):
                h_rows[offset + v * n + j][embeds[j][v]] = f.one
        copy += n
        offset += comp.dim * n
    h = Matrix(f, n_tensor, B.dim, h_rows)
    flat = g.flat()
    if direction == INTO_U:
        return TensorSumMap(blocks, INTO_U, flat @ h.T), h
    return TensorSumMap(blocks, FROM_Q, h @ flat), h


# tensor lemma

def _as_block_matrix(x, field, dim_v=None, dim_w=None) -> Matrix:
    if isinstance(x, Matrix):
        return x
    x = list(x)
    if x and isinstance(x[0], (list, tuple)):
        m = Matrix.from_rows(field, x, dim_w)
        if dim_v is not None and m.shape != (dim_v, dim_w):
            raise ProfileError(f"element has shape {m.shape}, expected {(dim_v, dim_w)}")
        return m
    flat = [field.elem(e) for e in x]
    return Matrix(field, dim_v, dim_w, [flat[i * dim_w:(i + 1) * dim_w] for i in range(dim_v)])


def alpha_rank(x: Matrix) -> tuple[int, Subspace]:
    """Rank of ``α(x): D V -> W`` and a basis of its image (the row space of ``x``)."""
    im = Subspace.span(x.field, x.ncols, x.rows)
    return im.dim, im


def cyclic_submodule(x: Matrix) -> Subspace:
    """``End(V) x = V ⊗ Im α(x)`` inside ``V⊗W`` (flat coordinates)."""
    f = x.field
    dv, dw = x.shape
    _, im = alpha_rank(x)
    vecs = []
    for v in range(dv):
        for r in im.basis.rows:
            vec = [f.zero] * (dv * dw)
            vec[v * dw:(v + 1) * dw] = r
            vecs.append(vec)
    return Subspace.span(f, dv * dw, vecs)


# duality and transfers

def dual_map(T: TensorSumMap) -> TensorSumMap:
    return TensorSumMap(T.blocks, FROM_Q if T.direction == INTO_U else INTO_U, T.matrix.T)


def transfer_via_kernel(T: TensorSumMap) -> TensorSumMap:
    """Inclusion ``Ker T -> ⊕ V_i⊗W_i`` of a surjective ``T``."""
    if T.direction != INTO_U:
        raise PreprankError("kernel transfer needs an intoU map")
    if not T.surjective:
        raise NotSurjectiveError("kernel transfer needs a surjective map")
    K = kernel_basis(T.matrix)
    return TensorSumMap(T.blocks, FROM_Q, Matrix(T.field, T.tensor_dim, K.dim, zip(*K.basis.rows))
                        if K.dim else Matrix.zeros(T.field, T.tensor_dim, 0))


def transfer_via_cokernel(S: TensorSumMap) -> TensorSumMap:
    """Projection ``⊕ V_i⊗W_i -> Coker S`` of an injective ``S``."""
    if S.direction != FROM_Q:
        raise PreprankError("cokernel transfer needs a fromQ map")
    if not S.injective:
        raise NotInjectiveError("cokernel transfer needs an injective map")
    return TensorSumMap(S.blocks, INTO_U, image_basis(S.matrix).quotient_projection())


@dataclass(frozen=True)
class DimensionBound:
    lhs: int
    rhs: int
    applicable: bool
    holds: bool
    violation: bool

    def to_json(self):
        return dict(self.__dict__)


def dimension_bound(T: TensorSumMap, verdict: Verdict | None = None) -> DimensionBound:
    """``dim U < Σ (dim V_i)^2`` for surjective non-injective ``T``; dually for ``S``.

    A violation is flagged only where the hypotheses hold and the map is not
    known to fail the right omnipresent property.
    """
    rhs = sum(v * v for v, _ in T.blocks)
    lhs = T.outer_dim
    inj, surj = T.injective, T.surjective
    applicable = (surj and not inj) if T.direction == INTO_U else (inj and not surj)
    holds = lhs < rhs
    trusted = verdict is None or verdict.passed
    return DimensionBound(lhs, rhs, applicable, holds, applicable and trusted and not holds)


# generic bases

def _independent(vectors, field, n) -> bool:
    return Subspace.span(field, n, vectors).dim == len(vectors)


def generic_basis(T: TensorSumMap, a, m, trials: int = DEFAULT_TRIALS, seed: int = 1,
                  threshold: float = DEFAULT_THRESHOLD) -> Certificate:
    """Sample ``φ_i ∈ End(V_i)`` and test whether the ``T(φ_i m(i,j))`` form a basis of ``U``.

    ``m[i]`` lists ``a[i]`` linearly independent elements of ``V_i⊗W_i``, each
    a ``dim V_i x dim W_i`` matrix (or its row-major entries).
    """
    f = T.field
    if T.direction != INTO_U:
        raise PreprankError("generic_basis needs an intoU map")
    a = list(a)
    if len(a) != len(T.blocks) or len(m) != len(T.blocks):
        raise ProfileError("one count and one element list per block")
    if sum(a) != T.outer_dim:
        raise ProfileError(f"Σ a_i = {sum(a)} differs from dim U = {T.outer_dim}")
    elems = []
    for (dv, dw), ai, mi in zip(T.blocks, a, m):
        if not 0 <= ai <= dv * dw or len(mi) != ai:
            raise ProfileError("a_i out of range or wrong number of elements")
        mats = [_as_block_matrix(x, f, dv, dw) for x in mi]
        if not _independent([x.entries for x in mats], f, dv * dw):
            raise ProfileError("chosen elements of a block are dependent")
        elems.append(mats)
    n = T.outer_dim
    passes = 0
    first_pass = None
    first_trial = None
    witness_phi = None
    for i in range(trials):
        rng = rng_for(seed, i)
        phis = [random_matrix(f, dv, dv, rng) for dv, _ in T.blocks]
        cols = []
        for bi, (phi, mats) in enumerate(zip(phis, elems)):
            off = T.block_offset(bi)
            for x in mats:
                vec = [f.zero] * T.tensor_dim
                vec[off:off + x.nrows * x.ncols] = (phi @ x).entries
                cols.append(T.matrix.apply(vec))
        ok = rank(Matrix.from_columns(f, n, cols)) == n if n else True
        if first_trial is None:
            first_trial = ok
        if ok:
            passes += 1
            if first_pass is None:
                first_pass = phis
        elif witness_phi is None:
            witness_phi = phis
    frac = passes / trials if trials else 0.0
    return Certificate("generic_basis", "sampled", f, trials, seed,
                       PASS if frac >= threshold else FAIL, 1 - frac, None,
                       {"passes": passes, "first_trial_pass": first_trial,
                        "first_passing_phi": first_pass, "first_failing_phi": witness_phi,
                        "threshold": threshold})


@dataclass
class HLAnalogPlan:
    """Blocks, multiplicities ``n_i`` and split ``c_i`` of the preprojective basis experiment."""

    pp: object
    t: int
    d: int
    blocks: list      # dicts: kind, vertex, key, arrows, dim_v, dim_w
    n: list
    c: list

    @property
    def dim_u(self) -> int:
        return self.pp.dim(self.t, self.d)

    def sample(self, rng) -> list:
        """``F[i][k]`` for ``k < n_i``, uniform in ``V_i``."""
        f = self.pp.field
        return [[tuple(f.random(rng) for _ in range(b["dim_v"])) for _ in range(ni)]
                for b, ni in zip(self.blocks, self.n)]

    def products(self, F) -> Matrix:
        """Columns: the listed products ``F_{i,k} β*_{i,j}`` / ``F_{i,k} β_{i,j}`` in ``V^t_d``."""
        pp = self.pp
        cols = []
        for b, ni, ci, Fi in zip(self.blocks, self.n, self.c, F):
            mults = [pp.right_multiplication(aid, b["key"][1]) for aid in b["mult_arrows"]]
            for k in range(ni):
                jmax = b["dim_w"] if k < ni - 1 else ci
                for j in range(jmax):
                    cols.append(mults[j].apply(Fi[k]))
        return Matrix.from_columns(pp.field, self.dim_u, cols)

    def is_basis(self, F) -> bool:
        return rank(self.products(F)) == self.dim_u


def hl_analog_plan(pp, t: int, d: int, n=None, c=None) -> HLAnalogPlan:
    """Set up the blocks for ``V^t_d`` and validate (or choose) ``n_i`` and ``c_i``.

    Blocks with ``V_i = 0`` carry no elements and are left out.  By default
    ``n`` fills blocks left to right and ``c`` is split greedily.
    """
    if d <= 0:
        raise ProfileError("the basis statement needs d > 0")
    dim_u = pp.dim(t, d)
    if dim_u == 0:
        raise ZeroComponentError(f"V^{t + 1}_{d} is zero")
    q, dq = pp.quiver, pp.dq
    blocks = []
    sources = []
    for a in q.arrows_to(t):
        if a.source not in sources:
            sources.append(a.source)
    for s in sources:
        arrows = [a for a in q.arrows_to(t) if a.source == s]
        blocks.append({"kind": "new", "vertex": s, "key": (s, d - 1),
                       "mult_arrows": [dq.star(a.id).id for a in arrows],
                       "arrows": [a.label + "*" for a in arrows],
                       "dim_v": pp.dim(s, d - 1), "dim_w": len(arrows)})
    targets = []
    for a in q.arrows_from(t):
        if a.target not in targets:
            targets.append(a.target)
    for u in targets:
        arrows = [a for a in q.arrows_from(t) if a.target == u]
        blocks.append({"kind": "old", "vertex": u, "key": (u, d),
                       "mult_arrows": [a.id for a in arrows],
                       "arrows": [a.label for a in arrows],
                       "dim_v": pp.dim(u, d), "dim_w": len(arrows)})
    blocks = [b for b in blocks if b["dim_v"] > 0]
    W = [b["dim_w"] for b in blocks]
    Vd = [b["dim_v"] for b in blocks]
    if n is None:
        n = [1] * len(blocks)
        i = 0
        while sum(ni * wi for ni, wi in zip(n, W)) < dim_u:
            while i < len(blocks) and n[i] == Vd[i]:
                i += 1
            if i == len(blocks):
                raise ProfileError("blocks too small to span V^t_d")
            n[i] += 1
    n = list(n)
    if len(n) != len(blocks) or any(not 1 <= ni <= vi for ni, vi in zip(n, Vd)):
        raise ProfileError(f"need 1 <= n_i <= dim V_i = {Vd}, got {n}")
    low = sum((ni - 1) * wi for ni, wi in zip(n, W))
    high = sum(ni * wi for ni, wi in zip(n, W))
    if not low < dim_u <= high:
        raise ProfileError(f"need {low} < dim V^t_d = {dim_u} <= {high}")
    total_c = dim_u - low
    if c is None:
        c, rest = [], total_c
        for wi in W:
            c.append(min(wi, rest))
            rest -= c[-1]
    c = list(c)
    if len(c) != len(blocks) or sum(c) != total_c or any(not 0 <= ci <= wi for ci, wi in zip(c, W)):
        raise ProfileError(f"c must split {total_c} with 0 <= c_i <= dim W_i = {W}")
    return HLAnalogPlan(pp, t, d, blocks, n, c)


def hl_analog_basis(pp, t: int, d: int, n=None, c=None, trials: int = DEFAULT_TRIALS,
                    seed: int = 1, threshold: float = DEFAULT_THRESHOLD) -> Certificate:
    plan = hl_analog_plan(pp, t, d, n, c)
    passes = 0
    failed = []
    first_trial = None
    first_pass = None
    for i in range(trials):
        F = plan.sample(rng_for(seed, i))
        ok = plan.is_basis(F)
        if first_trial is None:
            first_trial = ok
        if ok:
            passes += 1
            if first_pass is None:
                first_pass = F
        else:
            failed.append(i)
    frac = passes / trials if trials else 0.0
    return Certificate("hl_analog", "sampled", pp.field, trials, seed,
                       PASS if frac >= threshold else FAIL, 1 - frac, None,
                       {"t": t + 1, "d": d, "n": plan.n, "c": plan.c,
                        "blocks": [{"kind": b["kind"], "vertex": b["vertex"] + 1, "arrows": b["arrows"],
                                    "dim_v": b["dim_v"], "dim_w": b["dim_w"]} for b in plan.blocks],
                        "passes": passes, "failed_trials": failed[:100],
                        "first_trial_pass": first_trial, "threshold": threshold})
