"""Finite-dimensional representations of an acyclic quiver and their morphisms.

A representation has a coordinate space per vertex and one matrix per arrow
``u -> v`` of shape ``dim(v) x dim(u)``.  Its *flat* coordinates list the
vertex spaces one after another (vertex-major).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceededError, PreprankError
from .exactlinalg import FieldSpec, Matrix, block_diag, kernel_basis, rank
from .quiver import Quiver

DEFAULT_END_BUDGET = 10**5


class Representation:
    def __init__(self, quiver: Quiver, field: FieldSpec, vertex_dims, maps):
        self.quiver = quiver
        self.field = field
        self.vertex_dims = tuple(vertex_dims)
        self.maps = tuple(maps)
        if len(self.vertex_dims) != quiver.vertex_count:
            raise PreprankError("one dimension per vertex required")
        if len(self.maps) != len(quiver.arrows):
            raise PreprankError("one matrix per arrow required")
        for a, m in zip(quiver.arrows, self.maps):
            if m.shape != (self.vertex_dims[a.target], self.vertex_dims[a.source]):
                raise PreprankError(f"matrix for {a.label} has shape {m.shape}")

    @classmethod
    def zero(cls, quiver, field):
        n = quiver.vertex_count
        return cls(quiver, field, (0,) * n,
                   [Matrix.zeros(field, 0, 0) for _ in quiver.arrows])

    @classmethod
    def simple(cls, quiver, field, v):
        dims = [0] * quiver.vertex_count
        dims[v] = 1
        return cls(quiver, field, dims,
                   [Matrix.zeros(field, dims[a.target], dims[a.source]) for a in quiver.arrows])

    @property
    def dim(self) -> int:
        return sum(self.vertex_dims)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return self.vertex_dims

    def offset(self, v: int) -> int:
        return sum(self.vertex_dims[:v])

    def vertex_slice(self, v: int) -> range:
        o = self.offset(v)
        return range(o, o + self.vertex_dims[v])

    def vertex_of(self, flat_index: int) -> int:
        for v in range(len(self.vertex_dims)):
            if flat_index < self.offset(v) + self.vertex_dims[v]:
                return v
        raise IndexError(flat_index)

    def flat_action(self, arrow_id: int) -> Matrix:
        """The arrow's action as a ``dim x dim`` matrix on flat coordinates."""
        cache = self.__dict__.setdefault("_flat_cache", {})
        if arrow_id in cache:
            return cache[arrow_id]
        a = self.quiver.arrows[arrow_id]
        f = self.field
        rows = [[f.zero] * self.dim for _ in range(self.dim)]
        ro, co = self.offset(a.target), self.offset(a.source)
        for i, r in enumerate(self.maps[arrow_id].rows):
            for j, x in enumerate(r):
                rows[ro + i][co + j] = x
        cache[arrow_id] = Matrix(f, self.dim, self.dim, rows)
        return cache[arrow_id]

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and self.vertex_dims == other.vertex_dims and self.maps == other.maps)

    def __hash__(self):
        return hash((self.quiver, self.field, self.vertex_dims, self.maps))

    def __repr__(self):
        return f"Representation(dims={self.vertex_dims})"


class DirectSum(Representation):
    """Ordered direct sum; vertex ``v`` holds the summands' ``v``-spaces in order."""

    def __init__(self, quiver, field, summands):
        self.summands = tuple(summands)
        dims = [sum(s.vertex_dims[v] for s in self.summands) for v in range(quiver.vertex_count)]
        maps = []
        for a in quiver.arrows:
            maps.append(block_diag(field, [s.maps[a.id] for s in self.summands])
                        if self.summands else Matrix.zeros(field, 0, 0))
        super().__init__(quiver, field, dims, maps)

    def embedding(self, k: int) -> list[int]:
        """Flat index in the sum of each flat coordinate of summand ``k``."""
        out = []
        s = self.summands[k]
        for v in range(self.quiver.vertex_count):
            base = self.offset(v) + sum(t.vertex_dims[v] for t in self.summands[:k])
            out.extend(range(base, base + s.vertex_dims[v]))
        return out


@dataclass(frozen=True)
class RepMorphism:
    """Per-vertex matrices ``maps[v]`` of shape ``target.dim(v) x source.dim(v)``."""

    source: Representation
    target: Representation
    maps: tuple = dc_field(default=())

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        for v, m in enumerate(self.maps):
            if m.shape != (self.target.vertex_dims[v], self.source.vertex_dims[v]):
                raise PreprankError(f"vertex {v + 1} block has shape {m.shape}")

    @classmethod
    def from_flat(cls, source, target, flat: Matrix) -> "RepMorphism":
        """Cut a flat matrix into vertex blocks; off-diagonal blocks must vanish."""
        maps = []
        for v in range(source.quiver.vertex_count):
            maps.append(flat.submatrix(target.vertex_slice(v), source.vertex_slice(v)))
        m = cls(source, target, maps)
        if m.flat() != flat:
            raise PreprankError("flat matrix mixes vertices; not a morphism of representations")
        return m

    @property
    def field(self):
        return self.source.field

    def flat(self) -> Matrix:
        return block_diag(self.field, self.maps)

    def is_intertwining(self) -> bool:
        for a in self.source.quiver.arrows:
            lhs = self.target.maps[a.id] @ self.maps[a.source]
            rhs = self.maps[a.target] @ self.source.maps[a.id]
            if lhs != rhs:
                return False
        return True

    def compose(self, other: "RepMorphism") -> "RepMorphism":
        """``self ∘ other``."""
        return RepMorphism(other.source, self.target,
                           [a @ b for a, b in zip(self.maps, other.maps)])

    @property
    def rank(self) -> int:
        return sum(rank(m) for m in self.maps)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.maps)


def hom_space(M: Representation, N: Representation, field: FieldSpec | None = None):
    """Basis of ``Hom(M, N)`` by solving the intertwining equations.

    Returns ``(dimension, [RepMorphism, ...])``.
    """
    field = field or M.field
    q = M.quiver
    n = q.vertex_count
    # unknown X_v[i][j] at position var_off[v] + i * dimM_v + j
    var_off = []
    total = 0
    for v in range(n):
        var_off.append(total)
        total += N.vertex_dims[v] * M.vertex_dims[v]
    eqs = []
    for a in q.arrows:
        u, v = a.source, a.target
        Na, Ma = N.maps[a.id], M.maps[a.id]
        # (N_a X_u - X_v M_a)[i][j] = 0
        for i in range(N.vertex_dims[v]):
            for j in range(M.vertex_dims[u]):
                row = [field.zero] * total
                for k in range(N.vertex_dims[u]):
                    row[var_off[u] + k * M.vertex_dims[u] + j] = field.add(
                        row[var_off[u] + k * M.vertex_dims[u] + j], Na[i, k])
                for k in range(M.vertex_dims[v]):
                    idx = var_off[v] + i * M.vertex_dims[v] + k
                    row[idx] = field.sub(row[idx], Ma[k, j])
                eqs.append(row)
    K = kernel_basis(Matrix(field, len(eqs), total, eqs))
    basis = []
    for vec in K.basis.rows:
        maps = []
        for v in range(n):
            rN, cM = N.vertex_dims[v], M.vertex_dims[v]
            chunk = vec[var_off[v]: var_off[v] + rN * cM]
            maps.append(Matrix(field, rN, cM, [chunk[i * cM:(i + 1) * cM] for i in range(rN)]))
        basis.append(RepMorphism(M, N, maps))
    return len(basis), basis


def _nilpotent_or_invertible(flat: Matrix) -> bool:
    r = rank(flat)
    if r == flat.nrows:
        return True
    power = flat
    for _ in range(flat.nrows):
        power = power @ flat
        if power.is_zero():
            return True
    return False


def is_indecomposable(M: Representation, field: FieldSpec | None = None,
                      budget: int = DEFAULT_END_BUDGET) -> bool:
    """Decide whether ``End(M)`` is local, for ``M`` over a prime field.

    A finite-length module is indecomposable iff each endomorphism is
    nilpotent or invertible.  ``End(M) = k`` is accepted at once; otherwise all
    ``p**dim End`` endomorphisms are checked, which must fit in ``budget``.
    """
    field = field or M.field
    if not field.is_prime:
        raise PreprankError("indecomposability check needs a prime field")
    if M.dim == 0:
        return False
    k, basis = hom_space(M, M, field)
    if k == 1:
        return True
    flats = [b.flat() for b in basis]
    if any(not _nilpotent_or_invertible(x) for x in flats):
        return False
    count = field.p ** k
    if count > budget:
        raise BudgetExceededError(count, budget)
    for coeffs in itertools.product(range(field.p), repeat=k):
        if not any(coeffs):
            continue
        acc = Matrix.zeros(field, M.dim, M.dim)
        for c, x in zip(coeffs, flats):
            if c:
                acc = acc + x.scale(c)
        if not _nilpotent_or_invertible(acc):
            return False
    return True
