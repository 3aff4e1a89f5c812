"""Graded components of the (a,b)-preprojective algebra and their multiplication maps.

``V^t_d`` is the span of degree-``d`` paths starting at ``t`` modulo the ideal
generated by ``Σ_γ a(γ)γ*γ − b(γ)γγ*``, a representation of the base quiver
by left multiplication.

Components are built degree by degree.  A path of positive length starting
at ``t`` is ``q δ`` with ``δ`` an arrow of the double leaving ``t``, so

    V^t_d  =  (k e_t if d == 0)  ⊕  ⊕_δ V^{target δ}_{d - deg δ}  /  R

where ``R`` is the image of ``x ↦ (a(γ) x γ*, −b(γ) x γ)`` on ``V^t_{d-1}``:
the only relations not already accounted for inside the summands are the
``x m_t``.  Each step is a small exact row reduction; the non-pivot
coordinates form the basis.  :func:`slice_quotient` does the same reduction
directly on all of ``W^t_d`` and is kept as an independent cross-check.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass

from .errors import PreprankError, ZeroComponentError
from .exactlinalg import (FieldSpec, Matrix, Subspace, _rref_rows, image_basis,
                          kernel_basis, rank)
from .quiver import DArrow, DoubledQuiver, Path, Quiver, Weights, double, paths_of_degree
from .representation import DirectSum, Representation, RepMorphism, hom_space, is_indecomposable

__all__ = [
    "GradedComponent", "ARSequence", "Preprojective", "engine",
    "relation_spanning_set", "slice_quotient", "graded_component",
    "right_mult_g", "left_mult_f", "ar_sequence", "dims_table",
    "hom_space", "is_indecomposable",
]


class GradedComponent(Representation):
    """``V^t_d`` with a basis of surviving paths at each vertex."""

    def __init__(self, quiver, field, t, d, basis_paths, maps):
        self.t = t
        self.d = d
        self.basis_paths = tuple(tuple(ps) for ps in basis_paths)
        super().__init__(quiver, field, [len(ps) for ps in self.basis_paths], maps)

    @property
    def key(self):
        return self.t, self.d

    @property
    def flat_paths(self) -> list[Path]:
        return [p for ps in self.basis_paths for p in ps]

    def __repr__(self):
        return f"GradedComponent(t={self.t + 1}, d={self.d}, dims={self.vertex_dims})"


@dataclass(frozen=True)
class _Slot:
    arrow: DArrow | None  # None: the trivial path e_t
    key: tuple[int, int]
    offset: int
    size: int


@dataclass
class _Cell:
    comp: GradedComponent
    slots: list
    dim_D: int
    Q: Matrix        # dim V x dim D, the quotient map
    lift: list       # V flat index -> D index
    relations: list  # RREF rows of R over D
    pivots: list


@dataclass(frozen=True)
class _Copy:
    arrow: DArrow    # slot arrow of the double leaving t
    key: tuple[int, int]
    coefficient: object


@dataclass
class ARSequence:
    f: RepMorphism
    g: RepMorphism
    middle_summands: list

    def __post_init__(self):
        if self.f.target != self.g.source:
            raise PreprankError("f and g do not share a middle term")
        if not (self.g.flat() @ self.f.flat()).is_zero():
            raise PreprankError("g∘f is not zero")

    @property
    def middle(self) -> Representation:
        return self.g.source

    def exactness(self) -> dict:
        F, G = self.f.flat(), self.g.flat()
        im_f = image_basis(F)
        ker_g = kernel_basis(G)
        return {
            "f_injective": rank(F) == F.ncols,
            "g_surjective": rank(G) == G.nrows,
            "image_equals_kernel": im_f == ker_g,
            "dim_additive": self.middle.dim == self.f.source.dim + self.g.target.dim,
        }

    def is_exact(self) -> bool:
        return all(self.exactness().values())


class Preprojective:
    """Lazily computed graded pieces of one (a,b)-preprojective algebra.

    Results are memoized per ``(t, d)``; the memo table is guarded by a lock
    and every stored value is immutable.
    """

    def __init__(self, quiver: Quiver | DoubledQuiver, weights: Weights | None = None,
                 field: FieldSpec = FieldSpec.prime(65521)):
        self.dq = quiver if isinstance(quiver, DoubledQuiver) else double(quiver)
        self.quiver = self.dq.base
        self.weights = weights or Weights.ones(self.quiver)
        self.field = field
        self.a, self.b = self.weights.values(self.quiver, field)
        self._cells: dict = {}
        self._lock = threading.RLock()

    # construction

    def _cell(self, t: int, d: int) -> _Cell:
        key = (t, d)
        with self._lock:
            cell = self._cells.get(key)
            if cell is None:
                cell = self._build(t, d)
                self._cells[key] = cell
            return cell

    def _build(self, t, d) -> _Cell:
        f = self.field
        q = self.quiver
        if d < 0:
            comp = GradedComponent(q, f, t, d, [()] * q.vertex_count,
                                   [Matrix.zeros(f, 0, 0) for _ in q.arrows])
            return _Cell(comp, [], 0, Matrix.zeros(f, 0, 0), [], [], [])

        slots = []
        off = 0
        if d == 0:
            slots.append(_Slot(None, (t, 0), 0, 1))
            off = 1
        for a in q.arrows_from(t):
            size = self.component(a.target, d).dim
            slots.append(_Slot(self.dq.arrows[a.id], (a.target, d), off, size))
            off += size
        for a in q.arrows_to(t):
            size = self.component(a.source, d - 1).dim
            slots.append(_Slot(self.dq.star(a.id), (a.source, d - 1), off, size))
            off += size
        dim_D = off

        rel_rows = []
        if d >= 1:
            n_prev = self.component(t, d - 1).dim
            rel_rows = [[f.zero] * dim_D for _ in range(n_prev)]
            for s in slots:
                a = s.arrow
                if a.starred:
                    block = self.right_multiplication(a.base, d - 1)
                    coef = f.neg(self.b[a.base])
                else:
                    block = self.right_multiplication(self.dq.star(a.base).id, d - 1)
                    coef = self.a[a.base]
                for k in range(n_prev):
                    row = rel_rows[k]
                    for i in range(block.nrows):
                        x = block.rows[i][k]
                        if x:
                            row[s.offset + i] = f.mul(coef, x)
        reduced, pivots = _rref_rows(f, rel_rows, dim_D)

        # vertex and path of every D coordinate
        d_vertex = []
        d_path = []
        for s in slots:
            if s.arrow is None:
                d_vertex.append(t)
                d_path.append(Path.trivial(t))
                continue
            sub = self.component(*s.key)
            for p in sub.flat_paths:
                d_vertex.append(p.end)
                d_path.append(Path(t, p.arrows + (s.arrow.id,), p.end, p.degree + s.arrow.degree))

        pset = set(pivots)
        lift = sorted((j for j in range(dim_D) if j not in pset), key=lambda j: (d_vertex[j], j))
        pos = {j: i for i, j in enumerate(lift)}
        dim_V = len(lift)
        qrows = [[f.zero] * dim_D for _ in range(dim_V)]
        for j in lift:
            qrows[pos[j]][j] = f.one
        for r, pj in enumerate(pivots):
            row = reduced[r]
            for j in lift:
                if row[j]:
                    qrows[pos[j]][pj] = f.neg(row[j])
        Q = Matrix(f, dim_V, dim_D, qrows)

        basis_paths = [[] for _ in range(q.vertex_count)]
        for j in lift:
            basis_paths[d_vertex[j]].append(d_path[j])

        vertex_dims = [len(ps) for ps in basis_paths]
        offsets = [sum(vertex_dims[:v]) for v in range(q.vertex_count)]
        maps = []
        for arrow in q.arrows:
            u, w = arrow.source, arrow.target
            cols = []
            for i in range(offsets[u], offsets[u] + vertex_dims[u]):
                vec = self._act_on_D(slots, dim_D, arrow, lift[i], t)
                img = Q.apply(vec)
                cols.append(img[offsets[w]: offsets[w] + vertex_dims[w]])
            maps.append(Matrix.from_columns(f, vertex_dims[w], cols))
        comp = GradedComponent(q, f, t, d, basis_paths, maps)
        return _Cell(comp, slots, dim_D, Q, lift, reduced, pivots)

    def _act_on_D(self, slots, dim_D, arrow, j, t):
        """Left multiplication by a base arrow on D coordinate ``j``."""
        f = self.field
        vec = [f.zero] * dim_D
        for s in slots:
            if not s.offset <= j < s.offset + s.size:
                continue
            if s.arrow is None:
                if arrow.source == t:
                    target_slot = next(x for x in slots if x.arrow is not None and x.arrow.id == arrow.id)
                    sub = self.component(*target_slot.key)
                    k = next(i for i, p in enumerate(sub.flat_paths) if not p.arrows)
                    vec[target_slot.offset + k] = f.one
                return vec
            sub = self.component(*s.key)
            if arrow.source != sub.vertex_of(j - s.offset):
                return vec
            col = sub.flat_action(arrow.id).column(j - s.offset)
            for i, x in enumerate(col):
                vec[s.offset + i] = x
            return vec
        raise IndexError(j)

    # public surface

    def component(self, t: int, d: int) -> GradedComponent:
        return self._cell(t, d).comp

    def dim(self, t: int, d: int) -> int:
        return self.component(t, d).dim

    def right_multiplication(self, arrow_id: int, d: int) -> Matrix:
        """``q ↦ q δ`` from ``V^{target δ}_d`` to ``V^{source δ}_{d + deg δ}``."""
        a = self.dq.arrows[arrow_id]
        cell = self._cell(a.source, d + a.degree)
        src_dim = self.component(a.target, d).dim
        slot = next((s for s in cell.slots if s.arrow is not None and s.arrow.id == arrow_id), None)
        if slot is None or src_dim == 0:
            return Matrix.zeros(self.field, cell.comp.dim, src_dim)
        return cell.Q.submatrix(range(cell.Q.nrows), range(slot.offset, slot.offset + slot.size))

    def reduce_path(self, path: Path) -> tuple:
        """Coordinates of a path of the double in the basis of ``V^{start}_{degree}``."""
        if not path.arrows:
            cell = self._cell(path.start, 0)
            return cell.Q.column(0)
        last = self.dq.arrows[path.arrows[-1]]
        rest = Path(last.target, path.arrows[:-1], path.end, path.degree - last.degree)
        return self.right_multiplication(last.id, rest.degree).apply(self.reduce_path(rest))

    def quotient_map(self, t: int, d: int) -> Matrix:
        return self._cell(t, d).Q

    def _copies(self, t: int, d: int) -> list[_Copy]:
        """Summand copies of the domain of ``g^t_d``, grouped by isomorphism class."""
        f = self.field
        raw = []
        for a in self.quiver.arrows_from(t):
            raw.append(_Copy(self.dq.arrows[a.id], (a.target, d), self.a[a.id]))
        for a in self.quiver.arrows_to(t):
            raw.append(_Copy(self.dq.star(a.id), (a.source, d - 1), f.neg(self.b[a.id])))
        raw = [c for c in raw if c.key[1] >= 0 and self.dim(*c.key) > 0]
        first = {}
        for i, c in enumerate(raw):
            first.setdefault(c.key, i)
        return sorted(raw, key=lambda c: first[c.key])

    def _decomposition(self, copies):
        out = []
        for c in copies:
            comp = self.component(*c.key)
            if out and out[-1][0] is comp:
                out[-1] = (comp, out[-1][1] + 1)
            else:
                out.append((comp, 1))
        return out

    def right_mult_g(self, t: int, d: int):
        """``g^t_d``: right multiplication by ``a(γ)β`` and ``−b(γ)β*`` into ``V^t_d``."""
        target = self.component(t, d)
        if target.dim == 0:
            raise ZeroComponentError(f"V^{t + 1}_{d} is zero")
        f = self.field
        copies = self._copies(t, d)
        domain = DirectSum(self.quiver, f, [self.component(*c.key) for c in copies])
        rows = [[f.zero] * domain.dim for _ in range(target.dim)]
        for k, c in enumerate(copies):
            block = self.right_multiplication(c.arrow.id, c.key[1])
            for jj, col_idx in enumerate(domain.embedding(k)):
                for i in range(target.dim):
                    x = block.rows[i][jj]
                    if x:
                        rows[i][col_idx] = f.mul(c.coefficient, x)
        flat = Matrix(f, target.dim, domain.dim, rows)
        return RepMorphism.from_flat(domain, target, flat), self._decomposition(copies)

    def left_mult_f(self, t: int, d: int):
        """``f^t_d``: right multiplication by ``β*`` and ``β`` out of ``V^t_d``."""
        source = self.component(t, d)
        if source.dim == 0:
            raise ZeroComponentError(f"V^{t + 1}_{d} is zero")
        f = self.field
        copies = self._copies(t, d + 1)
        codomain = DirectSum(self.quiver, f, [self.component(*c.key) for c in copies])
        rows = [[f.zero] * source.dim for _ in range(codomain.dim)]
        for k, c in enumerate(copies):
            a = c.arrow
            mult = a.base if a.starred else self.dq.star(a.base).id
            block = self.right_multiplication(mult, d)
            for ii, row_idx in enumerate(codomain.embedding(k)):
                rows[row_idx] = list(block.rows[ii])
        flat = Matrix(f, codomain.dim, source.dim, rows)
        return RepMorphism.from_flat(source, codomain, flat), self._decomposition(copies)

    def ar_sequence(self, t: int, d: int) -> ARSequence:
        if self.dim(t, d) == 0 or self.dim(t, d + 1) == 0:
            raise ZeroComponentError(f"need V^{t + 1}_{d} and V^{t + 1}_{d + 1} nonzero")
        fmap, decomposition = self.left_mult_f(t, d)
        gmap, _ = self.right_mult_g(t, d + 1)
        return ARSequence(fmap, gmap, decomposition)

    def dims_table(self, max_d: int) -> list[list[int]]:
        return [[self.dim(t, d) for d in range(max_d + 1)] for t in range(self.quiver.vertex_count)]

    def dim_vector(self, t: int, d: int) -> tuple[int, ...]:
        return self.component(t, d).vertex_dims


@functools.lru_cache(maxsize=64)
def engine(dq: DoubledQuiver | Quiver, w: Weights | None, field: FieldSpec) -> Preprojective:
    """Shared memoizing engine for the functional API."""
    return Preprojective(dq, w, field)


def graded_component(dq, w, t, d, field) -> GradedComponent:
    return engine(dq, w, field).component(t, d)


def right_mult_g(dq, w, t, d, field):
    return engine(dq, w, field).right_mult_g(t, d)


def left_mult_f(dq, w, t, d, field):
    return engine(dq, w, field).left_mult_f(t, d)


def ar_sequence(dq, w, t, d, field) -> ARSequence:
    return engine(dq, w, field).ar_sequence(t, d)


def dims_table(dq, w, field, max_d) -> list[list[int]]:
    return engine(dq, w, field).dims_table(max_d)


# direct reduction of the whole path slice

def relation_spanning_set(dq: DoubledQuiver, w: Weights, t: int, d: int, field: FieldSpec):
    """Spanning set ``{x m_s y}`` of ``J ∩ W^t_d``.

    Returns ``(paths, vectors)``: the path basis of ``W^t_d`` in canonical order
    and one coefficient vector per product.
    """
    q = dq.base
    a, b = w.values(q, field)
    paths = paths_of_degree(dq, t, d)
    index = {p.arrows: i for i, p in enumerate(paths)}
    vectors = []
    if d < 1:
        return paths, vectors
    for dy in range(d):
        dx = d - 1 - dy
        for y in paths_of_degree(dq, t, dy):
            s = y.end
            terms = []  # (coefficient, middle arrows in composition order)
            for g in q.arrows_from(s):
                terms.append((a[g.id], (dq.star(g.id).id, g.id)))
            for g in q.arrows_to(s):
                terms.append((field.neg(b[g.id]), (g.id, dq.star(g.id).id)))
            if not terms:
                continue
            for x in paths_of_degree(dq, s, dx):
                vec = [field.zero] * len(paths)
                for coef, mid in terms:
                    i = index[x.arrows + mid + y.arrows]
                    vec[i] = field.add(vec[i], coef)
                vectors.append(vec)
    return paths, vectors


def slice_quotient(dq: DoubledQuiver, w: Weights, t: int, d: int, field: FieldSpec):
    """Reduce all of ``W^t_d`` modulo ``J``.

    Returns ``(paths, relations, basis)``: the path list, the relation space as
    a subspace of the path coordinates, and the non-pivot (surviving) paths.
    """
    paths, vectors = relation_spanning_set(dq, w, t, d, field)
    rel = Subspace.span(field, len(paths), vectors)
    piv = set(rel.pivots)
    return paths, rel, [p for i, p in enumerate(paths) if i not in piv]
