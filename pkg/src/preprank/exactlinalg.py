"""Exact scalars and dense linear algebra over prime fields and the rationals.

Elements of ``F_p`` are plain ``int`` values in ``[0, p)``; rationals are
``fractions.Fraction``.  Matrices are immutable and row-major.  Nothing in
this module ever rounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError, PreprankError

#: largest prime below 2**16; default field for randomized genericity checks
DEFAULT_SAMPLING_PRIME = 65521
DEFAULT_ENUMERATION_BUDGET = 10**5
_MAX_SUBSPACE_RETRIES = 1000
_RATIONAL_SAMPLE_BOUND = 2**16


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the prime field ``F_p`` (``kind == "prime"``) or ``Q``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise PreprankError(f"modulus {self.p} is not prime")
            if self.p >= 2**64:
                raise PreprankError("prime modulus must fit in a machine word")
        elif self.kind == "rational":
            if self.p is not None:
                raise PreprankError("rational field takes no modulus")
        else:
            raise PreprankError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """``"rational"``/``"Q"`` or a prime such as ``"65521"``."""
        text = text.strip()
        if text.lower() in ("rational", "q", "qq"):
            return cls.rational()
        try:
            p = int(text)
        except ValueError:
            raise PreprankError(f"cannot parse field {text!r}") from None
        return cls.prime(p)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    def __str__(self):
        return f"F_{self.p}" if self.is_prime else "Q"

    # scalar arithmetic

    def elem(self, x) -> int | Fraction:
        if self.is_prime:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def add(self, x, y):
        return (x + y) % self.p if self.is_prime else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.is_prime else x - y

    def mul(self, x, y):
        return x * y % self.p if self.is_prime else x * y

    def neg(self, x):
        return -x % self.p if self.is_prime else -x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p) if self.is_prime else 1 / x

    def random(self, rng: np.random.Generator):
        """Uniform element of ``F_p``; for ``Q`` a bounded random integer."""
        if self.is_prime:
            return int(rng.integers(0, self.p))
        b = _RATIONAL_SAMPLE_BOUND
        return Fraction(int(rng.integers(-b, b + 1)))

    def to_json(self):
        return {"kind": self.kind, "p": self.p}


def rng_for(seed: int, trial: int = 0) -> np.random.Generator:
    """Generator for trial ``trial`` of a run seeded with ``seed``.

    Every randomized routine derives its stream as ``seed XOR trial``.
    """
    if seed < 0:
        raise PreprankError("seeds are unsigned 64-bit integers")
    return np.random.default_rng(seed ^ trial)


class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, rows):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None
        if len(self.rows) != nrows or any(len(r) != ncols for r in self.rows):
            raise PreprankError(f"entries do not match shape {nrows}x{ncols}")

    @classmethod
    def from_rows(cls, field, rows, ncols=None) -> "Matrix":
        rows = [[field.elem(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field, nrows, ncols) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, nrows, columns) -> "Matrix":
        columns = list(columns)
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(field, nrows, len(columns), rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.shape, self.rows))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, {[list(r) for r in self.rows]})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, zip(*self.rows) if self.nrows else [[]] * self.ncols)

    transpose = T

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise PreprankError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        if f.is_prime:
            p = f.p
            for r in self.rows:
                out.append([sum(a * b for a, b in zip(r, c)) % p for c in cols])
        else:
            for r in self.rows:
                out.append([sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols])
        return Matrix(f, self.nrows, other.ncols, out)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        f = self.field
        if f.is_prime:
            return tuple(sum(a * b for a, b in zip(r, vec)) % f.p for r in self.rows)
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise PreprankError("shape mismatch in addition")
        add = self.field.add
        return Matrix(self.field, self.nrows, self.ncols,
                      [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        c = self.field.elem(c)
        return Matrix(self.field, self.nrows, self.ncols, [[mul(c, x) for x in r] for r in self.rows])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx, col_idx = list(row_idx), list(col_idx)
        return Matrix(self.field, len(row_idx), len(col_idx),
                      [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def hstack(self, *others) -> "Matrix":
        ms = (self, *others)
        if len({m.nrows for m in ms}) != 1:
            raise PreprankError("hstack needs equal row counts")
        rows = [sum((m.rows[i] for m in ms), ()) for i in range(self.nrows)]
        return Matrix(self.field, self.nrows, sum(m.ncols for m in ms), rows)

    def vstack(self, *others) -> "Matrix":
        ms = (self, *others)
        if len({m.ncols for m in ms}) != 1:
            raise PreprankError("vstack needs equal column counts")
        return Matrix(self.field, sum(m.nrows for m in ms), self.ncols,
                      [r for m in ms for r in m.rows])

    def kron(self, other: "Matrix") -> "Matrix":
        mul = self.field.mul
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append([mul(a, b) for a in r for b in s])
        return Matrix(self.field, self.nrows * other.nrows, self.ncols * other.ncols, rows)

    @property
    def rank(self) -> int:
        return rref(self)[1]


def block_diag(field, blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    z = field.zero
    rows = []
    c0 = 0
    for b in blocks:
        for r in b.rows:
            rows.append([z] * c0 + list(r) + [z] * (nc - c0 - b.ncols))
        c0 += b.ncols
    return Matrix(field, nr, nc, rows)


def _rref_rows(field: FieldSpec, rows, ncols):
    """Gauss-Jordan on a list of rows; returns (nonzero reduced rows, pivots)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    prime = field.is_prime
    p = field.p
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if prime:
            inv = pow(rows[r][c], -1, p)
            pr = [x * inv % p for x in rows[r]]
        else:
            inv = 1 / rows[r][c]
            pr = [x * inv for x in rows[r]]
        rows[r] = pr
        for i in range(nrows):
            if i == r:
                continue
            fac = rows[i][c]
            if fac:
                if prime:
                    rows[i] = [(a - fac * b) % p for a, b in zip(rows[i], pr)]
                else:
                    rows[i] = [a - fac * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form.

    Returns ``(reduced, rank, pivots)`` where ``reduced`` has the same shape as
    ``m`` (zero rows at the bottom) and ``pivots`` are strictly increasing.
    """
    nz, pivots = _rref_rows(m.field, m.rows, m.ncols)
    zero_row = [m.field.zero] * m.ncols
    full = nz + [zero_row] * (m.nrows - len(nz))
    return Matrix(m.field, m.nrows, m.ncols, full), len(pivots), pivots


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.field, m.rows, m.ncols)[1])


def has_max_rank(m: Matrix) -> bool:
    """True iff the map is injective or surjective."""
    return rank(m) == min(m.nrows, m.ncols)


def is_injective(m: Matrix) -> bool:
    return rank(m) == m.ncols


def is_surjective(m: Matrix) -> bool:
    return rank(m) == m.nrows


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field**ambient_dim``, stored by its canonical RREF basis.

    Two subspaces are equal as sets iff they compare equal.
    """

    field: FieldSpec
    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.ncols != self.ambient_dim:
            raise PreprankError("basis width differs from ambient dimension")

    @classmethod
    def span(cls, field, ambient_dim, vectors) -> "Subspace":
        vectors = [[field.elem(x) for x in v] for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise PreprankError(f"vectors must have length {ambient_dim}")
        nz, _ = _rref_rows(field, vectors, ambient_dim)
        return cls(field, ambient_dim, Matrix(field, len(nz), ambient_dim, nz))

    @classmethod
    def zero(cls, field, ambient_dim) -> "Subspace":
        return cls(field, ambient_dim, Matrix(field, 0, ambient_dim, []))

    @classmethod
    def full(cls, field, ambient_dim) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis.rows]

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows)

    def contains(self, v) -> bool:
        return Subspace.span(self.field, self.ambient_dim, [*self.basis.rows, v]).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, [*self.basis.rows, *other.basis.rows])

    def inclusion(self) -> Matrix:
        """``ambient x dim`` matrix whose columns are the basis vectors."""
        return self.basis.T

    def quotient_projection(self) -> Matrix:
        """Projection onto ``ambient / self`` in the non-pivot coordinates."""
        f = self.field
        piv = self.pivots
        free = [j for j in range(self.ambient_dim) if j not in set(piv)]
        cols = []
        for j in range(self.ambient_dim):
            col = [f.zero] * len(free)
            if j in piv:
                r = self.basis.rows[piv.index(j)]
                for k, c in enumerate(free):
                    col[k] = f.neg(r[c])
            else:
                col[free.index(j)] = f.one
            cols.append(col)
        return Matrix.from_columns(f, len(free), cols)

    def to_json(self):
        return {"ambient_dim": self.ambient_dim, "basis": [[str(x) for x in r] for r in self.basis.rows]}


def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace."""
    f = m.field
    nz, pivots = _rref_rows(f, m.rows, m.ncols)
    pset = set(pivots)
    vecs = []
    for free in range(m.ncols):
        if free in pset:
            continue
        v = [f.zero] * m.ncols
        v[free] = f.one
        for row, pc in zip(nz, pivots):
            v[pc] = f.neg(row[free])
        vecs.append(v)
    return Subspace.span(f, m.ncols, vecs)


def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.field, m.nrows, m.columns())


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _require_prime(field: FieldSpec, what: str):
    if not field.is_prime:
        raise PreprankError(f"{what} needs a prime field, got {field}")


def enumerate_subspaces(ambient: int, dim: int, field: FieldSpec,
                        budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[Subspace]:
    """Every ``dim``-dimensional subspace of ``F_p^ambient``, each exactly once.

    Raises :class:`BudgetExceededError` (with the exact count) up front when
    the Gaussian binomial exceeds ``budget``.
    """
    _require_prime(field, "subspace enumeration")
    if not 0 <= dim <= ambient:
        raise PreprankError(f"no {dim}-dimensional subspaces of a {ambient}-dimensional space")
    count = gaussian_binomial(ambient, dim, field.p)
    if count > budget:
        raise BudgetExceededError(count, budget)
    return _iter_subspaces(ambient, dim, field)


def _iter_subspaces(ambient, dim, field):
    p = field.p
    for pivots in itertools.combinations(range(ambient), dim):
        pset = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, ambient) if c not in pset]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * ambient for _ in range(dim)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            yield Subspace(field, ambient, Matrix(field, dim, ambient, rows))


def count_subspaces(ambient: int, field: FieldSpec) -> int:
    """All subspaces of every dimension."""
    return sum(gaussian_binomial(ambient, k, field.p) for k in range(ambient + 1))


def random_matrix(field, nrows, ncols, rng) -> Matrix:
    return Matrix(field, nrows, ncols, [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)])


def sample_subspace(ambient: int, dim: int, field: FieldSpec, rng: np.random.Generator) -> Subspace:
    """Like :func:`random_subspace` but drawing from an existing generator."""
    if not 0 <= dim <= ambient:
        raise PreprankError(f"no {dim}-dimensional subspaces of a {ambient}-dimensional space")
    for _ in range(_MAX_SUBSPACE_RETRIES):
        m = random_matrix(field, dim, ambient, rng)
        nz, piv = _rref_rows(field, m.rows, ambient)
        if len(piv) == dim:
            return Subspace(field, ambient, Matrix(field, dim, ambient, nz))
    raise PreprankError(f"no full-rank {dim}x{ambient} sample after {_MAX_SUBSPACE_RETRIES} draws")


def random_subspace(ambient: int, dim: int, field: FieldSpec, seed: int) -> Subspace:
    """Seeded uniform-entry sample of a ``dim``-dimensional subspace."""
    _require_prime(field, "random_subspace")
    return sample_subspace(ambient, dim, field, rng_for(seed))
