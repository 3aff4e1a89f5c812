import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from preprank.errors import BudgetExceededError, PreprankError
from preprank.exactlinalg import (FieldSpec, Matrix, Subspace, count_subspaces, enumerate_subspaces,
                                  gaussian_binomial, image_basis, is_prime, kernel_basis,
                                  random_subspace, rank, rref)

from .conftest import F3, F5, QQ


def brute_rank(m: Matrix) -> int:
    """log_p of the number of distinct images, by enumerating all inputs."""
    p = m.field.p
    images = {m.apply(v) for v in itertools.product(range(p), repeat=m.ncols)}
    return {p**k: k for k in range(m.nrows + 1)}[len(images)]


def small_matrices(p, max_r=3, max_c=3):
    return st.integers(1, max_r).flatmap(lambda r: st.integers(1, max_c).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_field_parse_and_names():
    assert FieldSpec.parse("7") == FieldSpec.prime(7)
    assert FieldSpec.parse("rational") == QQ
    assert str(FieldSpec.prime(5)) == "F_5" and str(QQ) == "Q"
    with pytest.raises(PreprankError):
        FieldSpec.prime(6)


def test_is_prime_small_table():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(65521) and not is_prime(65521 * 3)


def test_field_arithmetic():
    assert F5.inv(2) == 3 and F5.mul(4, 4) == 1 and F5.elem(-1) == 4
    assert F5.elem(Fraction(1, 2)) == 3
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_rref_example_over_q():
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, k, piv = rref(m)
    assert k == 2 and piv == [0, 1]
    assert r.tolist() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]


@settings(max_examples=60, deadline=None)
@given(small_matrices(3))
def test_rank_matches_brute_force_over_f3(rows):
    m = Matrix.from_rows(F3, rows)
    assert rank(m) == brute_rank(m)


@settings(max_examples=60, deadline=None)
@given(small_matrices(7, 4, 4))
def test_rank_over_q_matches_sympy(rows):
    m = Matrix.from_rows(QQ, [[x - 3 for x in r] for r in rows])
    assert rank(m) == sympy.Matrix([[x - 3 for x in r] for r in rows]).rank()


@settings(max_examples=60, deadline=None)
@given(small_matrices(5, 4, 4))
def test_kernel_and_image(rows):
    m = Matrix.from_rows(F5, rows)
    K = kernel_basis(m)
    assert K.dim == m.ncols - rank(m)
    for v in K.vectors():
        assert not any(m.apply(v))
    assert image_basis(m).dim == rank(m)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), max_size=3))
def test_quotient_projection_kills_subspace(rows):
    S = Subspace.span(F3, 4, rows)
    P = S.quotient_projection()
    assert P.shape == (4 - S.dim, 4)
    assert (P @ S.inclusion()).is_zero()
    assert rank(P) == 4 - S.dim


def test_subspace_canonical_form():
    a = Subspace.span(F3, 3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace.span(F3, 3, [[1, 2, 1], [1, 0, 2]])  # b1 = a1 + a2, b2 = a1 - a2
    assert a == b and a <= b
    assert Subspace.span(F3, 3, [[1, 1, 0], [2, 2, 0]]).dim == 1


def test_gaussian_binomial_values():
    # C(4,2)_2 = 35, C(3,1)_3 = 13, C(4,2)_3 = 130 (hand expansion of the q-binomial)
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(3, 0, 7) == 1 and gaussian_binomial(2, 3, 2) == 0


@pytest.mark.parametrize("p,n", [(2, 3), (2, 4), (3, 3), (5, 2)])
def test_enumeration_is_complete_and_distinct(p, n):
    f = FieldSpec.prime(p)
    # brute force: every subspace is the span of some list of at most n vectors
    vectors = list(itertools.product(range(p), repeat=n))
    brute = set()
    for k in range(n + 1):
        for combo in itertools.combinations(vectors, k):
            brute.add(Subspace.span(f, n, combo))
    listed = [s for k in range(n + 1) for s in enumerate_subspaces(n, k, f)]
    assert len(listed) == len(set(listed)) == count_subspaces(n, f)
    assert set(listed) == brute


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_subspaces(8, 4, F3, budget=100)


def test_random_subspace_is_deterministic():
    f = FieldSpec.prime(65521)
    assert random_subspace(5, 2, f, 9) == random_subspace(5, 2, f, 9)
    assert random_subspace(5, 2, f, 9).dim == 2


def test_matrix_algebra():
    a = Matrix.from_rows(F5, [[1, 2], [3, 4]])
    i = Matrix.identity(F5, 2)
    assert a @ i == a and (a - a).is_zero()
    assert a.T.T == a
    assert a.kron(i).shape == (4, 4)
    assert a.kron(i)[0, 1] == 0 and a.kron(i)[0, 2] == 2
