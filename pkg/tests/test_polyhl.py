
import numpy as np
import pytest

from preprank.errors import ProfileError
from preprank.polyhl import GradedPolyRing, check_hl, hl_parameters, hl_products, n_of

from .conftest import BIG, F5


def test_n_of():
    assert n_of(1, 7) == 1
    assert n_of(2, 2) == 3
    assert n_of(3, 3) == 10
    assert n_of(4, 0) == 1


def test_monomial_order():
    R = GradedPolyRing(2, F5)
    assert R.monomials(2) == ((2, 0), (1, 1), (0, 2))
    for r in range(1, 5):
        for d in range(5):
            mons = GradedPolyRing(r, F5).monomials(d)
            assert len(mons) == n_of(r, d) == len(set(mons))
            assert list(mons) == sorted(mons, reverse=True)


@pytest.mark.parametrize("r,d,expected", [(2, 2, (2, 2)), (3, 2, (4, 1)), (1, 2, (1, 1)), (1, 5, (1, 1))])
def test_hl_parameters(r, d, expected):
    assert hl_parameters(r, d) == expected


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("d", range(2, 6))
def test_hl_parameters_inequalities(r, d):
    n, s = hl_parameters(r, d)
    N = n_of(r, d + 1)
    assert (n - 1) * r < N <= n * r
    assert 1 <= s <= r
    assert (n - 1) * r + s == N
    R = GradedPolyRing(r, F5)
    forms = [R.random_form(d, np.random.default_rng(0)) for _ in range(n)]
    assert hl_products(R, d, forms).shape == (N, N)


def test_multiplication_commutes_and_is_bilinear():
    R = GradedPolyRing(3, F5)
    rng = np.random.default_rng(3)
    for _ in range(30):
        F, G, H = R.random_form(2, rng), R.random_form(1, rng), R.random_form(1, rng)
        assert R.multiply(F, 2, G, 1) == R.multiply(G, 1, F, 2)
        GH = tuple(F5.add(x, y) for x, y in zip(G, H))
        assert R.multiply(F, 2, GH, 1) == tuple(
            F5.add(x, y) for x, y in zip(R.multiply(F, 2, G, 1), R.multiply(F, 2, H, 1)))


def test_multiplication_example():
    R = GradedPolyRing(2, F5)
    # (x + y)^2 = x^2 + 2xy + y^2
    assert R.multiply((1, 1), 1, (1, 1), 1) == (1, 2, 1)


def test_univariate_case():
    R = GradedPolyRing(1, F5)
    assert hl_products(R, 3, [(0,)]).tolist() == [[0]]
    assert check_hl(1, 3, trials=20, field=BIG).passed


def test_check_hl_certificates():
    c = check_hl(2, 2, trials=100, seed=7)
    assert c.passed and c.details["passes"] == 100 and (c.details["n"], c.details["s"]) == (2, 2)
    assert check_hl(3, 2, trials=100, seed=1).details["passes"] == 100
    with pytest.raises(ProfileError):
        check_hl(2, 1)
