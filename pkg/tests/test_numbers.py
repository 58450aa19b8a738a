from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from gammaft.errors import DomainError
from gammaft.numbers import (
    bernoulli_number,
    euler_number,
    euler_polynomial,
    gamma_residue,
    laguerre_diagonal,
    monomial_sum,
)


def bernoulli_ref(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def euler_poly_ref(m, x):
    vals = []
    for n in range(m + 1):
        vals.append(x ** n - Fraction(1, 2) * sum(comb(n, k) * vals[k] for k in range(n)))
    return vals[m]


B = bernoulli_ref(22)
EULER = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765, 0, -199360981, 0, 19391512145]


def test_euler_polynomial_examples():
    assert euler_polynomial(0, Fraction(2, 5)) == 1
    assert euler_polynomial(1, Fraction(1, 3)) == Fraction(-1, 6)
    assert euler_polynomial(2, Fraction(1, 2)) == Fraction(-1, 4)


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1, 11)])
def test_euler_polynomial_recurrence(x):
    for m in range(11):
        assert euler_polynomial(m, x) == euler_poly_ref(m, x)


def test_euler_polynomial_domain():
    for bad in (Fraction(0), Fraction(1), Fraction(3, 2), Fraction(-1, 2)):
        with pytest.raises(DomainError):
            euler_polynomial(2, bad)
    with pytest.raises(DomainError):
        euler_polynomial(2, 0.5)


def test_euler_numbers():
    assert [euler_number(m) for m in range(17)] == EULER
    assert all(euler_number(m) == 0 for m in range(1, 16, 2))
    for m in range(13):
        assert euler_number(m) == 2 ** m * euler_polynomial(m, Fraction(1, 2))


def test_bernoulli_examples():
    assert bernoulli_number(1, "eq48") == Fraction(-1, 2)
    assert bernoulli_number(1, "eq47") == Fraction(1, 6)
    assert bernoulli_number(12, "eq48") == Fraction(-691, 2730)


def test_bernoulli_against_recurrence():
    for m in range(1, 21):
        assert bernoulli_number(m, "eq48") == B[m]
    for m in range(1, 20):
        assert bernoulli_number(m, "eq47") == bernoulli_number(m + 1, "eq48") == B[m + 1]


def test_bernoulli_variant_and_range():
    with pytest.raises(DomainError):
        bernoulli_number(3, "eq49")
    with pytest.raises(DomainError):
        bernoulli_number(0)


def test_case1_identity_links_euler_and_bernoulli():
    # E_n(1) = 2 (2^(n+1) - 1) B_(n+1) / (n+1); E_n(1) = -E_n(0) for n >= 1
    for n in range(1, 12):
        e1 = euler_poly_ref(n, Fraction(1))
        assert e1 == 2 * (2 ** (n + 1) - 1) * B[n + 1] / (n + 1)


def test_small_examples():
    assert monomial_sum(0, Fraction(3, 4)) == 1
    assert monomial_sum(2, 3) == 9
    assert monomial_sum(5, Fraction(1, 2)) == Fraction(1, 32)
    assert gamma_residue(0) == 1 and gamma_residue(1) == -1 and gamma_residue(4) == Fraction(1, 24)
    assert laguerre_diagonal(0, 5) == 1
    assert laguerre_diagonal(2, 2) == 2
    assert laguerre_diagonal(3, Fraction(1, 2)) == Fraction(-1, 48)


@given(st.integers(0, 10), st.fractions(-5, 5, max_denominator=30))
def test_identities_exact(m, beta):
    assert monomial_sum(m, beta) == beta ** m
    assert laguerre_diagonal(m, beta) == (-1) ** m * beta ** m / factorial(m)


@pytest.mark.parametrize("beta", [Fraction(1, 7), Fraction(2), Fraction(5, 3), Fraction(-1, 2), Fraction(-3)])
def test_identities_at_listed_points(beta):
    for m in range(11):
        assert monomial_sum(m, beta) == beta ** m
        assert laguerre_diagonal(m, beta) == (-1) ** m * beta ** m / factorial(m)
        assert gamma_residue(m) == Fraction((-1) ** m, factorial(m))


def test_results_are_fractions():
    for v in (euler_number(6), bernoulli_number(5), euler_polynomial(3, Fraction(1, 4)),
              monomial_sum(3, 2), gamma_residue(3), laguerre_diagonal(3, 2)):
        assert isinstance(v, Fraction)
