from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import distinct_points, rationals
from genschur.kernel import Matrix, det, vandermonde
from genschur.partitions import enumerate_partitions, partitions_of
from genschur.symfun import (
    FlowVector,
    complete_h,
    elementary_e,
    elementary_from_values,
    kostka,
    littlewood_richardson,
    monomial_sums,
    schur_at,
    schur_product_expansion,
    schur_t,
)

X = [Fraction(1, 2), Fraction(1, 3)]


def h_brute(xs, k):
    """Sum of all degree-k monomials."""
    total = Fraction(0)
    for exps in product(range(k + 1), repeat=len(xs)):
        if sum(exps) == k:
            term = Fraction(1)
            for x, e in zip(xs, exps):
                term *= x ** e
            total += term
    return total


def classical_bialternant(lam, xs):
    n = len(xs)
    lam = list(lam) + [0] * (n - len(lam))
    num = Matrix([[x ** (lam[i] + n - 1 - i) for x in xs] for i in range(n)])
    return det(num) / vandermonde(xs)


def test_monomial_sums_examples():
    assert monomial_sums([1], 3) == (1, Fraction(1, 2), Fraction(1, 3))
    assert monomial_sums([1, -1], 2) == (0, 1)
    assert monomial_sums([2, 3], 2) == (5, Fraction(13, 2))


def test_complete_h_examples():
    t = FlowVector([Fraction(2, 3), Fraction(-1, 5), Fraction(7, 2)])
    assert complete_h(t, 1) == t.t(1)
    assert complete_h(t, 2) == t.t(1) ** 2 / 2 + t.t(2)
    assert complete_h(t, 0) == 1 and complete_h(t, -1) == 0
    s = monomial_sums(X, 4)
    for k in range(5):
        assert complete_h(s, k) == h_brute(X, k)


def test_schur_t_examples():
    t = FlowVector([Fraction(3, 4), Fraction(-2, 7)])
    assert schur_t([], t) == 1
    assert schur_t([2], t) == t.t(1) ** 2 / 2 + t.t(2)
    assert schur_t([1, 1], t) == t.t(1) ** 2 / 2 - t.t(2)


@given(st.integers(1, 3).flatmap(distinct_points))
def test_schur_t_matches_bialternant(xs):
    for lam in enumerate_partitions(5, len(xs)):
        assert schur_at(lam, xs) == classical_bialternant(lam, xs)


def test_schur_independent_of_n():
    # padding with zeros does not change S_lambda([x]) once n >= l(lambda)
    xs = [Fraction(2, 5), Fraction(-1, 3)]
    for lam in enumerate_partitions(5, 2):
        base = schur_at(lam, xs)
        for extra in range(1, 3):
            assert schur_at(lam, xs + [Fraction(0)] * extra) == base
    assert schur_at([1, 1, 1], xs) == 0


def test_elementary_routes_agree():
    xs = [Fraction(1, 2), Fraction(-3), Fraction(5, 7)]
    e = elementary_from_values(xs)
    t = monomial_sums(xs, 4)
    assert [elementary_e(t, k) for k in range(5)] == e + [0]
    assert e[1] == sum(xs) and e[3] == xs[0] * xs[1] * xs[2]


def test_kostka_small():
    assert kostka([2, 1], [1, 1, 1]) == 2
    assert kostka([3], [1, 2]) == 1
    assert kostka([1, 1], [2]) == 0
    # K_{lambda,(1^n)} counts standard tableaux
    assert kostka([3, 2], [1] * 5) == 5


def test_lr_examples():
    assert littlewood_richardson([1], [1], [2]) == 1
    assert littlewood_richardson([1], [1], [1, 1]) == 1
    assert littlewood_richardson([2, 1], [], [2, 1]) == 1
    assert littlewood_richardson([2, 1], [2, 1], [3, 2, 1]) == 2
    assert littlewood_richardson([1], [1], [3]) == 0


@pytest.mark.parametrize("wmu,wnu", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_lr_product_identity(wmu, wnu):
    xs = [Fraction(1, 2), Fraction(-2, 3), Fraction(3), Fraction(5, 4)]
    for mu in partitions_of(wmu):
        for nu in partitions_of(wnu):
            lhs = schur_at(mu, xs) * schur_at(nu, xs)
            rhs = sum(c * schur_at(lam, xs) for lam, c in schur_product_expansion(mu, nu).items())
            assert lhs == rhs
            for lam in partitions_of(wmu + wnu):
                assert littlewood_richardson(mu, nu, lam) == littlewood_richardson(nu, mu, lam)


def test_pieri_rule():
    for mu in enumerate_partitions(4):
        for lam in partitions_of(mu.weight + 1):
            inside = lam.contains(mu)
            assert littlewood_richardson(mu, [1], lam) == (1 if inside else 0)


@given(rationals(), rationals())
def test_flow_vector_tail_zero(a, b):
    t = FlowVector([a, b])
    assert t.t(3) == 0 and t.t(1) == a
