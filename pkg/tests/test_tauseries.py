from fractions import Fraction

import pytest

from genschur.errors import LengthError, TruncationError
from genschur.partitions import enumerate_partitions
from genschur.polybasis import monomial_basis, so_even_basis, so_odd_basis, sp_basis
from genschur.schurgen import bialternant, expansion_coeffs
from genschur.symfun import monomial_sums, schur_t
from genschur.tauseries import family_check, kp_coefficient_check, tau_pair, tau_phi, tau_series

BASES = [monomial_basis, sp_basis, so_even_basis, so_odd_basis]
T = (Fraction(1, 2), Fraction(-1, 3), Fraction(2))
S = (Fraction(3), Fraction(1, 4))


def test_examples():
    assert tau_phi(monomial_basis(8), 2, T, (), 4)["value"] == 1
    assert tau_phi(sp_basis(8), 2, (), (), 4)["value"] == 1
    r = tau_phi(sp_basis(4), 1, (1,), (), 2)
    assert r == {"value": Fraction(1, 2), "terms": 3, "cutoff": 2}
    assert tau_pair(monomial_basis(4), monomial_basis(4), 2, T, S, 0)["value"] == 1


def test_terms_count():
    assert tau_phi(sp_basis(9), 2, T, S, 5)["terms"] == len(enumerate_partitions(5, 2))


@pytest.mark.parametrize("mk", BASES)
def test_pair_with_monomial_reduces(mk):
    for n in (1, 2, 3):
        a = tau_pair(mk(10), monomial_basis(10), n, T, S, 4)["value"]
        assert a == tau_phi(mk(10), n, T, S, 4)["value"]


@pytest.mark.parametrize("mk", BASES)
def test_lemma_route(mk):
    x = (Fraction(1, 3), Fraction(-2, 5))
    s = monomial_sums(x, 6)
    for cutoff in range(6):
        direct = tau_phi(mk(12), 2, T, s, cutoff)["value"]
        via = sum(bialternant(mk(12), lam, x) * schur_t(lam, T)
                  for lam in enumerate_partitions(cutoff, 2))
        assert direct == via


@pytest.mark.parametrize("mk", BASES)
def test_s_zero_keeps_empty_column(mk):
    phi = mk(10)
    expected = sum(expansion_coeffs(phi, lam, 2)[()] * schur_t(lam, T)
                   for lam in enumerate_partitions(5, 2))
    assert tau_phi(phi, 2, T, (), 5)["value"] == expected


def test_cutoff_monotonicity():
    series = {c: tau_series(sp_basis(10), 2, c) for c in range(6)}
    for c in range(5):
        new = {k: v for k, v in series[c + 1].coefficients.items() if k not in series[c].coefficients}
        assert all(lam.weight == c + 1 for lam, _ in new)
        assert series[c].coefficients.items() <= series[c + 1].coefficients.items()


def test_support_bounds():
    ts = tau_series(so_odd_basis(10), 3, 5)
    for lam, mu in ts.coefficients:
        assert lam.weight <= 5 and mu.weight <= lam.weight and len(lam) <= 3 and len(mu) <= 3


def test_truncation():
    with pytest.raises(TruncationError):
        tau_phi(sp_basis(5), 2, T, S, 4)


def test_kp_examples():
    for lam in enumerate_partitions(5, 3):
        assert kp_coefficient_check(monomial_basis(10), 3, lam)
    assert kp_coefficient_check(sp_basis(8), 2, [2, 2], max_rank=2)
    fam = expansion_coeffs(sp_basis(8), [2, 2], 2)
    assert not family_check(fam.with_value([1, 1], fam[[1, 1]] + 3), 2)
    with pytest.raises(LengthError):
        kp_coefficient_check(sp_basis(8), 1, [1, 1])


@pytest.mark.parametrize("mk", BASES)
def test_kp_all_bases(mk):
    for lam in enumerate_partitions(5, 3):
        assert kp_coefficient_check(mk(12), 3, lam, max_rank=2)
