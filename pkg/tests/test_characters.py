from fractions import Fraction

import pytest

from genschur.characters import TorusPoint, group_basis, character, littlewood_rhs, schur_expansion_z
from genschur.errors import DomainError, SingularError, TruncationError
from genschur.partitions import Partition, enumerate_partitions
from genschur.schurgen import jacobi_trudi

GROUPS = ["sp", "so_even", "so_odd"]
POINTS = {
    1: [(Fraction(2),), (Fraction(-3, 5),)],
    2: [(Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(-5, 3)), (Fraction(7, 4), Fraction(-2))],
    3: [(Fraction(2), Fraction(3), Fraction(-5, 2))],
}


def weyl_dimension(G, lam, n):
    lam = Partition(lam)
    parts = [lam.part(i) for i in range(1, n + 1)]
    if G == "sp":
        l = [Fraction(parts[i] + n - i) for i in range(n)]
        m = [Fraction(n - i) for i in range(n)]
    elif G == "so_odd":
        l = [parts[i] + n - i - Fraction(1, 2) for i in range(n)]
        m = [n - i - Fraction(1, 2) for i in range(n)]
    else:
        l = [Fraction(parts[i] + n - i - 1) for i in range(n)]
        m = [Fraction(n - i - 1) for i in range(n)]
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= (l[i] - l[j]) * (l[i] + l[j]) / ((m[i] - m[j]) * (m[i] + m[j]))
    if G != "so_even":
        for i in range(n):
            d *= l[i] / m[i]
    elif len(lam) == n and lam.part(n) > 0:
        # full-length lambda: the torus sum carries both O(2n) constituents
        d *= 2
    return d


def test_examples():
    assert character("sp", [1], (1, 1)) == 4
    assert character("so_odd", [1], (1, 1)) == 5
    assert character("so_even", [1], (1, 1)) == 4
    x = Fraction(2)
    assert character("sp", [1], (x,)) == x + 1 / x
    assert character("so_odd", [1], (x,)) == x + 1 / x + 1
    assert character("sp", [], (x, 3)) == 1


@pytest.mark.parametrize("G", GROUPS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_dimension(G, n):
    for lam in enumerate_partitions(5 if n < 3 else 4, n):
        assert character(G, lam, (1,) * n) == weyl_dimension(G, lam, n)


def test_so_even_full_length_is_o2n():
    assert character("so_even", [1, 1], (1, 1)) == 6
    assert character("so_even", [2, 2], (1, 1)) == 10


@pytest.mark.parametrize("G", GROUPS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_littlewood_matches_character(G, n):
    for x in POINTS[n]:
        for lam in enumerate_partitions(4 if n < 3 else 3, n):
            assert littlewood_rhs(G, lam, x) == character(G, lam, x)


def test_littlewood_larger_cutoff_unchanged():
    x = (Fraction(2), Fraction(3))
    assert littlewood_rhs("sp", [2, 1], x, cutoff=7) == littlewood_rhs("sp", [2, 1], x)


@pytest.mark.parametrize("G", GROUPS)
def test_routes_agree(G):
    x = (Fraction(2), Fraction(-3, 2))
    p = TorusPoint(x)
    for lam in enumerate_partitions(4, 2):
        a = character(G, lam, x, method="bialternant")
        b = character(G, lam, x, method="expansion")
        assert a == b
        assert jacobi_trudi(group_basis(G, 10), lam, p.z) == a


def test_expansion_z():
    ex = schur_expansion_z("sp", [2], 1)
    assert ex.support() == {Partition([2]): 1, Partition(): -1}
    assert schur_expansion_z("sp", [2, 1], 2).support() == {Partition([2, 1]): 1}
    ex = schur_expansion_z("so_odd", [1], 2)
    assert ex.evaluate_at((Fraction(5, 2), Fraction(10, 3))) == character("so_odd", [1], (2, 3))


def test_errors():
    with pytest.raises(TruncationError):
        littlewood_rhs("sp", [2, 1], (2, 3), cutoff=2)
    with pytest.raises(SingularError):
        littlewood_rhs("sp", [1], (1, 3))
    with pytest.raises(SingularError):
        littlewood_rhs("so_odd", [1], (2, Fraction(1, 2)))
    with pytest.raises(SingularError):
        character("sp", [1], (1, 1), method="bialternant")
    with pytest.raises(DomainError):
        character("gl", [1], (2,))
    with pytest.raises(DomainError):
        TorusPoint((0, 1))
    with pytest.raises(DomainError):
        character("sp", [1], (2,), method="fast")


def test_inverse_point_same_character():
    x, y = (Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(3))
    for G in GROUPS:
        assert character(G, [2, 1], x) == character(G, [2, 1], y)
