from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from genschur.errors import DimensionError, NotNilpotentError, ShapeError, SingularError
from genschur.kernel import (
    Matrix,
    det,
    exp_nilpotent,
    format_rational,
    inverse,
    invert_unitriangular,
    to_rational,
    vandermonde,
)
from genschur.polybasis import sp_basis


def leibniz(rows):
    """Permutation expansion; independent of both elimination paths."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod((rows[i][perm[i]] for i in range(n)), start=Fraction(1))
    return total


def square(size, elements):
    return st.lists(st.lists(elements, min_size=size, max_size=size), min_size=size, max_size=size)


sizes = st.integers(1, 4)


def test_det_examples():
    assert det(Matrix([[1, 2], [3, 4]])) == -2
    assert det(Matrix.identity(5)) == 1
    nodes = [1, 2, 3]
    V = Matrix([[x ** (2 - i) for x in nodes] for i in range(3)])
    assert det(V) == (1 - 2) * (1 - 3) * (2 - 3) == -2
    assert det(Matrix([])) == 1


def test_det_rejects_rectangular():
    with pytest.raises(DimensionError):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


@given(sizes.flatmap(lambda n: square(n, st.integers(-9, 9))))
def test_bareiss_matches_leibniz(rows):
    assert det(Matrix(rows)) == leibniz(rows)


@given(sizes.flatmap(lambda n: square(n, rationals())))
def test_gauss_matches_leibniz(rows):
    assert det(Matrix(rows)) == leibniz(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n, rationals()), square(n, rationals()))))
def test_det_multiplicative(pair):
    a, b = Matrix(pair[0]), Matrix(pair[1])
    assert det(a @ b) == det(a) * det(b)


def test_invert_unitriangular_examples():
    assert invert_unitriangular(Matrix.identity(3)) == Matrix.identity(3)
    c = Fraction(5, 3)
    assert invert_unitriangular(Matrix([[1, 0], [c, 1]])) == Matrix([[1, 0], [-c, 1]])
    A = sp_basis(4).coeffs
    assert A @ invert_unitriangular(A) == Matrix.identity(4)


def test_invert_unitriangular_rejects_bad_diagonal():
    with pytest.raises(ShapeError):
        invert_unitriangular(Matrix([[2, 0], [1, 1]]))
    with pytest.raises(ShapeError):
        invert_unitriangular(Matrix([[1, 1], [1, 1]]))


@st.composite
def unitriangular(draw, lower=True):
    n = draw(st.integers(1, 5))
    vals = draw(st.lists(rationals(), min_size=n * n, max_size=n * n))
    return Matrix.from_function(
        n, n, lambda i, j: 1 if i == j else (vals[i * n + j] if (j < i) == lower else 0)
    )


@given(st.one_of(unitriangular(True), unitriangular(False)))
def test_unitriangular_inverse_both_orders(m):
    inv = invert_unitriangular(m)
    eye = Matrix.identity(m.nrows)
    assert inv @ m == eye and m @ inv == eye
    assert inv.is_lower_triangular() == m.is_lower_triangular()


def test_inverse_general_and_singular():
    m = Matrix([[0, 2], [3, 4]])
    assert m @ inverse(m) == Matrix.identity(2)
    with pytest.raises(SingularError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_exp_nilpotent_examples():
    assert exp_nilpotent(Matrix.zeros(4)) == Matrix.identity(4)
    t = Fraction(2, 3)
    sup = Matrix.from_function(5, 5, lambda i, j: 1 if j == i + 1 else 0)
    E = exp_nilpotent(sup, t)
    for i in range(5):
        for j in range(5):
            d = j - i
            assert E[i, j] == (t ** d / factorial(d) if d >= 0 else 0)
    assert exp_nilpotent(sup, 0) == Matrix.identity(5)


def test_exp_nilpotent_rejects_diagonal():
    with pytest.raises(NotNilpotentError):
        exp_nilpotent(Matrix([[1, 0], [0, 0]]))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(rationals(), min_size=n * n, max_size=n * n)
                                  .map(lambda v, n=n: Matrix.from_function(
                                      n, n, lambda i, j: v[i * n + j] if j < i else 0))),
       rationals(), rationals())
def test_exp_group_law(m, s, t):
    assert exp_nilpotent(m, s) @ exp_nilpotent(m, t) == exp_nilpotent(m, s + t)


def test_rational_coercion():
    assert to_rational("3/7") == Fraction(3, 7)
    assert to_rational(4) == 4
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-8, 4)) == "-2"
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


@given(st.lists(rationals(), min_size=1, max_size=5, unique=True))
def test_vandermonde_matches_determinant(xs):
    n = len(xs)
    V = Matrix([[x ** (n - 1 - i) for x in xs] for i in range(n)])
    assert det(V) == vandermonde(xs)
