"""
Exact rational scalars and small dense matrices.

Everything is built on :class:`fractions.Fraction`.  Matrices are immutable,
row-major and indexed from the top-left corner; constructors elsewhere in the
package translate the bottom-up labelling of semi-infinite matrices into this
single orientation.
"""

from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC

from .errors import DimensionError, NotNilpotentError, ShapeError, SingularError

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "to_rational",
    "format_rational",
    "det",
    "invert_unitriangular",
    "inverse",
    "exp_nilpotent",
    "vandermonde",
]


def to_rational(value):
    """Coerce ints, Fractions and strings like ``"3/7"`` to a Fraction.

    Floats are refused: they would silently smuggle rounding into exact paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value):
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        data = tuple(tuple(to_rational(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise DimensionError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _wrap(cls, rows, ncols):
        # trusted constructor: rows already tuples of Fractions
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_function(cls, nrows, ncols, f):
        return cls._wrap(
            tuple(tuple(Fraction(f(i, j)) for j in range(ncols)) for i in range(nrows)),
            ncols,
        )

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def is_square(self):
        return self.nrows == self.ncols

    def transpose(self):
        return Matrix._wrap(tuple(zip(*self._rows)) if self.nrows else (), self.nrows)

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        self._same_shape(other)
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols,
        )

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols,
        )

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self._rows), self.ncols)

    def scale(self, c):
        c = to_rational(c)
        return Matrix._wrap(tuple(tuple(c * a for a in r) for r in self._rows), self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other._rows)) if other.nrows else ((),) * other.ncols
        zero = Fraction(0)
        out = []
        for r in self._rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), zero) for c in cols))
        return Matrix._wrap(tuple(out), other.ncols)

    def apply(self, vector):
        """Matrix times column vector (given as a sequence)."""
        if len(vector) != self.ncols:
            raise DimensionError("vector length mismatch")
        return tuple(sum((a * v for a, v in zip(r, vector) if a), Fraction(0)) for r in self._rows)

    def submatrix(self, rows, cols):
        return Matrix._wrap(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def leading(self, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return self.submatrix(range(nrows), range(ncols))

    def is_integral(self):
        return all(v.denominator == 1 for r in self._rows for v in r)

    def is_lower_triangular(self, strict=False):
        return all(
            not self._rows[i][j] for i in range(self.nrows) for j in range(self.ncols)
            if j > i or (strict and j == i)
        )

    def is_upper_triangular(self, strict=False):
        return all(
            not self._rows[i][j] for i in range(self.nrows) for j in range(self.ncols)
            if j < i or (strict and j == i)
        )

    def to_json(self):
        return [[format_rational(v) for v in r] for r in self._rows]

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")


def _bareiss(rows):
    # rows: list of lists of ints, consumed
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _gauss(rows):
    n = len(rows)
    result = Fraction(1)
    for k in range(n):
        for i in range(k, n):
            if rows[i][k]:
                break
        else:
            return Fraction(0)
        if i != k:
            rows[k], rows[i] = rows[i], rows[k]
            result = -result
        pivot = rows[k][k]
        result *= pivot
        rk = rows[k]
        for i in range(k + 1, n):
            f = rows[i][k] / pivot
            if f:
                ri = rows[i]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return result


def det(m):
    """Exact determinant; the 0x0 determinant is 1.

    Integer matrices go through Bareiss' fraction-free elimination, anything
    else through Gaussian elimination pivoting on the first nonzero entry.
    """
    if not isinstance(m, Matrix):
        m = Matrix(m)
    if not m.is_square():
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]
    if m.is_integral():
        return Fraction(_bareiss([[int(v) for v in r] for r in m.rows]))
    return _gauss([list(r) for r in m.rows])


def invert_unitriangular(m):
    """Inverse of a lower or upper triangular matrix with unit diagonal."""
    if not m.is_square():
        raise DimensionError("inverse of non-square matrix")
    n = m.nrows
    if any(m[i, i] != 1 for i in range(n)):
        raise ShapeError("diagonal entries must all equal 1")
    if m.is_lower_triangular():
        return _invert_lower(m)
    if m.is_upper_triangular():
        return _invert_lower(m.transpose()).transpose()
    raise ShapeError("matrix is not triangular")


def _invert_lower(m):
    n = m.nrows
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1)
        for i in range(j + 1, n):
            inv[i][j] = -sum((m[i, k] * inv[k][j] for k in range(j, i) if m[i, k]), Fraction(0))
    return Matrix._wrap(tuple(tuple(r) for r in inv), n)


def exp_nilpotent(m, t=1):
    """``exp(t*m)`` for strictly triangular ``m`` as the finite sum of (t m)^k / k!."""
    if not m.is_square():
        raise DimensionError("exponential of non-square matrix")
    if not (m.is_lower_triangular(strict=True) or m.is_upper_triangular(strict=True)):
        raise NotNilpotentError("matrix must be strictly triangular")
    t = to_rational(t)
    n = m.nrows
    tm = m.scale(t)
    result = Matrix.identity(n)
    power = Matrix.identity(n)
    for k in range(1, n):
        power = power @ tm
        if not any(any(r) for r in power.rows):
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def vandermonde(xs):
    """``prod_{i<j} (x_i - x_j)``."""
    xs = [to_rational(x) for x in xs]
    out = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out *= xs[i] - xs[j]
    return out


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination."""
    if not m.is_square():
        raise DimensionError("inverse of non-square matrix")
    n = m.nrows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows)]
    for k in range(n):
        for i in range(k, n):
            if aug[i][k]:
                break
        else:
            raise SingularError("matrix is singular")
        aug[k], aug[i] = aug[i], aug[k]
        pivot = aug[k][k]
        aug[k] = [v / pivot for v in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    return Matrix._wrap(tuple(tuple(r[n:]) for r in aug), n)
