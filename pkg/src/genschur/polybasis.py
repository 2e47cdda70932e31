"""
Monic polynomial bases and their recursion matrices.

Orientation
-----------
A basis truncated at ``N`` is stored as the lower-unitriangular ``N x N``
matrix ``coeffs`` with ``coeffs[i, j]`` the coefficient of ``x**j`` in
``phi_i``.  Rows are labelled top-down starting from ``phi_0``.  Labelling the
same rows bottom-up (``phi_0`` at the bottom) turns this into an upper
triangular array, which is how the matrix is usually drawn for semi-infinite
Grassmannians; no reversed copy is ever stored.

Multiplication by ``x`` on coefficient rows is the shift ``S`` with
``S[i, i+1] = 1``.  The recursion matrix is ``J = A S A^-1`` (``A`` the
coefficient matrix), so ``x phi_i = phi_{i+1} + sum_{k<=i} Jplus[i, k] phi_k``:
``J`` is the shift plus the lower triangle ``Jplus``.  The companion
``Jtilde = A S^T A^-1`` is a right inverse of ``J``.
"""

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb

from .errors import DimensionError, ShapeError, TruncationError
from .kernel import Matrix, det, invert_unitriangular, to_rational

__all__ = [
    "PolyBasis",
    "RecursionData",
    "monomial_basis",
    "sp_basis",
    "so_even_basis",
    "so_odd_basis",
    "from_recursion",
    "from_coefficients",
    "recursion_of",
    "evaluate",
    "window",
    "shift_matrix",
    "group_recursion",
    "basis_from_spec",
    "BASIS_KINDS",
    "intertwining_holds",
]


@dataclass(frozen=True)
class PolyBasis:
    coeffs: Matrix
    kind: str = "coeffs"

    def __post_init__(self):
        m = self.coeffs
        if not m.is_square() or m.nrows == 0:
            raise DimensionError("coefficient matrix must be square and nonempty")
        if not m.is_lower_triangular():
            raise ShapeError("phi_i may only involve powers x^j with j <= i")
        if any(m[i, i] != 1 for i in range(m.nrows)):
            raise ShapeError("polynomials must be monic")

    @property
    def N(self):
        return self.coeffs.nrows

    def coefficient(self, i, j):
        if not 0 <= i < self.N:
            raise TruncationError(f"phi_{i} lies beyond truncation N={self.N}")
        return self.coeffs[i, j] if 0 <= j <= i else Fraction(0)

    def poly(self, i):
        """Coefficients ``(phi_{i,0}, ..., phi_{i,i})``."""
        if not 0 <= i < self.N:
            raise TruncationError(f"phi_{i} lies beyond truncation N={self.N}")
        return self.coeffs.row(i)[: i + 1]

    def __call__(self, i, x):
        return evaluate(self, i, x)

    def require(self, N, what=""):
        if self.N < N:
            raise TruncationError(
                f"{what or 'operation'} needs truncation N >= {N}, basis has N={self.N}"
            )


@dataclass(frozen=True)
class RecursionData:
    """``J`` and ``Jtilde`` on the truncation; both exact on rows ``< window``."""

    J: Matrix
    Jtilde: Matrix
    window: int

    @property
    def Jplus(self):
        n = self.J.nrows
        return Matrix.from_function(n, n, lambda i, j: self.J[i, j] if j <= i else 0)


def shift_matrix(N):
    """``S`` with ``S[i, i+1] = 1`` (multiplication by x on coefficient rows)."""
    return Matrix.from_function(N, N, lambda i, j: 1 if j == i + 1 else 0)


def monomial_basis(N):
    if N < 1:
        raise DimensionError("truncation must be at least 1")
    return PolyBasis(Matrix.identity(N), "monomial")


def _sp_entry(i, j):
    if (i - j) % 2:
        return 0
    if i % 2 == 0:
        a, b = i // 2, j // 2
        return (-1) ** (a + b) * comb(a + b, a - b)
    a, b = (i - 1) // 2, (j - 1) // 2
    return (-1) ** (a + b) * comb(a + b + 1, a - b)


def _so_even_entry(i, j):
    if (i - j) % 2:
        return 0
    if i % 2 == 0:
        a, b = i // 2, j // 2
        if b == 0:
            return 1 if a == 0 else 2 * (-1) ** a
        return Fraction((-1) ** (a + b) * a * comb(a + b - 1, a - b), b)
    a, b = (i - 1) // 2, (j - 1) // 2
    return Fraction((-1) ** (a + b) * (2 * a + 1) * comb(a + b, a - b), 2 * b + 1)


def _so_odd_entry(i, j):
    a, b = i // 2, j // 2
    if i % 2 == 0 and j % 2 == 0:
        return (-1) ** (a + b) * comb(a + b, a - b)
    if i % 2 == 1 and j % 2 == 1:
        return (-1) ** (a + b) * comb(a + b + 1, a - b)
    if i % 2 == 0:
        # phi_{2a, 2b+1}
        return (-1) ** (a + b + 1) * comb(a + b, a - b - 1) if a - b - 1 >= 0 else 0
    # phi_{2a+1, 2b}
    return (-1) ** (a + b) * comb(a + b, a - b)


_TABLES = {"sp": _sp_entry, "so_even": _so_even_entry, "so_odd": _so_odd_entry}


def group_recursion(kind, N):
    """The tridiagonal recursion matrix ``J`` for a classical-group basis."""
    extra = {"sp": {}, "so_even": {(1, 0): 1}, "so_odd": {(0, 0): -1}}[kind]

    def entry(i, j):
        v = 1 if abs(i - j) == 1 else 0
        return v + extra.get((i, j), 0)

    return Matrix.from_function(N, N, entry)


def _table_basis(kind, N):
    if N < 1:
        raise DimensionError("truncation must be at least 1")
    entry = _TABLES[kind]
    coeffs = Matrix.from_function(N, N, lambda i, j: entry(i, j) if j <= i else 0)
    basis = PolyBasis(coeffs, kind)
    # the closed-form table and the three-term recursion are independent
    # descriptions of the same polynomials; refuse to proceed if they differ
    check = from_recursion(group_recursion(kind, N))
    if check.coeffs != coeffs:
        raise AssertionError(f"{kind} coefficient table disagrees with its recursion")
    return basis


def sp_basis(N):
    """``phi_i(x + 1/x) = sum_{j=0}^{i} x^(i-2j)``: symplectic characters."""
    return _table_basis("sp", N)


def so_even_basis(N):
    """``phi_0 = 1``, ``phi_i(x + 1/x) = x^i + x^-i``: even orthogonal characters."""
    return _table_basis("so_even", N)


def so_odd_basis(N):
    """``phi_i(x + 1/x) = sum_{j=0}^{2i} x^(i-j)``: odd orthogonal characters."""
    return _table_basis("so_odd", N)


def from_recursion(Jplus, N=None):
    """Basis generated by ``x phi_i = phi_{i+1} + sum_{k<=i} Jplus[i, k] phi_k``.

    ``Jplus`` may also be a full recursion matrix ``J``; entries above the
    diagonal are ignored only when they form the unit superdiagonal.
    """
    size = Jplus.nrows
    N = size if N is None else N
    if size < N - 1:
        raise TruncationError(f"need {N - 1} recursion rows for N={N}, got {size}")
    for i in range(size):
        for j in range(i + 1, Jplus.ncols):
            v = Jplus[i, j]
            if v and not (j == i + 1 and v == 1):
                raise ShapeError("recursion coefficients must satisfy k <= i")
    zero = Fraction(0)
    polys = [[Fraction(1)]]
    for i in range(N - 1):
        nxt = [zero] + polys[i]
        for k in range(i + 1):
            c = Jplus[i, k]
            if c:
                for j, a in enumerate(polys[k]):
                    nxt[j] -= c * a
        polys.append(nxt)
    rows = [p + [zero] * (N - len(p)) for p in polys]
    return PolyBasis(Matrix(rows), "recursion")


def from_coefficients(rows):
    """Basis from explicit coefficient rows ``rows[i] = (phi_{i,0}, ..., phi_{i,i}[, 0...])``."""
    N = len(rows)
    full = []
    for i, r in enumerate(rows):
        r = [to_rational(v) for v in r]
        if any(r[i + 1:]):
            raise ShapeError(f"phi_{i} has terms above degree {i}")
        r = (r + [Fraction(0)] * N)[:N]
        full.append(r)
    return PolyBasis(Matrix(full), "coeffs")


@lru_cache(maxsize=64)
def recursion_of(phi):
    """``J = A S A^-1`` and ``Jtilde = A S^T A^-1`` on the truncation.

    ``Jtilde`` is exact on every row; the last row of ``J`` would need
    ``phi_N`` and is excluded from the reported window.
    """
    A = phi.coeffs
    Ainv = invert_unitriangular(A)
    S = shift_matrix(phi.N)
    return RecursionData(A @ S @ Ainv, A @ S.T @ Ainv, phi.N - 1)


def evaluate(phi, i, x):
    """``phi_i(x)`` by Horner's rule."""
    coeffs = phi.poly(i)
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def window(phi, xs, k=0):
    """The ``n x n`` block with rows ``phi_{n+k-1}, ..., phi_k`` evaluated at ``xs``.

    Row order runs from the highest index down, so ``det(window(phi, xs, 0))``
    is the Vandermonde product ``prod_{i<j} (x_i - x_j)``.
    """
    xs = [to_rational(x) for x in xs]
    n = len(xs)
    if n < 1:
        raise DimensionError("need at least one evaluation point")
    phi.require(n + k, "window")
    return Matrix([[evaluate(phi, n + k - 1 - r, x) for x in xs] for r in range(n)])


BASIS_KINDS = ("monomial", "sp", "so_even", "so_odd", "recursion", "coeffs")


def basis_from_spec(spec, truncation=None):
    """Build a basis from its JSON description.

    ``{"kind": ..., "N": int, "data": ...}`` where ``recursion`` data holds
    the rows of ``Jplus`` (row ``i`` lists ``Jplus[i, 0..i]``) and ``coeffs``
    data holds the coefficient rows.
    """
    kind = spec["kind"]
    N = truncation if truncation is not None else spec.get("N")
    if kind == "monomial":
        return monomial_basis(N)
    if kind == "sp":
        return sp_basis(N)
    if kind == "so_even":
        return so_even_basis(N)
    if kind == "so_odd":
        return so_odd_basis(N)
    if kind == "recursion":
        data = spec["data"]
        width = max(N, len(data))
        rows = [[to_rational(v) for v in r] + [Fraction(0)] * (width - len(r)) for r in data]
        for i, r in enumerate(rows):
            if any(r[i + 1:]):
                raise ShapeError(f"recursion row {i} has entries beyond column {i}")
        if len(rows) < N - 1:
            raise TruncationError(f"N={N} needs {N - 1} recursion rows, got {len(rows)}")
        return from_recursion(Matrix([r[:width] for r in rows]), N)
    if kind == "coeffs":
        data = spec["data"]
        basis = from_coefficients(data)
        if N is not None and N != basis.N:
            if N > basis.N:
                raise TruncationError(f"coefficient data covers only N={basis.N}")
            basis = PolyBasis(basis.coeffs.leading(N), "coeffs")
        return basis
    raise ValueError(f"unknown basis kind {kind!r}")


def intertwining_holds(phi, rec=None):
    """``A S = J A`` on the leading ``(N-1) x (N-1)`` window."""
    rec = rec or recursion_of(phi)
    A = phi.coeffs
    w = phi.N - 1
    lhs = (A @ shift_matrix(phi.N)).leading(w)
    rhs = (rec.J @ A).leading(w)
    return lhs == rhs


def vandermonde_window_det(phi, xs):
    return det(window(phi, xs, 0))
