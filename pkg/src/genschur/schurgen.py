"""
Generalized Schur polynomials attached to a monic basis.

``S^phi_lambda(x_1..x_n)`` is computed four independent ways:

* bialternant -- ratio of the minor ``Phi_lambda`` to the Vandermonde block;
* Jacobi-Trudi -- determinant in the ``h^{(j)}_i`` obtained by pushing
  ``h^{(0)}_i = S^phi_{(i)}`` through the basis recursion;
* dual Jacobi-Trudi -- determinant in the ``e^{j}_{(i)}`` produced by the dual
  recursion from the classical elementary symmetric functions;
* Giambelli -- determinant of hook values.

Index conventions
-----------------
``HMatrix`` stores the column ``H^{(j+1)}`` under the key ``j`` (the
superscript of ``h^{(j)}``), rows top-down from ``r = 0``; entry ``(r, j)`` is
``h^{(j)}_{r+1-n}``.  ``EMatrix`` stores row ``E_{(n-d)}`` at position ``d``
and column ``E^{c+1}`` at ``c``.  The square blocks ``H(k)`` are read
out in descending row order by :meth:`HMatrix.block`.
"""

import random
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IncompleteFamilyError, LengthError, SingularError, TruncationError
from .kernel import Matrix, det, inverse, invert_unitriangular, to_rational, vandermonde
from .partitions import Partition, enumerate_partitions, frobenius, hook, particle_coords
from .polybasis import evaluate, recursion_of, window
from .symfun import (
    complete_h_values,
    elementary_from_values,
    monomial_sums,
    schur_at,
    schur_t,
)

__all__ = [
    "EvalPoint",
    "as_point",
    "eval_points",
    "bialternant",
    "SchurExpansion",
    "expansion_coeffs",
    "HMatrix",
    "build_H",
    "build_H_dressing",
    "EMatrix",
    "build_E",
    "build_E_dressing",
    "jacobi_trudi",
    "dual_jacobi_trudi",
    "giambelli",
    "pluecker_check",
    "all_routes",
    "WindowCheck",
    "grassmannian_check",
    "dressing_check",
    "duality_check",
    "boundary_check",
    "classical_orthogonality_check",
]

SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
)


class EvalPoint(tuple):
    """``n`` pairwise distinct rationals."""

    def __new__(cls, values):
        pt = super().__new__(cls, (to_rational(v) for v in values))
        if len(set(pt)) != len(pt):
            raise SingularError(f"evaluation point has repeated coordinates: {[str(v) for v in pt]}")
        return pt

    @property
    def n(self):
        return len(self)


def as_point(xs):
    return xs if isinstance(xs, EvalPoint) else EvalPoint(xs)


def eval_points(n, count, seed=None):
    """``count`` distinct evaluation points with ``n`` coordinates each.

    Without a seed the grid is distinct small primes divided by 7; with a seed
    the coordinates are drawn as ``p/q`` with ``|p| <= 40``, ``1 <= q <= 12``.
    """
    if seed is None:
        if n * count > len(SMALL_PRIMES):
            raise ValueError("default prime grid exhausted; pass a seed")
        return [
            EvalPoint(Fraction(p, 7) for p in SMALL_PRIMES[k * n:(k + 1) * n]) for k in range(count)
        ]
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        vals = set()
        while len(vals) < n:
            vals.add(Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
        out.append(EvalPoint(sorted(vals)))
    return out


def _check_length(lam, n):
    if len(lam) > n:
        raise LengthError(f"partition {list(lam)} is longer than n={n}")


def bialternant(phi, lam, x):
    """``det(Phi_lambda) / det(Phi(0))`` with rows ``phi_{l_i}`` evaluated at ``x``."""
    lam = Partition(lam)
    x = as_point(x)
    n = len(x)
    _check_length(lam, n)
    if not lam:
        return Fraction(1)
    phi.require(lam[0] + n, "bialternant")
    ls = particle_coords(lam, n)
    num = det(Matrix([[evaluate(phi, l, xj) for xj in x] for l in ls]))
    return num / det(window(phi, x, 0))


class SchurExpansion(Mapping):
    """Coefficients ``phi^(n)_{lambda mu}`` over ``l(mu) <= n``, ``|mu| <= weight_bound``.

    Behaves as a mapping over that whole domain (zero coefficients included);
    looking up a partition outside the domain raises
    :class:`IncompleteFamilyError`.
    """

    def __init__(self, n, weight_bound, coeffs, label=None):
        self.n = n
        self.weight_bound = weight_bound
        self._coeffs = {Partition(k): Fraction(v) for k, v in coeffs.items() if v}
        self.label = label

    def in_domain(self, mu):
        mu = Partition(mu)
        return len(mu) <= self.n and mu.weight <= self.weight_bound

    def __getitem__(self, mu):
        mu = Partition(mu)
        if not self.in_domain(mu):
            raise IncompleteFamilyError(f"coordinate for {list(mu)} is outside the family")
        return self._coeffs.get(mu, Fraction(0))

    def __iter__(self):
        return iter(enumerate_partitions(self.weight_bound, self.n))

    def __len__(self):
        return len(enumerate_partitions(self.weight_bound, self.n))

    def support(self):
        return {mu: self._coeffs[mu] for mu in self if mu in self._coeffs}

    def with_value(self, mu, value):
        coeffs = dict(self._coeffs)
        coeffs[Partition(mu)] = to_rational(value)
        return SchurExpansion(self.n, self.weight_bound, coeffs, self.label)

    def evaluate_at(self, xs):
        """``sum_mu c_mu S_mu(x)`` with classical Schur polynomials."""
        return sum((c * schur_at(mu, xs) for mu, c in self.support().items()), Fraction(0))

    def evaluate_flow(self, t):
        """``sum_mu c_mu S_mu(t)`` in flow variables."""
        return sum((c * schur_t(mu, t) for mu, c in self.support().items()), Fraction(0))

    def to_json(self):
        return [{"mu": list(mu), "coeff": str(c)} for mu, c in self.support().items()]

    def __repr__(self):
        body = ", ".join(f"{list(k)}: {v}" for k, v in self.support().items())
        return f"SchurExpansion(n={self.n}, {{{body}}})"


def expansion_coeffs(phi, lam, n):
    """``phi^(n)_{lambda mu} = det(phi_{l_i, m_j})`` for every ``mu`` in the lemma's range."""
    lam = Partition(lam)
    _check_length(lam, n)
    phi.require(lam.part(1) + n, "expansion_coeffs")
    ls = particle_coords(lam, n)
    coeffs = {}
    for mu in enumerate_partitions(lam.weight, n):
        ms = particle_coords(mu, n)
        coeffs[mu] = det(Matrix([[phi.coefficient(l, m) for m in ms] for l in ls]))
    return SchurExpansion(n, lam.weight, coeffs, label=lam)


@dataclass(frozen=True)
class HMatrix:
    """Columns ``H^{(j+1)}`` keyed by ``j``; ``j < 0`` columns come from ``Jtilde``."""

    n: int
    depth: int
    columns: dict = field(repr=False)

    @property
    def extended(self):
        """Keys of the columns obtained by running the recursion backwards."""
        return sorted(j for j in self.columns if j < 0)

    def column(self, j):
        try:
            return self.columns[j]
        except KeyError:
            raise TruncationError(f"column h^({j}) was not built") from None

    def h(self, j, i):
        """``h^{(j)}_i``."""
        r = i + self.n - 1
        if r < 0:
            raise IndexError(f"h^({j})_{i} lies below the first row")
        if r >= self.depth:
            raise TruncationError(f"h^({j})_{i} needs depth > {r}")
        return self.column(j)[r]

    def matrix(self, keys=None):
        """Rows ``0..depth-1`` by the given column keys (default ``0..n-1``)."""
        keys = range(self.n) if keys is None else keys
        cols = [self.column(j) for j in keys]
        return Matrix([[c[r] for c in cols] for r in range(self.depth)], len(cols))

    def block(self, k=0):
        """``H(k)``: rows ``n+k-1`` down to ``k`` of the first ``n`` columns."""
        if self.n + k > self.depth:
            raise TruncationError(f"H({k}) needs depth >= {self.n + k}")
        return Matrix([[self.columns[j][r] for j in range(self.n)]
                       for r in range(self.n + k - 1, k - 1, -1)])


def _column_zero(phi, x, rows):
    # h^(0)_{r+1-n} = S^phi_{(r+1-n)}, zero for negative index
    n = len(x)
    out = []
    for r in range(rows):
        i = r + 1 - n
        out.append(bialternant(phi, Partition([i]), x) if i >= 0 else Fraction(0))
    return out


def build_H(phi, x, depth, columns=None, left=0):
    """Build ``H`` by the basis recursion ``H^{(j)} = J H^{(j-1)}``.

    ``columns`` positive columns (keys ``0..columns-1``, default ``n``) and
    ``left`` extra columns (keys ``-1..-left``) from ``H^{(j-1)} = Jtilde H^{(j)}``.
    Needs truncation ``N >= depth + columns - 1``.
    """
    x = as_point(x)
    n = len(x)
    columns = n if columns is None else columns
    rows0 = depth + max(columns - 1, 0)
    phi.require(rows0, "build_H")
    rec = recursion_of(phi)
    col = _column_zero(phi, x, rows0)
    cols = {0: tuple(col[:depth])}
    for j in range(1, columns):
        # J row r touches entries up to r+1, so each step loses one row
        col = rec.J.leading(len(col) - 1, len(col)).apply(col)
        cols[j] = tuple(col[:depth])
    if left:
        Jt = rec.Jtilde.leading(depth)
        col = cols[0]
        for j in range(-1, -left - 1, -1):
            col = Jt.apply(col)
            cols[j] = tuple(col)
    return HMatrix(n, depth, cols)


def build_H_dressing(phi, x, depth, keys=None):
    """``H = A^phi H0`` with ``H0`` built from classical complete symmetric functions."""
    x = as_point(x)
    n = len(x)
    keys = list(range(n)) if keys is None else list(keys)
    phi.require(depth, "build_H_dressing")
    top = depth + max(keys) + 1 - n
    h = complete_h_values(monomial_sums(x, max(top, 1)), max(top, 0))

    def h0(k):
        return h[k] if k >= 0 else Fraction(0)

    H0 = Matrix([[h0(r + 1 - n + j) for j in keys] for r in range(depth)])
    full = phi.coeffs.leading(depth) @ H0
    return HMatrix(n, depth, {j: full.col(c) for c, j in enumerate(keys)})


@dataclass(frozen=True)
class EMatrix:
    """Rows ``E_{(n-d)}`` at position ``d``, columns ``0..depth-1``."""

    n: int
    depth: int
    rows: tuple = field(repr=False)

    def matrix(self):
        return Matrix(self.rows)

    def entry(self, d, c):
        if d >= self.depth:
            raise TruncationError(f"E row {d} needs depth > {d}")
        if c > d:
            return Fraction(0)
        return self.rows[d][c]

    def e(self, m, p):
        """``e^{m}_{(p)}``, signs undone from ``E_{ij} = (-1)^{n-i-j+1} e^{n-j+1}_{(-i)}``."""
        d = self.n + p
        if d < 0:
            raise IndexError(f"row E_({-p}) lies above E_(n)")
        return (-1) ** ((m + p) % 2) * self.entry(d, self.n - m)


def build_E(phi, x, depth):
    """Rows from ``E_{(i)} = E_{(i+1)} J + (-1)^{n-i} e_{n-i} E_{(n)}``, ``E_{(n)}`` the unit row.

    Needs truncation ``N >= depth``.
    """
    x = as_point(x)
    n = len(x)
    phi.require(depth, "build_E")
    J = recursion_of(phi).J.leading(depth)
    e = elementary_from_values(x)
    unit = [Fraction(0)] * depth
    unit[0] = Fraction(1)
    rows = [tuple(unit)]
    for d in range(1, depth):
        prev = rows[-1]
        # row vector times J; J row k is exact for k <= N - 2, and prev has
        # support k <= d - 1 <= depth - 2
        nxt = [sum((prev[k] * J[k, c] for k in range(d) if prev[k]), Fraction(0))
               for c in range(depth)]
        if d <= n:
            nxt[0] += (-1) ** d * e[d]
        rows.append(tuple(nxt))
    return EMatrix(n, depth, tuple(rows))


def build_E_dressing(phi, x, depth):
    """``E = E0 (A^phi)^-1`` with ``E0[d][c] = (-1)^{d-c} e_{d-c}``."""
    x = as_point(x)
    n = len(x)
    phi.require(depth, "build_E_dressing")
    e = elementary_from_values(x)

    def e0(d, c):
        k = d - c
        return (-1) ** k * e[k] if 0 <= k <= n else 0

    E0 = Matrix.from_function(depth, depth, e0)
    full = E0 @ invert_unitriangular(phi.coeffs.leading(depth))
    return EMatrix(n, depth, full.rows)


def jacobi_trudi(phi, lam, x, H=None):
    """``det(h^{(j-1)}_{lambda_i - i + 1})`` over ``1 <= i, j <= l(lambda)``."""
    lam = Partition(lam)
    x = as_point(x)
    n = len(x)
    _check_length(lam, n)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    if H is None:
        H = build_H(phi, x, lam[0] + n, columns=ell)
    return det(Matrix.from_function(ell, ell, lambda i, j: H.h(j, lam[i] - i)))


def dual_jacobi_trudi(phi, lam, x, E=None):
    """``det(e^{lambda'_j - j + 1}_{(i-1)})`` over ``1 <= i, j <= l(lambda')``."""
    lam = Partition(lam)
    x = as_point(x)
    n = len(x)
    _check_length(lam, n)
    conj = lam.conjugate()
    k = len(conj)
    if k == 0:
        return Fraction(1)
    if E is None:
        E = build_E(phi, x, n + k)
    return det(Matrix.from_function(k, k, lambda i, j: E.e(conj[j] - j, i)))


def giambelli(phi, lam, x):
    """``det(S^phi_{(a_i | b_j)})`` over the Frobenius rank, hooks by bialternant."""
    lam = Partition(lam)
    x = as_point(x)
    _check_length(lam, len(x))
    fr = frobenius(lam)
    r = fr.rank
    values = {}
    for a in fr.arms:
        for b in fr.legs:
            values[a, b] = bialternant(phi, hook(a, b), x)
    return det(Matrix.from_function(r, r, lambda i, j: values[fr.arms[i], fr.legs[j]]))


def pluecker_check(coords, lam):
    """``pi_0^(r-1) pi_lambda == det(pi_{(a_i | b_j)})`` for a coordinate family.

    ``coords`` maps partitions to values (a :class:`SchurExpansion` or a plain
    dict); every hook of ``lambda``, ``lambda`` itself and ``(0)`` must be present.
    """
    lam = Partition(lam)
    fr = frobenius(lam)
    r = fr.rank

    def get(mu):
        try:
            return to_rational(coords[Partition(mu)])
        except KeyError:
            raise IncompleteFamilyError(
                f"family lacks the coordinate for {list(Partition(mu))}"
            ) from None

    pi0 = get(())
    lhs = pi0 ** (r - 1) * get(lam) if r else get(lam)
    if r == 0:
        return True
    rhs = det(Matrix.from_function(r, r, lambda i, j: get(hook(fr.arms[i], fr.legs[j]))))
    return lhs == rhs


def all_routes(phi, lam, x, H=None, E=None):
    """The four values of ``S^phi_lambda(x)`` keyed by route name."""
    return {
        "bialternant": bialternant(phi, lam, x),
        "jacobi_trudi": jacobi_trudi(phi, lam, x, H),
        "dual": dual_jacobi_trudi(phi, lam, x, E),
        "giambelli": giambelli(phi, lam, x),
    }


@dataclass(frozen=True)
class WindowCheck:
    """Outcome of an infinite-matrix identity checked on a finite exact window."""

    name: str
    holds: bool
    window: int

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"name": self.name, "holds": self.holds, "window": self.window}


def grassmannian_check(phi, x, depth=None):
    """``H H(0)^-1 == Phi Phi(0)^-1`` on the first ``depth`` rows.

    Rows of ``H`` need ``N >= depth + n - 1``; the default is the largest such depth.
    """
    x = as_point(x)
    n = len(x)
    depth = phi.N - n + 1 if depth is None else depth
    if depth < n:
        raise TruncationError(f"need at least {n} rows, truncation allows {depth}")
    H = build_H(phi, x, depth)
    Phi = Matrix([[evaluate(phi, r, xj) for xj in x] for r in range(depth)])
    # read H(0) and Phi(0) with the same descending row order
    lhs = H.matrix() @ invert_unitriangular(H.block(0))
    rhs = Phi @ inverse(window(phi, x, 0))
    return WindowCheck("grassmannian", lhs == rhs, depth)


def dressing_check(phi, x, depth=None, left=0):
    """``H`` from the recursion equals ``A^phi H0`` column for column (incl. ``left`` extra)."""
    x = as_point(x)
    n = len(x)
    depth = phi.N - n + 1 if depth is None else depth
    rec = build_H(phi, x, depth, left=left)
    keys = list(range(-left, n))
    dressed = build_H_dressing(phi, x, depth, keys)
    holds = all(rec.column(j) == dressed.column(j) for j in keys)
    return WindowCheck("dressing", holds, depth)


def duality_check(phi, x, size=None):
    """``E H = I`` and ``H E = I`` on the leading ``size x size`` window.

    Row ``d`` of ``E`` pairs with the ``H`` column keyed ``n-1-d``; for
    ``d >= n`` that column is one of the backward-recursion columns.
    """
    x = as_point(x)
    n = len(x)
    size = phi.N - n + 1 if size is None else size
    left = max(0, size - n)
    H = build_H(phi, x, size, left=left)
    E = build_E(phi, x, size)
    Hm = H.matrix([n - 1 - d for d in range(size)])
    Em = E.matrix()
    ident = Matrix.identity(size)
    return WindowCheck("duality", Em @ Hm == ident and Hm @ Em == ident, size)


def boundary_check(H):
    """``h^{(j)}_{-j} = 1`` and ``h^{(j)}_{-k} = 0`` for ``k > j`` on the built columns ``j >= 0``."""
    n = H.n
    for j in range(n):
        if j not in H.columns:
            continue
        for k in range(j, n):
            expected = 1 if k == j else 0
            if H.h(j, -k) != expected:
                return False
    return True


def classical_orthogonality_check(x, size):
    """``sum_k (-1)^(i-k) e_{i-k} h_{k-j} = delta_ij`` for ``0 <= i, j < size``."""
    x = as_point(x)
    e = elementary_from_values(x)
    h = complete_h_values(monomial_sums(x, max(size, 1)), size)

    def ek(k):
        return e[k] if 0 <= k < len(e) else 0

    def hk(k):
        return h[k] if k >= 0 else 0

    for i in range(size):
        for j in range(size):
            s = sum((-1) ** (i - k) * ek(i - k) * hk(k - j) for k in range(j, i + 1))
            if s != (1 if i == j else 0):
                return False
    return True


def vandermonde_of(x):
    return vandermonde(as_point(x))
