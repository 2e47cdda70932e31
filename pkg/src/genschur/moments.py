"""
Moment matrices of finitely supported measures and matrix-model coefficients.

For a Hankel moment matrix ``M`` the coefficient ``B_{lambda,n}`` is the
minor with rows ``l(lambda)`` and columns ``l(0) = (n-1, ..., 0)``:
``B_{lambda,n} = det(m_{lambda_i - i + 2n - j})``.  It is the coefficient of
``S_lambda(t)`` in the eigenvalue sum, and equals ``sum_nu phi_{nu lambda}
phi_{nu 0}`` whenever ``M = phi^T phi``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from .errors import DegeneracyError, DimensionError, DomainError, LengthError
from .kernel import Matrix, det, to_rational, vandermonde
from .partitions import Partition, enumerate_partitions, particle_coords
from .polybasis import PolyBasis
from .symfun import FlowVector, schur_at, schur_t

__all__ = [
    "DiscreteMeasure",
    "BiMeasure",
    "hankel",
    "moment",
    "B_coefficient",
    "b_from_matrix",
    "factor_sum",
    "EigenvalueSum",
    "eigenvalue_sum",
    "brute_force_eigenvalue_sum",
    "bimoment",
    "B2_coefficient",
    "b2_from_matrix",
    "pair_factor_sum",
    "inner_product",
    "monic_orthogonal",
]


@dataclass(frozen=True)
class DiscreteMeasure:
    nodes: tuple
    weights: tuple

    def __post_init__(self):
        nodes = tuple(to_rational(z) for z in self.nodes)
        weights = tuple(to_rational(w) for w in self.weights)
        if len(nodes) != len(weights):
            raise DimensionError("nodes and weights differ in length")
        if len(set(nodes)) != len(nodes):
            raise DomainError("measure nodes must be distinct")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["nodes"]), tuple(data["weights"]))

    @property
    def mass(self):
        return sum(self.weights, Fraction(0))


@dataclass(frozen=True)
class BiMeasure:
    """Point masses ``weight`` at ``(z, w)``."""

    points: tuple

    def __post_init__(self):
        pts = []
        for p in self.points:
            if len(p) != 3:
                raise DimensionError("bimeasure points are (z, w, weight) triples")
            pts.append(tuple(to_rational(v) for v in p))
        object.__setattr__(self, "points", tuple(pts))

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(p) for p in data["points"]))

    @classmethod
    def product(cls, mu, nu):
        return cls(tuple((z, w, a * b) for z, a in zip(mu.nodes, mu.weights)
                         for w, b in zip(nu.nodes, nu.weights)))


def moment(mu, k):
    return sum((w * z ** k for z, w in zip(mu.nodes, mu.weights)), Fraction(0))


def hankel(mu, size):
    """``M[a][b] = m_{a+b}``."""
    if size < 1:
        raise DimensionError("size must be positive")
    m = [moment(mu, k) for k in range(2 * size - 1)]
    return Matrix.from_function(size, size, lambda a, b: m[a + b])


def b_from_matrix(M, lam, n):
    """``det(M[l_i(lambda), n - j])``: rows at particle coordinates, columns ``n-1..0``."""
    lam = Partition(lam)
    ls = particle_coords(lam, n)
    if ls and ls[0] >= M.nrows:
        raise LengthError(f"row {ls[0]} lies outside the {M.nrows}-row matrix")
    return det(M.submatrix(ls, range(n - 1, -1, -1)))


def B_coefficient(mu, lam, n):
    """``B_{lambda,n} = det(m_{lambda_i - i + 2n - j})``; the Hankel determinant at ``lambda = 0``."""
    lam = Partition(lam)
    if len(lam) > n:
        raise LengthError(f"partition {list(lam)} is longer than n={n}")
    return b_from_matrix(hankel(mu, lam.part(1) + n), lam, n)


def _minor(A, rows, cols):
    return det(A.submatrix(rows, cols))


def _states(N, n):
    # partitions whose particle coordinates fit below N
    return enumerate_partitions((N - n) * n, n, N - n)


def factor_sum(phi, lam, n):
    """``sum_nu phi^(n)_{nu lambda} phi^(n)_{nu 0}`` over every ``nu`` fitting the truncation.

    ``phi`` is any square matrix; equals ``b_from_matrix(phi^T phi, lambda, n)``.
    """
    return pair_factor_sum(phi, phi, lam, Partition(), n)


def pair_factor_sum(theta, phi, lam, nu, n):
    """``sum_rho theta^(n)_{rho lambda} phi^(n)_{rho nu}`` (Cauchy-Binet side of ``theta^T phi``)."""
    N = phi.nrows
    cl, cn = particle_coords(lam, n), particle_coords(nu, n)
    total = Fraction(0)
    for rho in _states(N, n):
        rows = particle_coords(rho, n)
        a = _minor(theta, rows, cl)
        if a:
            total += a * _minor(phi, rows, cn)
    return total


@dataclass(frozen=True)
class EigenvalueSum:
    """Truncated eigenvalue sum with its Schur coefficients in ``t``."""

    value: Fraction
    coefficients: dict
    cutoff: int
    value_at_zero: Fraction


def eigenvalue_sum(mu, n, t=(), cutoff=0):
    """``(1/n!) sum_{z in nodes^n} Delta(z)^2 prod w(z_a) exp(sum_i t_i sum_a z_a^i)``.

    The exponential is replaced by ``sum_{|lambda| <= cutoff} S_lambda(t)
    S_lambda(z)``.  Tuples with a repeated node vanish, and the ``n!``
    orderings of a set contribute equally, so the sum runs over ``n``-subsets.
    ``coefficients[lambda]`` is the factor multiplying ``S_lambda(t)``.
    """
    if n < 1:
        raise DimensionError("n must be positive")
    t = FlowVector(t)
    lams = enumerate_partitions(cutoff, n)
    coeffs = {lam: Fraction(0) for lam in lams}
    support = list(zip(mu.nodes, mu.weights))
    for subset in combinations(support, n):
        zs = [z for z, _ in subset]
        w = vandermonde(zs) ** 2
        for _, wt in subset:
            w *= wt
        if not w:
            continue
        for lam in lams:
            coeffs[lam] += w * schur_at(lam, zs)
    value = sum((c * schur_t(lam, t) for lam, c in coeffs.items() if c), Fraction(0))
    return EigenvalueSum(value, coeffs, cutoff, coeffs[Partition()])


def brute_force_eigenvalue_sum(mu, n):
    """``t = 0`` value summed literally over all ``n``-tuples, divided by ``n!``."""
    support = list(zip(mu.nodes, mu.weights))
    total = Fraction(0)
    for tup in product(support, repeat=n):
        w = vandermonde([z for z, _ in tup]) ** 2
        for _, wt in tup:
            w *= wt
        total += w
    return total / factorial(n)


def bimoment(mu2, size):
    """``M[a][b] = sum weight * z^a * w^b``."""
    if size < 1:
        raise DimensionError("size must be positive")
    return Matrix.from_function(
        size, size, lambda a, b: sum((c * z ** a * w ** b for z, w, c in mu2.points), Fraction(0))
    )


def b2_from_matrix(M, lam, nu, n):
    """``det(M[lambda_i - i + n, nu_j - j + n])``."""
    rows, cols = particle_coords(lam, n), particle_coords(nu, n)
    if (rows and rows[0] >= M.nrows) or (cols and cols[0] >= M.ncols):
        raise LengthError("particle coordinates exceed the moment matrix")
    return det(M.submatrix(rows, cols))


def B2_coefficient(mu2, lam, nu, n):
    lam, nu = Partition(lam), Partition(nu)
    if len(lam) > n or len(nu) > n:
        raise LengthError(f"partitions must have at most n={n} parts")
    size = max(lam.part(1), nu.part(1)) + n
    return b2_from_matrix(bimoment(mu2, size), lam, nu, n)


def inner_product(mu, p, q):
    """``sum_c w_c p(z_c) q(z_c)`` for coefficient sequences ``p``, ``q`` (lowest degree first)."""

    def ev(coeffs, z):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    return sum((w * ev(p, z) * ev(q, z) for z, w in zip(mu.nodes, mu.weights)), Fraction(0))


def monic_orthogonal(mu, k):
    """Monic orthogonal ``p_0, ..., p_k`` by Gram-Schmidt on ``1, x, ..., x^k``.

    Returns a basis with truncation ``k + 1``.  Needs ``<p_i, p_i> != 0`` for
    ``i < k`` (equivalently nonvanishing Hankel determinants up to size ``k``).
    """
    if k < 0:
        raise DimensionError("degree must be nonnegative")
    size = k + 1
    polys, norms = [], []
    for j in range(size):
        p = [Fraction(0)] * j + [Fraction(1)]
        mono = list(p)
        for q, nq in zip(polys, norms):
            c = inner_product(mu, mono, q) / nq
            for a, v in enumerate(q):
                p[a] -= c * v
        if j < k:
            nrm = inner_product(mu, p, p)
            if not nrm:
                raise DegeneracyError(
                    f"<p_{j}, p_{j}> = 0: the Hankel determinant of size {j + 1} vanishes"
                )
            norms.append(nrm)
        polys.append(p)
    rows = [p + [Fraction(0)] * (size - len(p)) for p in polys]
    return PolyBasis(Matrix(rows), "orthogonal")
