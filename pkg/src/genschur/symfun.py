"""
Classical symmetric functions in flow variables ``t = (t_1, t_2, ...)``.

Evaluating at ``t = monomial_sums(x)`` recovers the usual symmetric
polynomials in ``x``; the power-sum parametrisation needs no division by a
Vandermonde, so it is also valid at coincident points.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .kernel import Matrix, det, to_rational
from .partitions import Partition, partitions_of

__all__ = [
    "FlowVector",
    "monomial_sums",
    "complete_h",
    "complete_h_values",
    "elementary_e",
    "elementary_e_values",
    "elementary_from_values",
    "schur_t",
    "schur_at",
    "kostka",
    "schur_product_expansion",
    "littlewood_richardson",
]


class FlowVector(tuple):
    """Finite ``(t_1, ..., t_K)``; components past ``K`` are zero."""

    def __new__(cls, values=()):
        return super().__new__(cls, (to_rational(v) for v in values))

    def t(self, i):
        """1-based component, zero beyond the stored length."""
        return tuple.__getitem__(self, i - 1) if 1 <= i <= len(self) else Fraction(0)

    def to_json(self):
        return [str(v) for v in self]


def monomial_sums(xs, K):
    """``t_i = (1/i) sum_a x_a^i`` for ``i = 1..K``."""
    xs = [to_rational(x) for x in xs]
    out = []
    powers = [Fraction(1)] * len(xs)
    for i in range(1, K + 1):
        powers = [p * x for p, x in zip(powers, xs)]
        out.append(sum(powers, Fraction(0)) / i)
    return FlowVector(out)


def complete_h_values(t, kmax):
    """``[h_0, ..., h_kmax]`` from ``k h_k = sum_{i=1}^k i t_i h_{k-i}``."""
    t = t if isinstance(t, FlowVector) else FlowVector(t)
    h = [Fraction(1)]
    for k in range(1, kmax + 1):
        h.append(sum((i * t.t(i) * h[k - i] for i in range(1, k + 1)), Fraction(0)) / k)
    return h


def complete_h(t, k):
    if k < 0:
        return Fraction(0)
    return complete_h_values(t, k)[k]


def elementary_e_values(t, kmax):
    """``[e_0, ..., e_kmax]`` from ``k e_k = sum_{i=1}^k (-1)^(i-1) i t_i e_{k-i}``."""
    t = t if isinstance(t, FlowVector) else FlowVector(t)
    e = [Fraction(1)]
    for k in range(1, kmax + 1):
        e.append(
            sum(((-1) ** (i - 1) * i * t.t(i) * e[k - i] for i in range(1, k + 1)), Fraction(0)) / k
        )
    return e


def elementary_e(t, k):
    if k < 0:
        return Fraction(0)
    return elementary_e_values(t, k)[k]


def elementary_from_values(xs):
    """``[e_0(x), ..., e_n(x)]`` by expanding ``prod (1 + x_a y)``."""
    e = [Fraction(1)]
    for x in xs:
        x = to_rational(x)
        e = [a + x * b for a, b in zip(e + [Fraction(0)], [Fraction(0)] + e)]
    return e


def schur_t(lam, t):
    """Jacobi-Trudi determinant ``det(h_{lambda_i - i + j})`` in flow variables."""
    lam = Partition(lam)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    h = complete_h_values(t, lam[0] + ell - 1)

    def hk(k):
        return h[k] if k >= 0 else Fraction(0)

    return det(Matrix.from_function(ell, ell, lambda i, j: hk(lam[i] - i + j)))


def schur_at(lam, xs):
    """Classical Schur polynomial ``S_lambda(x_1, ..., x_n)`` (zero if too long)."""
    lam = Partition(lam)
    if len(lam) > len(xs):
        return Fraction(0)
    return schur_t(lam, monomial_sums(xs, max(lam.weight, 1)))


@lru_cache(maxsize=None)
def _kostka(shape, content):
    # number of SSYT of `shape` with `content`: strip the largest entry,
    # which fills a horizontal strip of size content[-1]
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    total = 0
    # choose mu inside shape with shape/mu a horizontal strip of size k:
    # shape[i+1] <= mu[i] <= shape[i]
    ranges = [
        range(shape[i + 1] if i + 1 < len(shape) else 0, shape[i] + 1) for i in range(len(shape))
    ]
    weight = sum(shape)
    for mu in product(*ranges):
        if weight - sum(mu) == k and len([m for m in mu if m]) <= len(rest):
            total += _kostka(tuple(m for m in mu if m), rest)
    return total


def kostka(shape, content):
    """Kostka number ``K_{shape, content}`` for any composition ``content``."""
    shape = tuple(Partition(shape))
    content = tuple(c for c in content if c)
    if sum(shape) != sum(content):
        return 0
    return _kostka(shape, tuple(sorted(content, reverse=True)))


@lru_cache(maxsize=None)
def _product_expansion(mu, nu):
    weight = sum(mu) + sum(nu)
    m = weight  # enough variables that no Schur polynomial of this degree vanishes
    targets = partitions_of(weight)
    # coefficient of x^alpha (alpha a partition padded to m parts) in s_mu * s_nu
    monomial = {}
    for alpha in targets:
        a = tuple(alpha) + (0,) * (m - len(alpha))
        total = 0
        for beta in product(*(range(ai + 1) for ai in a)):
            if sum(beta) != sum(mu):
                continue
            k1 = kostka(mu, beta)
            if k1:
                gamma = tuple(ai - bi for ai, bi in zip(a, beta))
                total += k1 * kostka(nu, gamma)
        monomial[alpha] = total
    # peel off Schur functions from the top in lexicographic order (a linear
    # extension of dominance, in which Kostka matrices are unitriangular)
    out = {}
    for lam in targets:  # descending lex
        c = monomial[lam]
        if c:
            out[lam] = c
            for alpha in targets:
                k = kostka(lam, alpha)
                if k:
                    monomial[alpha] -= c * k
    return out


def schur_product_expansion(mu, nu):
    """``{lambda: C^lambda_{mu nu}}`` with nonzero coefficients only."""
    return dict(_product_expansion(Partition(mu), Partition(nu)))


def littlewood_richardson(mu, nu, lam):
    """``C^lambda_{mu nu}`` by expanding ``S_mu S_nu`` in monomials and re-expanding."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if lam.weight != mu.weight + nu.weight:
        return 0
    return _product_expansion(mu, nu).get(lam, 0)
