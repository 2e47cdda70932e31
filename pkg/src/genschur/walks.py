"""
Nearest-neighbour exclusion process weights as minors of ``exp(t alpha)``.

Sites are ``0, 1, ..., N-1``; ``r_i`` is the rate for a particle to hop from
site ``i-1`` to the empty site ``i``.  The generator ``alpha`` has
``alpha[i][i-1] = r_i`` and nothing else, and an ``n``-particle state is the
partition whose particle coordinates ``lambda_k - k + n`` are the occupied
sites.  Continuous-time weights are unnormalized: the generator has no
diagonal loss term, so rows do not sum to zero.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, LengthError, TruncationError
from .kernel import Matrix, det, exp_nilpotent, to_rational
from .partitions import Partition, enumerate_partitions, from_particle_coords, particle_coords

__all__ = [
    "RateSpec",
    "generator",
    "transition_weight",
    "rate_matrix_entry",
    "predecessors",
    "weight_polynomial",
    "semigroup_check",
    "chapman_kolmogorov_check",
    "DiscreteWeights",
    "discrete_time_weights",
    "states",
]


@dataclass(frozen=True)
class RateSpec:
    """Rates ``r_1, ..., r_{N-1}`` on a lattice of ``N`` sites."""

    rates: tuple

    def __post_init__(self):
        rates = tuple(to_rational(r) for r in self.rates)
        if any(r <= 0 for r in rates):
            raise DomainError("rates must be positive")
        object.__setattr__(self, "rates", rates)

    @property
    def N(self):
        return len(self.rates) + 1

    def rate(self, i):
        """``r_i`` for the hop ``i-1 -> i``."""
        return self.rates[i - 1]


def generator(r):
    """``alpha`` with ``alpha[i][i-1] = r_i``; strictly lower triangular, nilpotent of index ``N``."""
    return Matrix.from_function(r.N, r.N, lambda i, j: r.rate(i) if j == i - 1 else 0)


def _coords(lam, n, N):
    lam = Partition(lam)
    if len(lam) > n:
        raise LengthError(f"state {list(lam)} has more than n={n} particles")
    c = particle_coords(lam, n)
    if c and c[0] >= N:
        raise TruncationError(f"state {list(lam)} occupies site {c[0]} beyond N-1={N - 1}")
    return c


def states(r, n, max_weight=None):
    """All ``n``-particle states inside the lattice, canonical order."""
    top = (r.N - n) * n
    if top < 0:
        raise TruncationError(f"{n} particles do not fit on {r.N} sites")
    mw = top if max_weight is None else min(max_weight, top)
    return enumerate_partitions(mw, n, r.N - n)


def transition_weight(r, lam, mu, n, t, _exp=None):
    """``W_{mu -> lambda}(t)``: minor of ``exp(t alpha)`` on rows ``l(lambda)``, columns ``l(mu)``."""
    rows, cols = _coords(lam, n, r.N), _coords(mu, n, r.N)
    E = _exp if _exp is not None else exp_nilpotent(generator(r), t)
    return det(E.submatrix(rows, cols))


def rate_matrix_entry(r, lam, nu, n):
    """``M_{lambda nu}``: ``r_i`` when ``lambda`` is ``nu`` with one particle hopped ``i-1 -> i``."""
    a, b = set(_coords(lam, n, r.N)), set(_coords(nu, n, r.N))
    gained, lost = a - b, b - a
    if len(gained) == 1 and len(lost) == 1:
        (i,), (j,) = gained, lost
        if i == j + 1:
            return r.rate(i)
    return Fraction(0)


def predecessors(r, lam, n):
    """States ``nu`` one hop before ``lambda``, with ``M_{lambda nu}``."""
    occ = _coords(lam, n, r.N)
    out = []
    for k, site in enumerate(occ):
        if site >= 1 and site - 1 not in occ:
            prev = list(occ)
            prev[k] = site - 1
            out.append((from_particle_coords(prev, n), r.rate(site)))
    return out


def weight_polynomial(r, lam, mu, n):
    """Coefficients ``c_0, ..., c_D`` of ``W_{mu -> lambda}(t)`` (``D = max(|lambda| - |mu|, 0)``).

    Obtained by exact interpolation at ``t = 0, ..., D``, so the claimed degree
    bound is itself tested by the caller rather than assumed here.
    """
    lam, mu = Partition(lam), Partition(mu)
    D = max(lam.weight - mu.weight, 0)
    ts = [Fraction(k) for k in range(D + 1)]
    ys = [transition_weight(r, lam, mu, n, t) for t in ts]
    return _interpolate(ts, ys)


def _interpolate(ts, ys):
    # Newton divided differences, then expand into the monomial basis
    m = len(ts)
    dd = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j])
    coeffs = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # coeffs = coeffs * (t - ts[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - ts[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def _poly_eval(coeffs, t):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def semigroup_check(r, lam, mu, n, t):
    """``d/dt W_{mu -> lambda}(t) == sum_nu M_{lambda nu} W_{mu -> nu}(t)`` exactly."""
    t = to_rational(t)
    poly = weight_polynomial(r, lam, mu, n)
    deriv = [k * c for k, c in enumerate(poly)][1:]
    lhs = _poly_eval(deriv, t)
    E = exp_nilpotent(generator(r), t)
    rhs = sum((m * transition_weight(r, nu, mu, n, t, E) for nu, m in predecessors(r, lam, n)),
              Fraction(0))
    return lhs == rhs


def chapman_kolmogorov_check(r, lam, mu, n, s, t):
    """``sum_nu W_{mu -> nu}(s) W_{nu -> lambda}(t) == W_{mu -> lambda}(s + t)``."""
    s, t = to_rational(s), to_rational(t)
    alpha = generator(r)
    Es, Et = exp_nilpotent(alpha, s), exp_nilpotent(alpha, t)
    total = Fraction(0)
    for nu in states(r, n):
        a = transition_weight(r, nu, mu, n, s, Es)
        if a:
            total += a * transition_weight(r, lam, nu, n, t, Et)
    return total == transition_weight(r, lam, mu, n, s + t)


@dataclass(frozen=True)
class DiscreteWeights:
    """Normalized weights after ``steps`` discrete steps; ``absorbing`` when nothing is reachable."""

    steps: int
    weights: dict
    absorbing: bool = False

    def to_json(self):
        return {
            "steps": self.steps,
            "absorbing": self.absorbing,
            "weights": [{"lambda": list(k), "weight": str(v)} for k, v in self.weights.items()],
        }


def discrete_time_weights(r, mu, n, steps):
    """Order-``steps`` coefficients of ``W_{mu -> lambda}(t)``, normalized over final states.

    The coefficient of ``t^steps`` is nonzero only for ``|lambda| = |mu| + steps``;
    it equals ``W_{mu -> lambda}(1)`` there because the weight is homogeneous.
    Final states beyond the lattice are not counted.
    """
    if steps < 0:
        raise DomainError("steps must be nonnegative")
    mu = Partition(mu)
    _coords(mu, n, r.N)
    E = exp_nilpotent(generator(r), 1)
    raw = {}
    target = mu.weight + steps
    for lam in states(r, n, target):
        if lam.weight == target and lam.contains(mu):
            w = transition_weight(r, lam, mu, n, 1, E)
            if w:
                raw[lam] = w
    total = sum(raw.values(), Fraction(0))
    if not total:
        return DiscreteWeights(steps, {}, True)
    return DiscreteWeights(steps, {k: v / total for k, v in raw.items()})
