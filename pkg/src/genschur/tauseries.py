"""
Truncated 2D-Toda tau-functions as double Schur series.

``tau_phi(n, t, s) = sum_lambda sum_mu phi^(n)_{lambda mu} S_lambda(t) S_mu(s)``
and ``tau_{phi,theta}(n, t, s) = sum_lambda S^phi_lambda(s) S^theta_lambda(t)``.
The sums run over ``l(lambda) <= n`` and ``|lambda| <= cutoff``; the value
returned is always the exact truncated sum.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import LengthError
from .kernel import format_rational
from .partitions import Partition, enumerate_partitions, frobenius
from .schurgen import expansion_coeffs, pluecker_check
from .symfun import FlowVector, schur_t

__all__ = [
    "TauSeries",
    "tau_series",
    "tau_phi",
    "tau_pair",
    "kp_coefficient_check",
]


@dataclass(frozen=True)
class TauSeries:
    """Coefficients ``(lambda, mu) -> phi^(n)_{lambda mu}`` up to weight ``cutoff``."""

    n: int
    cutoff: int
    coefficients: dict

    def evaluate(self, t, s):
        t, s = FlowVector(t), FlowVector(s)
        st, ss = {}, {}
        total = Fraction(0)
        for (lam, mu), c in self.coefficients.items():
            if lam not in st:
                st[lam] = schur_t(lam, t)
            if mu not in ss:
                ss[mu] = schur_t(mu, s)
            total += c * st[lam] * ss[mu]
        return total

    @property
    def lambdas(self):
        return enumerate_partitions(self.cutoff, self.n)


def tau_series(phi, n, cutoff):
    phi.require(cutoff + n, "tau series")
    coeffs = {}
    for lam in enumerate_partitions(cutoff, n):
        for mu, c in expansion_coeffs(phi, lam, n).support().items():
            coeffs[lam, mu] = c
    return TauSeries(n, cutoff, coeffs)


def _result(value, terms, cutoff):
    return {"value": value, "terms": terms, "cutoff": cutoff}


def tau_phi(phi, n, t, s, cutoff):
    """``tau_phi(n, t, s)`` truncated at ``|lambda| <= cutoff``.

    Returns ``{"value", "terms", "cutoff"}`` where ``terms`` counts the
    partitions ``lambda`` summed over.
    """
    series = tau_series(phi, n, cutoff)
    return _result(series.evaluate(t, s), len(series.lambdas), cutoff)


def tau_pair(phi, theta, n, t, s, cutoff):
    """``sum_lambda S^phi_lambda(s) S^theta_lambda(t)``, both factors in flow variables."""
    phi.require(cutoff + n, "tau pair")
    theta.require(cutoff + n, "tau pair")
    t, s = FlowVector(t), FlowVector(s)
    total = Fraction(0)
    lams = enumerate_partitions(cutoff, n)
    for lam in lams:
        a = expansion_coeffs(phi, lam, n).evaluate_flow(s)
        if a:
            total += a * expansion_coeffs(theta, lam, n).evaluate_flow(t)
    return _result(total, len(lams), cutoff)


def kp_coefficient_check(phi, n, lam, max_rank=None):
    """Giambelli-form Pluecker relations for ``{phi^(n)_{lambda mu}}_mu``.

    Every ``mu`` in the expansion's domain (``l(mu) <= n``, ``|mu| <= |lambda|``)
    with Frobenius rank at most ``max_rank`` is tested; hooks and ``(0)`` lie
    in the same domain, so the family is always complete.
    """
    lam = Partition(lam)
    if len(lam) > n:
        raise LengthError(f"partition {list(lam)} is longer than n={n}")
    family = expansion_coeffs(phi, lam, n)
    return family_check(family, max_rank)


def family_check(family, max_rank=None):
    for mu in family:
        if max_rank is not None and frobenius(mu).rank > max_rank:
            continue
        if not pluecker_check(family, mu):
            return False
    return True


def to_json(result):
    return {"value": format_rational(result["value"]), "terms": result["terms"],
            "cutoff": result["cutoff"]}
