"""
Characters of Sp(2n), SO(2n) and SO(2n+1) as generalized Schur functions.

With ``z_i = x_i + 1/x_i`` the group character at the torus element
``diag(x, 1/x)`` is ``S^phi_lambda(z)`` for the matching basis.  The
Littlewood expansion in Schur functions of the doubled variable list gives
an independent route through Littlewood-Richardson coefficients.
"""

from fractions import Fraction

from .errors import DomainError, SingularError, TruncationError
from .kernel import to_rational
from .partitions import Partition, doubles, partitions_of, strict_partitions
from .polybasis import so_even_basis, so_odd_basis, sp_basis
from .schurgen import bialternant, expansion_coeffs
from .symfun import littlewood_richardson, monomial_sums, schur_at

__all__ = [
    "GROUPS",
    "TorusPoint",
    "group_basis",
    "character",
    "littlewood_rhs",
    "schur_expansion_z",
]

GROUPS = {"sp": sp_basis, "so_even": so_even_basis, "so_odd": so_odd_basis}

_ALIASES = {
    "sp": "sp", "Sp": "sp", "symplectic": "sp",
    "so_even": "so_even", "SO_even": "so_even", "so2n": "so_even",
    "so_odd": "so_odd", "SO_odd": "so_odd", "so2n+1": "so_odd",
}


def _group(tag):
    try:
        return _ALIASES[tag]
    except KeyError:
        raise DomainError(f"unknown group tag {tag!r}; expected one of {sorted(GROUPS)}") from None


class TorusPoint(tuple):
    """Nonzero rationals ``x_1..x_n``; ``z`` holds ``x_i + 1/x_i``."""

    def __new__(cls, values):
        pt = super().__new__(cls, (to_rational(v) for v in values))
        if any(v == 0 for v in pt):
            raise DomainError("torus coordinates must be nonzero")
        return pt

    @property
    def n(self):
        return len(self)

    @property
    def z(self):
        return tuple(x + 1 / x for x in self)

    def z_distinct(self):
        z = self.z
        return len(set(z)) == len(z)


def group_basis(tag, N):
    return GROUPS[_group(tag)](N)


def schur_expansion_z(G, lam, n):
    """``phi^G_{lambda mu}``: the Schur expansion of the character in ``z``."""
    lam = Partition(lam)
    return expansion_coeffs(group_basis(G, lam.part(1) + n), lam, n)


def character(G, lam, p, method="auto"):
    """``chi^G_lambda(x) = S^G_lambda(z)``.

    ``method="bialternant"`` insists on distinct ``z`` values and raises
    :class:`SingularError` otherwise.  ``"auto"`` falls back to the Schur
    expansion in power sums of ``z``, which is polynomial and therefore also
    valid at coincident ``z`` (e.g. the identity element, giving dimensions).
    """
    p = p if isinstance(p, TorusPoint) else TorusPoint(p)
    lam = Partition(lam)
    n = p.n
    if method not in ("auto", "bialternant", "expansion"):
        raise DomainError(f"unknown method {method!r}")
    if method == "bialternant" or (method == "auto" and p.z_distinct()):
        if not p.z_distinct():
            raise SingularError(f"z values collide: {[str(v) for v in p.z]}")
        return bialternant(group_basis(G, lam.part(1) + n), lam, p.z)
    ex = schur_expansion_z(G, lam, n)
    t = monomial_sums(p.z, max(lam.weight, 1))
    return ex.evaluate_flow(t)


def _doubled(G, p):
    vals = list(p) + [1 / x for x in p]
    if _group(G) == "so_odd":
        vals.append(Fraction(1))
    if len(set(vals)) != len(vals):
        raise SingularError(
            "doubled variable list has repeated values; avoid x_i = +-1 and x_i x_j = 1"
        )
    return vals


def littlewood_rhs(G, lam, p, cutoff=None):
    """``sum_alpha (-1)^|alpha| sum_mu C^lambda_{D, mu} S_mu(x, 1/x[, 1])``.

    ``D = D'(alpha)`` for Sp and ``D(alpha)`` for SO; ``alpha`` runs over
    strict partitions with ``2|alpha| <= cutoff`` (default ``|lambda|``).
    """
    p = p if isinstance(p, TorusPoint) else TorusPoint(p)
    lam = Partition(lam)
    cutoff = lam.weight if cutoff is None else cutoff
    if cutoff < lam.weight:
        raise TruncationError(f"cutoff {cutoff} is below |lambda| = {lam.weight}")
    sp = _group(G) == "sp"
    vals = _doubled(G, p)
    total = Fraction(0)
    cache = {}
    for alpha in strict_partitions(cutoff // 2):
        d, d_prime = doubles(alpha)
        D = d_prime if sp else d
        if not lam.contains(D):
            continue
        sign = -1 if alpha.weight % 2 else 1
        for mu, c in _skew_terms(lam, D):
            if mu not in cache:
                cache[mu] = schur_at(mu, vals)
            total += sign * c * cache[mu]
    return total


def _skew_terms(lam, D):
    # mu with C^lambda_{D mu} != 0 lie inside lambda with |mu| = |lambda| - |D|
    w = lam.weight - D.weight
    for mu in partitions_of(w, len(lam)):
        if lam.contains(mu):
            c = littlewood_richardson(D, mu, lam)
            if c:
                yield mu, c

