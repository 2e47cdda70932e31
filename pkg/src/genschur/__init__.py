"""Generalized Schur functions attached to monic polynomial bases.

Exact rational arithmetic throughout.  The main entry points are
:func:`genschur.schurgen.bialternant` and its three companion routes,
:func:`genschur.schurgen.expansion_coeffs`, the character, tau-series,
moment and walk modules, and the ``genschur`` command line.
"""

from .errors import (
    DegeneracyError,
    DimensionError,
    DomainError,
    GenSchurError,
    IncompleteFamilyError,
    LengthError,
    NotNilpotentError,
    ShapeError,
    SingularError,
    TruncationError,
)
from .kernel import Matrix, Rational, det
from .partitions import Partition
from .polybasis import PolyBasis, monomial_basis, so_even_basis, so_odd_basis, sp_basis
from .schurgen import bialternant, dual_jacobi_trudi, expansion_coeffs, giambelli, jacobi_trudi

__version__ = "0.1.0"

__all__ = [
    "DegeneracyError",
    "DimensionError",
    "DomainError",
    "GenSchurError",
    "IncompleteFamilyError",
    "LengthError",
    "NotNilpotentError",
    "ShapeError",
    "SingularError",
    "TruncationError",
    "Matrix",
    "Rational",
    "det",
    "Partition",
    "PolyBasis",
    "monomial_basis",
    "sp_basis",
    "so_even_basis",
    "so_odd_basis",
    "bialternant",
    "jacobi_trudi",
    "dual_jacobi_trudi",
    "giambelli",
    "expansion_coeffs",
]
