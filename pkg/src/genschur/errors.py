"""Exception hierarchy shared by every module."""


class GenSchurError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class DimensionError(GenSchurError, ValueError):
    pass


class ShapeError(GenSchurError, ValueError):
    """Input has the wrong structure (not triangular, not strict, ...)."""


class NotNilpotentError(ShapeError):
    pass


class TruncationError(GenSchurError, ValueError):
    """A finite window of an infinite matrix is too small for the request."""


class LengthError(GenSchurError, ValueError):
    """Partition longer than the number of variables allows."""


class SingularError(GenSchurError, ZeroDivisionError):
    """Division by a vanishing determinant (e.g. repeated evaluation points)."""


class DegeneracyError(SingularError):
    """Vanishing Hankel minor while orthogonalising against a measure."""


class IncompleteFamilyError(GenSchurError, KeyError):
    """A Plücker coordinate needed by a check is missing from the family."""

    def __str__(self):
        return Exception.__str__(self)


class DomainError(GenSchurError, ValueError):
    """Input outside an operation's mathematical domain (zero torus coordinate, ...)."""
