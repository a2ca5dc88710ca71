"""Exception types shared across the package."""


class RelkitError(Exception):
    pass


class DivisionByZero(RelkitError, ZeroDivisionError):
    pass


class ZeroPolynomial(RelkitError, ValueError):
    pass


class ParseError(RelkitError, ValueError):
    pass


class AmbientMismatch(RelkitError, ValueError):
    pass


class NotASubspace(RelkitError, ValueError):
    """Raised when a required containment ``W <= U`` fails."""


class NotInSpan(RelkitError, ValueError):
    pass


class ReducingError(RelkitError):
    """A proposed reducing sum decomposition is invalid."""

    clause = "reducing"


class NotDirect(ReducingError):
    clause = "direct sum of spaces"


class DoesNotSpan(ReducingError):
    clause = "spaces span dom A + ran A"


class SumNotEqualA(ReducingError):
    clause = "componentwise sum equals A"


class UnsplitEigenvalues(RelkitError):
    """Proper eigenvalues exist outside the working field."""

    def __init__(self, factors, message=None):
        self.factors = list(factors)
        from .field import format_poly

        listed = ", ".join(format_poly(f) for f in self.factors)
        super().__init__(message or f"eigenvalues outside the working field: roots of {listed}")


class NotAProperEigenvalue(RelkitError, ValueError):
    pass


class MalformedCharacteristic(RelkitError, ValueError):
    pass


class SingularTransform(RelkitError, ValueError):
    pass


class DimMismatch(RelkitError, ValueError):
    pass


class ShapeMismatch(RelkitError, ValueError):
    pass
