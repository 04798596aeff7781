"""Exception types shared across the package."""


class TightpolyError(Exception):
    """Base class for all package-specific errors."""


class InvalidTypeError(TightpolyError):
    """A Schlafli type parameter is out of range (p < 2 or q < 2)."""


class InvalidPresentationError(TightpolyError):
    """A presentation is missing one of the mandatory relators."""


class BoundExceededError(TightpolyError):
    """Coset enumeration exceeded its live-coset bound.

    Either the group is infinite or the bound is too small for the
    intermediate table growth.
    """

    def __init__(self, max_cosets, message=None):
        self.max_cosets = max_cosets
        super().__init__(message or f"live cosets exceeded the bound {max_cosets}")


class InvalidKError(TightpolyError):
    """The face parameter k fails its congruence precondition."""


class TypeMismatchError(TightpolyError):
    """Polyhedron isomorphism was asked across different Schlafli types."""


class LabelError(TightpolyError):
    """No vertex labelling with i*sigma1 = i+1 exists (sigma1 is not a p-cycle)."""


class UnsupportedFormatError(TightpolyError):
    """Unknown export format."""


class VerificationFailureError(TightpolyError):
    """A closed-form classification record failed its group-level checks.

    This signals an implementation bug; it is never expected on a correct
    build.
    """


class BudgetExceededError(TightpolyError):
    """A brute-force sweep was larger than the configured budget."""
