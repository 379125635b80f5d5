"""Exception types shared across the package."""


class StringAlgError(Exception):
    """Base class for all stringalg errors."""


class PresentationError(StringAlgError):
    """Syntax or consistency error in a presentation file."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class NotAStringAlgebra(StringAlgError):
    """The presentation fails one of the string-algebra axioms."""

    def __init__(self, report):
        self.report = report
        tags = ", ".join(v[0] for v in report.violations)
        super().__init__(f"not a string algebra: {tags}")


class SignConsistencyError(StringAlgError):
    """The sign constraints admit no solution, or supplied signs violate them."""


class NotComposable(StringAlgError):
    """Concatenation rejected: endpoint or lazy-sign mismatch."""


class NotAString(StringAlgError):
    """The written word violates a string invariant."""


class NotABand(StringAlgError):
    pass


class NotInHammock(StringAlgError):
    pass


class UndefinedOperator(StringAlgError):
    pass


class GradedIndexError(StringAlgError):
    """Graded operator index outside 0..k."""


class NotAnInclusionShape(StringAlgError):
    pass


class NotAnImageSubstring(StringAlgError):
    pass


class NotAFactorSubstring(StringAlgError):
    pass


class NotMetaTorsionFree(StringAlgError):
    pass


class InternalInvariantError(StringAlgError):
    """A condition the theory guarantees failed; indicates a bug."""
