"""Exception types raised across the package.

Everything derives from :class:`OsculantError` so callers (and the CLI)
can catch one base class.
"""


class OsculantError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateNodeError(OsculantError):
    """Two nodes are closer than the distinctness threshold."""


class NonFiniteInputError(OsculantError):
    """An input value is NaN or infinite."""


class WeightOverflowError(OsculantError):
    """A barycentric weight power is zero or non-finite.

    Signals that the nodes are too clustered (or too spread out) for the
    requested derivative order.
    """


class ShapeMismatchError(OsculantError):
    """Paired tables or matrices have inconsistent shapes."""


class WrongOrderError(OsculantError):
    """A closed-form solver was called with the wrong derivative order."""


class OrderTooLargeError(OsculantError):
    """Derivative order so large that binomial coefficients would lose
    exactness in double precision."""


class SizeLimitError(OsculantError):
    """Problem exceeds the reference solver's size guard."""


class SingularSystemError(OsculantError):
    """The reference linear system is numerically singular (duplicate
    nodes slipped past validation)."""


class ProblemFileError(OsculantError):
    """Base class for problem-file loading failures."""


class ParseError(ProblemFileError):
    """Problem file is not valid JSON."""


class SchemaError(ProblemFileError):
    """Problem file parses but does not match the expected schema."""


class ValidationError(ProblemFileError):
    """Problem file matches the schema but carries invalid data."""


class GridSpecError(OsculantError):
    """Evaluation grid specification is malformed."""
