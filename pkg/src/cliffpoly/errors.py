"""Exception types shared across the package."""


class CliffordError(Exception):
    """Base class for all library errors."""


class DimensionCapError(CliffordError):
    """p + q exceeds the configured dimension cap."""


class UnsupportedDimensionError(CliffordError):
    """A formula or scheme is not defined for this algebra dimension."""


class SignatureMismatchError(CliffordError):
    """Operands belong to different algebras; no coercion is attempted."""


class GradeRangeError(CliffordError):
    """Grade, generator index, or conjugation index out of range."""


class NotInvertibleError(CliffordError):
    """Determinant below the invertibility threshold.

    The computed determinant is kept on the ``det`` attribute so callers
    can report it.
    """

    def __init__(self, message: str, det: float):
        super().__init__(message)
        self.det = det


class InternalCheckError(CliffordError):
    """An internal consistency assertion failed (e.g. a product that must
    be scalar has significant non-scalar coefficients)."""


class ExprSyntaxError(CliffordError):
    """Malformed multivector expression; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos
