"""Exception hierarchy shared by every cliffeq module."""

from __future__ import annotations


class CliffeqError(Exception):
    """Base class for all domain errors raised by cliffeq."""


class DimensionCapError(CliffeqError, ValueError):
    """The requested algebra exceeds the configured dimension cap."""


class InvalidBladeError(CliffeqError, ValueError):
    """A blade or index does not fit the ambient signature."""


class SignatureMismatchError(CliffeqError, ValueError):
    """Two operands live in different algebras."""


class NotOrthogonalError(CliffeqError, ValueError):
    """A matrix fails to preserve the quadratic form exactly."""


class ExprSyntaxError(CliffeqError, ValueError):
    """Malformed multivector expression.

    ``position`` is the zero-based character offset of the problem.
    """

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class IndexOutOfRangeError(ExprSyntaxError, InvalidBladeError):
    """An expression names a generator index outside 1..n."""

    def __init__(self, index: int, n: int, position: int, text: str = ""):
        self.index = index
        self.n = n
        super().__init__(f"index {index} out of range 1..{n}", position, text)


class NotComplexStructureError(CliffeqError, ValueError):
    """Candidate J(1) does not square to -1 (or fails an operator check)."""


class NotIdempotentError(CliffeqError, ValueError):
    """Candidate projection p has p*p != p.  ``defect`` holds p*p - p."""

    def __init__(self, message: str, defect=None):
        self.defect = defect
        super().__init__(message)


class ClosureError(CliffeqError, ValueError):
    """A submodule is not preserved by the complex structure."""


class BasisError(CliffeqError, ValueError):
    """A proposed basis is dependent, or fails to span its target."""


class NotInSpanError(CliffeqError, ValueError):
    """A vector is not in the span of the given columns."""


class InternalInconsistency(CliffeqError, AssertionError):
    """Two independent computations of the same quantity disagree."""
