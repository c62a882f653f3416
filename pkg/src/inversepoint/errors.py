"""Exception types shared across the package."""

from __future__ import annotations


class InversePointError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(InversePointError):
    """Operands have incompatible or non-square shapes."""


class ValidationError(InversePointError):
    """Input data violates a construction invariant (NaN, sign, shape).

    ``line`` and ``column`` are 1-based positions into the offending input
    when the error comes from a parser, else None.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class ParseError(InversePointError):
    """Input text is not well-formed CSV or JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class NonNegativityError(InversePointError):
    """A negative entry appeared where a nonnegative matrix is required."""


class ZeroRowError(InversePointError):
    """Row equation x_i * (Mx)_i = 1 is unsatisfiable.

    Raised when m_ii = 0 and the off-diagonal contribution b_i is zero at the
    evaluation point; in particular for an all-zero row, where it is zero at
    every point. ``row`` is the 0-based row index.
    """

    def __init__(self, row: int, message: str | None = None):
        if message is None:
            message = (
                f"row {row}: m[{row},{row}] = 0 and the off-diagonal terms vanish at "
                f"the evaluation point, so x[{row}]*(Mx)[{row}] = 1 has no solution"
            )
        super().__init__(message)
        self.row = row


class NotPrimitiveError(InversePointError):
    """The matrix is not primitive (no power of it is entrywise positive)."""


class ContractionPreconditionError(InversePointError):
    """2*m_ii > m_ij fails for some pair, so the contraction iteration is unsound."""


class SingularJacobianError(InversePointError):
    """Elimination hit a pivot below the singularity threshold."""

    def __init__(self, column: int, message: str | None = None):
        if message is None:
            message = f"Jacobian is numerically singular (pivot column {column} below 1e-300)"
        super().__init__(message)
        self.column = column


class ConvergenceError(InversePointError):
    """Iteration budget exhausted (or progress stopped) before reaching tol.

    ``result`` carries the best iterate found, as a SolveResult with
    converged=False, when the failing solver had one.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class StallError(InversePointError):
    """Internal: the bracket gap stopped shrinking. Converted to a Newton
    fallback (auto/bracket) or a ConvergenceError before reaching callers."""


class OracleDivergenceError(InversePointError):
    """The brute-force oracle failed to reach its tolerance."""
