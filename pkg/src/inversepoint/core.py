"""Dense matrix/vector containers and the elementary operations on them.

Everything downstream (classification, the update map, the solvers) consumes
these two immutable types. Validation happens once at construction so the hot
paths can stay check-free.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NonNegativityError, ValidationError, ZeroRowError


class Matrix:
    """Immutable dense square matrix of 64-bit floats.

    Entries must be finite. Negative entries are representable (classification
    reports nonnegativity and the solvers reject it); NaN and infinity are not.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionError(f"expected a square n-by-n array with n >= 1, got shape {a.shape}")
        if not np.isfinite(a).all():
            raise ValidationError("matrix entries must be finite (no NaN or infinity)")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def row(self, i: int) -> np.ndarray:
        return self.entries[i]

    def __repr__(self) -> str:
        return f"Matrix({self.entries.tolist()!r})"


class PositiveVector:
    """Immutable vector with strictly positive, finite entries."""

    __slots__ = ("values",)

    def __init__(self, values):
        v = np.array(values, dtype=np.float64)
        if v.ndim != 1 or v.shape[0] == 0:
            raise DimensionError(f"expected a 1-d vector, got shape {v.shape}")
        if not np.isfinite(v).all():
            raise ValidationError("vector entries must be finite")
        if not (v > 0).all():
            raise ValidationError("vector entries must be strictly positive")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __setattr__(self, name, value):
        raise AttributeError("PositiveVector is immutable")

    def __len__(self) -> int:
        return self.values.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is not None:
            return self.values.astype(dtype)
        return self.values

    def __repr__(self) -> str:
        return f"PositiveVector({self.values.tolist()!r})"


def as_matrix(M) -> Matrix:
    """Coerce an array-like (or pass through a Matrix) with full validation."""
    return M if isinstance(M, Matrix) else Matrix(M)


def as_positive_vector(v) -> PositiveVector:
    return v if isinstance(v, PositiveVector) else PositiveVector(v)


def _as_vector_array(v, n: int) -> np.ndarray:
    a = np.asarray(v, dtype=np.float64)
    if a.ndim != 1:
        raise DimensionError(f"expected a 1-d vector, got shape {a.shape}")
    if a.shape[0] != n:
        raise DimensionError(f"vector has length {a.shape[0]}, expected {n}")
    return a


def matvec(M, v) -> np.ndarray:
    """M @ v as a plain ndarray, exact up to float rounding."""
    mtx = as_matrix(M)
    a = _as_vector_array(v, mtx.n)
    return mtx.entries @ a


def diag_sandwich(M, x) -> Matrix:
    """diag(x) * M * diag(x): entry (i, j) becomes x_i * m_ij * x_j."""
    mtx = as_matrix(M)
    xv = as_positive_vector(x)
    if len(xv) != mtx.n:
        raise DimensionError(f"vector has length {len(xv)}, expected {mtx.n}")
    vals = xv.values
    return Matrix(vals[:, None] * mtx.entries * vals[None, :])


def inverse_elementwise(v) -> PositiveVector:
    """The vector (1/v_1, ..., 1/v_n)."""
    xv = as_positive_vector(v)
    return PositiveVector(1.0 / xv.values)


def validate_solvable(M: Matrix) -> None:
    """Reject matrices on which x_i*(Mx)_i = 1 cannot be posed: negative
    entries or an all-zero row."""
    a = M.entries
    if (a < 0).any():
        i, j = np.argwhere(a < 0)[0]
        raise NonNegativityError(f"matrix entry ({i},{j}) is negative: {a[i, j]}")
    zero_rows = np.nonzero(~(a != 0).any(axis=1))[0]
    if zero_rows.size:
        i = int(zero_rows[0])
        raise ZeroRowError(i, f"row {i} is entirely zero, so x[{i}]*(Mx)[{i}] = 1 is unsatisfiable")
