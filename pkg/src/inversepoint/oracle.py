"""Independent brute-force solver used to validate the main path in tests.

Deliberately different machinery: a fixed-order coordinate-descent sweep
whose per-row scalar quadratic is solved by bisection, never by the closed
form the solver uses. Small n only; performance is a non-goal.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .core import PositiveVector, as_matrix, validate_solvable
from .errors import OracleDivergenceError, ValidationError

MAX_ORACLE_N = 5


def _solve_with_sweeps(M, tol: float, max_sweeps: int):
    mtx = as_matrix(M)
    if mtx.n > MAX_ORACLE_N:
        raise ValidationError(f"oracle supports n <= {MAX_ORACLE_N}, got n = {mtx.n}")
    if tol <= 0:
        raise ValidationError("tol must be positive")
    validate_solvable(mtx)
    x = np.ones(mtx.n)
    status, sweeps = _kernels.oracle_sweeps(mtx.entries, x, tol, max_sweeps)
    if status == 2:
        raise OracleDivergenceError(
            f"bisection bracket [1e-12, 1e6] does not straddle a root after {sweeps} sweeps"
        )
    if status != 0:
        raise OracleDivergenceError(
            f"coordinate descent did not reach tol={tol} within {max_sweeps} sweeps"
        )
    return PositiveVector(x), sweeps


def oracle_solve(M, tol: float = 1e-12, max_sweeps: int = 10**6) -> PositiveVector:
    x, _ = _solve_with_sweeps(M, tol, max_sweeps)
    return x
