"""Certify how close diag(x)*M*diag(x) is to row-stochastic.

The three defects are the three equivalent characterizations of a solution:
Mx equals the element-wise inverse of x, the sandwiched matrix has unit row
sums, and every row of the quadratic system is satisfied. They degrade
differently under rounding, so all three are reported rather than one flag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_matrix, as_positive_vector, diag_sandwich, matvec
from .fixedpoint import residual


@dataclass(frozen=True)
class StochasticCertificate:
    row_sums: np.ndarray
    max_row_sum_defect: float
    eq2_defect: float
    inverse_defect: float


def certify(M, x) -> StochasticCertificate:
    mtx = as_matrix(M)
    xv = as_positive_vector(x)
    row_sums = diag_sandwich(mtx, xv).entries.sum(axis=1)
    mx = matvec(mtx, xv)
    return StochasticCertificate(
        row_sums=row_sums,
        max_row_sum_defect=float(np.max(np.abs(row_sums - 1.0))),
        eq2_defect=residual(mtx, xv.values),
        inverse_defect=float(np.max(np.abs(mx - 1.0 / xv.values))),
    )
