import math

import numpy as np
import pytest

from inversepoint import Matrix

SQRT5 = math.sqrt(5.0)
SQRT2 = math.sqrt(2.0)

# Closed-form solution of the lower-triangular worked example.
TRIANGULAR_X = np.array([
    1.0,
    (SQRT5 - 1.0) / 2.0,
    (math.sqrt(2.0 * SQRT5 + 22.0) - SQRT5 - 1.0) / 4.0,
])

# Closed-form solution of the zero-diagonal worked example.
ZERO_DIAG_X = np.array([SQRT2, 1.0 / SQRT2, 1.0 / SQRT2])


@pytest.fixture
def triangular():
    return Matrix([[1, 0, 0], [1, 1, 0], [1, 1, 1]])


@pytest.fixture
def zero_diag():
    return Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 1]])


@pytest.fixture
def counterexample():
    return Matrix([[1, 2, 2], [2, 1, 2], [2, 2, 1]])


@pytest.fixture
def curves_2d():
    return Matrix([[1, 3], [5, 2]])


@pytest.fixture
def curves_3d():
    return Matrix([[1, 2, 2], [1, 1, 1], [1, 3, 1]])
