import numpy as np

from conftest import TRIANGULAR_X
from helpers import random_positive_diagonal
from inversepoint import Matrix, certify, solve


def test_certify_identity_all_zero():
    cert = certify(Matrix(np.eye(3)), np.ones(3))
    assert cert.max_row_sum_defect == 0.0
    assert cert.eq2_defect == 0.0
    assert cert.inverse_defect == 0.0
    assert np.array_equal(cert.row_sums, np.ones(3))


def test_certify_triangular_closed_form(triangular):
    cert = certify(triangular, TRIANGULAR_X)
    assert cert.max_row_sum_defect <= 1e-13
    assert cert.eq2_defect <= 1e-13
    assert cert.inverse_defect <= 1e-13


def test_certify_perturbation_makes_all_defects_positive(curves_2d):
    x = solve(curves_2d).x.values.copy()
    x[0] += 0.1
    cert = certify(curves_2d, x)
    assert cert.max_row_sum_defect > 1e-3
    assert cert.eq2_defect > 1e-3
    assert cert.inverse_defect > 1e-3


def test_defect_equivalence_at_tolerance():
    # the three defects are the same failure measured three ways; they agree
    # within a factor 10 after the natural ||x||-scalings
    rng = np.random.default_rng(41)
    for _ in range(40):
        n = int(rng.integers(2, 6))
        m = random_positive_diagonal(rng, n)
        x = rng.uniform(0.5, 2.0, n)
        cert = certify(m, x)
        xmax = float(np.max(x))
        xmin = float(np.min(x))
        assert cert.eq2_defect <= 10 * cert.inverse_defect * xmax
        assert cert.inverse_defect <= 10 * cert.eq2_defect / xmin
        assert cert.max_row_sum_defect <= 10 * cert.inverse_defect * xmax + 1e-12
        assert cert.inverse_defect <= 10 * cert.max_row_sum_defect / xmin + 1e-12
        assert abs(cert.max_row_sum_defect - cert.eq2_defect) <= 1e-10 * (1 + cert.eq2_defect)


def test_scaling_consistency_on_converged_results(triangular, zero_diag, curves_2d, curves_3d):
    tol = 1e-12
    for m in (triangular, zero_diag, curves_2d, curves_3d):
        res = solve(m)
        cert = certify(m, res.x)
        bound = 10 * tol * max(1.0, float(np.max(res.x.values)) ** 2)
        assert cert.max_row_sum_defect <= bound
        assert cert.eq2_defect <= bound
        assert cert.inverse_defect <= bound
