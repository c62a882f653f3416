"""Solvers for x_i * (Mx)_i = 1: nested-box bracketing, contraction
iteration, damped Newton, and an auto mode that picks by classification.

Every public solver returns a SolveResult whose converged flag means
residual <= config.tol at the returned point; running out of budget raises
ConvergenceError carrying the best iterate as a non-converged result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .classify import Classification, classify, contraction_condition
from .core import PositiveVector, as_matrix, as_positive_vector, validate_solvable
from .errors import (
    ContractionPreconditionError,
    ConvergenceError,
    SingularJacobianError,
    ValidationError,
    ZeroRowError,
)

METHODS = ("auto", "bracket", "contraction", "newton", "fixed_point")

# A bracket round whose gap shrinks by less than this factor counts toward a
# stall; ten in a row trigger the Newton fallback.
STALL_RATIO = 0.999
STALL_ROUNDS = 10


@dataclass
class SolverConfig:
    tol: float = 1e-12
    max_iter: int = 10000
    method: str = "auto"
    newton_damping_max_halvings: int = 40
    seed: int | None = None

    def __post_init__(self):
        if self.tol <= 0:
            raise ValidationError("tol must be positive")
        if self.max_iter < 1:
            raise ValidationError("max_iter must be at least 1")
        if self.method not in METHODS:
            raise ValidationError(f"method must be one of {METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class BracketState:
    """One nested box: corners bounding the fixed point from below and above."""

    lower: np.ndarray
    upper: np.ndarray


@dataclass
class SolveResult:
    x: PositiveVector
    residual: float
    iterations: int
    method_used: str
    classification: Classification
    converged: bool
    trace: np.ndarray | None = None


def _result(mtx, x, iterations, method, trace, converged, classification=None):
    res = float(_kernels.residual_inf(mtx.entries, np.asarray(x, dtype=np.float64)))
    return SolveResult(
        x=PositiveVector(x),
        residual=res,
        iterations=iterations,
        method_used=method,
        classification=classification if classification is not None else classify(mtx),
        converged=converged,
        trace=np.asarray(trace, dtype=np.float64) if trace is not None else None,
    )


def _budget_error(mtx, x, iterations, method, trace, classification=None):
    best = _result(mtx, x, iterations, method, trace, False, classification)
    return ConvergenceError(
        f"{method}: residual {best.residual:.3e} after {iterations} iterations "
        f"(budget exhausted)",
        result=best,
    )


def solve(M, config: SolverConfig | None = None) -> SolveResult:
    """Dispatch on config.method. Newton starts from the all-ones vector."""
    mtx = as_matrix(M)
    config = config or SolverConfig()
    if config.method == "auto":
        return solve_auto(mtx, config)
    if config.method == "bracket":
        return solve_bracket(mtx, config)
    if config.method == "contraction":
        return solve_contraction(mtx, config)
    if config.method == "newton":
        validate_solvable(mtx)
        return solve_newton(mtx, np.ones(mtx.n), config)
    validate_solvable(mtx)
    return _solve_fixed_point(mtx, config, newton_fallback=False)


def solve_auto(M, config: SolverConfig | None = None) -> SolveResult:
    """Pick the strongest applicable strategy: contraction iteration when
    2*m_ii > m_ij everywhere, else bracketing when the diagonal is positive,
    else plain fixed-point iteration from all-ones with a Newton fallback."""
    mtx = as_matrix(M)
    config = config or SolverConfig()
    validate_solvable(mtx)
    cls = classify(mtx)
    if cls.contraction_condition:
        return solve_contraction(mtx, config, _cls=cls)
    if cls.positive_diagonal:
        return solve_bracket(mtx, config, _cls=cls)
    return _solve_fixed_point(mtx, config, newton_fallback=True, _cls=cls)


def solve_contraction(M, config: SolverConfig | None = None, *, _cls=None) -> SolveResult:
    """Iterate x <- F(x) from x0 = F(0); sound when F contracts.

    The Banach a-posteriori bound would allow stopping once the successive
    gap falls below tol*(1-C)/C, but that controls distance to the fixed
    point, not the residual; the residual is the authoritative stop so that
    converged always means residual <= tol.
    """
    mtx = as_matrix(M)
    config = config or SolverConfig()
    validate_solvable(mtx)
    ok, c = contraction_condition(mtx)
    if not ok:
        raise ContractionPreconditionError(
            "2*m_ii > m_ij fails for some pair; the iteration has no contraction certificate"
        )
    cls = _cls if _cls is not None else classify(mtx)
    m = mtx.entries
    n = mtx.n
    x = np.empty(n)
    _kernels.f_apply(m, np.zeros(n), x)  # cannot fail: diagonal is positive
    trace = [float(_kernels.residual_inf(m, x))]
    iterations = 0
    while trace[-1] > config.tol:
        if iterations >= config.max_iter:
            raise _budget_error(mtx, x, iterations, "contraction", trace, cls)
        nxt = np.empty(n)
        _kernels.f_apply(m, x, nxt)
        x = nxt
        iterations += 1
        trace.append(float(_kernels.residual_inf(m, x)))
    return _result(mtx, x, iterations, "contraction", trace, True, cls)


def solve_bracket(M, config: SolverConfig | None = None, *, bracket_log=None, _cls=None) -> SolveResult:
    """Nested-box iteration x <- F(x) from the origin.

    Because F is decreasing, even iterates climb toward the fixed point and
    odd iterates descend toward it, so Box(even, odd) is a shrinking bracket.
    Stops on the midpoint residual; if the gap stalls (shrinks by less than
    STALL_RATIO for STALL_ROUNDS consecutive corners) or bottoms out above
    tol, a damped-Newton pass from the midpoint finishes the job.

    bracket_log, when a list, receives a BracketState per corner update.
    """
    mtx = as_matrix(M)
    config = config or SolverConfig()
    validate_solvable(mtx)
    diag = np.diagonal(mtx.entries)
    if (diag <= 0).any():
        i = int(np.nonzero(diag <= 0)[0][0])
        raise ZeroRowError(
            i,
            f"bracketing starts at the zero vector, where row {i} (zero diagonal) "
            f"has no positive root; use auto, fixed_point, or newton instead",
        )
    cls = _cls if _cls is not None else classify(mtx)
    m = mtx.entries
    n = mtx.n
    lower = np.zeros(n)
    upper = np.empty(n)
    _kernels.f_apply(m, lower, upper)
    if bracket_log is not None:
        bracket_log.append(BracketState(lower.copy(), upper.copy()))
    cur = upper
    next_is_lower = True
    trace = []
    iterations = 0
    prev_gap = np.inf
    stall = 0
    while iterations < config.max_iter:
        nxt = np.empty(n)
        _kernels.f_apply(m, cur, nxt)
        cur = nxt
        if next_is_lower:
            lower = nxt
        else:
            upper = nxt
        next_is_lower = not next_is_lower
        iterations += 1
        if bracket_log is not None:
            bracket_log.append(BracketState(lower.copy(), upper.copy()))
        mid = 0.5 * (lower + upper)
        r = float(_kernels.residual_inf(m, mid))
        trace.append(r)
        if r <= config.tol:
            return _result(mtx, mid, iterations, "bracket", trace, True, cls)
        gap = float(np.max(upper - lower))
        if prev_gap > 0.0 and gap / prev_gap > STALL_RATIO:
            stall += 1
        else:
            stall = 0
        prev_gap = gap
        if stall >= STALL_ROUNDS or gap <= config.tol:
            # Stalled (2-cycle or near-1 contraction rate) or the box is
            # tighter than the residual scale allows: hand the midpoint to
            # Newton with the remaining budget.
            sub = SolverConfig(
                tol=config.tol,
                max_iter=max(1, config.max_iter - iterations),
                method="newton",
                newton_damping_max_halvings=config.newton_damping_max_halvings,
                seed=config.seed,
            )
            try:
                fin = solve_newton(mtx, mid, sub)
            except (ConvergenceError, SingularJacobianError) as err:
                best = _result(mtx, mid, iterations, "bracket", trace, False, cls)
                raise ConvergenceError(
                    f"bracket stalled at gap {gap:.3e} and the Newton fallback "
                    f"failed: {err}",
                    result=best,
                ) from err
            return SolveResult(
                x=fin.x,
                residual=fin.residual,
                iterations=iterations + fin.iterations,
                method_used="newton",
                classification=cls,
                converged=fin.converged,
                trace=np.concatenate([trace, fin.trace]),
            )
    mid = 0.5 * (lower + upper)
    raise _budget_error(mtx, mid, iterations, "bracket", trace, cls)


def solve_newton(M, x0, config: SolverConfig | None = None) -> SolveResult:
    """Damped Newton on G_i(x) = x_i*(Mx)_i - 1 from a positive start.

    The Jacobian is J_ij = x_i*m_ij + delta_ij*(Mx)_i; steps are halved until
    the defect norm decreases and the iterate stays strictly positive.
    """
    mtx = as_matrix(M)
    config = config or SolverConfig()
    x = as_positive_vector(x0).values.copy()
    if x.shape[0] != mtx.n:
        raise ValidationError(f"start point has length {x.shape[0]}, expected {mtx.n}")
    m = mtx.entries
    n = mtx.n
    g = np.empty(n)
    jac = np.empty((n, n))
    gt = np.empty(n)
    _kernels.quad_defect(m, x, g)
    gn = float(np.max(np.abs(g)))
    trace = [gn]
    iterations = 0
    while gn > config.tol:
        if iterations >= config.max_iter:
            raise _budget_error(mtx, x, iterations, "newton", trace)
        _kernels.newton_system(m, x, jac, g)
        step = -g.copy()
        bad = _kernels.gauss_solve(jac.copy(), step)
        if bad >= 0:
            raise SingularJacobianError(int(bad))
        lam = 1.0
        accepted = False
        for _ in range(config.newton_damping_max_halvings + 1):
            xt = x + lam * step
            if (xt > 0).all():
                _kernels.quad_defect(m, xt, gt)
                gtn = float(np.max(np.abs(gt)))
                if gtn < gn:
                    x, gn = xt, gtn
                    accepted = True
                    break
            lam *= 0.5
        if not accepted:
            best = _result(mtx, x, iterations, "newton", trace, False)
            raise ConvergenceError(
                f"newton: line search could not reduce the defect below {gn:.3e} "
                f"within {config.newton_damping_max_halvings} halvings",
                result=best,
            )
        iterations += 1
        trace.append(gn)
    return _result(mtx, x, iterations, "newton", trace, True)


# Fixed-point iterates beyond this magnitude count as divergence (solutions
# of sane systems are orders of magnitude smaller; letting the iteration run
# into overflow would make the failure mode backend-dependent).
DIVERGENCE_LIMIT = 1e100


def _solve_fixed_point(mtx, config, *, newton_fallback: bool, _cls=None) -> SolveResult:
    """Plain iteration x <- F(x) from all-ones. Covers matrices with zero
    diagonal entries, where neither bracketing nor the contraction certificate
    applies; convergence is not guaranteed, so stalls and divergence either
    escalate to Newton (auto mode) or raise."""
    cls = _cls if _cls is not None else classify(mtx)
    m = mtx.entries
    n = mtx.n
    x = np.ones(n)
    trace = [float(_kernels.residual_inf(m, x))]
    best_x, best_res = x.copy(), trace[0]
    iterations = 0
    prev_gap = np.inf
    stall = 0

    def give_up():
        if newton_fallback:
            sub = SolverConfig(
                tol=config.tol,
                max_iter=config.max_iter,
                method="newton",
                newton_damping_max_halvings=config.newton_damping_max_halvings,
                seed=config.seed,
            )
            try:
                fin = solve_newton(mtx, best_x, sub)
            except (ConvergenceError, SingularJacobianError) as err:
                best = _result(mtx, best_x, iterations, "fixed_point", trace, False, cls)
                raise ConvergenceError(
                    f"fixed-point iteration made no progress and the Newton "
                    f"fallback failed: {err}",
                    result=best,
                ) from err
            return SolveResult(
                x=fin.x,
                residual=fin.residual,
                iterations=iterations + fin.iterations,
                method_used="newton",
                classification=cls,
                converged=fin.converged,
                trace=np.concatenate([trace, fin.trace]),
            )
        raise _budget_error(mtx, best_x, iterations, "fixed_point", trace, cls)

    while trace[-1] > config.tol:
        if iterations >= config.max_iter or stall >= STALL_ROUNDS:
            return give_up()
        nxt = np.empty(n)
        bad = _kernels.f_apply(m, x, nxt)
        if bad >= 0:
            raise ZeroRowError(int(bad))
        if not np.isfinite(nxt).all() or float(np.max(nxt)) > DIVERGENCE_LIMIT:
            return give_up()
        gap = float(np.max(np.abs(nxt - x)))
        x = nxt
        iterations += 1
        trace.append(float(_kernels.residual_inf(m, x)))
        if trace[-1] < best_res:
            best_x, best_res = x.copy(), trace[-1]
        if prev_gap > 0.0 and gap / prev_gap > STALL_RATIO:
            stall += 1
        else:
            stall = 0
        prev_gap = gap
    return _result(mtx, x, iterations, "fixed_point", trace, True, cls)


def multistart_uniqueness(M, config: SolverConfig | None = None, starts: int = 20):
    """Newton from seeded random starts (components log-uniform in
    [1e-2, 1e2]); returns (first result, max pairwise inf-distance among all
    solutions). Small distances are empirical evidence of uniqueness."""
    mtx = as_matrix(M)
    config = config or SolverConfig()
    validate_solvable(mtx)
    if starts < 1:
        raise ValidationError("starts must be at least 1")
    rng = np.random.default_rng(config.seed if config.seed is not None else 0)
    first = None
    solutions = []
    for _ in range(starts):
        x0 = 10.0 ** rng.uniform(-2.0, 2.0, mtx.n)
        res = solve_newton(mtx, x0, config)
        if first is None:
            first = res
        solutions.append(res.x.values)
    dmax = 0.0
    for i in range(len(solutions)):
        for j in range(i + 1, len(solutions)):
            d = float(np.max(np.abs(solutions[i] - solutions[j])))
            if d > dmax:
                dmax = d
    return first, dmax
