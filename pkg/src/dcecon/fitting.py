"""Least-squares and constrained fitting for the log-linearized production model.

The regression is y_i ~ K' + alpha*x1_i + beta*x2_i, either on the log scale
(log inputs and log outputs, the linearized Cobb-Douglas) or on the raw scale.
Unconstrained fits go through the normal equations (stable SVD solve); fits with
linear inequality constraints become a small dense quadratic program

    min x^T H x + f^T x   s.t.  C x <= b  (and optional C_eq x = b_eq)

with H = A^T A and f = -2 A^T y, solved exactly by enumerating active sets
(dimension 3, few constraints). Every QP solution is certified post hoc against
the KKT conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .errors import (
    DegenerateProblemError,
    DomainError,
    InfeasibleProblemError,
    ParameterError,
    SingularSystemError,
    UnboundedProblemError,
)

# relative pivot threshold for rank decisions in the SVD solve
RANK_RCOND = 1e-12

FEASIBILITY_TOL = 1e-10
DUAL_TOL = 1e-8


@dataclass(frozen=True)
class DesignMatrix:
    """Design rows (1, x1_i, x2_i) and the response column.

    Build via :meth:`log_scale` (logs of inputs and outputs) or :meth:`raw_scale`.
    """

    matrix: np.ndarray
    outputs: np.ndarray

    def __post_init__(self):
        matrix = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        outputs = np.asarray(self.outputs, dtype=float).ravel()
        if matrix.shape[0] != outputs.shape[0]:
            raise ParameterError(
                f"row mismatch: {matrix.shape[0]} design rows vs {outputs.shape[0]} outputs"
            )
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "outputs", outputs)

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def log_scale(cls, x1: Sequence[float], x2: Sequence[float], y: Sequence[float],
                  intercept: bool = True) -> "DesignMatrix":
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        y = np.asarray(y, dtype=float)
        if np.any(x1 <= 0) or np.any(x2 <= 0) or np.any(y <= 0):
            raise DomainError("log-scale design needs strictly positive inputs and outputs")
        return cls(_stack_columns(np.log(x1), np.log(x2), intercept), np.log(y))

    @classmethod
    def raw_scale(cls, x1: Sequence[float], x2: Sequence[float], y: Sequence[float],
                  intercept: bool = True) -> "DesignMatrix":
        return cls(
            _stack_columns(np.asarray(x1, dtype=float), np.asarray(x2, dtype=float), intercept),
            np.asarray(y, dtype=float),
        )


def _stack_columns(x1: np.ndarray, x2: np.ndarray, intercept: bool) -> np.ndarray:
    if intercept:
        return np.column_stack([np.ones_like(x1), x1, x2])
    return np.column_stack([x1, x2])


@dataclass(frozen=True)
class FitResult:
    """Fitted coefficients with the goodness of fit on the fitted scale."""

    intercept: float
    alpha: float
    beta: float
    r_squared: float
    residual_norm: float

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([self.intercept, self.alpha, self.beta])


@dataclass(frozen=True)
class QuadraticProgram:
    """min x^T H x + f^T x subject to C x <= b and optionally C_eq x = b_eq."""

    H: np.ndarray
    f: np.ndarray
    C: np.ndarray
    b: np.ndarray
    C_eq: Optional[np.ndarray] = None
    b_eq: Optional[np.ndarray] = None

    def __post_init__(self):
        H = np.asarray(self.H, dtype=float)
        f = np.asarray(self.f, dtype=float).ravel()
        C = np.atleast_2d(np.asarray(self.C, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        if H.shape[0] != H.shape[1]:
            raise ParameterError(f"H must be square, got shape {H.shape}")
        if not np.allclose(H, H.T, atol=1e-10):
            raise ParameterError("H must be symmetric")
        if f.shape[0] != H.shape[0]:
            raise ParameterError("f length must match H dimension")
        if C.size == 0:
            C = np.zeros((0, H.shape[0]))
        elif C.shape[1] != H.shape[0]:
            raise ParameterError("C column count must match H dimension")
        if C.shape[0] != b.shape[0]:
            raise ParameterError("C and b row counts differ")
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "b", b)
        if self.C_eq is not None:
            C_eq = np.atleast_2d(np.asarray(self.C_eq, dtype=float))
            b_eq = np.asarray(self.b_eq, dtype=float).ravel()
            if C_eq.shape[1] != H.shape[0] or C_eq.shape[0] != b_eq.shape[0]:
                raise ParameterError("equality constraint shapes are inconsistent")
            object.__setattr__(self, "C_eq", C_eq)
            object.__setattr__(self, "b_eq", b_eq)

    def objective(self, x: np.ndarray) -> float:
        return float(x @ self.H @ x + self.f @ x)


def ols_fit(design: DesignMatrix) -> FitResult:
    """Least-squares coefficients for an (over)determined design.

    Solves min ||Ax - y|| via SVD with a relative rank threshold; the residual
    is orthogonal to the column space by construction.
    """
    A, y = design.matrix, design.outputs
    n_rows, n_cols = A.shape
    if n_rows < n_cols:
        raise SingularSystemError(
            f"underdetermined system: {n_rows} rows for {n_cols} coefficients"
        )
    x, _, rank, _ = np.linalg.lstsq(A, y, rcond=RANK_RCOND)
    if rank < n_cols:
        raise SingularSystemError(f"design matrix is rank deficient (rank {rank} of {n_cols})")
    return _fit_result_from_coefficients(x, design)


def _r_squared(predictions: np.ndarray, y: np.ndarray) -> float:
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        raise DegenerateProblemError("outputs have zero variance")
    return 1.0 - float(np.sum((y - predictions) ** 2)) / ss_tot


def _fit_result_from_coefficients(x: np.ndarray, design: DesignMatrix) -> FitResult:
    residual = design.outputs - design.matrix @ x
    if design.matrix.shape[1] == 3:
        intercept, alpha, beta = x
    else:
        intercept, (alpha, beta) = 0.0, x
    return FitResult(intercept=float(intercept), alpha=float(alpha), beta=float(beta),
                     r_squared=_r_squared(design.matrix @ x, design.outputs),
                     residual_norm=float(np.linalg.norm(residual)))


def kkt_certificate(qp: QuadraticProgram, x: np.ndarray, lam: np.ndarray,
                    mu: Optional[np.ndarray] = None) -> bool:
    """Stationarity, primal/dual feasibility, and complementary slackness.

    Tolerances: stationarity and complementary slackness 1e-8, dual sign 1e-8,
    primal feasibility 1e-10.
    """
    grad = 2.0 * qp.H @ x + qp.f
    if qp.C.size:
        grad = grad + qp.C.T @ lam
    if qp.C_eq is not None and mu is not None:
        grad = grad + qp.C_eq.T @ mu
    if np.linalg.norm(grad) > DUAL_TOL:
        return False
    if np.any(lam < -DUAL_TOL):
        return False
    slack = qp.C @ x - qp.b if qp.C.size else np.zeros(0)
    if np.any(slack > FEASIBILITY_TOL):
        return False
    if qp.C_eq is not None and np.any(np.abs(qp.C_eq @ x - qp.b_eq) > FEASIBILITY_TOL):
        return False
    if slack.size and np.any(np.abs(lam * slack) > DUAL_TOL):
        return False
    return True


def qp_solve(qp: QuadraticProgram) -> np.ndarray:
    """Exact active-set enumeration for a small dense convex QP.

    Every subset of inequality constraints is tried as the working set (equalities
    are always active); each candidate comes from the corresponding KKT linear
    system and is accepted only if the full KKT certificate passes. The best
    certified candidate is the global minimum for PSD H.
    """
    n = qp.H.shape[0]
    m = qp.C.shape[0] if qp.C.size else 0
    n_eq = qp.C_eq.shape[0] if qp.C_eq is not None else 0
    best_x: Optional[np.ndarray] = None
    best_value = np.inf
    for mask in range(1 << m):
        active = [i for i in range(m) if mask >> i & 1]
        if len(active) + n_eq > n:
            continue
        rows = []
        if n_eq:
            rows.append(qp.C_eq)
        if active:
            rows.append(qp.C[active])
        n_active = n_eq + len(active)
        kkt = np.zeros((n + n_active, n + n_active))
        kkt[:n, :n] = 2.0 * qp.H
        rhs = np.concatenate([-qp.f, qp.b_eq if n_eq else np.zeros(0),
                              qp.b[active] if active else np.zeros(0)])
        if n_active:
            G = np.vstack(rows)
            kkt[:n, n:] = G.T
            kkt[n:, :n] = G
        try:
            solution = np.linalg.solve(kkt, rhs)
        except np.linalg.LinAlgError:
            solution, *_ = np.linalg.lstsq(kkt, rhs, rcond=None)
            if np.linalg.norm(kkt @ solution - rhs) > 1e-8 * (1.0 + np.linalg.norm(rhs)):
                continue
        x = solution[:n]
        mu = solution[n:n + n_eq] if n_eq else None
        lam = np.zeros(m)
        lam[active] = solution[n + n_eq:]
        if kkt_certificate(qp, x, lam, mu) and qp.objective(x) < best_value:
            best_x, best_value = x, qp.objective(x)
    if best_x is not None:
        return best_x
    _classify_failure(qp)
    raise UnboundedProblemError("no KKT point over a non-empty feasible set")


def certify_solution(qp: QuadraticProgram, x: np.ndarray) -> bool:
    """Post-hoc KKT certificate for a claimed solution.

    Reconstructs non-negative multipliers on the constraints active at x
    (non-negative least squares on the stationarity equation) and checks the
    full certificate. A claimed optimum that fails this check is a defect.
    """
    from scipy.optimize import nnls

    x = np.asarray(x, dtype=float)
    m = qp.C.shape[0] if qp.C.size else 0
    grad = 2.0 * qp.H @ x + qp.f
    active = [i for i in range(m) if qp.C[i] @ x - qp.b[i] > -DUAL_TOL]
    lam = np.zeros(m)
    mu = None
    if qp.C_eq is not None:
        # unconstrained-sign equality multipliers first, then sign-constrained ones
        basis = [qp.C_eq.T] + ([qp.C[active].T] if active else [])
        stacked = np.hstack(basis)
        sol, *_ = np.linalg.lstsq(stacked, -grad, rcond=None)
        n_eq = qp.C_eq.shape[0]
        mu = sol[:n_eq]
        if active:
            lam[active] = np.maximum(sol[n_eq:], 0.0)
    elif active:
        sol, _ = nnls(qp.C[active].T, -grad)
        lam[active] = sol
    return kkt_certificate(qp, x, lam, mu)


def _classify_failure(qp: QuadraticProgram) -> None:
    """No certified KKT point exists; decide between infeasible and unbounded."""
    n = qp.H.shape[0]
    check = linprog(
        c=np.zeros(n),
        A_ub=qp.C if qp.C.size else None,
        b_ub=qp.b if qp.C.size else None,
        A_eq=qp.C_eq,
        b_eq=qp.b_eq,
        bounds=[(None, None)] * n,
        method="highs",
    )
    if check.status == 2:
        raise InfeasibleProblemError("constraint set is empty")


def qp_fit(design: DesignMatrix, constraints: Tuple[np.ndarray, np.ndarray]) -> FitResult:
    """Constrained least squares assembled as a QP over x = (K', alpha, beta).

    The QP objective x^T (A^T A) x - 2 y^T A x equals ||y - Ax||^2 - y^T y, so the
    minimizer matches the constrained least-squares fit.
    """
    A, y = design.matrix, design.outputs
    C, b = constraints
    qp = QuadraticProgram(H=A.T @ A, f=-2.0 * A.T @ y, C=C, b=b)
    return _fit_result_from_coefficients(qp_solve(qp), design)


def r_squared(model: FitResult, design: DesignMatrix) -> float:
    """1 - SS_res/SS_tot on the scale the design was built with."""
    coeffs = model.coefficients if design.matrix.shape[1] == 3 else model.coefficients[1:]
    return _r_squared(design.matrix @ coeffs, design.outputs)


def predict(model: FitResult, S: float, P: float, scale: str = "log_linear") -> float:
    """Point prediction: exp(K' + a ln S + b ln P) on the log scale, affine on raw."""
    if scale == "log_linear":
        if S <= 0 or P <= 0:
            raise DomainError(f"log-scale prediction needs positive inputs, got ({S}, {P})")
        return float(np.exp(model.intercept + model.alpha * np.log(S) + model.beta * np.log(P)))
    if scale == "raw_linear":
        return float(model.intercept + model.alpha * S + model.beta * P)
    raise ParameterError(f"unknown scale {scale!r}")
