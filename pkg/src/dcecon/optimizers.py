"""Gradient iterations over the elasticities of c = L^alpha * K^beta.

Descent (cost minimization) subtracts the update terms, ascent (revenue
maximization) adds them. Two update modes:

* ``marginal`` -- the terms have the marginal-product form
  g_alpha = alpha * L^(alpha-1) * K^beta,  g_beta = beta * L^(beta-1) * K^alpha.
  This is the default and the rule behind the bundled reference tables.
* ``analytic`` -- the true gradient with respect to the exponents,
  g_alpha = ln(L) * L^alpha * K^beta,  g_beta = ln(K) * L^alpha * K^beta.

Descent continues while both elasticities stay positive; ascent additionally
requires alpha + beta to stay below the cap (default 1.8). A candidate step that
would violate a constraint is discarded and the previous iterate is reported.
Runs are deterministic given the config, including its seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple

from .errors import EconModelError, ParameterError
from .production import CobbDouglasParams, CostRecord, evaluate_output, linear_cost

GradientMode = Literal["marginal", "analytic"]


class Termination(str, Enum):
    BOUNDARY_ALPHA = "boundary_alpha"
    BOUNDARY_BETA = "boundary_beta"
    CAP_REACHED = "cap_reached"
    MAX_ITERS = "max_iters"


@dataclass(frozen=True)
class OptimizerConfig:
    """Learning rate, initialization, stopping cap, and update mode for one run.

    When init_alpha/init_beta are absent the elasticities start uniform in (0, 1),
    drawn from a generator seeded with `seed`.
    """

    learning_rate: float = 0.01
    init_alpha: Optional[float] = None
    init_beta: Optional[float] = None
    seed: int = 0
    max_iters: int = 1_000_000
    cap: float = 1.8
    mode: GradientMode = "marginal"
    record_trajectory: bool = True

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ParameterError(f"learning rate must be positive, got {self.learning_rate}")
        if self.cap <= 0:
            raise ParameterError(f"cap must be positive, got {self.cap}")
        if self.max_iters < 1:
            raise ParameterError(f"max_iters must be at least 1, got {self.max_iters}")
        if self.mode not in ("marginal", "analytic"):
            raise ParameterError(f"unknown gradient mode {self.mode!r}")
        for name in ("init_alpha", "init_beta"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ParameterError(f"{name} must be positive when given, got {value}")

    def initial_point(self) -> Tuple[float, float]:
        """Resolve the starting elasticities (seed-driven when not fixed)."""
        rng = random.Random(self.seed)
        alpha = self.init_alpha if self.init_alpha is not None else _positive_uniform(rng)
        beta = self.init_beta if self.init_beta is not None else _positive_uniform(rng)
        return alpha, beta

    def resolved(self) -> "OptimizerConfig":
        """Copy with the initialization pinned to concrete values (for reporting)."""
        alpha, beta = self.initial_point()
        return replace(self, init_alpha=alpha, init_beta=beta)


def _positive_uniform(rng: random.Random) -> float:
    x = rng.random()
    while x == 0.0:
        x = rng.random()
    return x


@dataclass
class OptimResult:
    alpha: float
    beta: float
    objective: float
    iterations: int
    trajectory: List[Tuple[float, float, float]] = field(default_factory=list)
    terminated_by: Termination = Termination.MAX_ITERS


def _gradients(mode: GradientMode, alpha: float, beta: float,
               log_L: float, log_K: float) -> Tuple[float, float]:
    if mode == "marginal":
        g_alpha = alpha * math.exp((alpha - 1.0) * log_L + beta * log_K)
        g_beta = beta * math.exp((beta - 1.0) * log_L + alpha * log_K)
    else:
        value = math.exp(alpha * log_L + beta * log_K)
        g_alpha = log_L * value
        g_beta = log_K * value
    return g_alpha, g_beta


def _run(record: CostRecord, config: OptimizerConfig, direction: float,
         cap: Optional[float]) -> OptimResult:
    L, K = record.server_cost, record.power_cooling_cost
    log_L, log_K = math.log(L), math.log(K)
    alpha, beta = config.initial_point()
    if alpha <= 0 or beta <= 0:
        raise ParameterError("initial elasticities must be positive")
    if cap is not None and alpha + beta >= cap:
        raise ParameterError(
            f"initial alpha + beta = {alpha + beta} already violates the cap {cap}"
        )

    def objective_at(a: float, b: float) -> float:
        return evaluate_output(CobbDouglasParams(P=1.0, alpha=a, beta=b), L, K)

    trajectory: List[Tuple[float, float, float]] = []
    if config.record_trajectory:
        trajectory.append((alpha, beta, objective_at(alpha, beta)))

    terminated_by = Termination.MAX_ITERS
    iterations = 0
    for _ in range(config.max_iters):
        g_alpha, g_beta = _gradients(config.mode, alpha, beta, log_L, log_K)
        next_alpha = alpha + direction * config.learning_rate * g_alpha
        next_beta = beta + direction * config.learning_rate * g_beta
        if next_alpha <= 0:
            terminated_by = Termination.BOUNDARY_ALPHA
            break
        if next_beta <= 0:
            terminated_by = Termination.BOUNDARY_BETA
            break
        if cap is not None and next_alpha + next_beta >= cap:
            terminated_by = Termination.CAP_REACHED
            break
        alpha, beta = next_alpha, next_beta
        iterations += 1
        if config.record_trajectory:
            trajectory.append((alpha, beta, objective_at(alpha, beta)))

    return OptimResult(alpha=alpha, beta=beta, objective=objective_at(alpha, beta),
                       iterations=iterations, trajectory=trajectory,
                       terminated_by=terminated_by)


def sgd_cost_min(record: CostRecord, config: OptimizerConfig) -> OptimResult:
    """Descend on the elasticities until one would leave the positive quadrant.

    Returns the last iterate with both elasticities positive and the cost
    c = L^alpha * K^beta evaluated there. Hitting max_iters is reported via
    terminated_by, not raised.
    """
    return _run(record, config, direction=-1.0, cap=None)


def sga_revenue_max(record: CostRecord, config: OptimizerConfig) -> OptimResult:
    """Ascend on the elasticities while alpha, beta > 0 and alpha + beta < cap."""
    return _run(record, config, direction=+1.0, cap=config.cap)


Interval = Tuple[float, float]


def sgd_linear_cost_min(record: CostRecord, w1_bounds: Interval, w2_bounds: Interval,
                        config: OptimizerConfig) -> Tuple[float, float, float]:
    """Minimize w1*L + w2*K over a weight box by projected gradient descent.

    The gradient is constant (L, K), so iterates march to the lower corner and
    are clipped to the box each step. A degenerate box (lo == hi) pins the
    weights, which turns the call into pure evaluation at fixed weights.
    """
    for name, (lo, hi) in (("w1_bounds", w1_bounds), ("w2_bounds", w2_bounds)):
        if lo < 0 or hi < 0:
            raise ParameterError(f"{name} must be non-negative, got ({lo}, {hi})")
        if lo > hi:
            raise ParameterError(f"{name} is an empty interval: ({lo}, {hi})")
    L, K = record.server_cost, record.power_cooling_cost
    # start at the upper corner; the constant gradient (L, K) pulls both weights down
    w1, w2 = w1_bounds[1], w2_bounds[1]
    for _ in range(config.max_iters):
        next_w1 = min(max(w1 - config.learning_rate * L, w1_bounds[0]), w1_bounds[1])
        next_w2 = min(max(w2 - config.learning_rate * K, w2_bounds[0]), w2_bounds[1])
        if (next_w1, next_w2) == (w1, w2):
            break
        w1, w2 = next_w1, next_w2
    return w1, w2, linear_cost(w1, w2, L, K)


def profit_table(records: Sequence[CostRecord], config: OptimizerConfig,
                 linear_weights: Mapping[int, Tuple[float, float]]) -> Dict[int, Dict[str, float]]:
    """Per-year profit rows: ascent revenue minus descent cost, plus the linear-cost variant.

    linear_weights maps year -> (w1, w2) for the linear comparison column.
    """
    if not records:
        raise ParameterError("records must be non-empty")
    missing = [r.year for r in records if r.year not in linear_weights]
    if missing:
        raise ParameterError(f"linear weights missing for years {missing}")
    rows: Dict[int, Dict[str, float]] = {}
    for record in sorted(records, key=lambda r: r.year):
        try:
            revenue = sga_revenue_max(record, config)
            cost = sgd_cost_min(record, config)
        except EconModelError as exc:
            raise type(exc)(f"year {record.year}: {exc}") from exc
        w1, w2 = linear_weights[record.year]
        cost_linear = linear_cost(w1, w2, record.server_cost, record.power_cooling_cost)
        rows[record.year] = {
            "max_rev_cd": revenue.objective,
            "min_cost_cd": cost.objective,
            "profit_cd": revenue.objective - cost.objective,
            "min_cost_linear": cost_linear,
            "profit_linear": revenue.objective - cost_linear,
        }
    return rows
