"""Cobb-Douglas production primitives.

Output Y = P * L^alpha * K^beta, its augmented quasi form (A*R)^alpha * (B*I)^beta
with Harrod (labor) and Solow (capital) technological-progress factors, the linear
cost function, and returns-to-scale classification. All power evaluations run in
log space and require strictly positive bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .errors import DomainError, ParameterError

# |alpha + beta - 1| below this counts as constant returns to scale
CRS_TOLERANCE = 1e-9


class ScaleRegime(str, Enum):
    CRS = "CRS"
    IRS = "IRS"
    DRS = "DRS"


class ScaleClassification(NamedTuple):
    regime: ScaleRegime
    n: float


@dataclass(frozen=True)
class CobbDouglasParams:
    """Total factor productivity P and the two output elasticities."""

    P: float
    alpha: float
    beta: float

    def __post_init__(self):
        if self.P <= 0:
            raise ParameterError(f"total factor productivity must be positive, got {self.P}")
        if self.alpha < 0 or self.beta < 0:
            raise ParameterError(f"elasticities must be non-negative, got ({self.alpha}, {self.beta})")


@dataclass(frozen=True)
class RdDeterminants:
    """R&D inputs that determine the technological-progress factors.

    r is the future discount rate, Gamma the capital invested in R&D behind
    labor-augmenting progress, Delta the labor contribution to R&D behind
    capital-augmenting progress, and alpha1/beta1 the R&D output elasticities.
    """

    r: float
    Gamma: float
    Delta: float
    alpha1: float
    beta1: float

    def __post_init__(self):
        if self.r <= 0 or self.Gamma <= 0 or self.Delta <= 0:
            raise ParameterError("r, Gamma, Delta must all be positive")
        _check_unit_interval("alpha1", self.alpha1)
        _check_unit_interval("beta1", self.beta1)


@dataclass(frozen=True)
class TechProgress:
    """Harrod factor A (labor augmenting) and Solow factor B (capital augmenting).

    The R&D determinants are optional: they are present when the factors were
    built via :meth:`from_determinants` and absent when A and B are given directly.
    """

    A: float
    B: float
    r: Optional[float] = None
    L_star: Optional[float] = None
    K_star: Optional[float] = None
    Gamma: Optional[float] = None
    Delta: Optional[float] = None
    alpha1: Optional[float] = None
    beta1: Optional[float] = None

    def __post_init__(self):
        if self.A <= 0 or self.B <= 0:
            raise ParameterError(f"progress factors must be positive, got A={self.A}, B={self.B}")
        for name in ("r", "L_star", "K_star", "Gamma", "Delta"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ParameterError(f"{name} must be positive, got {value}")
        if self.alpha1 is not None:
            _check_unit_interval("alpha1", self.alpha1)
        if self.beta1 is not None:
            _check_unit_interval("beta1", self.beta1)

    @classmethod
    def from_determinants(cls, r: float, L_star: float, K_star: float,
                          Gamma: float, Delta: float,
                          alpha1: float, beta1: float) -> "TechProgress":
        """Build A = r * L*^beta1 * Gamma^(1-beta1) and B = r * K*^alpha1 * Delta^(1-alpha1)."""
        return cls(
            A=harrod_progress(r, L_star, Gamma, beta1),
            B=solow_progress(r, K_star, Delta, alpha1),
            r=r, L_star=L_star, K_star=K_star,
            Gamma=Gamma, Delta=Delta, alpha1=alpha1, beta1=beta1,
        )


@dataclass(frozen=True)
class CostRecord:
    """One year's observed input costs (currency units consistent within a series)."""

    year: int
    server_cost: float
    power_cooling_cost: float

    def __post_init__(self):
        if self.server_cost <= 0 or self.power_cooling_cost <= 0:
            raise DomainError(
                f"costs must be strictly positive, got ({self.server_cost}, {self.power_cooling_cost})"
            )


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ParameterError(f"{name} must lie strictly inside (0, 1), got {value}")


def _check_positive(name: str, value: float) -> None:
    if value <= 0:
        raise DomainError(f"{name} must be strictly positive, got {value}")


def evaluate_output(params: CobbDouglasParams, L: float, K: float) -> float:
    """Production output P * L^alpha * K^beta, evaluated as exp(ln P + a ln L + b ln K)."""
    _check_positive("L", L)
    _check_positive("K", K)
    return math.exp(math.log(params.P) + params.alpha * math.log(L) + params.beta * math.log(K))


def evaluate_augmented(tech: TechProgress, alpha: float, beta: float, R: float, I: float) -> float:
    """Quasi form (A*R)^alpha * (B*I)^beta over recurring and infrastructure costs."""
    _check_positive("R", R)
    _check_positive("I", I)
    return evaluate_output(CobbDouglasParams(P=1.0, alpha=alpha, beta=beta), tech.A * R, tech.B * I)


def harrod_progress(r: float, L_star: float, Gamma: float, beta1: float) -> float:
    """Labor-augmenting factor A = r * L*^beta1 * Gamma^(1-beta1)."""
    _check_positive("r", r)
    _check_positive("L_star", L_star)
    _check_positive("Gamma", Gamma)
    _check_unit_interval("beta1", beta1)
    return r * math.exp(beta1 * math.log(L_star) + (1.0 - beta1) * math.log(Gamma))


def solow_progress(r: float, K_star: float, Delta: float, alpha1: float) -> float:
    """Capital-augmenting factor B = r * K*^alpha1 * Delta^(1-alpha1)."""
    _check_positive("r", r)
    _check_positive("K_star", K_star)
    _check_positive("Delta", Delta)
    _check_unit_interval("alpha1", alpha1)
    return r * math.exp(alpha1 * math.log(K_star) + (1.0 - alpha1) * math.log(Delta))


def invert_harrod(A: float, r: float, Gamma: float, beta1: float) -> float:
    """R&D labor L* = (A / (r * Gamma^(1-beta1)))^(1/beta1); inverse of harrod_progress."""
    _check_positive("A", A)
    _check_positive("r", r)
    _check_positive("Gamma", Gamma)
    _check_unit_interval("beta1", beta1)
    return math.exp((math.log(A) - math.log(r) - (1.0 - beta1) * math.log(Gamma)) / beta1)


def invert_solow(B: float, r: float, Delta: float, alpha1: float) -> float:
    """R&D capital K* = (B / (r * Delta^(1-alpha1)))^(1/alpha1); inverse of solow_progress."""
    _check_positive("B", B)
    _check_positive("r", r)
    _check_positive("Delta", Delta)
    _check_unit_interval("alpha1", alpha1)
    return math.exp((math.log(B) - math.log(r) - (1.0 - alpha1) * math.log(Delta)) / alpha1)


def linear_cost(w1: float, w2: float, L: float, K: float) -> float:
    """Linear cost w1*L + w2*K with non-negative weights."""
    if w1 < 0 or w2 < 0:
        raise ParameterError(f"cost weights must be non-negative, got ({w1}, {w2})")
    _check_positive("L", L)
    _check_positive("K", K)
    return w1 * L + w2 * K


def returns_to_scale(alpha: float, beta: float, tol: float = CRS_TOLERANCE) -> ScaleClassification:
    """Classify n = alpha + beta as constant (|n-1| <= tol), increasing, or decreasing."""
    n = alpha + beta
    if abs(n - 1.0) <= tol:
        regime = ScaleRegime.CRS
    elif n > 1.0:
        regime = ScaleRegime.IRS
    else:
        regime = ScaleRegime.DRS
    return ScaleClassification(regime, n)
