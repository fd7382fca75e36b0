"""Small-maturity implied-volatility limit of the correlated model.

For a strike K != S0 the zero-maturity limit of the Black-Scholes implied
volatility equals

    I_H = c * |log(S0/K)| / (sqrt(v0) * Dhat),

where Dhat is the distance from (0, 1) to the line with

    beta  = c*log(K/S0)/(v0*sqrt(1-rho^2)) + rho/sqrt(1-rho^2),
    gamma = -rho/sqrt(1-rho^2)

in the uncorrelated base geometry.  At-the-money queries are rejected: the
limit is qualitatively different there and out of scope.  The validity
conditions of the underlying asymptotic formula itself are a literature
question; this module computes its right-hand side unconditionally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AtTheMoneyError, DomainError, HestonDistError
from .linedist import dist_to_line
from .pointmetric import CorrelationFrame


@dataclass(frozen=True)
class SmileQuery:
    """One implied-vol-limit evaluation: spot, strike, starting variance
    and the model frame.  v0 = 0 is rejected; the reduction requires a
    positive starting variance."""

    spot: float
    strike: float
    v0: float
    frame: CorrelationFrame

    def __post_init__(self) -> None:
        if not (self.spot > 0.0):
            raise DomainError(f"spot must be positive, got {self.spot!r}")
        if not (self.strike > 0.0):
            raise DomainError(f"strike must be positive, got {self.strike!r}")
        if not (self.v0 > 0.0):
            raise DomainError(f"v0 must be positive, got {self.v0!r}")
        if self.strike == self.spot:
            raise AtTheMoneyError(
                "strike equals spot: the small-maturity limit is undefined "
                "at the money"
            )


@dataclass(frozen=True)
class SmilePoint:
    strike: float
    log_moneyness: float  # log(K/S0)
    iv_limit: float
    line_beta: float
    line_gamma: float
    distance: float


@dataclass(frozen=True)
class SmileFailure:
    """A strike whose evaluation raised; collected, not fail-fast."""

    strike: float
    error: str


def reduced_line(q: SmileQuery) -> tuple[float, float]:
    """(beta, gamma) of the base-geometry line encoding the query."""
    rho = q.frame.rho
    root = math.sqrt(1.0 - rho * rho)
    m = math.log(q.strike / q.spot)
    beta = q.frame.c * m / (q.v0 * root) + rho / root
    gamma = -rho / root + 0.0  # normalizes -0.0 when rho == 0
    return beta, gamma


def iv_limit(q: SmileQuery, tol: float = 1e-9) -> SmilePoint:
    """Zero-maturity implied-volatility limit for one query."""
    beta, gamma = reduced_line(q)
    sol = dist_to_line(beta, gamma, tol=tol)
    m = math.log(q.strike / q.spot)
    if not sol.value > 0.0:
        # (0,1) on the reduced line is impossible for K != S0
        raise HestonDistError(
            "degenerate reduction: zero distance for an off-the-money query"
        )
    return SmilePoint(
        strike=q.strike,
        log_moneyness=m,
        iv_limit=q.frame.c * abs(m) / (math.sqrt(q.v0) * sol.value),
        line_beta=beta,
        line_gamma=gamma,
        distance=sol.value,
    )


def smile_table(
    spot: float,
    v0: float,
    frame: CorrelationFrame,
    strikes: list[float],
    tol: float = 1e-9,
) -> list[SmilePoint | SmileFailure]:
    """Evaluate a ladder of strikes; entries for failing strikes record the
    error instead of aborting the ladder.  Order is preserved."""
    out: list[SmilePoint | SmileFailure] = []
    for k in strikes:
        try:
            out.append(iv_limit(SmileQuery(spot, k, v0, frame), tol=tol))
        except HestonDistError as exc:
            out.append(SmileFailure(strike=k, error=f"{type(exc).__name__}: {exc}"))
    return out
