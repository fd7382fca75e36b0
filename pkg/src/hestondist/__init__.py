"""Riemannian distances in the Heston manifold.

Closed-form / one-dimensional-minimization distances from a point to
points, level curves, horizontal lines and straight lines of the
half-plane with metric ds^2 = (dx^2 + dv^2)/v, together with the
small-maturity implied-volatility limit of the correlated model and a
brute-force oracle validating every formula path.
"""

from .corefuncs import (
    SMALL_ANGLE,
    TWO_PI,
    LineParams,
    coef_A,
    coef_B,
    discriminant,
    eta,
    eta_alpha,
    f_of,
    g_major,
    h_lower,
    lambda_big,
    lambda_minus,
    lambda_plus,
    psi,
    s_minus,
    s_plus,
    s_tangent,
    t_bound,
    x_crit,
    xi,
    zeta,
)
from .errors import (
    AtTheMoneyError,
    BoundaryPairError,
    BracketError,
    ConvergenceError,
    DegenerateLineError,
    DomainError,
    HestonDistError,
    NonFiniteSampleError,
)
from .levelsets import (
    LevelCurveSample,
    critical_point,
    curve_curvature,
    curve_slope,
    curve_v,
    dist_to_horizontal,
    dist_to_level_set,
    eta_alpha_inv,
    eta_inv,
    psi_inv,
    sample_curve,
    theta_crit,
    x_crit_inv,
)
from .linedist import (
    AdmissibleInterval,
    admissible_intervals,
    dist_to_line,
    dist_to_line_correlated,
    dist_to_tangent_line,
    oracle_dist,
    oracle_dist_correlated,
    tangent_line_params,
    vertical_bracket,
)
from .pointmetric import (
    CorrelationFrame,
    DeltaCoordinate,
    ManifoldPoint,
    delta_of,
    dist,
    dist_correlated,
    from_delta,
    to_delta,
)
from .smile import SmileFailure, SmilePoint, SmileQuery, iv_limit, smile_table
from .solution import DistanceSolution
from .solvers import Bracket, SolveReport, minimize_on_interval, solve_monotone

__version__ = "0.1.0"

__all__ = [
    "AdmissibleInterval",
    "AtTheMoneyError",
    "BoundaryPairError",
    "Bracket",
    "BracketError",
    "ConvergenceError",
    "CorrelationFrame",
    "DegenerateLineError",
    "DeltaCoordinate",
    "DistanceSolution",
    "DomainError",
    "HestonDistError",
    "LevelCurveSample",
    "LineParams",
    "ManifoldPoint",
    "NonFiniteSampleError",
    "SMALL_ANGLE",
    "SmileFailure",
    "SmilePoint",
    "SmileQuery",
    "SolveReport",
    "TWO_PI",
    "admissible_intervals",
    "coef_A",
    "coef_B",
    "critical_point",
    "curve_curvature",
    "curve_slope",
    "curve_v",
    "delta_of",
    "discriminant",
    "dist",
    "dist_correlated",
    "dist_to_horizontal",
    "dist_to_level_set",
    "dist_to_line",
    "dist_to_line_correlated",
    "dist_to_tangent_line",
    "eta",
    "eta_alpha",
    "eta_alpha_inv",
    "eta_inv",
    "f_of",
    "from_delta",
    "g_major",
    "h_lower",
    "iv_limit",
    "lambda_big",
    "lambda_minus",
    "lambda_plus",
    "minimize_on_interval",
    "oracle_dist",
    "oracle_dist_correlated",
    "psi",
    "psi_inv",
    "s_minus",
    "s_plus",
    "s_tangent",
    "sample_curve",
    "smile_table",
    "solve_monotone",
    "t_bound",
    "tangent_line_params",
    "theta_crit",
    "to_delta",
    "vertical_bracket",
    "x_crit",
    "x_crit_inv",
    "xi",
    "zeta",
]
