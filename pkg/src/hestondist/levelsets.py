"""Geometry of the level curves of the arc index.

For theta in (0, 2*pi) the level curve is the graph of a strictly
increasing convex function v(theta, .) on [psi(theta), inf) that starts on
the boundary at (psi(theta), 0); negative indices give the mirror image
across x = 0.  The nearest point of the curve to the base point (0, 1) is

    ((theta + sin theta)/2, cos(theta/2)^2)   at distance |theta|, |theta| < pi,
    (psi(theta), 0)            at distance theta/sin(theta/2), pi <= |theta| < 2*pi,

and those nearest points sweep out a decreasing concave curve from (0, 1)
to (pi/2, 0) as theta runs over [0, pi].

This module also hosts the inverse index maps (psi, eta, eta_alpha, zeta,
x_crit are all strictly monotone) that the line-distance reductions use to
build their minimization intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import corefuncs as cf
from .errors import DomainError
from .pointmetric import ManifoldPoint
from .solution import DistanceSolution
from .solvers import report_closed_form, solve_monotone

_EPS_ANGLE = 1e-12
_STEP_CAP = 200


@dataclass(frozen=True)
class LevelCurveSample:
    """One sampled point of a level curve with its first two x-derivatives."""

    theta: float
    x: float
    v: float
    slope: float
    curvature: float


# ---------------------------------------------------------------------------
# the curve and its derivatives
# ---------------------------------------------------------------------------


def _radicand(t: float, x: float) -> float:
    """2*(t - sin t)*x + 2*(1 - cos t) - t^2, clamped at tiny negatives."""
    p = cf.theta_minus_sin(t)
    w = cf.two_sin_half_minus_theta(t)
    r = 2.0 * p * x + w * (2.0 * math.sin(0.5 * t) + t)
    if r < 0.0:
        if r > -1e-12 * max(1.0, abs(x)):
            return 0.0
        raise DomainError(
            f"x={x!r} lies left of the curve start psi({t!r})={cf.psi(t)!r}"
        )
    return r


def curve_v(theta: float, x: float, split: bool = False) -> float:
    """Ordinate of the level-curve point with abscissa x (x >= psi(|theta|)).

    The canonical evaluation squares the nonnegative root
    (sqrt(N) - u)/(theta - sin theta).  ``split=True`` instead uses the
    equal-value decomposition v1 - v2 (affine minus root-of-affine); it
    subtracts two positive quantities and is kept only so tests can check
    the two forms agree.
    """
    if theta == 0.0:
        raise DomainError("theta = 0 indexes the vertical axis, not a graph")
    t = abs(theta)
    cf._check_angle_open(t)
    r = _radicand(t, x)
    p = cf.theta_minus_sin(t)
    u = cf.two_sin_half_minus_cos_weighted(t)
    sh = math.sin(0.5 * t)
    if split:
        v1 = 2.0 * sh * sh / p * x + 2.0 * u * u / (p * p) - 1.0
        v2 = 2.0 * sh * u / (p * p) * math.sqrt(r)
        return v1 - v2
    s = (sh * math.sqrt(r) - u) / p
    if s < 0.0:  # only by rounding at the curve start
        s = 0.0
    return s * s


def curve_slope(theta: float, x: float) -> float:
    """dv/dx of the level curve; 0 one-sidedly at the curve start and
    strictly positive beyond it."""
    cf._check_angle_open(theta)
    r = _radicand(theta, x)
    p = cf.theta_minus_sin(theta)
    u = cf.two_sin_half_minus_cos_weighted(theta)
    sh = math.sin(0.5 * theta)
    root_n = sh * math.sqrt(r)  # sqrt of N = sin(t/2)^2 * radicand
    if root_n <= 0.0:
        # N = u^2 > 0 in-domain; reachable only if the radicand was clamped
        return 0.0
    return 2.0 * sh * sh / p * (1.0 - u / root_n)


def curve_curvature(theta: float, x: float) -> float:
    """d2v/dx2 of the level curve; strictly positive on [psi(theta), inf).

    Finite everywhere in-domain, including the curve start, where
    N = u(theta)^2 > 0.
    """
    cf._check_angle_open(theta)
    r = _radicand(theta, x)
    u = cf.two_sin_half_minus_cos_weighted(theta)
    sh = math.sin(0.5 * theta)
    n = sh * sh * r  # N
    if n <= 0.0:
        raise DomainError(
            f"curvature undefined where the radicand vanishes (x={x!r})"
        )
    c = 2.0 * sh * sh
    return u * c * c / (2.0 * n ** 1.5)


def sample_curve(theta: float, x_max: float, samples: int) -> list[LevelCurveSample]:
    """Evenly sample the level curve from its start to x_max (mirrored
    coordinates for theta < 0)."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    t = abs(theta)
    cf._check_angle_open(t)
    sgn = 1.0 if theta > 0.0 else -1.0
    x0 = cf.psi(t)
    x1 = max(x_max, x0)
    out = []
    for i in range(samples):
        x = x0 + (x1 - x0) * i / max(samples - 1, 1)
        out.append(
            LevelCurveSample(
                theta=theta,
                x=sgn * x,
                v=curve_v(t, x),
                slope=sgn * curve_slope(t, x),
                curvature=curve_curvature(t, x),
            )
        )
    return out


# ---------------------------------------------------------------------------
# nearest points and distances
# ---------------------------------------------------------------------------


def critical_point(theta: float) -> ManifoldPoint:
    """Nearest point of the level curve theta to (0, 1), theta in [0, pi]."""
    if not (0.0 <= theta <= math.pi):
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
    return ManifoldPoint(cf.x_crit(theta), math.cos(0.5 * theta) ** 2)


def dist_to_level_set(theta: float) -> DistanceSolution:
    """Distance from (0, 1) to the level curve with index theta."""
    cf._check_angle_sym(theta)
    t = abs(theta)
    if t == 0.0:
        return DistanceSolution(
            value=0.0,
            half_squared=0.0,
            argmin=ManifoldPoint(0.0, 1.0),
            theta_at_argmin=0.0,
            branch="level-set",
            report=report_closed_form(0.0),
        )
    if t < math.pi:
        x = 0.5 * (theta + math.sin(theta))  # odd: mirrors automatically
        v = math.cos(0.5 * theta) ** 2
        return DistanceSolution(
            value=t,
            half_squared=0.5 * t * t,
            argmin=ManifoldPoint(x, v),
            theta_at_argmin=theta,
            branch="level-set",
            report=report_closed_form(t),
        )
    value = t / math.sin(0.5 * t)
    return DistanceSolution(
        value=value,
        half_squared=0.5 * value * value,
        argmin=ManifoldPoint(cf.psi(theta), 0.0),
        theta_at_argmin=theta,
        branch="level-set",
        report=report_closed_form(value),
    )


def dist_to_horizontal(tau: float) -> float:
    """Distance from (0, 1) to the horizontal line v = tau: 2*|sqrt(tau)-1|."""
    if tau < 0.0:
        raise DomainError(f"tau must be nonnegative, got {tau!r}")
    return 2.0 * abs(math.sqrt(tau) - 1.0)


# ---------------------------------------------------------------------------
# inverse index maps
# ---------------------------------------------------------------------------


def _grow_upper(fn, target: float, lo: float) -> float:
    """March toward 2*pi by gap-halving until fn exceeds target.  Saturates
    at the largest double below 2*pi for unreachable targets."""
    cap = math.nextafter(cf.TWO_PI, 0.0)
    hi = lo
    for _ in range(_STEP_CAP):
        nxt = cf.TWO_PI - 0.5 * (cf.TWO_PI - hi)
        if nxt >= cap or nxt <= hi:
            return cap
        hi = nxt
        if fn(hi) >= target:
            return hi
    raise DomainError(f"target {target!r} not reached below 2*pi")


def psi_inv(y: float, tol: float = 1e-13) -> float:
    """Inverse of the boundary-abscissa map psi on (0, inf)."""
    if y <= 0.0:
        raise DomainError(f"psi_inv needs a positive argument, got {y!r}")
    lo = min(_EPS_ANGLE, y)
    hi = _grow_upper(cf.psi, y, lo)
    if cf.psi(hi) < y:
        return hi  # saturated one ulp below 2*pi
    return solve_monotone(cf.psi, (lo, hi), target=y, tol=tol).value


def eta_inv(y: float, tol: float = 1e-13) -> float:
    """Inverse of the equal-parameter tangency index eta on (0, inf)."""
    if y <= 0.0:
        raise DomainError(f"eta_inv needs a positive argument, got {y!r}")
    lo = min(_EPS_ANGLE, y)
    hi = _grow_upper(cf.eta, y, lo)
    if cf.eta(hi) < y:
        return hi
    return solve_monotone(cf.eta, (lo, hi), target=y, tol=tol).value


def eta_alpha_inv(alpha: float, y: float, tol: float = 1e-13) -> float:
    """Inverse of eta_alpha(alpha, .) on its domain (0, psi_inv(alpha)).

    Saturates at the largest resolvable argument below the domain ceiling
    when the target cannot be bracketed at double resolution.
    """
    if y <= 0.0:
        raise DomainError(f"eta_alpha_inv needs a positive argument, got {y!r}")
    ceiling = psi_inv(alpha)
    lo = min(_EPS_ANGLE, y)
    fn = lambda t: cf.eta_alpha(alpha, t)
    hi = lo
    for _ in range(_STEP_CAP):
        nxt = ceiling - 0.5 * (ceiling - hi)
        if nxt <= hi or nxt >= ceiling:
            return hi
        hi = nxt
        try:
            reached = fn(hi) >= y
        except DomainError:
            # rounding pushed hi past the ceiling; keep the previous point
            return ceiling - (ceiling - hi) * 2.0
        if reached:
            return solve_monotone(fn, (lo, hi), target=y, tol=tol).value
    raise DomainError(f"target {y!r} not reached below the tangency ceiling")


def x_crit_inv(y: float, tol: float = 1e-13) -> float:
    """Inverse of the nearest-point abscissa map on [0, pi/2]."""
    if not (0.0 <= y <= 0.5 * math.pi):
        raise DomainError(f"argument must lie in [0, pi/2], got {y!r}")
    if y == 0.0:
        return 0.0
    return solve_monotone(cf.x_crit, (0.0, math.pi), target=y, tol=tol).value


def theta_crit(beta: float, gamma: float, tol: float = 1e-13) -> float:
    """Index of the unique nearest-point-curve crossing of the line
    (beta, gamma) with beta, gamma >= 0: the zeta root for beta <= pi/2 and
    psi_inv(beta) beyond."""
    if beta < 0.0 or gamma < 0.0:
        raise DomainError("theta_crit requires beta >= 0 and gamma >= 0")
    if beta > 0.5 * math.pi:
        return psi_inv(beta, tol=tol)
    if cf.zeta(gamma, math.pi) <= beta:
        # enormous slopes push the crossing within one ulp of pi
        return math.pi
    return solve_monotone(
        lambda t: cf.zeta(gamma, t), (0.0, math.pi), target=beta, tol=tol
    ).value
