"""Result record shared by the distance solvers."""

from __future__ import annotations

from dataclasses import dataclass

from .pointmetric import ManifoldPoint
from .solvers import SolveReport

# How a DistanceSolution was obtained.
BRANCHES = (
    "on-line",
    "vertical-kp",
    "slanted-plus",
    "slanted-minus",
    "left-slanted",
    "tangent-exact",
    "level-set",
    "horizontal",
    "oracle",
)


@dataclass(frozen=True)
class DistanceSolution:
    """A computed distance together with where and how it was attained.

    ``value`` is the distance, ``half_squared`` its half-square (value =
    sqrt(2*half_squared) identically), ``argmin`` the nearest point of the
    queried set and ``theta_at_argmin`` its arc index.
    """

    value: float
    half_squared: float
    argmin: ManifoldPoint
    theta_at_argmin: float
    branch: str
    report: SolveReport
