"""Inverse Hermite step: given the two prescribed touching points on a
circle, rebuild the space-like tangent vector whose envelope touching points
are exactly those.

The tangent direction is the line from the lifted circle through the apex
(the point where that spatial line pierces z = 0), built by a chord /
perpendicular / inversion construction. The sign is chosen so the plus
envelope branch reproduces the prescribed left point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geom import EPS, Circle, GeometryError, cross2, invert_point, norm2, rotate_cw, unit
from .minkowski import envelope_points_from_hermite, lift


class ApexAtInfinity(GeometryError):
    """Diametral touching points: the tangent-cone apex escapes to infinity."""


@dataclass(frozen=True)
class ReconstructionResult:
    tangent: np.ndarray  # unit, space-like
    apex: Optional[np.ndarray]  # None in the degenerate diametral case
    degenerate: bool


def _check_on_circle(circle: Circle, w, eps: float):
    if abs(norm2(np.asarray(w) - circle.center) - circle.radius) > 1e-6 * max(
        1.0, circle.radius
    ):
        raise GeometryError("invalid touching points: not on the circle")


def construct_apex(circle: Circle, w_plus, w_minus, eps: float = EPS) -> np.ndarray:
    """Apex of the tangent cone through the two touching points.

    Chord line through the points, perpendicular through the center, invert
    the intersection in the circle.
    """
    w_plus = np.asarray(w_plus, dtype=float)
    w_minus = np.asarray(w_minus, dtype=float)
    gamma = cross2(w_minus - circle.center, w_plus - circle.center)
    if abs(gamma) <= eps * circle.radius**2:
        raise ApexAtInfinity("apex at infinity: diametral touching points")
    chord = unit(w_plus - w_minus)
    foot = w_minus + ((circle.center - w_minus) @ chord) * chord
    if norm2(foot - circle.center) <= 10.0 * eps * circle.radius:
        raise ApexAtInfinity("apex at infinity: diametral touching points")
    return invert_point(foot, circle, eps)


def reconstruct_tangent(
    circle: Circle, w_plus, w_minus, eps: float = EPS
) -> ReconstructionResult:
    """Unit space-like tangent t with envelope touching points (w_plus, w_minus)."""
    w_plus = np.asarray(w_plus, dtype=float)
    w_minus = np.asarray(w_minus, dtype=float)
    _check_on_circle(circle, w_plus, eps)
    _check_on_circle(circle, w_minus, eps)
    if norm2(w_plus - w_minus) <= eps * circle.radius:
        raise GeometryError("invalid touching points: coincident")
    p = lift(circle)
    try:
        apex = construct_apex(circle, w_plus, w_minus, eps)
        u = np.array([apex[0], apex[1], 0.0]) - p
        tangent = u / np.linalg.norm(u)
        degenerate = False
    except ApexAtInfinity:
        d = unit(rotate_cw(w_plus - w_minus))
        tangent = np.array([d[0], d[1], 0.0])
        apex = None
        degenerate = True
    q_plus, _ = envelope_points_from_hermite(p, tangent, eps)
    if norm2(q_plus - w_plus) > norm2(q_plus - w_minus):
        tangent = -tangent
    return ReconstructionResult(tangent, apex, degenerate)
