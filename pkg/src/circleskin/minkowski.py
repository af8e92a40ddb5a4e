"""R^{2,1} lift of circles and the envelope formula.

A circle (O, r) lifts to the space point (O_x, O_y, r). A one-parameter
family of circles (a MAT) sweeps two envelope branches; both branches are
recovered pointwise from position, radius and their parameter derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geom import EPS, Circle, GeometryError, rotate_cw, vec


def space_vec(x, y, z) -> np.ndarray:
    return np.array([float(x), float(y), float(z)])


def lift(c: Circle) -> np.ndarray:
    """Cyclographic lift: circle (O, r) -> point (O_x, O_y, r)."""
    return space_vec(c.center[0], c.center[1], c.radius)


def drop(p) -> np.ndarray:
    """Planar projection of a space point/vector: forget the z component."""
    return np.asarray(p, dtype=float)[:2]


def circle_of(p) -> Circle:
    """Inverse of lift for points with z > 0."""
    p = np.asarray(p, dtype=float)
    return Circle(p[:2], p[2])


def is_space_like(v, eps: float = EPS) -> bool:
    """True iff v_x^2 + v_y^2 - v_z^2 > eps."""
    v = np.asarray(v, dtype=float)
    return float(v[0] ** 2 + v[1] ** 2 - v[2] ** 2) > eps


@dataclass(frozen=True)
class MatSample:
    """Pointwise MAT data: (y(t), r(t)) and first derivatives."""

    position: np.ndarray
    radius: float
    velocity: np.ndarray
    radius_rate: float


def envelope_eval(s: MatSample, eps: float = EPS):
    """Both envelope branches (x+, x-) of the circle family at one sample."""
    yp = np.asarray(s.velocity, dtype=float)
    speed2 = float(yp @ yp)
    if speed2 <= eps * eps:
        raise GeometryError("singular parameterization: zero velocity")
    disc = speed2 - s.radius_rate**2
    if disc < 0.0:
        if disc > -eps * speed2:
            disc = 0.0
        else:
            raise GeometryError("no real envelope (MAT not space-like here)")
    root = np.sqrt(disc)
    y = np.asarray(s.position, dtype=float)
    base = s.radius_rate * yp
    wing = rotate_cw(yp) * root
    x_plus = y - s.radius * (base + wing) / speed2
    x_minus = y - s.radius * (base - wing) / speed2
    return x_plus, x_minus


def envelope_points_from_hermite(p, t, eps: float = EPS):
    """Touching points (Q+, Q-) of the envelope at a lifted circle p with
    spatial tangent t. Q+ is the branch left of the planar travel direction.

    Scale-invariant in t; requires t space-like (light-like accepted with
    coincident branches).
    """
    p = np.asarray(p, dtype=float)
    t = np.asarray(t, dtype=float)
    if p[2] <= 0.0:
        raise GeometryError("lifted circle must have positive radius")
    tp = t[:2]
    n2 = float(tp @ tp)
    if n2 <= eps * eps:
        raise GeometryError("tangent has zero planar part")
    disc = n2 - t[2] ** 2
    if disc < 0.0:
        if disc > -eps * n2:
            disc = 0.0
        else:
            raise GeometryError("tangent is not space-like")
    root = np.sqrt(disc)
    base = t[2] * tp
    wing = rotate_cw(tp) * root
    q_plus = p[:2] - p[2] * (base + wing) / n2
    q_minus = p[:2] - p[2] * (base - wing) / n2
    return q_plus, q_minus
