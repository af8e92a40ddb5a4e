"""One rational-envelope segment between two lifted circles.

Given end circles lifted to R^{2,1} with space-like tangents, the planar
spine interpolates the plus-branch touching points with tangent lengths set
by the radical line; a cubic radius profile then lifts the spine back so the
space curve meets the Hermite data G1. The envelope (and its offsets, in PH
mode) is sampled from the resulting MAT.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .geom import EPS, Circle, GeometryError, norm2, radical_line, rotate_cw, unit
from .minkowski import (
    MatSample,
    circle_of,
    envelope_eval,
    envelope_points_from_hermite,
    is_space_like,
)
from .polyutil import PolyCurve2, hermite_cubic, integrate01

VALIDITY_GRID = 256


def envelope_tangent(p, q, alpha: float, forward) -> np.ndarray:
    """Spine tangent at a touching point: alpha times the unit rotation of
    (P_planar - Q), sign-corrected to face the forward chord."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if alpha == 0.0:
        raise GeometryError("zero tangent length")
    u = p[:2] - q
    if norm2(u) == 0.0:
        raise GeometryError("touching point coincides with the circle center")
    v = alpha * rotate_cw(u) / norm2(u)
    if float(v @ np.asarray(forward, dtype=float)) < 0.0:
        v = -v
    return v


def tangent_lengths(c_i: Circle, c_next: Circle, q_i, q_next, eps: float = EPS):
    """Tangent lengths for both segment ends: twice the distance from each
    touching point to the radical line of the pair."""
    line = radical_line(c_i, c_next, eps)
    a_i = 2.0 * line.distance(q_i)
    a_next = 2.0 * line.distance(q_next)
    if a_i <= 0.0 or a_next <= 0.0:
        raise GeometryError("touching point on the radical line: zero tangent length")
    return a_i, a_next


def hermite_spine(q0, v0, q1, v1) -> PolyCurve2:
    """Cubic with x(0)=q0, x(1)=q1, x'(0)=v0, x'(1)=v1."""
    return PolyCurve2(
        hermite_cubic(q0[0], q1[0], v0[0], v1[0]),
        hermite_cubic(q0[1], q1[1], v0[1], v1[1]),
    )


def _bending_energy(curve: PolyCurve2, samples: int = 64) -> float:
    ts = np.linspace(0.0, 1.0, samples)
    d1 = curve.derivative()
    d2 = d1.derivative()
    p1 = d1.point(ts)
    p2 = d2.point(ts)
    speed = np.linalg.norm(p1, axis=1)
    if np.any(speed < 1e-12):
        return float("inf")
    kappa = (p1[:, 0] * p2[:, 1] - p1[:, 1] * p2[:, 0]) / speed**3
    return float(np.mean(kappa**2 * speed))


def ph_spine(q0, v0, q1, v1) -> Tuple[PolyCurve2, dict]:
    """PH quintic matching the same first-order Hermite data.

    The hodograph is the square of a complex quadratic in Bernstein form;
    its middle coefficient solves a complex quadratic fixing the endpoint
    displacement. Of the four resulting curves, the one with the least
    sampled bending energy wins (first index on ties).
    """
    z0 = complex(v0[0], v0[1])
    z1 = complex(v1[0], v1[1])
    if z0 == 0 or z1 == 0:
        raise GeometryError("PH spine needs nonzero end tangents")
    dq = complex(q1[0] - q0[0], q1[1] - q0[1])
    w0 = np.sqrt(complex(z0))
    b0 = np.array([1.0, -2.0, 1.0], dtype=complex)  # (1-t)^2
    b1 = np.array([0.0, 2.0, -2.0], dtype=complex)  # 2t(1-t)
    b2 = np.array([0.0, 0.0, 1.0], dtype=complex)  # t^2
    candidates = []
    idx = 0
    for sgn in (1.0, -1.0):
        w2 = sgn * np.sqrt(complex(z1))
        a = w0 * b0 + w2 * b2
        i_aa = integrate01(P.polymul(a, a))
        i_ab = integrate01(P.polymul(a, b1))
        i_bb = integrate01(P.polymul(b1, b1))  # = 2/15
        disc = i_ab * i_ab - i_bb * (i_aa - dq)
        root = np.sqrt(complex(disc))
        for w1 in ((-i_ab + root) / i_bb, (-i_ab - root) / i_bb):
            w = a + w1 * b1
            hodo = P.polymul(w, w)  # degree 4, complex
            coeffs = P.polyint(hodo)
            coeffs[0] = complex(q0[0], q0[1])
            curve = PolyCurve2(coeffs.real, coeffs.imag)
            candidates.append((idx, _bending_energy(curve), curve))
            idx += 1
    best = min(candidates, key=lambda item: (item[1], item[0]))
    return best[2], {"candidate": best[0], "energy": best[1]}


def radius_profile(p0, p1, t0, t1, spine: PolyCurve2, v0, v1, eps: float = EPS):
    """Unique cubic f with f(i) = P_iz / ||v_i|| and the G1 end slopes."""
    d1 = spine.derivative()
    d2 = d1.derivative()
    vals = []
    slopes = []
    for i, (p, t, v) in enumerate(((p0, t0, v0), (p1, t1, v1))):
        tp = np.asarray(t, dtype=float)[:2]
        v = np.asarray(v, dtype=float)
        denom = float(tp @ v)
        if abs(denom) <= np.sqrt(eps) * norm2(tp) * norm2(v):
            raise GeometryError(
                "tangent/envelope-tangent orthogonality: radius profile undefined"
            )
        f_i = float(p[2]) / norm2(v)
        xpp = d2.point(float(i))
        slope = -float(tp @ (f_i * xpp - rotate_cw(v))) / denom
        vals.append(f_i)
        slopes.append(slope)
    return hermite_cubic(vals[0], vals[1], slopes[0], slopes[1])


@dataclass(frozen=True)
class RESegment:
    spine: PolyCurve2
    profile: np.ndarray  # radius-profile coefficients f(t)
    endpoints: Tuple[np.ndarray, np.ndarray]  # lifted circles P0, P1
    end_tangents: Tuple[np.ndarray, np.ndarray]
    env_tangents: Tuple[np.ndarray, np.ndarray]  # spine end tangents v0, v1
    is_ph: bool
    ph_meta: Optional[dict] = None
    # planar MAT polynomials y(t) = x(t) + f(t) * rot_cw(x'(t))
    mat_x: np.ndarray = field(default=None)
    mat_y: np.ndarray = field(default=None)

    def mat_sample(self, t: float) -> MatSample:
        """MAT position, radius and their derivatives at parameter t."""
        yx = P.polyval(t, self.mat_x)
        yy = P.polyval(t, self.mat_y)
        vel = np.array([P.polyval(t, P.polyder(self.mat_x)),
                        P.polyval(t, P.polyder(self.mat_y))])
        g2 = float(P.polyval(t, self.spine.speed_squared()))
        g = np.sqrt(g2)
        f = float(P.polyval(t, self.profile))
        fp = float(P.polyval(t, P.polyder(self.profile)))
        d1 = self.spine.derivative()
        d2 = d1.derivative()
        xp = d1.point(t)
        xpp = d2.point(t)
        gp = float(xp @ xpp) / g
        return MatSample(np.array([yx, yy]), f * g, vel, fp * g + f * gp)

    def radius(self, t: float) -> float:
        g = np.sqrt(float(P.polyval(t, self.spine.speed_squared())))
        return float(P.polyval(t, self.profile)) * g

    def mat_point(self, t: float) -> np.ndarray:
        """Lifted MAT point (y_x, y_y, r) at parameter t."""
        s = self.mat_sample(t)
        return np.array([s.position[0], s.position[1], s.radius])

    def mat_velocity(self, t: float) -> np.ndarray:
        s = self.mat_sample(t)
        return np.array([s.velocity[0], s.velocity[1], s.radius_rate])


def build_re_segment(p0, p1, t0, t1, spine_kind: str = "cubic", eps: float = EPS) -> RESegment:
    """Assemble one RE (or MPH) segment from Hermite data in R^{2,1}."""
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    t0 = np.asarray(t0, dtype=float)
    t1 = np.asarray(t1, dtype=float)
    for t in (t0, t1):
        if not is_space_like(t, eps):
            raise GeometryError("end tangent is not space-like")
    q0, _ = envelope_points_from_hermite(p0, t0, eps)
    q1, _ = envelope_points_from_hermite(p1, t1, eps)
    c0, c1 = circle_of(p0), circle_of(p1)
    a0, a1 = tangent_lengths(c0, c1, q0, q1, eps)
    forward = p1[:2] - p0[:2]
    v0 = envelope_tangent(p0, q0, a0, forward)
    v1 = envelope_tangent(p1, q1, a1, forward)
    ph_meta = None
    if spine_kind == "ph":
        spine, ph_meta = ph_spine(q0, v0, q1, v1)
    elif spine_kind == "cubic":
        spine = hermite_spine(q0, v0, q1, v1)
    else:
        raise GeometryError(f"unknown spine kind: {spine_kind!r}")
    profile = radius_profile(p0, p1, t0, t1, spine, v0, v1, eps)

    dx, dy = P.polyder(spine.cx), P.polyder(spine.cy)
    mat_x = P.polyadd(spine.cx, P.polymul(profile, dy))
    mat_y = P.polysub(spine.cy, P.polymul(profile, dx))
    seg = RESegment(
        spine=spine,
        profile=profile,
        endpoints=(p0, p1),
        end_tangents=(t0, t1),
        env_tangents=(v0, v1),
        is_ph=spine_kind == "ph",
        ph_meta=ph_meta,
        mat_x=mat_x,
        mat_y=mat_y,
    )

    # sampled envelope-validity certificate
    scale = max(1.0, norm2(forward), p0[2], p1[2])
    for t in np.linspace(0.0, 1.0, VALIDITY_GRID):
        s = seg.mat_sample(float(t))
        if s.radius <= eps * scale:
            raise GeometryError(f"envelope validity lost: r(t) <= 0 near t={t:.4f}")
        slack = float(s.velocity @ s.velocity) - s.radius_rate**2
        if slack < -eps * scale**2:
            raise GeometryError(
                f"envelope validity lost: MAT not space-like near t={t:.4f}"
            )
    return seg


def sample_envelope(seg: RESegment, n: int, eps: float = EPS):
    """n uniform samples of both envelope branches (plus, minus)."""
    if n < 2:
        raise GeometryError("need at least two samples")
    plus = np.empty((n, 2))
    minus = np.empty((n, 2))
    for k, t in enumerate(np.linspace(0.0, 1.0, n)):
        try:
            xp, xm = envelope_eval(seg.mat_sample(float(t)), eps)
        except GeometryError as exc:
            raise GeometryError(f"{exc} at t={t:.6f}") from exc
        plus[k] = xp
        minus[k] = xm
    return plus, minus


def sample_offsets(seg: RESegment, d: float, n: int, eps: float = EPS):
    """Envelope of the radius-shifted MAT (y(t), r(t) + d)."""
    if n < 2:
        raise GeometryError("need at least two samples")
    plus = np.empty((n, 2))
    minus = np.empty((n, 2))
    for k, t in enumerate(np.linspace(0.0, 1.0, n)):
        s = seg.mat_sample(float(t))
        if s.radius + d <= 0.0:
            raise GeometryError(f"offset collapses: r(t) + d <= 0 at t={t:.6f}")
        shifted = MatSample(s.position, s.radius + d, s.velocity, s.radius_rate)
        try:
            xp, xm = envelope_eval(shifted, eps)
        except GeometryError as exc:
            raise GeometryError(f"{exc} at t={t:.6f}") from exc
        plus[k] = xp
        minus[k] = xm
    return plus, minus
