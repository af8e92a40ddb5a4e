"""Planar primitives: circles, lines, inversion, radical lines, outer common
tangents and the uniform-orientation Apollonius solver.

All functions are pure. Coordinates are plain 2-element numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

EPS = 1e-9

EXCLUDING = "excluding"
INCLUDING = "including"


class GeometryError(ValueError):
    """Raised when a geometric construction has no (real, finite) answer."""


def vec(x, y) -> np.ndarray:
    return np.array([float(x), float(y)])


def rotate_cw(v) -> np.ndarray:
    """Quarter turn (x, y) -> (y, -x)."""
    return np.array([v[1], -v[0]])


def cross2(a, b) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def norm2(v) -> float:
    return float(np.hypot(v[0], v[1]))


def unit(v) -> np.ndarray:
    n = norm2(v)
    if n == 0.0:
        raise GeometryError("cannot normalize zero vector")
    return np.asarray(v, dtype=float) / n


@dataclass(frozen=True)
class Circle:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "radius", float(self.radius))
        if not np.all(np.isfinite(self.center)) or not np.isfinite(self.radius):
            raise GeometryError("circle must have finite center and radius")
        if self.radius <= 0.0:
            raise GeometryError("circle radius must be positive")

    @classmethod
    def from_xyr(cls, x, y, r) -> "Circle":
        return cls(vec(x, y), r)

    def power(self, p) -> float:
        """Power of a point: |p - O|^2 - r^2."""
        d = np.asarray(p, dtype=float) - self.center
        return float(d @ d) - self.radius**2

    def contains(self, p, margin: float = 0.0) -> bool:
        """Closed-disk membership, inflated/deflated by margin."""
        return norm2(np.asarray(p) - self.center) <= self.radius + margin

    def boundary_point(self, angle: float) -> np.ndarray:
        return self.center + self.radius * vec(np.cos(angle), np.sin(angle))


@dataclass(frozen=True)
class Line2:
    point: np.ndarray
    direction: np.ndarray  # unit vector

    def __post_init__(self):
        object.__setattr__(self, "point", np.asarray(self.point, dtype=float))
        object.__setattr__(self, "direction", np.asarray(self.direction, dtype=float))

    def foot(self, p) -> np.ndarray:
        """Orthogonal projection of p onto the line."""
        p = np.asarray(p, dtype=float)
        return self.point + ((p - self.point) @ self.direction) * self.direction

    def distance(self, p) -> float:
        return norm2(np.asarray(p) - self.foot(p))


@dataclass(frozen=True)
class GeneralizedCircle:
    """Tagged union: either a circle or a line (infinite-radius limit)."""

    circle: Optional[Circle] = None
    line: Optional[Line2] = None

    def __post_init__(self):
        if (self.circle is None) == (self.line is None):
            raise GeometryError("exactly one of circle/line must be set")

    @property
    def is_line(self) -> bool:
        return self.line is not None


@dataclass(frozen=True)
class TangencySolution:
    carrier: GeneralizedCircle
    tangency_points: tuple  # three points, one per input circle in input order
    orientation: str  # EXCLUDING | INCLUDING


def _scale_of(*circles: Circle) -> float:
    s = 1.0
    for c in circles:
        s = max(s, abs(c.center[0]), abs(c.center[1]), c.radius)
    return s


def radical_line(c1: Circle, c2: Circle, eps: float = EPS) -> Line2:
    """Locus of equal power w.r.t. both circles; perpendicular to center line."""
    d = c2.center - c1.center
    dist = norm2(d)
    if dist <= eps * _scale_of(c1, c2):
        raise GeometryError("no radical line: circles are concentric")
    u = d / dist
    # signed distance of the radical line from O1 along the center line
    a = (dist**2 + c1.radius**2 - c2.radius**2) / (2.0 * dist)
    return Line2(c1.center + a * u, rotate_cw(u))


def invert_point(p, c: Circle, eps: float = EPS) -> np.ndarray:
    """Circle inversion of p in c."""
    d = np.asarray(p, dtype=float) - c.center
    dd = float(d @ d)
    if dd <= (eps * c.radius) ** 2:
        raise GeometryError("inversion pole: point at circle center")
    return c.center + (c.radius**2 / dd) * d


def outer_common_tangents(c1: Circle, c2: Circle, eps: float = EPS):
    """Both outer common tangents as ((T1, T2), (T1', T2')) touch-point pairs.

    The pair whose c1 touch point lies left of the directed center line
    O1 -> O2 comes first.
    """
    scale = _scale_of(c1, c2)
    d = c2.center - c1.center
    dist = norm2(d)
    if dist <= eps * scale:
        if abs(c1.radius - c2.radius) <= eps * scale:
            raise GeometryError("degenerate: identical circles")
        raise GeometryError("no outer tangents: one disk inside the other")
    if dist <= abs(c1.radius - c2.radius) + eps * scale:
        raise GeometryError("no outer tangents: one disk inside the other")
    u = d / dist
    mu = (c2.radius - c1.radius) / dist
    nu = np.sqrt(max(0.0, 1.0 - mu * mu))
    pairs = []
    for sgn in (1.0, -1.0):
        n = mu * u + sgn * nu * rotate_cw(u)
        t1 = c1.center - c1.radius * n
        t2 = c2.center - c2.radius * n
        pairs.append((t1, t2))
    if cross2(u, pairs[0][0] - c1.center) < cross2(u, pairs[1][0] - c1.center):
        pairs.reverse()
    return pairs[0], pairs[1]


def _circle_candidates(c1: Circle, c2: Circle, c3: Circle, eps: float, scale: float):
    """Circle solutions of the uniform-sign tangency system.

    Subtracting the tangency equations pairwise leaves two linear equations in
    (x, y, R) with R signed: R > 0 means all inputs externally tangent
    (outside the carrier), R < 0 means the carrier of radius |R| contains all
    inputs.
    """
    circles = (c1, c2, c3)
    rows = []
    rhs = []
    k1 = c1.center @ c1.center - c1.radius**2
    for cj in (c2, c3):
        rows.append(
            [
                2.0 * (cj.center[0] - c1.center[0]),
                2.0 * (cj.center[1] - c1.center[1]),
                2.0 * (cj.radius - c1.radius),
            ]
        )
        rhs.append(cj.center @ cj.center - cj.radius**2 - k1)
    m = np.array(rows)
    b = np.array(rhs)
    u_svd, s_svd, vt = np.linalg.svd(m)
    if s_svd[1] <= 1e-12 * max(s_svd[0], 1.0):
        # rank-deficient rows: either inconsistent (no circle solutions) or a
        # degenerate pencil we do not attempt to enumerate
        p_try, *_ = np.linalg.lstsq(m, b, rcond=None)
        if norm2((m @ p_try - b)[:2]) > 1e-7 * scale * scale:
            return []
        raise GeometryError("ill-conditioned triplet: degenerate circle pencil")
    p, *_ = np.linalg.lstsq(m, b, rcond=None)
    if np.linalg.norm(m @ p - b) > 1e-7 * scale * scale:
        return []  # inconsistent: only line solutions can exist
    n = vt[2]  # null direction of the 2x3 system

    # substitute (x, y, R) = p + tau * n into the first tangency equation
    dxy = p[:2] - c1.center
    a = n[0] ** 2 + n[1] ** 2 - n[2] ** 2
    bq = 2.0 * (dxy @ n[:2] - (p[2] + c1.radius) * n[2])
    cq = dxy @ dxy - (p[2] + c1.radius) ** 2

    taus = []
    if abs(a) > 1e-12:
        disc = bq * bq - 4.0 * a * cq
        if disc < 0.0 and disc > -1e-9 * max(bq * bq, 1.0):
            disc = 0.0
        if disc >= 0.0:
            sq = np.sqrt(disc)
            q = -(bq + np.copysign(sq, bq)) / 2.0
            taus.append(q / a)
            if abs(q) > 1e-300:
                taus.append(cq / q)
            elif disc == 0.0:
                pass
            else:
                taus.append((-bq + sq) / (2 * a) if bq < 0 else (-bq - sq) / (2 * a))
    elif abs(bq) > 1e-12 * scale:
        taus.append(-cq / bq)

    out = []
    for tau in taus:
        x, y, r_signed = p + tau * n
        if abs(r_signed) <= eps * scale:
            continue
        center = vec(x, y)
        radius = abs(r_signed)
        pts = []
        ok = True
        for cj in circles:
            dj = cj.center - center
            dist = norm2(dj)
            if dist <= eps * scale:
                ok = False
                break
            pts.append(center + radius * dj / dist)
            want = radius + cj.radius if r_signed > 0 else radius - cj.radius
            if abs(dist - want) > 1e-6 * scale:
                ok = False
                break
        if not ok:
            continue
        orient = EXCLUDING if r_signed > 0 else INCLUDING
        out.append((r_signed, TangencySolution(
            GeneralizedCircle(circle=Circle(center, radius)), tuple(pts), orient)))
    out.sort(key=lambda item: -item[0])  # excluding (R > 0) first
    return [sol for _, sol in out]


def _line_candidates(c1: Circle, c2: Circle, c3: Circle, eps: float, scale: float):
    """Common tangent lines with all three circles on the same side."""
    circles = (c1, c2, c3)
    u21 = c2.center - c1.center
    u31 = c3.center - c1.center
    det = cross2(u21, u31)
    normals = []
    if abs(det) > (eps * scale) ** 2 * 10:
        n = np.linalg.solve(
            np.array([u21, u31]),
            np.array([c2.radius - c1.radius, c3.radius - c1.radius]),
        )
        if abs(norm2(n) - 1.0) <= 1e-7:
            normals.append(unit(n))
    else:
        # collinear centers: one scalar constraint on the normal
        d21 = norm2(u21)
        if d21 <= eps * scale:
            raise GeometryError("identical circle centers in triplet")
        u = u21 / d21
        mu = (c2.radius - c1.radius) / d21
        if abs(mu * (u31 @ u) - (c3.radius - c1.radius)) <= 1e-7 * scale:
            if abs(mu) <= 1.0:
                nu = np.sqrt(max(0.0, 1.0 - mu * mu))
                normals.append(mu * u + nu * rotate_cw(u))
                if nu > eps:
                    normals.append(mu * u - nu * rotate_cw(u))
    out = []
    for n in normals:
        offset = n @ c1.center - c1.radius
        if any(abs(n @ cj.center - offset - cj.radius) > 1e-6 * scale for cj in circles):
            continue
        pts = tuple(cj.center - cj.radius * n for cj in circles)
        carrier = GeneralizedCircle(line=Line2(c1.center - c1.radius * n, rotate_cw(n)))
        out.append((float(np.arctan2(n[1], n[0])), TangencySolution(carrier, pts, EXCLUDING)))
    out.sort(key=lambda item: item[0])  # deterministic order by normal angle
    return [sol for _, sol in out]


def apollonius_same_side(c1: Circle, c2: Circle, c3: Circle, eps: float = EPS):
    """The two Apollonius solutions tangent to all three circles with uniform
    orientation: one carrier excluding all inputs, one including them.

    Infinite-radius solutions come back as lines. Raises GeometryError when
    fewer than two real solutions exist.
    """
    scale = _scale_of(c1, c2, c3)
    circles = (c1, c2, c3)
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = circles[i], circles[j]
            if (norm2(a.center - b.center) <= eps * scale
                    and abs(a.radius - b.radius) <= eps * scale):
                raise GeometryError("identical circles in triplet")

    sols = _circle_candidates(c1, c2, c3, eps, scale)
    if len(sols) < 2:
        sols = sols + _line_candidates(c1, c2, c3, eps, scale)
    if len(sols) < 2:
        raise GeometryError("no same-side Apollonius solution")
    return sols[0], sols[1]
