"""Touching-point planning and admissibility checks for an ordered circle set.

Endpoint circles take their touching points from the outer common tangents
with their single neighbor; interior circles take them from the two
uniform-orientation Apollonius solutions of the surrounding triplet. Points
are split into left (plus) / right (minus) by the sign of the cross product
against the local travel direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .geom import (
    EPS,
    EXCLUDING,
    Circle,
    GeometryError,
    apollonius_same_side,
    cross2,
    norm2,
    outer_common_tangents,
)

BOUNDARY_SAMPLES = 4096

SOURCE_OUTER = "outer_tangent"
SOURCE_APO_EXCLUDING = "apollonius_excluding"
SOURCE_APO_INCLUDING = "apollonius_including"
SOURCE_CATMULL_ROM = "catmull_rom"


@dataclass(frozen=True)
class Violation:
    condition: int  # 1..5
    circles: Tuple[int, ...]
    description: str
    interpreted: bool = False  # conditions 4/5 rest on an interpreted reading

    def to_dict(self):
        return {
            "condition": self.condition,
            "circles": list(self.circles),
            "description": self.description,
            "interpreted": self.interpreted,
        }


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    violations: Tuple[Violation, ...]

    def to_dict(self):
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


class AdmissibilityError(GeometryError):
    def __init__(self, report: AdmissibilityReport):
        super().__init__("inadmissible circle configuration")
        self.report = report


@dataclass(frozen=True)
class TouchEntry:
    w_plus: np.ndarray
    w_minus: np.ndarray
    source_plus: str
    source_minus: str


@dataclass(frozen=True)
class TouchPlan:
    entries: Tuple[TouchEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i) -> TouchEntry:
        return self.entries[i]


def _scene_scale(circles: Sequence[Circle]) -> float:
    pts = np.array([c.center for c in circles])
    rad = max(c.radius for c in circles)
    diam = float(np.max(np.ptp(pts, axis=0))) + 2 * rad if len(circles) > 1 else 2 * rad
    return max(1.0, diam)


def _segment_circle_hits(p0, p1, c: Circle, eps: float):
    """Intersection points of the closed segment p0-p1 with circle c."""
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    d = p1 - p0
    f = p0 - c.center
    a = float(d @ d)
    if a == 0.0:
        return []
    b = 2.0 * float(f @ d)
    cc = float(f @ f) - c.radius**2
    disc = b * b - 4.0 * a * cc
    if disc < 0.0:
        return []
    sq = np.sqrt(disc)
    hits = []
    for tau in ((-b - sq) / (2 * a), (-b + sq) / (2 * a)):
        if -eps <= tau <= 1.0 + eps:
            hits.append(p0 + min(max(tau, 0.0), 1.0) * d)
    return hits


def validate_admissibility(
    circles: Sequence[Circle], eps: float = EPS
) -> AdmissibilityReport:
    """Evaluate the five admissibility conditions; report all violations."""
    n = len(circles)
    if n < 2:
        raise GeometryError("need at least two circles")
    eps_s = eps * _scene_scale(circles)
    violations: List[Violation] = []

    # (1) no disk's boundary covered by the union of the other disks
    angles = np.linspace(0.0, 2.0 * np.pi, BOUNDARY_SAMPLES, endpoint=False)
    unit_ring = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    for i, ci in enumerate(circles):
        ring = ci.center + ci.radius * unit_ring
        covered = np.zeros(BOUNDARY_SAMPLES, dtype=bool)
        for j, cj in enumerate(circles):
            if j == i:
                continue
            covered |= np.linalg.norm(ring - cj.center, axis=1) <= cj.radius + eps_s
            if covered.all():
                break
        if covered.all():
            violations.append(
                Violation(1, (i,), f"disk {i} is contained in the union of the others")
            )

    # (2) disks more than two apart in index must be disjoint
    for i in range(n):
        for j in range(i + 3, n):
            if norm2(circles[i].center - circles[j].center) < (
                circles[i].radius + circles[j].radius - eps_s
            ):
                violations.append(
                    Violation(2, (i, j), f"disks {i} and {j} (index gap > 2) overlap")
                )

    # (3) an overlap of the two neighbors must lie inside the middle disk
    half = BOUNDARY_SAMPLES // 2
    angles_h = np.linspace(0.0, 2.0 * np.pi, half, endpoint=False)
    ring_h = np.stack([np.cos(angles_h), np.sin(angles_h)], axis=1)
    for i in range(1, n - 1):
        a, b, mid = circles[i - 1], circles[i + 1], circles[i]
        if norm2(a.center - b.center) >= a.radius + b.radius - eps_s:
            continue
        bad = False
        for p, q in ((a, b), (b, a)):
            ring = p.center + p.radius * ring_h
            in_lens = np.linalg.norm(ring - q.center, axis=1) <= q.radius + eps_s
            outside_mid = (
                np.linalg.norm(ring - mid.center, axis=1) > mid.radius + eps_s
            )
            if np.any(in_lens & outside_mid):
                bad = True
        if bad:
            violations.append(
                Violation(
                    3,
                    (i - 1, i, i + 1),
                    f"overlap of disks {i - 1} and {i + 1} is not inside disk {i}",
                )
            )

    # (4)/(5) use the interpreted reading: s_i is the closed segment between
    # consecutive centers; its crossings of the named circle must not fall
    # strictly inside the other named disk.
    for i in range(n - 2):
        for hit in _segment_circle_hits(
            circles[i].center, circles[i + 1].center, circles[i + 2], eps
        ):
            if norm2(hit - circles[i + 1].center) < circles[i + 1].radius - eps_s:
                violations.append(
                    Violation(
                        4,
                        (i, i + 1, i + 2),
                        f"center segment {i}-{i + 1} meets circle {i + 2} inside disk {i + 1}",
                        interpreted=True,
                    )
                )
                break
    for i in range(1, n - 1):
        for hit in _segment_circle_hits(
            circles[i].center, circles[i + 1].center, circles[i], eps
        ):
            if norm2(hit - circles[i - 1].center) < circles[i - 1].radius - eps_s:
                violations.append(
                    Violation(
                        5,
                        (i - 1, i, i + 1),
                        f"center segment {i}-{i + 1} meets circle {i} inside disk {i - 1}",
                        interpreted=True,
                    )
                )
                break

    return AdmissibilityReport(len(violations) == 0, tuple(violations))


def _classify(points_sources, travel, center):
    """Split two candidate points into (plus, minus) by the cross-product sign
    against the travel direction; positive cross goes left (plus)."""
    (pa, sa), (pb, sb) = points_sources
    ca = cross2(travel, pa - center)
    cb = cross2(travel, pb - center)
    if ca < cb:
        (pa, sa), (pb, sb) = (pb, sb), (pa, sa)
        ca, cb = cb, ca
    if ca <= 0.0 or cb >= 0.0:
        # both candidates on one side of the travel line; keep the ordering by
        # cross value, the caller surfaces this through diagnostics
        pass
    return TouchEntry(pa, pb, sa, sb)


def plan_touchpoints(circles: Sequence[Circle], eps: float = EPS) -> TouchPlan:
    """Two touching points (left/right) per circle."""
    n = len(circles)
    if n < 2:
        raise GeometryError("need at least two circles")
    entries = []
    for i, ci in enumerate(circles):
        if i == 0:
            travel = circles[1].center - circles[0].center
        elif i == n - 1:
            travel = circles[n - 1].center - circles[n - 2].center
        else:
            travel = circles[i + 1].center - circles[i - 1].center
        try:
            if i == 0 or i == n - 1:
                nb = circles[1] if i == 0 else circles[n - 2]
                pair_a, pair_b = outer_common_tangents(ci, nb, eps)
                cands = [(pair_a[0], SOURCE_OUTER), (pair_b[0], SOURCE_OUTER)]
            else:
                sol_a, sol_b = apollonius_same_side(
                    circles[i - 1], ci, circles[i + 1], eps
                )
                cands = [
                    (
                        sol.tangency_points[1],
                        SOURCE_APO_EXCLUDING
                        if sol.orientation == EXCLUDING
                        else SOURCE_APO_INCLUDING,
                    )
                    for sol in (sol_a, sol_b)
                ]
        except GeometryError as exc:
            raise GeometryError(f"circle {i}: {exc}") from exc
        entries.append(_classify(cands, travel, ci.center))
    return TouchPlan(tuple(entries))
