"""End-to-end skinning: lift circles, plan touching points, reconstruct
tangents, build per-pair RE segments and assemble the left/right G1 skins.

Two tangent modes exist. The default "inverse" mode plans the touching
points first (outer tangents / Apollonius) and reconstructs matching
tangents, which keeps every touching point outside the neighboring disks.
The "baseline" mode derives Catmull-Rom tangents from the lifted centers
only; it exists to reproduce the failure where touching points drift inside
intersecting neighbors, and reports that through diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .geom import EPS, Circle, GeometryError, norm2
from .minkowski import envelope_eval, envelope_points_from_hermite, lift
from .planner import (
    SOURCE_CATMULL_ROM,
    AdmissibilityError,
    AdmissibilityReport,
    TouchEntry,
    TouchPlan,
    plan_touchpoints,
    validate_admissibility,
)
from .reconstruct import reconstruct_tangent
from .resegment import RESegment, build_re_segment, sample_envelope, sample_offsets

MODE_INVERSE = "inverse"
MODE_BASELINE = "baseline"


@dataclass(frozen=True)
class SkinConfig:
    mode: str = MODE_INVERSE
    lam: float = 0.5  # Catmull-Rom factor (baseline mode)
    spine: str = "cubic"  # "cubic" | "ph"
    samples: int = 64
    offsets: Tuple[float, ...] = ()
    validate: bool = True
    epsilon: float = EPS

    def __post_init__(self):
        if self.mode not in (MODE_INVERSE, MODE_BASELINE):
            raise GeometryError(f"unknown mode: {self.mode!r}")
        if self.spine not in ("cubic", "ph"):
            raise GeometryError(f"unknown spine kind: {self.spine!r}")
        if self.lam <= 0.0:
            raise GeometryError("lambda must be positive")
        if self.samples < 2:
            raise GeometryError("need at least two samples per segment")


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    circle: Optional[int] = None
    neighbor: Optional[int] = None
    segment: Optional[int] = None
    point: Optional[tuple] = None
    detail: str = ""

    def to_dict(self):
        out = {"kind": self.kind, "detail": self.detail}
        for key in ("circle", "neighbor", "segment"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if self.point is not None:
            out["point"] = [float(self.point[0]), float(self.point[1])]
        return out


@dataclass(frozen=True)
class JointInfo:
    g1: bool
    angle: float
    position_gap: float


@dataclass
class SkinResult:
    left_skin: List[Optional[np.ndarray]]  # per segment, (samples, 2) or None
    right_skin: List[Optional[np.ndarray]]
    left_joints: List[Optional[JointInfo]]
    right_joints: List[Optional[JointInfo]]
    mat_segments: List[Optional[RESegment]]
    mat_samples: List[Optional[np.ndarray]]  # per segment, (samples, 3)
    touch_plan: Optional[TouchPlan]
    tangents: List[Optional[np.ndarray]]
    admissibility: AdmissibilityReport
    diagnostics: List[Diagnostic]
    offsets: List[dict]  # {"d": float, "left": [...], "right": [...]}
    config: SkinConfig


def catmull_rom_tangents(points: Sequence[np.ndarray], lam: float) -> List[np.ndarray]:
    """Unnormalized chordal tangents t_i = lam * (P_{i+1} - P_{i-1}), with
    one-sided differences at the ends. Space-likeness is not guaranteed."""
    n = len(points)
    if n < 2:
        raise GeometryError("need at least two points")
    if lam <= 0.0:
        raise GeometryError("lambda must be positive")
    pts = [np.asarray(p, dtype=float) for p in points]
    out = [lam * (pts[1] - pts[0])]
    for i in range(1, n - 1):
        out.append(lam * (pts[i + 1] - pts[i - 1]))
    if n > 1:
        out.append(lam * (pts[-1] - pts[-2]))
    return out


def _scene_scale(circles: Sequence[Circle]) -> float:
    pts = np.array([c.center for c in circles])
    rad = max(c.radius for c in circles)
    return max(1.0, float(np.max(np.ptp(pts, axis=0))) + 2 * rad)


def _touchpoint_diagnostics(circles, entries, margin) -> List[Diagnostic]:
    out = []
    n = len(circles)
    for i, entry in enumerate(entries):
        if entry is None:
            continue
        for side, w in (("plus", entry.w_plus), ("minus", entry.w_minus)):
            for j in (i - 1, i + 1):
                if 0 <= j < n and norm2(w - circles[j].center) < circles[j].radius - margin:
                    out.append(
                        Diagnostic(
                            kind="touchpoint_inside_disk",
                            circle=i,
                            neighbor=j,
                            point=(float(w[0]), float(w[1])),
                            detail=f"{side} touching point of circle {i} lies inside disk {j}",
                        )
                    )
    return out


def _envelope_direction(seg: RESegment, t: float, forward: bool, eps: float):
    """Second-order one-sided finite-difference direction of the plus branch."""
    h = 1e-5
    def env(tt):
        return envelope_eval(seg.mat_sample(tt), eps)
    if forward:
        f0, f1, f2 = env(t)[0], env(t + h)[0], env(t + 2 * h)[0]
        d = (-3.0 * f0 + 4.0 * f1 - f2) / (2 * h)
    else:
        f0, f1, f2 = env(t)[0], env(t - h)[0], env(t - 2 * h)[0]
        d = (3.0 * f0 - 4.0 * f1 + f2) / (2 * h)
    return d


def _joint_info(seg_a, seg_b, pts_a, pts_b, branch: str, eps: float) -> JointInfo:
    gap = norm2(pts_a[-1] - pts_b[0])
    h = 1e-5

    def env(seg, tt):
        xp, xm = envelope_eval(seg.mat_sample(tt), eps)
        return xp if branch == "plus" else xm

    ea = (3.0 * env(seg_a, 1.0) - 4.0 * env(seg_a, 1.0 - h) + env(seg_a, 1.0 - 2 * h)) / (2 * h)
    eb = (-3.0 * env(seg_b, 0.0) + 4.0 * env(seg_b, h) - env(seg_b, 2 * h)) / (2 * h)
    na, nb = norm2(ea), norm2(eb)
    if na == 0.0 or nb == 0.0:
        return JointInfo(False, float("nan"), gap)
    cosang = float(ea @ eb) / (na * nb)
    angle = float(np.arccos(np.clip(cosang, -1.0, 1.0)))
    return JointInfo(angle < 1e-6 and gap < 1e-7, angle, gap)


def skin(circles: Sequence[Circle], config: SkinConfig = SkinConfig()) -> SkinResult:
    """Run the full pipeline; raises AdmissibilityError when validation is on
    and the input violates the admissibility conditions."""
    n = len(circles)
    if n < 2:
        raise GeometryError("need at least two circles")
    scale = _scene_scale(circles)
    eps = config.epsilon
    margin = eps * scale

    report = validate_admissibility(circles, eps)
    if config.validate and not report.ok:
        raise AdmissibilityError(report)

    diagnostics: List[Diagnostic] = []
    lifts = [lift(c) for c in circles]

    entries: List[Optional[TouchEntry]]
    tangents: List[Optional[np.ndarray]]
    if config.mode == MODE_INVERSE:
        plan = plan_touchpoints(circles, eps)
        entries = list(plan.entries)
        tangents = []
        for i, entry in enumerate(entries):
            rec = reconstruct_tangent(circles[i], entry.w_plus, entry.w_minus, eps)
            tangents.append(rec.tangent)
    else:
        raw = catmull_rom_tangents(lifts, config.lam)
        entries = []
        tangents = []
        for i, t in enumerate(raw):
            try:
                qp, qm = envelope_points_from_hermite(lifts[i], t, eps)
                entries.append(TouchEntry(qp, qm, SOURCE_CATMULL_ROM, SOURCE_CATMULL_ROM))
                tangents.append(t)
            except GeometryError as exc:
                entries.append(None)
                tangents.append(None)
                diagnostics.append(
                    Diagnostic(kind="tangent_unusable", circle=i, detail=str(exc))
                )

    diagnostics.extend(_touchpoint_diagnostics(circles, entries, margin))

    left: List[Optional[np.ndarray]] = []
    right: List[Optional[np.ndarray]] = []
    mats: List[Optional[RESegment]] = []
    mat_samples: List[Optional[np.ndarray]] = []
    offset_rows = [
        {"d": float(d), "left": [], "right": []} for d in config.offsets
    ]
    for i in range(n - 1):
        if tangents[i] is None or tangents[i + 1] is None:
            seg = None
        else:
            try:
                seg = build_re_segment(
                    lifts[i], lifts[i + 1], tangents[i], tangents[i + 1],
                    spine_kind=config.spine, eps=eps,
                )
            except GeometryError as exc:
                seg = None
                diagnostics.append(
                    Diagnostic(kind="segment_failed", segment=i, detail=str(exc))
                )
        if seg is None:
            left.append(None)
            right.append(None)
            mats.append(None)
            mat_samples.append(None)
            for row in offset_rows:
                row["left"].append(None)
                row["right"].append(None)
            continue
        plus, minus = sample_envelope(seg, config.samples, eps)
        left.append(plus)
        right.append(minus)
        mats.append(seg)
        ts = np.linspace(0.0, 1.0, config.samples)
        mat_samples.append(np.array([seg.mat_point(float(t)) for t in ts]))
        for row in offset_rows:
            try:
                op, om = sample_offsets(seg, row["d"], config.samples, eps)
                row["left"].append(op)
                row["right"].append(om)
            except GeometryError as exc:
                row["left"].append(None)
                row["right"].append(None)
                diagnostics.append(
                    Diagnostic(kind="offset_failed", segment=i, detail=str(exc))
                )

    left_joints: List[Optional[JointInfo]] = []
    right_joints: List[Optional[JointInfo]] = []
    for i in range(n - 2):
        if mats[i] is None or mats[i + 1] is None:
            left_joints.append(None)
            right_joints.append(None)
            continue
        left_joints.append(_joint_info(mats[i], mats[i + 1], left[i], left[i + 1], "plus", eps))
        right_joints.append(_joint_info(mats[i], mats[i + 1], right[i], right[i + 1], "minus", eps))

    return SkinResult(
        left_skin=left,
        right_skin=right,
        left_joints=left_joints,
        right_joints=right_joints,
        mat_segments=mats,
        mat_samples=mat_samples,
        touch_plan=TouchPlan(tuple(entries)),  # None entries mark unusable circles
        tangents=tangents,
        admissibility=report,
        diagnostics=diagnostics,
        offsets=offset_rows,
        config=config,
    )
