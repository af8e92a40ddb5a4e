"""Input/output document schemas shared by the CLI and the HTTP service."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .geom import Circle
from .pipeline import SkinConfig, SkinResult

VERSION = "0.1.0"


class InputError(ValueError):
    """Malformed input document."""


def _polyline(arr: Optional[np.ndarray]) -> Optional[list]:
    if arr is None:
        return None
    return [[float(x), float(y)] for x, y in arr]


def parse_input(doc, overrides: Optional[dict] = None) -> Tuple[List[Circle], SkinConfig]:
    """Validate and convert an input document to circles + config."""
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    raw = doc.get("circles")
    if not isinstance(raw, list) or len(raw) < 2:
        raise InputError("need a 'circles' array with at least 2 entries")
    circles = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise InputError(f"circle {i}: expected an object with x, y, r")
        try:
            x, y, r = float(entry["x"]), float(entry["y"]), float(entry["r"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"circle {i}: missing or non-numeric x/y/r") from exc
        if not all(np.isfinite([x, y, r])):
            raise InputError(f"circle {i}: coordinates must be finite")
        if r <= 0.0:
            raise InputError(f"circle {i}: radius must be positive (got {r})")
        circles.append(Circle.from_xyr(x, y, r))

    cfg = dict(doc.get("config") or {})
    if overrides:
        cfg.update({k: v for k, v in overrides.items() if v is not None})
    known = {"mode", "lambda", "spine", "samples", "offsets", "validate", "epsilon"}
    unknown = set(cfg) - known
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    try:
        config = SkinConfig(
            mode=cfg.get("mode", "inverse"),
            lam=float(cfg.get("lambda", 0.5)),
            spine=cfg.get("spine", "cubic"),
            samples=int(cfg.get("samples", 64)),
            offsets=tuple(float(d) for d in cfg.get("offsets", ())),
            validate=bool(cfg.get("validate", True)),
            epsilon=float(cfg.get("epsilon", 1e-9)),
        )
    except (TypeError, ValueError) as exc:
        raise InputError(f"invalid config: {exc}") from exc
    return circles, config


def output_document(circles: Sequence[Circle], result: SkinResult) -> dict:
    """Serialize a SkinResult to the wire/disk schema."""
    touch_points = []
    for entry in result.touch_plan.entries:
        if entry is None:
            touch_points.append(None)
        else:
            touch_points.append(
                {
                    "plus": _polyline(np.array([entry.w_plus]))[0],
                    "minus": _polyline(np.array([entry.w_minus]))[0],
                    "source_plus": entry.source_plus,
                    "source_minus": entry.source_minus,
                }
            )
    mat = []
    for seg_samples in result.mat_samples:
        if seg_samples is None:
            mat.append(None)
        else:
            mat.append([[float(a), float(b), float(c)] for a, b, c in seg_samples])
    joints = {
        "left": [
            None if j is None else {"g1": bool(j.g1), "angle": float(j.angle)}
            for j in result.left_joints
        ],
        "right": [
            None if j is None else {"g1": bool(j.g1), "angle": float(j.angle)}
            for j in result.right_joints
        ],
    }
    return {
        "version": VERSION,
        "mode": result.config.mode,
        "circles": [
            {"x": float(c.center[0]), "y": float(c.center[1]), "r": float(c.radius)}
            for c in circles
        ],
        "skins": {
            "left": [_polyline(seg) for seg in result.left_skin],
            "right": [_polyline(seg) for seg in result.right_skin],
        },
        "joints": joints,
        "touch_points": touch_points,
        "mat": mat,
        "offsets": [
            {
                "d": row["d"],
                "left": [_polyline(seg) for seg in row["left"]],
                "right": [_polyline(seg) for seg in row["right"]],
            }
            for row in result.offsets
        ],
        "diagnostics": [d.to_dict() for d in result.diagnostics],
        "admissibility": result.admissibility.to_dict(),
    }
