"""Deterministic SVG rendering of an output document.

Layer groups appear in a fixed order with fixed ids: circles, mat,
skin-left, skin-right, touchpoints, offsets. The math y-axis points up, so
coordinates are emitted with y negated.
"""

from __future__ import annotations

from typing import List


def _fmt(x: float) -> str:
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return "%.9g" % x


def _pts(polyline, flip=True) -> str:
    sign = -1.0 if flip else 1.0
    return " ".join(f"{_fmt(p[0])},{_fmt(sign * p[1])}" for p in polyline)


def _bounds(doc: dict):
    xs: List[float] = []
    ys: List[float] = []
    for c in doc["circles"]:
        xs.extend([c["x"] - c["r"], c["x"] + c["r"]])
        ys.extend([c["y"] - c["r"], c["y"] + c["r"]])
    for side in ("left", "right"):
        for seg in doc["skins"][side]:
            if seg:
                xs.extend(p[0] for p in seg)
                ys.extend(p[1] for p in seg)
    for row in doc.get("offsets", []):
        for side in ("left", "right"):
            for seg in row[side]:
                if seg:
                    xs.extend(p[0] for p in seg)
                    ys.extend(p[1] for p in seg)
    if not xs:
        return -1.0, -1.0, 2.0, 2.0
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    # y flip: viewBox covers [-y1, -y0]
    return x0, -y1, x1 - x0, y1 - y0


def render_svg(doc: dict) -> str:
    vx, vy, vw, vh = _bounds(doc)
    marker = 0.02 * max(vw, vh)
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%s %s %s %s">'
        % (_fmt(vx), _fmt(vy), _fmt(vw), _fmt(vh))
    )

    out.append('<g id="circles" fill="none" stroke="#888" stroke-width="%s">' % _fmt(0.15 * marker))
    for c in doc["circles"]:
        out.append(
            '<circle cx="%s" cy="%s" r="%s"/>' % (_fmt(c["x"]), _fmt(-c["y"]), _fmt(c["r"]))
        )
    out.append("</g>")

    out.append(
        '<g id="mat" fill="none" stroke="#c6a" stroke-width="%s" stroke-dasharray="%s">'
        % (_fmt(0.15 * marker), _fmt(0.5 * marker))
    )
    for seg in doc["mat"]:
        if seg:
            out.append('<polyline points="%s"/>' % _pts([(p[0], p[1]) for p in seg]))
    out.append("</g>")

    for side, color in (("left", "#06c"), ("right", "#c33")):
        out.append(
            '<g id="skin-%s" fill="none" stroke="%s" stroke-width="%s">'
            % (side, color, _fmt(0.25 * marker))
        )
        for seg in doc["skins"][side]:
            if seg:
                out.append('<polyline points="%s"/>' % _pts(seg))
        out.append("</g>")

    out.append('<g id="touchpoints" stroke="#000" stroke-width="%s">' % _fmt(0.1 * marker))
    for tp in doc["touch_points"]:
        if tp is None:
            continue
        for key in ("plus", "minus"):
            x, y = tp[key][0], -tp[key][1]
            out.append(
                '<path d="M %s %s L %s %s M %s %s L %s %s"/>'
                % (
                    _fmt(x - marker / 2), _fmt(y),
                    _fmt(x + marker / 2), _fmt(y),
                    _fmt(x), _fmt(y - marker / 2),
                    _fmt(x), _fmt(y + marker / 2),
                )
            )
    out.append("</g>")

    out.append(
        '<g id="offsets" fill="none" stroke="#9c9" stroke-width="%s" opacity="0.6">'
        % _fmt(0.12 * marker)
    )
    for row in doc.get("offsets", []):
        for side in ("left", "right"):
            for seg in row[side]:
                if seg:
                    out.append('<polyline points="%s"/>' % _pts(seg))
    out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
