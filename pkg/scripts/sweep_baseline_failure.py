#!/usr/bin/env python3
"""Sweep intersecting three-circle configurations for ones where the
Catmull-Rom baseline puts a touching point inside a neighbor disk while the
inverse planner does not. Prints candidates; the first hit is pinned as the
regression fixture in the test suite."""

import itertools

import numpy as np

from circleskin import Circle, SkinConfig, skin, validate_admissibility


def probe(circles):
    rep = validate_admissibility(circles)
    if not rep.ok:
        return None
    base = skin(circles, SkinConfig(mode="baseline", validate=False, samples=4))
    bad = [d for d in base.diagnostics if d.kind == "touchpoint_inside_disk"]
    if not bad:
        return None
    inv = skin(circles, SkinConfig(mode="inverse", samples=4))
    if any(d.kind == "touchpoint_inside_disk" for d in inv.diagnostics):
        return None
    return bad


def main():
    hits = 0
    for dx, dy, r2, x3, y3, r3 in itertools.product(
        np.arange(1.0, 2.1, 0.2),
        (0.0, 0.3),
        (0.9, 1.1, 1.3),
        np.arange(2.6, 4.3, 0.4),
        (0.4, 0.8, 1.2),
        (0.7, 0.9),
    ):
        circles = [
            Circle.from_xyr(0, 0, 1),
            Circle.from_xyr(dx, dy, r2),
            Circle.from_xyr(x3, y3, r3),
        ]
        try:
            bad = probe(circles)
        except Exception:
            continue
        if bad:
            hits += 1
            spec = [(round(float(c.center[0]), 3), round(float(c.center[1]), 3), c.radius)
                    for c in circles]
            print(spec, "->", [d.detail for d in bad])
            if hits >= 12:
                return


if __name__ == "__main__":
    main()
