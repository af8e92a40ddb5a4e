#!/usr/bin/env python3
"""Render a demo skin to SVG (and optionally JSON) for a small circle chain.

Usage:
    python3 scripts/render_demo.py [--out demo.svg] [--mode inverse|baseline]
"""

import argparse
import json
import sys

from circleskin import Circle, SkinConfig, output_document, render_svg, skin

CHAIN = [
    (0.0, 0.0, 1.0),
    (2.0, 0.4, 0.9),
    (4.2, 0.0, 1.1),
    (6.4, -0.3, 0.9),
    (8.4, 0.2, 1.0),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="demo.svg")
    ap.add_argument("--json", dest="json_out", default=None)
    ap.add_argument("--mode", choices=["inverse", "baseline"], default="inverse")
    ap.add_argument("--spine", choices=["cubic", "ph"], default="ph")
    args = ap.parse_args()

    circles = [Circle.from_xyr(x, y, r) for x, y, r in CHAIN]
    cfg = SkinConfig(mode=args.mode, spine=args.spine, samples=96, offsets=(0.25,))
    result = skin(circles, cfg)
    doc = output_document(circles, result)

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(doc))
    print(f"wrote {args.out}")
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
        print(f"wrote {args.json_out}")

    joints = [j for j in result.left_joints + result.right_joints if j is not None]
    print(f"{len(circles)} circles, {len(result.mat_segments)} segments, "
          f"G1 joints: {sum(j.g1 for j in joints)}/{len(joints)}")
    if result.diagnostics:
        for d in result.diagnostics:
            print(f"diagnostic: {d.detail}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
