"""Batch CLI: JSON circles in, SVG/JSON skins out; can also launch the
stateless HTTP service that drives the editor."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .documents import InputError, output_document, parse_input
from .geom import GeometryError
from .pipeline import skin
from .planner import AdmissibilityError, validate_admissibility
from .svgout import render_svg

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INADMISSIBLE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="circleskin",
        description="Skin an ordered set of circles with rational-envelope curves.",
    )
    p.add_argument("--input", default="-", help="input JSON path, '-' for stdin")
    p.add_argument("--mode", choices=["inverse", "baseline"], default=None)
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="Catmull-Rom factor for baseline mode")
    p.add_argument("--spine", choices=["cubic", "ph"], default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--offset", type=float, action="append", default=None,
                   help="offset distance (repeatable)")
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--svg", default=None, help="write SVG to this path")
    p.add_argument("--json", dest="json_out", default=None, help="write JSON to this path")
    p.add_argument("--validate-only", action="store_true",
                   help="run admissibility validation and exit")
    p.add_argument("--serve", type=int, default=None, metavar="PORT",
                   help="run the HTTP service instead of a batch computation")
    return p


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.serve is not None:
        import uvicorn

        from .service import app

        uvicorn.run(app, host="127.0.0.1", port=args.serve, log_level="warning")
        return EXIT_OK

    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_ERROR

    overrides = {
        "mode": args.mode,
        "lambda": args.lam,
        "spine": args.spine,
        "samples": args.samples,
        "offsets": args.offset,
        "epsilon": args.epsilon,
    }
    try:
        circles, config = parse_input(doc, overrides)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.validate_only:
        report = validate_admissibility(circles, config.epsilon)
        if report.ok:
            print(json.dumps(report.to_dict()))
            return EXIT_OK
        print(json.dumps(report.to_dict()), file=sys.stderr)
        return EXIT_INADMISSIBLE

    try:
        result = skin(circles, config)
    except AdmissibilityError as exc:
        print(json.dumps(exc.report.to_dict()), file=sys.stderr)
        return EXIT_INADMISSIBLE
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    out = output_document(circles, result)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(out, fh)
            fh.write("\n")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(out))
    if not args.json_out and not args.svg:
        json.dump(out, sys.stdout)
        sys.stdout.write("\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
