"""Stateless HTTP service: POST /skin recomputes everything per request."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .documents import VERSION, InputError, output_document, parse_input
from .geom import GeometryError
from .pipeline import skin
from .planner import AdmissibilityError


def create_app() -> FastAPI:
    app = FastAPI(title="circleskin", version=VERSION)

    @app.get("/health")
    async def health():
        return {"version": VERSION}

    @app.post("/skin")
    async def skin_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "malformed JSON body"}, status_code=400)
        try:
            circles, config = parse_input(body)
        except InputError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        try:
            result = skin(circles, config)
        except AdmissibilityError as exc:
            return JSONResponse(
                {"error": "inadmissible configuration", "admissibility": exc.report.to_dict()},
                status_code=422,
            )
        except GeometryError as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        return output_document(circles, result)

    return app


app = create_app()
