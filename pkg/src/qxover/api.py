"""HTTP API over the shared service layer.

Every endpoint is a stateless GET whose query parameters mirror the CLI
flags one to one. Responses are emitted through the same canonical JSON
encoder the CLI uses, so a URL and its CLI twin return identical bytes.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from .payloads import canonical_json
from .service import (
    DataContext,
    RequestError,
    build_analyze,
    build_catalog,
    build_grid,
    build_qaps,
    build_roadmap,
    build_threshold,
)


def _json(payload: dict, status: int = 200) -> Response:
    return Response(
        canonical_json(payload),
        status_code=status,
        media_type="application/json",
    )


def create_app(
    data_dir: Path | None = None, static_dir: Path | None = None
) -> FastAPI:
    """Build the application; data files are read once and cached."""
    ctx = DataContext(data_dir)
    app = FastAPI(title="qxover", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestError)
    async def _request_error(request: Request, exc: RequestError):
        body: dict = {"error": str(exc)}
        if exc.offset is not None:
            body["offset"] = exc.offset
        return _json(body, status=exc.status)

    @app.get("/api/threshold")
    def api_threshold(request: Request) -> Response:
        p = request.query_params
        return _json(build_threshold(
            ctx,
            classical=p.get("classical"),
            quantum=p.get("quantum"),
            c=p.get("C"),
            scenario=p.get("scenario"),
            points=p.get("points"),
        ))

    @app.get("/api/grid")
    def api_grid(request: Request) -> Response:
        p = request.query_params
        return _json(build_grid(ctx, c=p.get("C"), scenario=p.get("scenario")))

    @app.get("/api/analyze")
    def api_analyze(request: Request) -> Response:
        p = request.query_params
        return _json(build_analyze(
            ctx,
            entry_id=p.get("id"),
            classical=p.get("classical"),
            quantum=p.get("quantum"),
            qubits=p.get("qubits"),
            loading=p.get("loading"),
            semantics=p.get("semantics"),
            c=p.get("C"),
            scenario=p.get("scenario"),
            provider=p.get("provider"),
            years=p.get("years"),
        ))

    @app.get("/api/qaps")
    def api_qaps(request: Request) -> Response:
        p = request.query_params
        return _json(build_qaps(
            ctx,
            entry_id=p.get("id"),
            classical=p.get("classical"),
            quantum=p.get("quantum"),
            qubits=p.get("qubits"),
            loading=p.get("loading"),
            semantics=p.get("semantics"),
            c=p.get("C"),
            scenario=p.get("scenario"),
            provider=p.get("provider"),
            years=p.get("years"),
        ))

    @app.get("/api/roadmap")
    def api_roadmap(request: Request) -> Response:
        p = request.query_params
        return _json(build_roadmap(
            ctx,
            provider=p.get("provider"),
            year=p.get("year"),
            qubits=p.get("qubits"),
        ))

    @app.get("/api/catalog")
    def api_catalog(request: Request) -> Response:
        p = request.query_params
        return _json(build_catalog(
            ctx,
            c=p.get("C"),
            scenario=p.get("scenario"),
            fallback=p.get("fallback"),
            classify="classify" in p,
        ))

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount(
            "/", StaticFiles(directory=static_dir, html=True), name="static"
        )

    return app
