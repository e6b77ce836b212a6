"""Minimal SPARQL protocol endpoint over a dataset registry.

One endpoint path per dataset: ``/ds/{id}/sparql`` accepting GET with a
``query`` parameter or a form-encoded POST. Responses use the SPARQL
JSON results format; unsupported queries get a 400 with a plain-text
reason.
"""
from __future__ import annotations

import re
import socket
import threading
import time

import uvicorn
from fastapi import APIRouter, FastAPI, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import JSONResponse, PlainTextResponse

from ..registry import Registry
from . import evaluator
from .jsonresults import table_to_json

_LOOPBACK_SERVICE = re.compile(r"/ds/([^/]+)/sparql/?$")

RESULTS_MEDIA_TYPE = "application/sparql-results+json"


def _service_resolver(registry: Registry):
    def resolve(service_iri: str):
        m = _LOOPBACK_SERVICE.search(service_iri)
        if m and m.group(1) in registry:
            return registry.get(m.group(1))
        return None

    return resolve


def create_sparql_router(registry: Registry) -> APIRouter:
    router = APIRouter()
    resolver = _service_resolver(registry)

    async def _run(dataset_id: str, query: str | None):
        if dataset_id not in registry:
            return PlainTextResponse(f"unknown dataset {dataset_id!r}", status_code=404)
        if not query:
            return PlainTextResponse("missing 'query' parameter", status_code=400)
        try:
            # threadpool keeps slow evaluations from stalling the event loop
            table = await run_in_threadpool(evaluator.evaluate, query, registry.get(dataset_id), resolver)
        except evaluator.UnsupportedQueryError as err:
            return PlainTextResponse(f"unsupported query: {err}", status_code=400)
        return JSONResponse(table_to_json(table), media_type=RESULTS_MEDIA_TYPE)

    @router.get("/ds/{dataset_id}/sparql")
    async def sparql_get(dataset_id: str, query: str | None = None):
        return await _run(dataset_id, query)

    @router.post("/ds/{dataset_id}/sparql")
    async def sparql_post(dataset_id: str, request: Request):
        form = await request.form()
        return await _run(dataset_id, form.get("query"))

    return router


class EndpointServer:
    """A loop-back SPARQL endpoint running uvicorn in a daemon thread."""

    def __init__(self, registry: Registry, host: str = "127.0.0.1", port: int = 0):
        app = FastAPI()
        app.include_router(create_sparql_router(registry))
        self.app = app
        self._config = uvicorn.Config(app, host=host, port=port, log_level="warning")
        self._server = uvicorn.Server(self._config)
        self._thread: threading.Thread | None = None
        self.host = host
        self.port = port

    def start(self, timeout: float = 10.0) -> "EndpointServer":
        self._thread = threading.Thread(target=self._server.run, daemon=True)
        self._thread.start()
        deadline = time.monotonic() + timeout
        while not self._server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("endpoint server did not start in time")
            if not self._thread.is_alive():
                raise RuntimeError("endpoint server thread died during startup")
            time.sleep(0.01)
        for server in self._server.servers:
            for sock in server.sockets:
                if sock.family in (socket.AF_INET, socket.AF_INET6):
                    self.port = sock.getsockname()[1]
        return self

    def url(self, dataset_id: str) -> str:
        return f"http://{self.host}:{self.port}/ds/{dataset_id}/sparql"

    def stop(self) -> None:
        self._server.should_exit = True
        if self._thread is not None:
            self._thread.join(timeout=10)

    def __enter__(self) -> "EndpointServer":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()
