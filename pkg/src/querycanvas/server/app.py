"""HTTP service exposing the full pipeline to the web UI.

Endpoints hold per-session state: connect binds an adapter and eagerly
fetches metadata, translate stores the current query, pattern mining runs as
a single pollable background job per session, and execute produces a result
set plus a layout, both kept for later retrieval. Library errors map onto
status codes through their stable error codes and keep their document shape
on the wire.
"""

from __future__ import annotations

import threading
import time

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..errors import EmptyQueryError, JobInProgressError, QuerycanvasError
from ..graph_core import PropertyGraph, graph_from_document
from ..layout import layout
from ..partitioner import partition
from ..pattern_miner import mine
from ..query_handler import EmbeddedSpec, RemoteSpec, connect
from ..query_model import QueryGraph
from ..translator import translate
from .sessions import NotFoundError, SessionState, SessionStore

_STATUS_FOR_CODE = {
    "authentication": 401,
    "network": 502,
    "capability": 502,
    "remote-query": 502,
    "timeout": 504,
    "job-in-progress": 409,
    "not-found": 404,
}


class EmbeddedBody(BaseModel):
    graph: dict


class RemoteBody(BaseModel):
    endpoint: str
    user: str
    password: str
    database: str = "neo4j"
    timeout: float = 30.0


class ConnectBody(BaseModel):
    session: str | None = None
    embedded: EmbeddedBody | None = None
    remote: RemoteBody | None = None


class PatternsBody(BaseModel):
    k: int
    alpha: float = 0.5
    tau_max: int = 3
    target_part_size: int = 30
    seed: int = 0


class TranslateBody(BaseModel):
    query: dict
    node_isomorphism: bool = True
    eliminate: bool = True


def _run_mining(state: SessionState, job: dict, body: PatternsBody) -> None:
    try:
        store = state.adapter.export_store()
        parts = partition(store, target_part_size=body.target_part_size, seed=body.seed)
        patterns = mine(parts, k=body.k, alpha=body.alpha, tau_max=body.tau_max)
    except QuerycanvasError as exc:
        job.update(status="failed", error=exc.to_document())
    except Exception as exc:  # keep the session usable after an unexpected failure
        job.update(status="failed", error={"error": {"code": "error", "message": str(exc)}})
    else:
        state.patterns = patterns
        job.update(status="done")


def create_app(session_ttl: float = 3600.0, clock=time.monotonic) -> FastAPI:
    app = FastAPI(title="querycanvas")
    # the browser frontend is served as static files from another origin;
    # the API is read-only, so a permissive policy is fine
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions = SessionStore(ttl=session_ttl, clock=clock)
    app.state.sessions = sessions

    @app.exception_handler(QuerycanvasError)
    def on_library_error(request, exc: QuerycanvasError):
        return JSONResponse(
            status_code=_STATUS_FOR_CODE.get(exc.code, 400), content=exc.to_document()
        )

    @app.exception_handler(ValueError)
    def on_value_error(request, exc: ValueError):
        return JSONResponse(
            status_code=400, content={"error": {"code": "validation", "message": str(exc)}}
        )

    @app.exception_handler(RequestValidationError)
    def on_request_error(request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"error": {"code": "validation", "message": str(exc)}}
        )

    @app.post("/sessions")
    def connect_session(body: ConnectBody):
        if (body.embedded is None) == (body.remote is None):
            raise ValueError("provide exactly one of 'embedded' or 'remote'")
        if body.embedded is not None:
            spec = EmbeddedSpec(graph_from_document(body.embedded.graph))
        else:
            spec = RemoteSpec(**body.remote.model_dump())
        adapter = connect(spec)
        try:
            metadata = adapter.fetch_metadata()
            if body.session is not None:
                state = sessions.replace_adapter(body.session, adapter, metadata)
            else:
                state = sessions.create(adapter, metadata)
        except Exception:
            adapter.close()
            raise
        return {"session": state.id, "metadata": metadata.to_document()}

    @app.get("/sessions/{session_id}/metadata")
    def get_metadata(session_id: str):
        state = sessions.get(session_id)
        return {"metadata": state.metadata.to_document()}

    @app.post("/sessions/{session_id}/patterns", status_code=202)
    def start_patterns(session_id: str, body: PatternsBody):
        state = sessions.get(session_id)
        if state.job is not None and state.job.get("status") == "running":
            raise JobInProgressError("pattern mining is already running for this session")
        # mirror the library's own argument checks so bad input fails the
        # request instead of the background job
        if body.k < 1:
            raise ValueError("k must be at least 1")
        if not 0.0 <= body.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if body.tau_max < 1:
            raise ValueError("tau_max must be at least 1")
        if body.target_part_size < 2:
            raise ValueError("target_part_size must be at least 2")
        job = {"status": "running"}
        state.job = job
        threading.Thread(target=_run_mining, args=(state, job, body), daemon=True).start()
        return {"status": "running"}

    @app.get("/sessions/{session_id}/patterns")
    def poll_patterns(session_id: str):
        state = sessions.get(session_id)
        if state.job is None:
            return {"status": "none"}
        if state.job["status"] == "done":
            return {"status": "done", "patterns": state.patterns.to_document()}
        if state.job["status"] == "failed":
            return {"status": "failed", "error": state.job["error"]}
        return {"status": "running"}

    @app.post("/sessions/{session_id}/translate")
    def translate_query(session_id: str, body: TranslateBody):
        state = sessions.get(session_id)
        query = QueryGraph.from_document(body.query)
        state.query = query  # mirror the canvas even when translation refuses
        text = translate(
            query, node_isomorphism=body.node_isomorphism, eliminate=body.eliminate
        )
        return {"text": text.text, "var_map": dict(text.var_map)}

    @app.post("/sessions/{session_id}/execute")
    def execute_query(session_id: str):
        state = sessions.get(session_id)
        if state.query is None or not state.query.qnodes:
            raise EmptyQueryError("session has no query to execute")
        if not state.execute_gate.acquire(blocking=False):
            raise JobInProgressError("an execute is already running for this session")
        try:
            result = state.adapter.execute(state.query)
            result_graph = PropertyGraph(
                result.distinct_nodes.values(), result.distinct_rels.values()
            )
            placed = layout(result_graph)
            state.last_result = result
            state.last_layout = placed
            return {"result": result.to_document(), "layout": placed.to_document()}
        finally:
            state.execute_gate.release()

    @app.get("/sessions/{session_id}/result")
    def get_result(session_id: str):
        state = sessions.get(session_id)
        if state.last_result is None:
            raise NotFoundError("session has no stored result")
        return {
            "result": state.last_result.to_document(),
            "layout": state.last_layout.to_document(),
        }

    return app
