"""HTTP session service.

Session-scoped endpoints over the engine; one mutation at a time per session
(a per-session lock), reads serve plain snapshots.  Engine refusals surface
as JSON bodies carrying the stable error code, so clients never parse
messages.
"""
from __future__ import annotations

import threading
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from .errors import PathLogicError
from .session import Session, import_file

# engine refusals that mean "try something else", not "bad request"
STATUS_BY_CODE = {
    "SessionBusy": 409,
    "NotPending": 409,
    "UnknownIndex": 404,
}


class SessionBody(BaseModel):
    mode: str
    auto: bool = False


class InputBody(BaseModel):
    text: str


class ChoiceBody(BaseModel):
    indexes: list[int] = Field(default_factory=list)


class SessionStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}

    def create(self, mode: str, auto: bool) -> Session:
        s = Session.new(mode, auto=auto)
        with self._lock:
            self._sessions[s.id] = s
            self._locks[s.id] = threading.Lock()
        return s

    def replace(self, session_id: str, doc: dict) -> Session:
        s = import_file(doc, session_id=session_id)
        with self._lock:
            self._sessions[session_id] = s
            self._locks.setdefault(session_id, threading.Lock())
        return s

    def get(self, session_id: str) -> tuple[Session, threading.Lock]:
        with self._lock:
            s = self._sessions.get(session_id)
            if s is None:
                raise LookupError(session_id)
            return s, self._locks[session_id]


def session_info(s: Session) -> dict:
    return {"id": s.id, "mode": s.mode, "auto": s.auto,
            "pending": s.pending_wire()}


def create_app() -> FastAPI:
    app = FastAPI(title="pathlogic session service")
    # the web console is served as static files from wherever; no credentials
    # are involved, so a wide-open policy is fine
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store = SessionStore()
    app.state.store = store

    @app.exception_handler(PathLogicError)
    async def engine_error(request: Request, err: PathLogicError):
        return JSONResponse(status_code=STATUS_BY_CODE.get(err.code, 400),
                            content=err.to_dict())

    @app.exception_handler(LookupError)
    async def no_session(request: Request, err: LookupError):
        return JSONResponse(status_code=404,
                            content={"code": "UnknownSession",
                                     "message": f"no session {err.args[0]}"})

    @app.post("/sessions", status_code=201)
    def create_session(body: SessionBody):
        return session_info(store.create(body.mode, body.auto))

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        s, _ = store.get(session_id)
        return session_info(s)

    @app.post("/sessions/{session_id}/inputs")
    def submit_input(session_id: str, body: InputBody):
        s, lock = store.get(session_id)
        with lock:
            report = s.submit_input(body.text)
        return {"report": report.steps, "pending": s.pending_wire()}

    @app.post("/sessions/{session_id}/choice")
    def resolve_choice(session_id: str, body: ChoiceBody):
        s, lock = store.get(session_id)
        with lock:
            report = s.resolve_choice(body.indexes)
        return {"report": report.steps, "pending": s.pending_wire()}

    @app.get("/sessions/{session_id}/pending")
    def get_pending(session_id: str):
        s, _ = store.get(session_id)
        return {"pending": s.pending_wire()}

    @app.get("/sessions/{session_id}/beliefs")
    def get_beliefs(session_id: str, active: bool = True):
        s, _ = store.get(session_id)
        return {"beliefs": s.beliefs_wire(active_only=active)}

    @app.get("/sessions/{session_id}/graph")
    def get_graph(session_id: str, format: Optional[str] = None):
        s, _ = store.get(session_id)
        if format == "dot":
            return PlainTextResponse(s.graph_dot())
        return s.graph_snapshot()

    @app.get("/sessions/{session_id}/query")
    def query(session_id: str, cats: str = "", op: str = "or"):
        s, _ = store.get(session_id)
        names = [c.strip() for c in cats.split(",") if c.strip()]
        return {"members": s.query_members(names, op)}

    @app.get("/sessions/{session_id}/file")
    def export_file(session_id: str):
        s, _ = store.get(session_id)
        return s.export_file()

    @app.put("/sessions/{session_id}/file")
    def put_file(session_id: str, doc: dict):
        s = store.replace(session_id, doc)
        return session_info(s)

    return app


app = create_app()
