"""JSON-over-HTTP play service.

Sessions hold one game each: the human posts moves, the engine answers
in the same request.  The engine seat plays perfectly within its node
budget; when the budget runs out it plays the first legal move and
flags the reply as not perfect.  With engine_policy
"mirror-when-available" the seat plays the involution mirror for
families that have one, which answers most moves without any search.

Sessions live in memory; finished games can be appended to a JSONL
snapshot file.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI, HTTPException, Request

from . import closedforms, engine, families, symmetry
from .core import (DEFAULT_FACE_CAP, Complex, GameState, Move, apply_move,
                   complex_from_json)
from .errors import (ChompError, DisciplineBroken, FaceNotPresent,
                     InvalidSpec, ResourceExceeded, TooLarge)

ONGOING = "ongoing"
HUMAN_LOST = "human_lost"
ENGINE_LOST = "engine_lost"


@dataclass
class Session:
    id: str
    cx: Complex
    state: GameState
    spec_text: str | None
    human_first: bool
    policy: str
    status: str = ONGOING
    to_move: str = "human"
    moves: list[dict] = field(default_factory=list)
    mirror: symmetry.MirrorStrategy | None = None
    lock: threading.RLock = field(default_factory=threading.RLock)

    def record(self, by: str, move: Move, perfect: bool) -> dict:
        entry = {"by": by, "face": list(move.face), "perfect": perfect}
        self.moves.append(entry)
        return entry


class SessionStore:
    def __init__(self, snapshot_path: str | None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_path = snapshot_path

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id}")
        return session

    def remove(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise HTTPException(404, f"no session {session_id}")
            del self._sessions[session_id]

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._sessions)

    def snapshot(self, session: Session) -> None:
        if self._snapshot_path is None:
            return
        record = {
            "session": session.id,
            "spec": session.spec_text,
            "human_first": session.human_first,
            "engine_policy": session.policy,
            "status": session.status,
            "moves": session.moves,
        }
        with self._lock:
            with open(self._snapshot_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")


def _session_json(session: Session) -> dict[str, Any]:
    return {
        "id": session.id,
        "spec": session.spec_text,
        "vertices": list(session.cx.vertex_labels),
        "faces": [list(f) for f in session.cx.faces],
        "live_faces": [list(f) for f in session.state.faces()],
        "status": session.status,
        "to_move": session.to_move if session.status == ONGOING else None,
        "human_first": session.human_first,
        "engine_policy": session.policy,
        "mirror_active": session.mirror is not None,
        "moves": session.moves,
    }


def _first_legal_move(state: GameState) -> Move:
    return Move(state.faces()[0])


def _plain_engine_move(state: GameState, budget: int | None
                       ) -> tuple[Move, bool]:
    """(move, perfect) for the engine seat without a mirror."""
    try:
        mv = engine.best_move(state, node_budget=budget)
    except ResourceExceeded:
        engine.clear_if_full()
        return _first_legal_move(state), False
    if mv is None:
        # solved as lost: any move loses, so the first legal one is as
        # good as any other and still counts as informed play
        return _first_legal_move(state), True
    return mv, True


def create_app(snapshot_path: str | None = None,
               default_budget: int | None = None,
               face_cap: int = DEFAULT_FACE_CAP) -> FastAPI:
    app = FastAPI(title="graphchomp play service")
    store = SessionStore(snapshot_path)
    app.state.store = store
    app.state.default_budget = default_budget
    app.state.face_cap = face_cap

    def engine_reply(session: Session, pre: GameState,
                     human_move: Move | None) -> dict:
        """Compute and apply the engine's move; returns the move entry."""
        perfect = True
        mv: Move | None = None
        if session.mirror is not None:
            try:
                if human_move is None:
                    mv = session.mirror.opening_move()
                    if mv is None:
                        # fixed part solved as lost; the mirror has no
                        # opening, so play on without it
                        session.mirror = None
                else:
                    mv = session.mirror.reply(pre, human_move)
            except (ResourceExceeded, DisciplineBroken):
                engine.clear_if_full()
                session.mirror = None
                mv = None
        if mv is None:
            mv, perfect = _plain_engine_move(session.state,
                                             app.state.default_budget)
            if session.mirror is not None:
                # the mirror did not produce this move, so its tracked
                # position is stale from here on
                session.mirror = None
        session.state = apply_move(session.state, mv)
        entry = session.record("engine", mv, perfect)
        if session.state.is_terminal():
            session.status = HUMAN_LOST
            store.snapshot(session)
        else:
            session.to_move = "human"
        return entry

    @app.get("/")
    def index():
        return {
            "service": "graphchomp play service",
            "endpoints": [
                "POST /sessions", "GET /sessions", "GET /sessions/{id}",
                "POST /sessions/{id}/moves", "DELETE /sessions/{id}",
                "GET /nim?spec=...", "GET /families",
            ],
        }

    @app.get("/families")
    def list_families():
        return {"families": [
            {"pattern": pattern, "description": description}
            for pattern, description in families.SPEC_GRAMMAR]}

    @app.get("/nim")
    def nim_endpoint(spec: str):
        try:
            fam = families.parse_family_spec(spec)
        except InvalidSpec as exc:
            raise HTTPException(422, str(exc)) from None
        formula = closedforms.closed_form_for_spec(
            fam, node_budget=app.state.default_budget)
        if formula.nim is not None:
            return {"spec": spec, "nim": formula.nim,
                    "outcome": formula.outcome.value,
                    "provenance": formula.provenance, "method": "formula"}
        try:
            cx = fam.build(app.state.face_cap)
            value = engine.grundy(cx.state(),
                                  node_budget=app.state.default_budget)
        except (TooLarge, ResourceExceeded) as exc:
            engine.clear_if_full()
            if formula.outcome is not engine.Outcome.UNKNOWN:
                return {"spec": spec, "nim": None,
                        "outcome": formula.outcome.value,
                        "provenance": formula.provenance,
                        "method": "formula"}
            raise HTTPException(503, f"position out of reach: {exc}") \
                from None
        outcome = "B" if value == 0 else "A"
        return {"spec": spec, "nim": value, "outcome": outcome,
                "provenance": "engine", "method": "engine"}

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(422, "request body must be JSON") from None
        if not isinstance(body, dict):
            raise HTTPException(422, "request body must be a JSON object")
        spec_text = body.get("spec")
        complex_json = body.get("complex")
        human_first = body.get("human_first", True)
        policy = body.get("engine_policy", "perfect")
        if policy not in ("perfect", "mirror-when-available"):
            raise HTTPException(
                422, f"unknown engine_policy {policy!r}")
        if not isinstance(human_first, bool):
            raise HTTPException(422, "human_first must be a boolean")
        if (spec_text is None) == (complex_json is None):
            raise HTTPException(
                422, "provide exactly one of 'spec' and 'complex'")
        fam = None
        try:
            if spec_text is not None:
                if not isinstance(spec_text, str):
                    raise InvalidSpec("spec must be a string")
                fam = families.parse_family_spec(spec_text)
                cx = fam.build(app.state.face_cap)
            else:
                cx = complex_from_json(complex_json)
        except (InvalidSpec, TooLarge, ValueError, KeyError, TypeError) as exc:
            raise HTTPException(422, f"bad position: {exc}") from None
        if cx.face_count == 0:
            raise HTTPException(422, "the empty complex has no moves")
        session = Session(
            id=uuid.uuid4().hex[:12],
            cx=cx,
            state=cx.state(),
            spec_text=spec_text,
            human_first=human_first,
            policy=policy,
        )
        if policy == "mirror-when-available" and fam is not None:
            try:
                session.mirror = symmetry.family_mirror_strategy(
                    fam, cx, node_budget=app.state.default_budget)
            except (ResourceExceeded, ChompError):
                session.mirror = None
        store.add(session)
        engine_move = None
        with session.lock:
            if not human_first:
                session.to_move = "engine"
                engine_move = engine_reply(session, session.state, None)
        return {"session": _session_json(session),
                "engine_move": engine_move}

    @app.get("/sessions")
    def list_sessions():
        return {"sessions": store.ids()}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {"session": _session_json(session)}

    @app.delete("/sessions/{session_id}")
    def delete_session(session_id: str):
        store.remove(session_id)
        return {"deleted": session_id}

    @app.post("/sessions/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        session = store.get(session_id)
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(422, "request body must be JSON") from None
        if not isinstance(body, dict) or "face" not in body:
            raise HTTPException(422, "body must be {\"face\": [vertex ids]}")
        face = body["face"]
        if (not isinstance(face, list) or not face
                or not all(isinstance(v, int) and not isinstance(v, bool)
                           for v in face)):
            raise HTTPException(422, "face must be a nonempty list of "
                                     "vertex ids")
        with session.lock:
            if session.status != ONGOING:
                raise HTTPException(
                    409, f"game is over: {session.status}")
            if session.to_move != "human":
                raise HTTPException(409, "not the human's turn")
            try:
                mv = Move(tuple(face))
            except (ValueError, ChompError) as exc:
                raise HTTPException(422, f"bad face: {exc}") from None
            pre = session.state
            try:
                session.state = apply_move(pre, mv)
            except FaceNotPresent as exc:
                raise HTTPException(422, str(exc)) from None
            session.record("human", mv, True)
            engine_move = None
            if session.state.is_terminal():
                session.status = ENGINE_LOST
                store.snapshot(session)
            else:
                session.to_move = "engine"
                engine_move = engine_reply(session, pre, mv)
            return {"session": _session_json(session),
                    "engine_move": engine_move}

    return app
