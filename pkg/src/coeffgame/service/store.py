"""Session store: live games keyed by id, with optional JSON persistence.

Mutations on one session are serialized by a per-session lock; distinct
sessions never share state.  With a persistence directory every mutation is
written through as the canonical game record plus the session metadata, and
unknown ids are recovered from disk on access.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..game import GameState, record_dumps, record_to_json, replay_record


@dataclass
class Session:
    id: str
    state: GameState
    engine_sides: tuple
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, persist_dir: Optional[str] = None):
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        self.persist_dir = Path(persist_dir) if persist_dir else None
        if self.persist_dir:
            self.persist_dir.mkdir(parents=True, exist_ok=True)

    def create(self, state: GameState, engine_sides) -> Session:
        session = Session(id=uuid.uuid4().hex, state=state, engine_sides=tuple(engine_sides))
        with self._registry_lock:
            self._sessions[session.id] = session
        self._persist(session)
        return session

    def get(self, session_id: str) -> Optional[Session]:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None and self.persist_dir:
            session = self._load(session_id)
            if session is not None:
                with self._registry_lock:
                    session = self._sessions.setdefault(session_id, session)
        return session

    def update(self, session: Session, state: GameState):
        session.state = state
        self._persist(session)

    def _path(self, session_id: str) -> Path:
        return self.persist_dir / f"{session_id}.json"

    def _persist(self, session: Session):
        if not self.persist_dir:
            return
        payload = {
            "id": session.id,
            "engine_sides": list(session.engine_sides),
            "record": record_to_json(session.state, include_verdict=False),
        }
        self._path(session.id).write_text(record_dumps(payload))

    def _load(self, session_id: str) -> Optional[Session]:
        path = self._path(session_id)
        if not path.exists():
            return None
        payload = json.loads(path.read_text())
        state = replay_record(payload["record"])
        return Session(
            id=payload["id"],
            state=state,
            engine_sides=tuple(payload.get("engine_sides", ())),
        )
