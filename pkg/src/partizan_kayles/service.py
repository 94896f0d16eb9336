"""HTTP JSON API for human-vs-engine play.

Boards are concrete rows of cells; the game-theoretic position is the
multiset of maximal empty runs.  The engine replies inside the same request
that applied the human's placement, so the client never polls.
"""

from __future__ import annotations

import json
import logging
import threading
import time
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .algebra import fast_outcome, monoid_value
from .core import Player, Position
from .strategy import best_move, winning_moves

log = logging.getLogger(__name__)

MAX_ROWS = 16
MAX_ROW_LENGTH = 60

EMPTY, LEFT_PIECE, RIGHT_PIECE = ".", "L", "R"

SNAPSHOT_VERSION = 1


class ServiceError(Exception):
    def __init__(self, status_code: int, detail: str):
        super().__init__(detail)
        self.status_code = status_code
        self.detail = detail


@dataclass
class Placement:
    player: Player
    row: int
    cell: int

    def to_dict(self) -> dict:
        return {"player": self.player.value, "row": self.row, "cell": self.cell}


def empty_runs(rows: list[str]) -> list[tuple[int, int, int]]:
    """Maximal empty runs as (row, start, length), row-major order."""
    out = []
    for r, row in enumerate(rows):
        start = None
        for c, ch in enumerate(row + "#"):  # sentinel closes a trailing run
            if ch == EMPTY:
                if start is None:
                    start = c
            elif start is not None:
                out.append((r, start, c - start))
                start = None
    return out


def projection(rows: list[str]) -> Position:
    """The abstract kayles position of a board."""
    return Position(tuple(length for _, _, length in empty_runs(rows)))


def has_move(rows: list[str], who: Player) -> bool:
    if who is Player.LEFT:
        return any(EMPTY in row for row in rows)
    return any(EMPTY * 2 in row for row in rows)


@dataclass
class GameSession:
    id: str
    rows: list[str]
    human: Player
    engine: Player
    to_move: Player
    history: list[Placement] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)

    @property
    def finished(self) -> bool:
        # Misère: the player who cannot place wins (the opponent moved last).
        return not has_move(self.rows, self.to_move)

    @property
    def winner(self) -> Player | None:
        return self.to_move if self.finished else None

    def view(self) -> dict:
        return {
            "id": self.id,
            "board": list(self.rows),
            "toMove": self.to_move.value,
            "status": "finished" if self.finished else "in-progress",
            "winner": self.winner.value if self.winner else None,
            "human": self.human.value,
            "engine": self.engine.value,
            "history": [p.to_dict() for p in self.history],
            "created": self.created,
            "updated": self.updated,
        }

    def to_snapshot(self) -> dict:
        return {
            "id": self.id,
            "rows": list(self.rows),
            "human": self.human.value,
            "engine": self.engine.value,
            "toMove": self.to_move.value,
            "history": [p.to_dict() for p in self.history],
            "created": self.created,
            "updated": self.updated,
        }

    @classmethod
    def from_snapshot(cls, d: dict) -> "GameSession":
        return cls(
            id=d["id"],
            rows=list(d["rows"]),
            human=Player(d["human"]),
            engine=Player(d["engine"]),
            to_move=Player(d["toMove"]),
            history=[
                Placement(Player(h["player"]), h["row"], h["cell"]) for h in d["history"]
            ],
            created=d["created"],
            updated=d["updated"],
        )


class GameStore:
    """In-memory session store; one lock serializes all mutations."""

    def __init__(self):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def get(self, session_id: str) -> GameSession:
        s = self._sessions.get(session_id)
        if s is None:
            raise ServiceError(404, f"unknown session {session_id}")
        return s

    def create_game(self, rows: list[int], human: Player, first: Player) -> tuple[
        GameSession, list[Placement]
    ]:
        if not 1 <= len(rows) <= MAX_ROWS:
            raise ServiceError(422, f"need between 1 and {MAX_ROWS} rows")
        for n in rows:
            if not 1 <= n <= MAX_ROW_LENGTH:
                raise ServiceError(422, f"row length {n} out of range 1..{MAX_ROW_LENGTH}")
        session = GameSession(
            id=uuid.uuid4().hex,
            rows=[EMPTY * n for n in rows],
            human=human,
            engine=human.opponent,
            to_move=first,
        )
        applied: list[Placement] = []
        with self._lock:
            if first == session.engine and not session.finished:
                applied.append(self._engine_reply(session))
            self._sessions[session.id] = session
        return session, applied

    def apply_placement(self, session_id: str, pl: Placement) -> tuple[
        GameSession, list[Placement]
    ]:
        with self._lock:
            s = self.get(session_id)
            if s.finished:
                raise ServiceError(409, "game is finished")
            if pl.player != s.to_move:
                raise ServiceError(409, f"it is {s.to_move.value}'s turn")
            self._place(s, pl)
            applied = [pl]
            if not s.finished and s.to_move == s.engine:
                applied.append(self._engine_reply(s))
            return s, applied

    def engine_move(self, session_id: str) -> tuple[GameSession, list[Placement]]:
        with self._lock:
            s = self.get(session_id)
            if s.finished:
                raise ServiceError(409, "game is finished")
            if s.to_move != s.engine:
                raise ServiceError(409, "it is not the engine's turn")
            return s, [self._engine_reply(s)]

    def analysis(self, session_id: str) -> dict:
        with self._lock:
            s = self.get(session_id)
            pos = projection(s.rows)
            entries = []
            if not s.finished:
                entries = self._cell_moves(s.rows, s.to_move)
            return {
                "position": str(pos),
                "value": monoid_value(pos),
                "outcome": fast_outcome(pos).value,
                "toMove": s.to_move.value,
                "status": "finished" if s.finished else "in-progress",
                "winner": s.winner.value if s.winner else None,
                "moves": entries,
            }

    def _cell_moves(self, rows: list[str], who: Player) -> list[dict]:
        # Only the resulting multiset matters, so annotate each concrete cell
        # by splitting any component of the run's length.
        pos = projection(rows)
        by_result = {a.result: a for a in winning_moves(pos, who)}
        span = who.piece_size
        out = []
        for r, start, length in empty_runs(rows):
            idx = pos.components.index(length)
            for off in range(length - span + 1):
                result = pos.replacing(idx, (off, length - span - off))
                verdict = by_result[result]
                out.append(
                    {
                        "row": r,
                        "cell": start + off,
                        "player": who.value,
                        "resultOutcome": verdict.outcome.value,
                        "winning": verdict.winning,
                    }
                )
        return out

    def _place(self, s: GameSession, pl: Placement) -> None:
        if not 0 <= pl.row < len(s.rows):
            raise ServiceError(409, f"no row {pl.row}")
        row = s.rows[pl.row]
        span = pl.player.piece_size
        if pl.cell < 0 or pl.cell + span > len(row):
            raise ServiceError(409, f"cells out of range at {pl.cell}")
        if any(row[pl.cell + i] != EMPTY for i in range(span)):
            raise ServiceError(409, f"cell occupied at {pl.cell}")
        piece = LEFT_PIECE if pl.player is Player.LEFT else RIGHT_PIECE * 2
        s.rows[pl.row] = row[: pl.cell] + piece + row[pl.cell + span:]
        s.history.append(pl)
        s.to_move = pl.player.opponent
        s.updated = time.time()

    def _engine_reply(self, s: GameSession) -> Placement:
        pos = projection(s.rows)
        advice = best_move(pos, s.engine)
        if advice.move is None:
            raise ServiceError(500, "engine has no move in an unfinished game")
        length = pos.components[advice.move.component_index]
        # leftmost maximal empty run of the chosen length, row-major
        for r, start, run_len in empty_runs(s.rows):
            if run_len == length:
                pl = Placement(s.engine, r, start + advice.move.offset)
                self._place(s, pl)
                return pl
        raise ServiceError(500, "projection out of sync with board")

    def snapshot(self, path: str) -> None:
        with self._lock:
            data = {
                "v": SNAPSHOT_VERSION,
                "sessions": {sid: s.to_snapshot() for sid, s in self._sessions.items()},
            }
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f)

    def restore(self, path: str) -> None:
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
            if data.get("v") != SNAPSHOT_VERSION:
                raise ValueError(f"unsupported snapshot version {data.get('v')!r}")
            sessions = {
                sid: GameSession.from_snapshot(d) for sid, d in data["sessions"].items()
            }
        except FileNotFoundError:
            return
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as e:
            log.warning("ignoring corrupt snapshot %s: %s", path, e)
            return
        with self._lock:
            self._sessions = sessions


class CreateGameBody(BaseModel):
    rows: list[int]
    human: str = Field(pattern="^[LR]$")
    first: str = Field(pattern="^[LR]$")


class PlacementBody(BaseModel):
    player: str = Field(pattern="^[LR]$")
    row: int
    cell: int


def _move_response(session: GameSession, applied: list[Placement]) -> dict:
    return {
        "applied": [p.to_dict() for p in applied],
        "board": list(session.rows),
        "toMove": session.to_move.value,
        "status": "finished" if session.finished else "in-progress",
        "winner": session.winner.value if session.winner else None,
    }


def create_app(store: GameStore | None = None, snapshot_path: str | None = None) -> FastAPI:
    store = store or GameStore()
    if snapshot_path:
        store.restore(snapshot_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        if snapshot_path:
            store.snapshot(snapshot_path)

    app = FastAPI(title="partizan kayles", lifespan=lifespan)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(request, exc: ServiceError):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=exc.status_code, content={"detail": exc.detail})

    @app.post("/games", status_code=201)
    def create_game(body: CreateGameBody):
        session, applied = store.create_game(
            body.rows, Player(body.human), Player(body.first)
        )
        view = session.view()
        view["applied"] = [p.to_dict() for p in applied]
        return view

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        return store.get(session_id).view()

    @app.post("/games/{session_id}/placements")
    def post_placement(session_id: str, body: PlacementBody):
        session, applied = store.apply_placement(
            session_id, Placement(Player(body.player), body.row, body.cell)
        )
        return _move_response(session, applied)

    @app.post("/games/{session_id}/engine-move")
    def post_engine_move(session_id: str):
        session, applied = store.engine_move(session_id)
        return _move_response(session, applied)

    @app.get("/games/{session_id}/analysis")
    def get_analysis(session_id: str):
        return store.analysis(session_id)

    return app
