"""FastAPI application exposing the game engine under /v1.

Rule violations surface as 4xx responses whose body carries the stable
machine-readable code (ZeroForbidden, IndexTaken, NotInDomain, GameOver);
unknown sessions and verdicts requested before completion are 404s.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse

from ..errors import (
    GameOverError,
    GameRuleError,
    IncompleteGameError,
    IndexTakenError,
    InvalidConfigError,
)
from ..game import (
    GameConfig,
    GameState,
    Move,
    Player,
    new_game,
    validate_and_apply,
    verdict,
)
from ..solver import report_text, verify_theorems
from ..verify import run_reference_checks
from .schemas import (
    ConfigModel,
    CreateGameRequest,
    CreateGameResponse,
    EngineMoveResponse,
    MoveModel,
    MoveRequest,
    StateModel,
    VerdictModel,
)
from .store import Session, SessionStore

_STATUS = {
    "ZeroForbidden": 400,
    "NotInDomain": 400,
    "InvalidConfig": 400,
    "IndexTaken": 409,
    "GameOver": 409,
    "IncompleteGame": 404,
}


def _error(exc: GameRuleError) -> JSONResponse:
    return JSONResponse(
        status_code=_STATUS.get(exc.code, 400),
        content={"code": exc.code, "detail": str(exc)},
    )


def _state_model(session: Session) -> StateModel:
    state = session.state
    domain = state.config.domain
    return StateModel(
        id=session.id,
        config=ConfigModel.model_validate(state.config.to_json()),
        domain_description=domain.describe(),
        assigned=[domain.encode_value(v) if v is not None else None for v in state.assigned],
        turn=state.turn.value,
        moves=[MoveModel.model_validate(m.to_json(domain)) for m in state.history],
        complete=state.is_complete,
        engine_sides=list(session.engine_sides),
    )


def create_app(persist_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="coeffgame", version="0.1.0")
    store = SessionStore(persist_dir)
    app.state.store = store

    @app.exception_handler(GameRuleError)
    async def handle_rule_error(request, exc: GameRuleError):
        return _error(exc)

    def _get_session(game_id: str) -> Session:
        session = store.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail={"code": "UnknownSession"})
        return session

    @app.post("/v1/games", response_model=CreateGameResponse)
    def create_game(request: CreateGameRequest):
        config = GameConfig.from_json(request.config.model_dump(exclude_none=True))
        state = new_game(config)
        session = store.create(state, request.engine_sides)
        return CreateGameResponse(id=session.id, state=_state_model(session))

    @app.get("/v1/games/{game_id}", response_model=StateModel)
    def get_game(game_id: str):
        return _state_model(_get_session(game_id))

    @app.post("/v1/games/{game_id}/moves", response_model=StateModel)
    def post_move(game_id: str, request: MoveRequest):
        session = _get_session(game_id)
        with session.lock:
            domain = session.state.config.domain
            try:
                value = domain.parse_value(request.value)
            except (ValueError, TypeError) as exc:
                return JSONResponse(
                    status_code=400, content={"code": "BadValue", "detail": str(exc)}
                )
            move = Move(index=request.index, value=value)
            new_state = validate_and_apply(session.state, move)
            store.update(session, new_state)
        return _state_model(session)

    @app.post("/v1/games/{game_id}/engine-move", response_model=EngineMoveResponse)
    def engine_move(game_id: str, use_solver: bool = Query(default=False)):
        from ..strategies import policy_move

        session = _get_session(game_id)
        with session.lock:
            state = session.state
            if state.is_complete:
                raise GameOverError("game is over")
            mover = state.turn.value
            if session.engine_sides and mover not in session.engine_sides:
                return JSONResponse(
                    status_code=409,
                    content={"code": "NotEngineTurn", "detail": f"{mover} is not engine-played"},
                )
            if use_solver:
                from ..errors import SolverLimitError
                from ..solver import best_move_fq, solve_fq

                try:
                    result = solve_fq(state.config)
                except SolverLimitError as exc:
                    return JSONResponse(
                        status_code=400, content={"code": "SolverLimit", "detail": str(exc)}
                    )
                move = best_move_fq(result, state)
                policy, explanation = "solver", "table lookup from the solved game tree"
            else:
                decision = policy_move(state)
                move, policy, explanation = decision.move, decision.policy, decision.explanation
            new_state = validate_and_apply(state, move)
            store.update(session, new_state)
            wire_move = MoveModel.model_validate(move.to_json(state.config.domain))
        return EngineMoveResponse(
            move=wire_move, policy=policy, explanation=explanation, state=_state_model(session)
        )

    @app.get("/v1/games/{game_id}/verdict", response_model=VerdictModel)
    def get_verdict(game_id: str):
        session = _get_session(game_id)
        state = session.state
        if not state.is_complete:
            raise IncompleteGameError("verdict is only defined once all coefficients are set")
        v = verdict(state)
        return VerdictModel.model_validate(v.to_json(state.config.domain))

    @app.get("/v1/verify")
    def verify(small: bool = Query(default=False)):
        checks = run_reference_checks()
        qs = [(2, 1), (3, 1)] if small else [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]
        ds = [2, 3] if small else [2, 3, 4]
        table = verify_theorems(qs, ds)
        ok = checks["all_pass"] and table["all_pass"]
        return {
            "all_pass": ok,
            "reference_checks": checks,
            "winner_table": table,
            "winner_table_text": report_text(table),
        }

    return app
