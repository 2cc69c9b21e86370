"""Command line surface: play, analyze, solve, verify-paper, serve.

The CLI is a thin client over the core engine; `play` can also drive a
remote service with --server so the terminal and the HTTP API share one
implementation of the rules.  Games over the reals accept rational values
only (they are dense, and every strategy threshold is an open inequality).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import CoeffGameError, GameRuleError
from .game import (
    DomainKind,
    DomainSpec,
    GameConfig,
    Move,
    Player,
    finite_field_domain,
    new_game,
    record_dumps,
    record_to_json,
    replay_record,
    validate_and_apply,
    verdict,
)
from .numberfield import NumberField
from .poly import Poly, parse_rational
from .solver import report_json, report_text, solve_fq, verify_theorems
from .strategies import policy_move
from .verify import run_full_verification


def _build_domain(args) -> DomainSpec:
    data = {"type": args.domain}
    if args.domain == "z_inv_n":
        data["n"] = args.inv_n
    elif args.domain == "number_field":
        minpoly = [c.strip() for c in args.minpoly.split(",")]
        data["minpoly"] = minpoly
        data["subring"] = "integer_span" if args.integral else "field"
    elif args.domain == "finite_field":
        data["p"] = args.p
        data["k"] = args.k
    return DomainSpec.from_json(data)


def _parse_move_text(domain: DomainSpec, text: str) -> tuple:
    index_text, value_text = text.split("=", 1)
    index = int(index_text.strip())
    value_text = value_text.strip()
    if domain.kind in (DomainKind.NUMBER_FIELD, DomainKind.FINITE_FIELD):
        parts = [p.strip() for p in value_text.split(":")]
        value = domain.parse_value(parts)
    else:
        value = domain.parse_value(value_text)
    return index, value


def _print_state(state):
    domain = state.config.domain
    slots = []
    for i, v in enumerate(state.assigned):
        slots.append(f"a_{i}=" + (domain.encode_value(v).__repr__() if v is not None else "_"))
    print("  board:", "  ".join(slots))


def cmd_play(args) -> int:
    domain = _build_domain(args)
    config = GameConfig(domain, args.degree, Player(args.first))
    engine_sides = {
        "both": {Player.WANDA, Player.NORA},
        "wanda": {Player.WANDA},
        "nora": {Player.NORA},
        "none": set(),
    }[args.engine]
    scripted = []
    if args.moves:
        scripted = [m for m in args.moves.split(",") if m.strip()]
    if args.server:
        return _play_remote(args, config, engine_sides, scripted)
    state = new_game(config)
    print(f"domain {domain.describe()}, degree {config.degree}, player one {config.player_one}")
    while not state.is_complete:
        mover = state.turn
        if mover in engine_sides:
            decision = policy_move(state)
            state = validate_and_apply(state, decision.move)
            value_text = domain.encode_value(decision.move.value)
            print(f"{mover} [{decision.policy}] plays a_{decision.move.index} = {value_text}")
            print(f"  why: {decision.explanation}")
        elif scripted:
            index, value = _parse_move_text(domain, scripted.pop(0))
            state = validate_and_apply(state, Move(index, value))
            print(f"{mover} plays a_{index} = {domain.encode_value(value)}")
        else:
            _print_state(state)
            try:
                text = input(f"{mover} to move (index=value): ")
            except EOFError:
                print("no more input; aborting incomplete game")
                return 2
            try:
                index, value = _parse_move_text(domain, text)
                state = validate_and_apply(state, Move(index, value))
            except (ValueError, GameRuleError) as exc:
                print(f"rejected: {exc}")
                continue
    v = verdict(state)
    print(f"final polynomial: {state.final_poly().pretty()}")
    print(f"winner: {v.winner}")
    print(f"certificate: {v.certificate.kind}")
    if args.record:
        Path(args.record).write_text(record_dumps(record_to_json(state)))
        print(f"record written to {args.record}")
    return 0


def _play_remote(args, config: GameConfig, engine_sides, scripted) -> int:
    import httpx

    base = args.server.rstrip("/")
    with httpx.Client(base_url=base, timeout=30.0) as client:
        body = {
            "config": config.to_json(),
            "engine_sides": sorted(p.value for p in engine_sides),
        }
        created = client.post("/v1/games", json=body)
        created.raise_for_status()
        game_id = created.json()["id"]
        domain = config.domain
        state = created.json()["state"]
        while not state["complete"]:
            mover = state["turn"]
            if mover in body["engine_sides"]:
                reply = client.post(f"/v1/games/{game_id}/engine-move")
                reply.raise_for_status()
                payload = reply.json()
                print(
                    f"{mover} [{payload['policy']}] plays "
                    f"a_{payload['move']['index']} = {payload['move']['value']}"
                )
                state = payload["state"]
            elif scripted:
                index, value = _parse_move_text(domain, scripted.pop(0))
                reply = client.post(
                    f"/v1/games/{game_id}/moves",
                    json={"index": index, "value": domain.encode_value(value)},
                )
                if reply.status_code >= 400:
                    print(f"rejected: {reply.json()}")
                    return 1
                state = reply.json()
                print(f"{mover} plays a_{index} = {domain.encode_value(value)}")
            else:
                print("remote play needs --moves or --engine both")
                return 2
        v = client.get(f"/v1/games/{game_id}/verdict")
        v.raise_for_status()
        print(f"winner: {Player(v.json()['winner'])}")
        print(f"certificate: {v.json()['certificate']['kind']}")
    return 0


def cmd_analyze(args) -> int:
    record = json.loads(Path(args.record).read_text())
    state = replay_record(record)
    if not state.is_complete:
        print("record is incomplete; no verdict")
        return 1
    v = verdict(state)
    domain = state.config.domain
    print(f"final polynomial: {state.final_poly().pretty()}")
    print(f"winner: {v.winner}")
    cert = v.certificate
    print(f"certificate: {cert.kind}")
    if cert.kind == "candidates_exhausted":
        print(f"  {len(cert.candidates)} candidates exhausted")
    elif cert.kind == "root_witness":
        print(f"  root {domain.encode_value(cert.value)}")
    elif cert.kind == "sturm_count":
        print(f"  distinct real roots: {cert.distinct_real_roots}")
    if "verdict" in record:
        recorded = record["verdict"]
        derived = v.to_json(domain)
        if recorded != derived:
            print("MISMATCH: recorded verdict differs from the re-derived one")
            return 1
        print("recorded verdict matches the re-derived one")
    return 0


def cmd_solve(args) -> int:
    config = GameConfig(finite_field_domain(args.p, args.k), args.degree, Player(args.first))
    result = solve_fq(config)
    print(f"winner: {result.winner}")
    print(f"positions visited: {result.positions_visited}")
    if args.show_moves:
        from .solver import winning_moves

        state = new_game(config)
        wins = winning_moves(result, state)
        field = config.domain.field_q()
        pretty = [f"a_{i}={field.by_index(v).to_json()}" for i, v in wins]
        print("winning first moves:", ", ".join(pretty) if pretty else "none")
    return 0


def cmd_verify(args) -> int:
    qs = None
    ds = None
    if args.quick:
        qs = [(2, 1), (3, 1)]
        ds = [2, 3]
    report = run_full_verification(qs, ds)
    for check in report["reference_checks"]["checks"]:
        status = "PASS" if check["pass"] else "FAIL"
        print(f"{status} {check['name']}: {check['detail']}")
    table = report["winner_table"]
    print(report_text(table) if not args.json else report_json(table))
    print(f"verification {'PASSED' if report['all_pass'] else 'FAILED'}")
    return 0 if report["all_pass"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(persist_dir=args.persist_dir)
    if args.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=args.ui_dir, html=True), name="ui")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coeffgame",
        description="Play and analyze the coefficient-choosing game with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_domain_options(p):
        p.add_argument(
            "--domain",
            default="integers",
            choices=[
                "integers",
                "rationals",
                "z_inv_n",
                "number_field",
                "reals",
                "finite_field",
                "algebraically_closed",
            ],
        )
        p.add_argument("--inv-n", type=int, default=2, help="N for Z[1/N]")
        p.add_argument(
            "--minpoly",
            default="-2,0,1",
            help="integer coefficients of the defining polynomial, low degree first",
        )
        p.add_argument("--integral", action="store_true", help="restrict to integer coordinates")
        p.add_argument("--p", type=int, default=3)
        p.add_argument("--k", type=int, default=1)

    play = sub.add_parser("play", help="play a game (interactive, scripted or engine vs engine)")
    add_domain_options(play)
    play.add_argument("--degree", type=int, default=3)
    play.add_argument("--first", default="wanda", choices=["wanda", "nora"])
    play.add_argument("--engine", default="both", choices=["both", "wanda", "nora", "none"])
    play.add_argument("--moves", help="scripted moves, e.g. '2=-12,3=7,0=4,1=10000'")
    play.add_argument("--record", help="write the finished game record to this JSON file")
    play.add_argument("--server", help="drive a running service instead of the in-process engine")
    play.set_defaults(func=cmd_play)

    analyze = sub.add_parser("analyze", help="re-derive the verdict of a recorded game")
    analyze.add_argument("--record", required=True)
    analyze.set_defaults(func=cmd_analyze)

    solve = sub.add_parser("solve", help="perfect-play winner for a finite-field game")
    solve.add_argument("--p", type=int, required=True)
    solve.add_argument("--k", type=int, default=1)
    solve.add_argument("--d", dest="degree", type=int, required=True)
    solve.add_argument("--first", default="wanda", choices=["wanda", "nora"])
    solve.add_argument("--show-moves", action="store_true")
    solve.set_defaults(func=cmd_solve)

    verify_cmd = sub.add_parser(
        "verify-paper", help="golden transcripts plus the solved winner table"
    )
    verify_cmd.add_argument("--quick", action="store_true", help="small grid for smoke tests")
    verify_cmd.add_argument("--json", action="store_true")
    verify_cmd.set_defaults(func=cmd_verify)

    serve = sub.add_parser("serve", help="run the HTTP JSON API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8040)
    serve.add_argument("--persist-dir", help="write-through session persistence directory")
    serve.add_argument("--ui-dir", help="serve a built web client from this directory")
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CoeffGameError as exc:
        print(f"error [{getattr(exc, 'code', exc.__class__.__name__)}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
