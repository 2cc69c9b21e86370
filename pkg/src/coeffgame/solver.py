"""Exhaustive perfect-play solver for finite-field games.

Positions are coefficient assignments only (the verdict is history-free and
the mover follows from the assignment count), encoded as tuples of element
indices with -1 for open slots.  Minimax runs win-for-mover with early
cutoff over a shared memo table, so solving both seatings of the same
configuration reuses every entry.  The solver is the independent check of
the game's endgame structure: the winner table it produces is compared
against the predicted rule (last player wins, except degree 3 in
characteristic 3, where the root seeker wins regardless).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field

from .errors import SolverLimitError
from .finitefield import FqField
from .game import DomainKind, GameConfig, GameState, Move, Player

_MAX_Q = 9
_MAX_DEGREE = 4


def _field_tables(field: FqField):
    """Index-based add/mul tables so the search never touches element objects."""
    q = field.q
    elements = field.elements()
    add = [[(elements[a] + elements[b]).index for b in range(q)] for a in range(q)]
    mul = [[(elements[a] * elements[b]).index for b in range(q)] for a in range(q)]
    return add, mul


class _Search:
    def __init__(self, field: FqField, degree: int):
        self.field = field
        self.degree = degree
        self.add, self.mul = _field_tables(field)
        self.memo: dict = {}
        self.visited = 0

    def moves(self, assignment):
        q = self.field.q
        d = self.degree
        out = []
        for i, slot in enumerate(assignment):
            if slot != -1:
                continue
            start = 1 if i in (0, d) else 0
            for v in range(start, q):
                out.append((i, v))
        return out

    def leaf_root_exists(self, assignment) -> bool:
        add, mul = self.add, self.mul
        for b in range(self.field.q):
            acc = 0
            for c in reversed(assignment):
                acc = add[mul[acc][b]][c]
            if acc == 0:
                return True
        return False

    def mover_wins(self, assignment, mover_is_wanda: bool) -> bool:
        key = (assignment, mover_is_wanda)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self.visited += 1
        result = False
        for i, v in self.moves(assignment):
            child = list(assignment)
            child[i] = v
            child = tuple(child)
            if -1 in child:
                child_mover_wins = self.mover_wins(child, not mover_is_wanda)
                wins = not child_mover_wins
            else:
                root = self.leaf_root_exists(child)
                wins = root if mover_is_wanda else not root
            if wins:
                result = True
                break
        self.memo[key] = result
        return result


_SEARCH_CACHE: dict = {}


def _search_for(field: FqField, degree: int) -> _Search:
    key = (field.p, field.k, degree)
    if key not in _SEARCH_CACHE:
        _SEARCH_CACHE[key] = _Search(field, degree)
    return _SEARCH_CACHE[key]


def _state_count_bound(field: FqField, degree: int) -> int:
    bound = 2
    for i in range(degree + 1):
        options = field.q if 0 < i < degree else field.q - 1
        bound *= options + 1
    return bound


@dataclass
class SolveResult:
    config: GameConfig
    winner: Player
    positions_visited: int
    optimal_moves: dict = dataclass_field(default_factory=dict)
    _search: _Search = None

    def state_key(self, state: GameState):
        return tuple(v.index if v is not None else -1 for v in state.assigned)


def _guard(config: GameConfig) -> FqField:
    if config.domain.kind is not DomainKind.FINITE_FIELD:
        raise SolverLimitError("the exhaustive solver only covers finite fields")
    field = config.domain.field_q()
    if field.q > _MAX_Q or config.degree > _MAX_DEGREE:
        bound = _state_count_bound(field, config.degree)
        raise SolverLimitError(
            f"instance too large: q={field.q}, d={config.degree}, "
            f"state-count bound {bound}"
        )
    return field


def solve_fq(config: GameConfig) -> SolveResult:
    """Full minimax value of the configuration, with a reusable memo table."""
    config.validate()
    field = _guard(config)
    search = _search_for(field, config.degree)
    empty = (-1,) * (config.degree + 1)
    first_wins = search.mover_wins(empty, config.player_one is Player.WANDA)
    winner = config.player_one if first_wins else config.player_one.opponent
    result = SolveResult(
        config=config,
        winner=winner,
        positions_visited=search.visited,
        _search=search,
    )
    assert search.visited <= _state_count_bound(field, config.degree)
    return result


def winning_moves(result: SolveResult, state: GameState):
    """All moves from this position that keep the win for the mover."""
    search = result._search
    assignment = result.state_key(state)
    mover_is_wanda = state.turn is Player.WANDA
    wins = []
    for i, v in search.moves(assignment):
        child = list(assignment)
        child[i] = v
        child = tuple(child)
        if -1 in child:
            good = not search.mover_wins(child, not mover_is_wanda)
        else:
            root = search.leaf_root_exists(child)
            good = root if mover_is_wanda else not root
        if good:
            wins.append((i, v))
    result.optimal_moves[assignment] = tuple(wins)
    return wins


def best_move_fq(result: SolveResult, state: GameState) -> Move:
    """A winning move when one exists; otherwise the most resistant move.

    Lost positions return the smallest move leading to the child with the
    fewest winning replies for the opponent, so imperfect opponents keep the
    largest error surface.
    """
    if state.is_complete:
        raise SolverLimitError("game is over")
    field = result.config.domain.field_q()
    wins = winning_moves(result, state)
    if wins:
        i, v = min(wins)
        return Move(i, field.by_index(v))
    search = result._search
    assignment = result.state_key(state)
    mover_is_wanda = state.turn is Player.WANDA
    best = None
    for i, v in search.moves(assignment):
        child = list(assignment)
        child[i] = v
        child = tuple(child)
        if -1 in child:
            reply_wins = 0
            for j, w in search.moves(child):
                grand = list(child)
                grand[j] = w
                grand = tuple(grand)
                if -1 in grand:
                    good = not search.mover_wins(grand, mover_is_wanda)
                else:
                    root = search.leaf_root_exists(grand)
                    good = root if not mover_is_wanda else not root
                if good:
                    reply_wins += 1
        else:
            reply_wins = 0
        key = (reply_wins, i, v)
        if best is None or key < best:
            best = key
    _, i, v = best
    return Move(i, field.by_index(v))


def predicted_winner(p: int, degree: int, player_one: Player) -> Player:
    """The expected perfect-play winner for F_q games.

    Last player wins, except degree 3 in characteristic 3, where the root
    seeker wins from either seat.
    """
    if degree == 3 and p == 3:
        return Player.WANDA
    last = player_one if degree % 2 == 0 else player_one.opponent
    return last


def verify_theorems(q_list, d_list) -> dict:
    """Solve the whole (q, d, first player) grid and compare with the rule.

    Also checks that whenever the root seeker moves last she wins.
    """
    from .game import finite_field_domain

    rows = []
    all_pass = True
    for p, k in q_list:
        for d in d_list:
            for first in (Player.WANDA, Player.NORA):
                config = GameConfig(finite_field_domain(p, k), d, first)
                result = solve_fq(config)
                expected = predicted_winner(p, d, first)
                last = config.last_player
                lemma_ok = result.winner is Player.WANDA if last is Player.WANDA else True
                ok = result.winner is expected and lemma_ok
                all_pass = all_pass and ok
                rows.append(
                    {
                        "q": p**k,
                        "p": p,
                        "k": k,
                        "d": d,
                        "player_one": first.value,
                        "last_player": last.value,
                        "winner": result.winner.value,
                        "expected": expected.value,
                        "positions_visited": result.positions_visited,
                        "pass": ok,
                    }
                )
    return {"rows": rows, "all_pass": all_pass}


def report_text(report: dict) -> str:
    lines = ["q    d  first  last   winner  expected  result"]
    for row in report["rows"]:
        lines.append(
            f"{row['q']:<4} {row['d']:<2} {row['player_one']:<6} {row['last_player']:<6} "
            f"{row['winner']:<7} {row['expected']:<9} {'PASS' if row['pass'] else 'FAIL'}"
        )
    lines.append(f"total: {len(report['rows'])} rows, all_pass={report['all_pass']}")
    return "\n".join(lines)


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
