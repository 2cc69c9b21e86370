"""Built-in reference checks: golden game transcripts the engine must reproduce.

Two worked examples pin the engine end to end: the integer game whose
candidate list has twelve entries and ends in a no-root win, and the
quadratic-field search where the power scheme rejects 2 and 4 and accepts 8
with an irreducible norm.  Each check re-derives everything from scratch and
compares bit-exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .game import (
    GameConfig,
    Move,
    Player,
    integers,
    new_game,
    number_field_domain,
    validate_and_apply,
    verdict,
)
from .numberfield import NumberField, norm_polynomial, roots_in_K
from .poly import Poly, rational_root_candidates
from .qfactor import is_irreducible_over_Q
from .strategies import nora_last_move_numberfield
from .solver import verify_theorems

GOLDEN_CANDIDATES = frozenset(
    Fraction(s * n, d) for n in (1, 2, 4) for d in (1, 7) for s in (1, -1)
)

NORM_A1_2 = Poly([-16, -16, 44, -20, 11, -6, 1])
NORM_A1_8 = Poly([-16, -64, 104, -56, 23, -6, 1])
NORM_A1_4 = Poly([4, -4, 1]) * Poly([-4, -12, 3, -2, 1])  # squared linear times a quartic
SHIFTED_NORM_FACTOR = Poly([2, -4, 1])


def check_integer_game() -> dict:
    """Replay the four-move integer game; Nora wins over twelve candidates."""
    config = GameConfig(integers(), 3, Player.WANDA)
    state = new_game(config)
    for index, value in [(2, -12), (3, 7), (0, 4), (1, 10000)]:
        state = validate_and_apply(state, Move(index, Fraction(value)))
    v = verdict(state)
    candidates = rational_root_candidates(state.final_poly())
    ok = v.winner is Player.NORA and candidates == GOLDEN_CANDIDATES
    return {
        "name": "integer-game",
        "pass": ok,
        "detail": f"winner {v.winner}, {len(candidates)} candidates exhausted",
    }


def check_quadratic_field_search() -> dict:
    """Reproduce the power-scheme search over Z[sqrt(2)] bit-exactly."""
    field = NumberField(Poly([-2, 0, 1]))
    r2 = field.gen
    one = field.one

    def poly_with(a1) -> Poly:
        return Poly([-4 * (one + r2), field.from_rational(a1), r2 - 3, one])

    checks = []
    # a_1 = 2: known norm, known factor, root 1 + sqrt(2).
    norm2 = norm_polynomial(field, poly_with(2))
    roots2, tr2 = roots_in_K(field, poly_with(2))
    root_1_sqrt2 = field.element([1, 1])
    checks.append(norm2 == NORM_A1_2)
    checks.append(any(f == Poly([-1, -2, 1]) for f, _ in tr2.norm_factors.factors))
    checks.append(root_1_sqrt2 in roots2)
    # a_1 = 4: norm contains a squared linear factor; the shift moves to k=1.
    norm4 = norm_polynomial(field, poly_with(4))
    roots4, tr4 = roots_in_K(field, poly_with(4))
    shifted_expected = Poly(
        [
            field.element([-10, -8]),
            field.element([6, 6]),
            field.element([-3, -2]),
            one,
        ]
    )
    checks.append(norm4 == NORM_A1_4)
    checks.append(tr4.shift == 1)
    checks.append(tr4.shifted == shifted_expected)
    checks.append(any(f == SHIFTED_NORM_FACTOR for f, _ in tr4.norm_factors.factors))
    checks.append(field.from_rational(2) in roots4)
    # a_1 = 8: irreducible norm, no roots.
    norm8 = norm_polynomial(field, poly_with(8))
    roots8, _ = roots_in_K(field, poly_with(8))
    checks.append(norm8 == NORM_A1_8)
    checks.append(is_irreducible_over_Q(norm8))
    checks.append(not roots8)
    # The search itself must try 2 and 4, then accept 8.
    domain = number_field_domain(field, integral=True)
    config = GameConfig(domain, 3, Player.WANDA)
    state = new_game(config)
    for index, value in [(3, one), (2, r2 - 3), (0, -4 * (one + r2))]:
        state = validate_and_apply(state, Move(index, value))
    decision = nora_last_move_numberfield(state)
    checks.append(decision.move.index == 1)
    checks.append(decision.move.value == field.from_rational(8))
    ok = all(checks)
    return {
        "name": "quadratic-field-search",
        "pass": ok,
        "detail": "a1=8 accepted, norm irreducible" if ok else f"failed steps: {checks}",
    }


def run_reference_checks() -> dict:
    checks = [check_integer_game(), check_quadratic_field_search()]
    return {"checks": checks, "all_pass": all(c["pass"] for c in checks)}


def run_full_verification(qs=None, ds=None) -> dict:
    """Reference checks plus the solved winner table; the CLI's verify gate."""
    checks = run_reference_checks()
    qs = qs if qs is not None else [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]
    ds = ds if ds is not None else [2, 3, 4]
    table = verify_theorems(qs, ds)
    return {
        "reference_checks": checks,
        "winner_table": table,
        "all_pass": checks["all_pass"] and table["all_pass"],
    }
