"""Policy moves: frozen example values plus smoke-sized soundness sweeps.

The full randomized sweeps (1000 games per line) live in the acceptance
suite; these tests keep each policy honest on its pinned examples and on a
smaller random sample for quick feedback.
"""

import random
from fractions import Fraction

import pytest

from coeffgame.errors import PolicyError
from coeffgame.game import (
    GameConfig,
    Move,
    Player,
    finite_field_domain,
    integers,
    new_game,
    number_field_domain,
    rationals,
    reals,
    validate_and_apply,
    verdict,
    z_inv_n,
)
from coeffgame.numberfield import NumberField
from coeffgame.poly import Poly, clear_denominators, rational_root_candidates
from coeffgame.strategies import (
    nora_fq_d3_policy,
    nora_last_move_finitefield,
    nora_last_move_numberfield,
    nora_last_move_rationals,
    nora_real_quadratic,
    policy_move,
    wanda_fq_char3_d3_policy,
    wanda_last_move,
    wanda_real_even_policy,
    wanda_smallfield_policy,
)


def play(state, *moves):
    for index, value in moves:
        state = validate_and_apply(state, Move(index, value))
    return state


def finish_with_policy(state):
    while not state.is_complete:
        state = validate_and_apply(state, policy_move(state).move)
    return state


# -- last-move constructions --------------------------------------------------------


def test_wanda_last_move_constant_slot():
    s = new_game(GameConfig(rationals(), 3, Player.NORA))
    s = play(s, (3, Fraction(1, 6)), (2, Fraction(24)), (1, Fraction(-1, 4)))
    d = wanda_last_move(s)
    assert (d.move.index, d.move.value) == (0, Fraction(-287, 12))
    assert verdict(validate_and_apply(s, d.move)).winner is Player.WANDA


def test_wanda_last_move_interior():
    s = new_game(GameConfig(reals(), 4, Player.WANDA))
    s = play(s, (4, Fraction(5)), (3, Fraction(-6)), (2, Fraction(-3)), (0, Fraction(10)))
    d = wanda_last_move(s)
    assert (d.move.index, d.move.value) == (1, Fraction(-6))
    final = validate_and_apply(s, d.move)
    assert final.final_poly().evaluate(1) == 0


def test_wanda_last_move_interior_rule():
    # a_i = -g(1) regardless of the other coefficients
    s = new_game(GameConfig(integers(), 3, Player.NORA))
    s = play(s, (3, Fraction(1)), (2, Fraction(3)), (0, Fraction(1)))
    d = wanda_last_move(s)
    assert (d.move.index, d.move.value) == (1, Fraction(-5))


def test_wanda_last_move_leading_slot():
    s = new_game(GameConfig(integers(), 2, Player.WANDA))
    s = play(s, (0, Fraction(2)), (1, Fraction(1)))
    d = wanda_last_move(s)
    final = validate_and_apply(s, d.move)
    assert d.move.index == 2
    assert verdict(final).winner is Player.WANDA


def test_wanda_smallfield_examples():
    F2 = finite_field_domain(2).field_q()
    F3 = finite_field_domain(3).field_q()
    s = new_game(GameConfig(finite_field_domain(2), 3, Player.NORA))
    s = play(s, (3, F2.from_int(1)))
    d = wanda_smallfield_policy(s)
    assert (d.move.index, d.move.value.index) == (0, 1)
    s = new_game(GameConfig(finite_field_domain(3), 3, Player.NORA))
    s = play(s, (1, F3.from_int(2)))
    d = wanda_smallfield_policy(s)
    assert (d.move.index, d.move.value.index) == (2, 2)
    s = new_game(GameConfig(finite_field_domain(2), 2, Player.WANDA))
    d = wanda_smallfield_policy(s)
    assert (d.move.index, d.move.value.index) == (1, 0)


def test_nora_rationals_interior_golden():
    s = new_game(GameConfig(integers(), 3, Player.WANDA))
    s = play(s, (2, Fraction(-12)), (3, Fraction(7)), (0, Fraction(4)))
    d = nora_last_move_rationals(s)
    assert (d.move.index, d.move.value) == (1, Fraction(4453))
    assert verdict(validate_and_apply(s, d.move)).winner is Player.NORA


def test_nora_rationals_interior_bound_exact():
    rng = random.Random(606)
    for _ in range(40):
        degree = rng.randint(2, 4)
        config = GameConfig(
            rng.choice([integers(), rationals(), z_inv_n(7)]),
            degree,
            Player.WANDA if degree % 2 else Player.NORA,
        )
        s = new_game(config)
        interior = rng.randrange(1, degree)
        for i in range(degree + 1):
            if i == interior:
                continue
            value = Fraction(rng.randint(1, 9) * rng.choice([1, -1]))
            if config.domain.kind.value == "rationals" and rng.random() < 0.4:
                value /= rng.randint(2, 3)
            s = validate_and_apply(s, Move(i, value))
        if s.turn is not Player.NORA or len(s.open_indices) != 1:
            continue
        d = nora_last_move_rationals(s)
        final = validate_and_apply(s, d.move)
        ints, mult = clear_denominators(Poly([v if v is not None else Fraction(0) for v in s.assigned]))
        cands = rational_root_candidates(Poly(ints))
        m = min(abs(c) for c in cands)
        big = max(abs(Poly(ints).evaluate(c)) for c in cands)
        cleared_value = d.move.value * mult
        assert abs(cleared_value) > big / m**interior
        assert verdict(final).winner is Player.NORA


def test_nora_rationals_constant_and_leading():
    s = new_game(GameConfig(integers(), 2, Player.NORA))
    s = play(s, (2, Fraction(1)), (1, Fraction(0)))
    d = nora_last_move_rationals(s)
    assert (d.move.index, d.move.value) == (0, Fraction(2))
    s = new_game(GameConfig(integers(), 3, Player.WANDA))
    s = play(s, (2, Fraction(2)), (1, Fraction(2)), (0, Fraction(2)))
    d = nora_last_move_rationals(s)
    assert (d.move.index, d.move.value) == (3, Fraction(3))
    assert verdict(validate_and_apply(s, d.move)).winner is Player.NORA


def test_nora_numberfield_golden_search():
    field = NumberField(Poly([-2, 0, 1]))
    domain = number_field_domain(field, integral=True)
    s = new_game(GameConfig(domain, 3, Player.WANDA))
    s = play(s, (3, field.one), (2, field.gen - 3), (0, -4 * (field.one + field.gen)))
    d = nora_last_move_numberfield(s)
    assert d.move.index == 1
    assert d.move.value == field.from_rational(8)
    assert "tried [2, 4, 8]" in d.explanation
    assert verdict(validate_and_apply(s, d.move)).winner is Player.NORA


def test_nora_numberfield_split_case():
    field = NumberField(Poly([-2, 0, 1]))
    domain = number_field_domain(field)
    s = new_game(GameConfig(domain, 2, Player.NORA))
    s = play(s, (0, field.from_rational(3)), (1, field.zero))
    d = nora_last_move_numberfield(s)
    assert d.move.index == 2
    assert d.move.value == field.from_rational(-81)  # p = 2 fails, p = 3 wins
    assert verdict(validate_and_apply(s, d.move)).winner is Player.NORA


def test_nora_finitefield_examples():
    F5 = finite_field_domain(5).field_q()
    s = new_game(GameConfig(finite_field_domain(5), 2, Player.NORA))
    s = play(s, (0, F5.from_int(1)), (2, F5.from_int(1)))
    d = nora_last_move_finitefield(s)
    assert (d.move.index, d.move.value.index) == (1, 1)

    F3 = finite_field_domain(3).field_q()
    s = new_game(GameConfig(finite_field_domain(3), 3, Player.WANDA))
    s = play(s, (3, F3.from_int(1)), (2, F3.from_int(1)), (0, F3.from_int(1)))
    d = nora_last_move_finitefield(s)
    assert (d.move.index, d.move.value.index) == (1, 2)

    F2 = finite_field_domain(2).field_q()
    s = new_game(GameConfig(finite_field_domain(2), 4, Player.NORA))
    s = play(s, (4, F2.from_int(1)), (3, F2.from_int(1)), (1, F2.from_int(1)), (0, F2.from_int(1)))
    d = nora_last_move_finitefield(s)
    assert (d.move.index, d.move.value.index) == (2, 1)
    assert verdict(validate_and_apply(s, d.move)).winner is Player.NORA


def test_wanda_real_even_examples():
    config = GameConfig(reals(), 4, Player.NORA)
    s = new_game(config)
    s = play(s, (3, Fraction(5)))
    d = wanda_real_even_policy(s)
    assert (d.move.index, d.move.value) == (4, Fraction(1))
    s = play(s, (4, Fraction(1)), (0, Fraction(1)))
    d = wanda_real_even_policy(s)
    assert (d.move.index, d.move.value) == (2, Fraction(-3))
    # whatever the reply, a root exists
    for b in (Fraction(-4), Fraction(0), Fraction(2), Fraction(100), Fraction(-6, 7)):
        final = play(s, (2, Fraction(-3)), (1, b))
        assert verdict(final).winner is Player.WANDA

    s = new_game(config)
    s = play(s, (0, Fraction(1)))
    d = wanda_real_even_policy(s)
    assert (d.move.index, d.move.value) == (4, Fraction(-1))


def test_wanda_real_even_odd_odd_endgame():
    config = GameConfig(reals(), 6, Player.NORA)
    s = new_game(config)
    s = play(
        s,
        (2, Fraction(7)),
        (6, Fraction(1)),
        (0, Fraction(1)),
        (4, Fraction(0)),
        (5, Fraction(-1)),
    )
    d = wanda_real_even_policy(s)
    assert (d.move.index, d.move.value) == (3, Fraction(24))
    for b in (Fraction(-32), Fraction(-33), Fraction(-67, 2), Fraction(0), Fraction(50)):
        final = play(s, (3, Fraction(24)), (1, b))
        assert verdict(final).winner is Player.WANDA


def test_nora_real_quadratic_examples():
    config = GameConfig(reals(), 2, Player.NORA)
    s = new_game(config)
    d = nora_real_quadratic(s)
    assert (d.move.index, d.move.value) == (1, Fraction(0))
    s = play(s, (1, Fraction(0)), (2, Fraction(-5)))
    d = nora_real_quadratic(s)
    assert (d.move.index, d.move.value) == (0, Fraction(-5))
    final = play(s, (0, Fraction(-5)))
    assert verdict(final).winner is Player.NORA
    s = new_game(config)
    s = play(s, (1, Fraction(0)), (0, Fraction(3)))
    d = nora_real_quadratic(s)
    assert (d.move.index, d.move.value) == (2, Fraction(3))


def test_wanda_char3_examples():
    dom3 = finite_field_domain(3)
    F3 = dom3.field_q()
    s = new_game(GameConfig(dom3, 3, Player.WANDA))
    d = wanda_fq_char3_d3_policy(s)
    assert (d.move.index, d.move.value.index) == (2, 0)
    s = play(s, (2, F3.zero), (1, F3.from_int(1)))
    d = wanda_fq_char3_d3_policy(s)
    assert (d.move.index, d.move.value.index) == (3, 1)
    dom9 = finite_field_domain(3, 2)
    F9 = dom9.field_q()
    s = new_game(GameConfig(dom9, 3, Player.WANDA))
    s = play(s, (2, F9.zero), (3, F9.from_int(1)))
    d = wanda_fq_char3_d3_policy(s)
    assert (d.move.index, d.move.value.index) == (1, 0)


def test_nora_fq_d3_examples():
    dom5 = finite_field_domain(5)
    F5 = dom5.field_q()
    base = new_game(GameConfig(dom5, 3, Player.WANDA))
    d = nora_fq_d3_policy(play(base, (1, F5.from_int(2))))
    assert (d.move.index, d.move.value.index) == (2, 0)
    d = nora_fq_d3_policy(play(base, (2, F5.from_int(0))))
    assert (d.move.index, d.move.value.index) == (1, 1)
    s = play(base, (0, F5.from_int(3)))
    d = nora_fq_d3_policy(s)
    assert (d.move.index, d.move.value.index) == (3, 1)
    s = play(s, (3, F5.from_int(1)))
    # Wanda takes an interior slot; Nora's endgame elimination wins
    s = play(s, (1, F5.from_int(4)))
    d = nora_fq_d3_policy(s)
    final = validate_and_apply(s, d.move)
    assert verdict(final).winner is Player.NORA


def test_policy_dispatch_routes():
    s = new_game(GameConfig(rationals(), 3, Player.WANDA))
    s = play(s, (3, Fraction(1)), (2, Fraction(1)), (0, Fraction(1)))
    assert policy_move(s).policy == "nora_last_move_rationals"
    s = new_game(GameConfig(reals(), 4, Player.NORA))
    s = play(s, (1, Fraction(1)))
    assert policy_move(s).policy == "wanda_real_even"
    dom5 = finite_field_domain(5)
    s = new_game(GameConfig(dom5, 3, Player.WANDA))
    s = play(s, (1, dom5.field_q().from_int(1)))
    assert policy_move(s).policy == "nora_fq_d3"
    # char 3: Nora has no winning policy from this seat, the filler plays
    dom9 = finite_field_domain(3, 2)
    s = new_game(GameConfig(dom9, 3, Player.WANDA))
    s = play(s, (1, dom9.field_q().from_int(1)))
    assert policy_move(s).policy == "heuristic_filler"


def test_policy_moves_always_legal():
    rng = random.Random(2201)
    field = NumberField(Poly([-2, 0, 1]))
    domains = [
        integers(),
        rationals(),
        z_inv_n(6),
        reals(),
        finite_field_domain(2),
        finite_field_domain(5),
        finite_field_domain(3, 2),
        number_field_domain(field, integral=True),
    ]
    for _ in range(120):
        domain = rng.choice(domains)
        degree = rng.randint(2, 4)
        config = GameConfig(domain, degree, rng.choice([Player.WANDA, Player.NORA]))
        state = new_game(config)
        while not state.is_complete:
            decision = policy_move(state)
            state = validate_and_apply(state, decision.move)
        verdict(state)


# -- smoke-sized soundness sweeps ---------------------------------------------------


def random_legal_value(rng, domain, index, degree):
    kind = domain.kind.value
    if kind == "finite_field":
        field = domain.field_q()
        choices = field.nonzero_elements() if index in (0, degree) else field.elements()
        return rng.choice(choices)
    if kind == "number_field":
        field = domain.number_field
        while True:
            coords = [rng.randint(-3, 3) for _ in range(field.degree)]
            value = field.element(coords)
            if value or index not in (0, degree):
                return value
    while True:
        value = Fraction(rng.randint(-8, 8))
        if kind == "z_inv_n":
            value = Fraction(rng.randint(-8, 8), rng.choice([1, domain.inv_n]))
        elif kind in ("rationals", "reals"):
            value = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
        if value or index not in (0, degree):
            return value


def engine_vs_random(config, engine: Player, rng):
    state = new_game(config)
    while not state.is_complete:
        if state.turn is engine:
            state = validate_and_apply(state, policy_move(state).move)
        else:
            index = rng.choice(state.open_indices)
            value = random_legal_value(rng, config.domain, index, config.degree)
            state = validate_and_apply(state, Move(index, value))
    return verdict(state)


def test_sweep_smoke_wanda_last():
    rng = random.Random(3101)
    domains = [integers(), rationals(), reals(), finite_field_domain(2), finite_field_domain(3)]
    for _ in range(60):
        domain = rng.choice(domains)
        degree = rng.randint(2, 4)
        first = rng.choice([Player.WANDA, Player.NORA])
        config = GameConfig(domain, degree, first)
        if config.last_player is not Player.WANDA:
            continue
        assert engine_vs_random(config, Player.WANDA, rng).winner is Player.WANDA


def test_sweep_smoke_nora_last_rationals():
    rng = random.Random(3102)
    for _ in range(40):
        domain = rng.choice([integers(), rationals(), z_inv_n(7)])
        degree = rng.randint(2, 4)
        first = Player.NORA if degree % 2 == 0 else Player.WANDA
        config = GameConfig(domain, degree, first)
        assert engine_vs_random(config, Player.NORA, rng).winner is Player.NORA


def test_sweep_smoke_real_even_and_quadratic():
    rng = random.Random(3103)
    for _ in range(25):
        config = GameConfig(reals(), rng.choice([4, 6]), Player.NORA)
        assert engine_vs_random(config, Player.WANDA, rng).winner is Player.WANDA
    for _ in range(25):
        config = GameConfig(reals(), 2, Player.NORA)
        assert engine_vs_random(config, Player.NORA, rng).winner is Player.NORA


def test_sweep_smoke_finite_fields():
    rng = random.Random(3104)
    fields = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
    for _ in range(40):
        p, k = rng.choice(fields)
        config = GameConfig(finite_field_domain(p, k), rng.choice([4, 5]), Player.NORA if rng.random() < 0.5 else Player.WANDA)
        if config.last_player is Player.NORA:
            assert engine_vs_random(config, Player.NORA, rng).winner is Player.NORA
    for _ in range(20):
        p, k = rng.choice([(3, 1), (3, 2)])
        config = GameConfig(finite_field_domain(p, k), 3, Player.WANDA)
        assert engine_vs_random(config, Player.WANDA, rng).winner is Player.WANDA
    for _ in range(20):
        p, k = rng.choice([(2, 1), (2, 2), (5, 1), (7, 1), (2, 3)])
        config = GameConfig(finite_field_domain(p, k), 3, Player.WANDA)
        assert engine_vs_random(config, Player.NORA, rng).winner is Player.NORA


def test_sweep_smoke_numberfield():
    rng = random.Random(3105)
    fields = [NumberField(Poly([-2, 0, 1])), NumberField(Poly([-2, 0, 0, 1]))]
    for _ in range(8):
        field = rng.choice(fields)
        domain = number_field_domain(field, integral=rng.random() < 0.5)
        degree = rng.choice([2, 3])
        first = Player.NORA if degree % 2 == 0 else Player.WANDA
        config = GameConfig(domain, degree, first)
        assert engine_vs_random(config, Player.NORA, rng).winner is Player.NORA
