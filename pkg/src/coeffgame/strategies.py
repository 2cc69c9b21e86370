"""Executable winning strategies for both players, keyed to provable policies.

Every policy is a pure function of the game state and returns the move it
would play together with a stable policy name and a human-readable
explanation of the threshold or construction it used.  "Choose any value
such that ..." points are pinned to the smallest admissible value under a
canonical order (integers by absolute value then sign, finite field elements
by canonical index), so games and transcripts are reproducible.

Constructive searches (the power-of-N scheme and the prime scheme in number
fields) verify every candidate with the exact root decider before playing
it; correctness never relies on the search schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import PolicyError, SearchCapError
from .finitefield import FqField
from .game import DomainKind, GameState, Move, Player, validate_move
from .numberfield import roots_in_K
from .poly import Poly, clear_denominators, rational_root_candidates, rational_roots
from .realroots import sturm_real_root_count

NF_SEARCH_BASE = 2
NF_SEARCH_CAP = 64


@dataclass(frozen=True)
class PolicyDecision:
    move: Move
    policy: str
    explanation: str


def _decide(state: GameState, index: int, value, policy: str, explanation: str) -> PolicyDecision:
    move = Move(index, value)
    validate_move(state, move)
    return PolicyDecision(move, policy, explanation)


def _single_open_index(state: GameState) -> int:
    open_indices = state.open_indices
    if len(open_indices) != 1:
        raise PolicyError("not the last move")
    return open_indices[0]


def _set_part(state: GameState) -> Poly:
    """The already-set part g, with open slots contributing zero."""
    domain = state.config.domain
    coeffs = [v if v is not None else domain.zero_value() for v in state.assigned]
    return Poly(coeffs)


def _small_integers():
    """0, 1, -1, 2, -2, ... as a canonical value order for infinite domains."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


# -- Wanda: last-move constructions ------------------------------------------------


def wanda_last_move(state: GameState) -> PolicyDecision:
    """Final-move root construction: a_i = -g(1), or -g(r) through the ends.

    For an interior slot, setting a_i = -g(1) makes 1 a root.  For the
    constant slot she scans distinct nonzero domain values r until
    g(r) != 0 and plays a_0 = -g(r); for the leading slot she applies the
    constant-slot construction to the reversed polynomial, making 1/r a
    root in the fraction field.  Small finite fields (q <= d) with an end
    slot open are covered by the pairing policy instead.
    """
    if state.turn is not Player.WANDA:
        raise PolicyError("not Wanda's move")
    i = _single_open_index(state)
    d = state.config.degree
    domain = state.config.domain
    g = _set_part(state)
    if i not in (0, d):
        value = -g.evaluate(domain.one_value())
        return _decide(
            state, i, value, "wanda_last_move", f"set a_{i} = -g(1) so that 1 is a root"
        )
    finite = domain.kind is DomainKind.FINITE_FIELD
    if finite and domain.field_q().q <= d:
        raise PolicyError("field too small for the end-slot scan; use the pairing policy")
    if i == 0:
        r, value = _end_slot_scan(domain, g, d)
        return _decide(
            state, 0, value, "wanda_last_move", f"set a_0 = -g({r}) so that {r} is a root"
        )
    # Leading slot: work on the reversed coefficients, where the open slot is
    # the constant one, then carry the value back.
    rev = Poly([state.assigned[d - j] if state.assigned[d - j] is not None else domain.zero_value() for j in range(d + 1)])
    r, value = _end_slot_scan(domain, rev, d)
    return _decide(
        state,
        d,
        value,
        "wanda_last_move",
        f"reversed the polynomial and set the end coefficient so 1/{r} is a root",
    )


def _end_slot_scan(domain, g: Poly, d: int):
    """First nonzero r with g(r) != 0, scanning the canonical value order."""
    if domain.kind is DomainKind.FINITE_FIELD:
        candidates = domain.field_q().nonzero_elements()
    else:
        candidates = (domain.int_value(n) for n in range(1, d + 2))
    for r in candidates:
        value = g.evaluate(r)
        if value:
            return r, -value
    raise PolicyError("no evaluation point found; domain too small")


def wanda_smallfield_policy(state: GameState) -> PolicyDecision:
    """Wanda's play over F_q with q <= d when she holds the last move.

    d = 2 (forces q = 2): open with the middle coefficient 0, then match
    Nora's end coefficient so 1 is a root.  d = 3: mirror Nora's previous
    move across the pairing a_0 = a_3, a_1 = a_2, forcing -1 as a root.
    d >= 4: spend early moves fixing the end coefficients so the final slot
    is interior, then close with a_i = -g(1).
    """
    if state.turn is not Player.WANDA:
        raise PolicyError("not Wanda's move")
    domain = state.config.domain
    if domain.kind is not DomainKind.FINITE_FIELD:
        raise PolicyError("pairing policy is for finite fields")
    field = domain.field_q()
    d = state.config.degree
    if field.q > d:
        raise PolicyError("field is large enough for the generic last-move scan")
    if state.config.last_player is not Player.WANDA:
        raise PolicyError("pairing policy needs Wanda to hold the last move")
    if d == 2:
        if not state.history:
            return _decide(state, 1, field.zero, "wanda_smallfield", "open with a_1 = 0")
        taken = 0 if state.assigned[0] is not None else 2
        other = 2 - taken
        return _decide(
            state,
            other,
            state.assigned[taken],
            "wanda_smallfield",
            f"match a_{other} = a_{taken} so that 1 is a root",
        )
    if d == 3:
        last = state.history[-1]
        mirror = {0: 3, 3: 0, 1: 2, 2: 1}[last.index]
        return _decide(
            state,
            mirror,
            last.value,
            "wanda_smallfield",
            f"mirror a_{mirror} = a_{last.index} so that -1 is a root",
        )
    # d >= 4
    if len(state.open_indices) == 1:
        i = state.open_indices[0]
        g = _set_part(state)
        value = -g.evaluate(field.one)
        return _decide(state, i, value, "wanda_smallfield", f"close with a_{i} = -g(1)")
    if state.assigned[0] is None:
        return _decide(state, 0, field.one, "wanda_smallfield", "fix the constant slot early")
    if state.assigned[d] is None:
        return _decide(state, d, field.one, "wanda_smallfield", "fix the leading slot early")
    i = min(j for j in state.open_indices)
    return _decide(state, i, field.zero, "wanda_smallfield", "filler; the ends are already fixed")


# -- Nora: last-move constructions ---------------------------------------------------


def nora_last_move_rationals(state: GameState) -> PolicyDecision:
    """Nora's final move over Z, Q or Z[1/N].

    Interior slot: after clearing denominators by N', the root candidates S
    depend only on the cleared end coefficients; playing any multiple of N'
    above M/m^i (M = max |g(s)|, m = min |s| over S, both in the cleared
    world) kills every candidate.  Constant slot: play N' * p for successive
    primes p not dividing N' until the root set is empty.  Leading slot:
    solve the reversed instance and carry the value back.
    """
    if state.turn is not Player.NORA:
        raise PolicyError("not Nora's move")
    if state.config.domain.kind not in (
        DomainKind.INTEGERS,
        DomainKind.RATIONALS,
        DomainKind.Z_INV_N,
    ):
        raise PolicyError("rational-domain policy used outside Z, Q, Z[1/N]")
    i = _single_open_index(state)
    d = state.config.degree
    if i not in (0, d):
        value, bound, multiplier = _interior_bound_value(state.assigned, i)
        return _decide(
            state,
            i,
            value,
            "nora_last_move_rationals",
            f"interior bound: cleared |a_{i}| must exceed M/m^{i} = {bound}; "
            f"played {value} (clearing multiplier {multiplier})",
        )
    if i == 0:
        value, prime = _prime_scheme_constant(state.assigned, d)
        return _decide(
            state,
            0,
            value,
            "nora_last_move_rationals",
            f"constant slot: played N'*p with prime p = {prime}, verified rootless",
        )
    reversed_assigned = tuple(state.assigned[d - j] for j in range(d + 1))
    value, prime = _prime_scheme_constant(reversed_assigned, d)
    return _decide(
        state,
        d,
        value,
        "nora_last_move_rationals",
        f"leading slot via reversal: played N'*p with prime p = {prime}, verified rootless",
    )


def _cleared(assigned):
    """Clear denominators of the set coefficients; open slot treated as 0."""
    filled = Poly([Fraction(v) if v is not None else Fraction(0) for v in assigned])
    return clear_denominators(filled)


def _interior_bound_value(assigned, i: int):
    ints, mult = _cleared(assigned)
    g_cleared = Poly(ints)
    candidates = rational_root_candidates(g_cleared)
    m = min(abs(s) for s in candidates)
    big_m = max(abs(g_cleared.evaluate(s)) for s in candidates)
    bound = big_m / m**i
    cleared_value = mult * (bound // mult + 1)
    value = Fraction(cleared_value, mult)
    final = list(assigned)
    final[i] = value
    if rational_roots(Poly(final)):
        raise PolicyError("interior bound failed to clear the candidate set")
    return value, bound, mult


def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            yield n
        n += 1


def _prime_scheme_constant(assigned, d: int):
    """Value for the constant slot: N' * p, decider-verified over the primes."""
    _, mult = _cleared(assigned)
    for p in _primes():
        if mult % p == 0:
            continue
        value = Fraction(mult * p)
        final = list(assigned)
        final[0] = value
        if not rational_roots(Poly(final)):
            return value, p
    raise SearchCapError("prime scheme exhausted")  # pragma: no cover


def nora_last_move_numberfield(state: GameState) -> PolicyDecision:
    """Nora's final move over a number field, decider-verified.

    Interior slot: try a_i = N^n for n = 1, 2, ... (N defaults to 2) until
    the root decider reports no roots.  Leading slot with every middle
    coefficient zero: try a_d = -N^(k*d) * a_0^(d+1) * p over successive
    primes p (k pinned to the least k keeping the value in the coefficient
    ring; 0 works for both supported rings).  Leading slot in general: the
    same power scheme; constant slot: solve the reversed instance.
    """
    if state.turn is not Player.NORA:
        raise PolicyError("not Nora's move")
    domain = state.config.domain
    if domain.kind is not DomainKind.NUMBER_FIELD:
        raise PolicyError("number-field policy used elsewhere")
    i = _single_open_index(state)
    d = state.config.degree
    field = domain.number_field
    assigned = state.assigned

    def rootless(coeffs) -> bool:
        return not roots_in_K(field, Poly(coeffs))[0]

    if i not in (0, d):
        value, tried = _power_scheme(domain, assigned, i, rootless)
        return _decide(
            state,
            i,
            value,
            "nora_last_move_numberfield",
            f"power scheme: tried {tried}, accepted {tried[-1]} (decider-verified)",
        )
    if i == d:
        middles = [assigned[j] for j in range(1, d)]
        if not any(middles):
            value, prime = _split_case_leading(domain, assigned, d, rootless)
            return _decide(
                state,
                d,
                value,
                "nora_last_move_numberfield",
                f"two-term split case: played -N^(kd) a_0^(d+1) p with p = {prime}",
            )
        value, tried = _power_scheme(domain, assigned, d, rootless)
        return _decide(
            state,
            d,
            value,
            "nora_last_move_numberfield",
            f"leading slot power scheme: tried {tried}, accepted {tried[-1]}",
        )
    # Constant slot: reverse, decide there, carry the value back.
    reversed_assigned = tuple(assigned[d - j] for j in range(d + 1))

    def rootless_rev(coeffs) -> bool:
        return not roots_in_K(field, Poly(coeffs))[0]

    rev_middles = [reversed_assigned[j] for j in range(1, d)]
    if not any(rev_middles):
        value, prime = _split_case_leading(domain, reversed_assigned, d, rootless_rev)
        explanation = f"constant slot via reversal, split case with p = {prime}"
    else:
        value, tried = _power_scheme(domain, reversed_assigned, d, rootless_rev)
        explanation = f"constant slot via reversal, power scheme accepted {tried[-1]}"
    final = list(assigned)
    final[0] = value
    if not rootless(final):
        raise PolicyError("reversal value failed on the original polynomial")
    return _decide(state, 0, value, "nora_last_move_numberfield", explanation)


def _power_scheme(domain, assigned, i: int, rootless):
    tried = []
    for n in range(1, NF_SEARCH_CAP + 1):
        value = domain.int_value(NF_SEARCH_BASE**n)
        tried.append(NF_SEARCH_BASE**n)
        final = list(assigned)
        final[i] = value
        if rootless(final):
            return value, tried
    raise SearchCapError(f"power scheme exceeded {NF_SEARCH_CAP} candidates")


def _split_case_leading(domain, assigned, d: int, rootless):
    a0 = assigned[0]
    base = domain.number_field.from_rational(NF_SEARCH_BASE)
    # Least k keeping the value in the coefficient ring; both supported
    # rings already contain a_0^(d+1), so k = 0 suffices.
    k = 0
    scale = (base ** (k * d)) * a0 ** (d + 1)
    count = 0
    for p in _primes():
        count += 1
        if count > NF_SEARCH_CAP:
            raise SearchCapError(f"split case exceeded {NF_SEARCH_CAP} candidates")
        value = -scale * p
        final = list(assigned)
        final[d] = value
        if rootless(final):
            return value, p
    raise SearchCapError("prime stream ended")  # pragma: no cover


def nora_last_move_finitefield(state: GameState) -> PolicyDecision:
    """Nora's final move over F_q.

    Interior slot: each nonzero b rules out exactly one value of a_i (the
    one making b a root); at most q-1 of the q values die, so the smallest
    survivor in canonical order wins.  Constant slot: pick a_0 with -a_0
    outside the image of the set part (image-gap).  Leading slot: apply the
    image-gap construction to the reversed polynomial.
    """
    if state.turn is not Player.NORA:
        raise PolicyError("not Nora's move")
    domain = state.config.domain
    if domain.kind is not DomainKind.FINITE_FIELD:
        raise PolicyError("finite-field policy used elsewhere")
    field = domain.field_q()
    i = _single_open_index(state)
    d = state.config.degree
    if i not in (0, d):
        g = _set_part(state)
        eliminated = set()
        for b in field.nonzero_elements():
            eliminated.add((-g.evaluate(b) / b**i).index)
        for value in field.elements():
            if value.index not in eliminated:
                final = list(state.assigned)
                final[i] = value
                if Poly(final).evaluate(field.zero) and not any(
                    not Poly(final).evaluate(b) for b in field.nonzero_elements()
                ):
                    return _decide(
                        state,
                        i,
                        value,
                        "nora_last_move_finitefield",
                        f"eliminated {sorted(eliminated)} by index; "
                        f"played the smallest survivor {value.index}",
                    )
        raise PolicyError("no interior value survived; position was already lost")
    if i == 0:
        g = _set_part(state)
        value = _image_gap_constant(field, g)
        if value is None:
            raise PolicyError("set part is a permutation map; every constant loses")
        return _decide(
            state,
            0,
            value,
            "nora_last_move_finitefield",
            f"image-gap: -a_0 = {(-value).index} is missed by the set part",
        )
    reversed_coeffs = [
        state.assigned[d - j] if state.assigned[d - j] is not None else field.zero
        for j in range(d + 1)
    ]
    value = _image_gap_constant(field, Poly(reversed_coeffs))
    if value is None:
        raise PolicyError("reversed set part is a permutation map; position lost")
    final = list(state.assigned)
    final[d] = value
    if any(not Poly(final).evaluate(b) for b in field.elements()):
        raise PolicyError("reversal value failed on the original polynomial")
    return _decide(
        state,
        d,
        value,
        "nora_last_move_finitefield",
        f"leading slot via reversal and image-gap; played {value.index}",
    )


def _image_gap_constant(field: FqField, g: Poly):
    """Smallest nonzero a_0 with -a_0 outside the image of g, if any."""
    image = {g.evaluate(b).index for b in field.elements()}
    for candidate in field.nonzero_elements():
        if (-candidate).index not in image:
            return candidate
    return None


# -- full-game policies -----------------------------------------------------------


def wanda_real_even_policy(state: GameState) -> PolicyDecision:
    """Wanda as the non-last player over R with even degree >= 4.

    Lock a sign change whenever possible (opposite signs at the ends);
    otherwise zero out even-degree slots until two slots remain, then close
    with the one-variable threshold that leaves the opponent no reply
    window.  The thresholds use exact rational arithmetic; the chosen A is
    the smallest integer strictly satisfying the case inequality.
    """
    if state.turn is not Player.WANDA:
        raise PolicyError("not Wanda's move")
    config = state.config
    if config.domain.kind is not DomainKind.REALS or config.degree % 2 or config.degree < 4:
        raise PolicyError("policy needs the reals with even degree >= 4")
    if config.last_player is Player.WANDA:
        raise PolicyError("Wanda holds the last move; the last-move policy applies")
    d = config.degree
    a0, ad = state.assigned[0], state.assigned[d]
    if a0 is None and ad is None:
        return _decide(state, d, Fraction(1), "wanda_real_even", "open with a_d = 1 > 0")
    if (a0 is None) != (ad is None):
        open_end = 0 if a0 is None else d
        set_value = ad if a0 is None else a0
        value = Fraction(-1) if set_value > 0 else Fraction(1)
        return _decide(
            state,
            open_end,
            value,
            "wanda_real_even",
            "forced opposite signs at the ends; any completion has a root",
        )
    if a0 * ad < 0:
        return _heuristic_filler(state, "wanda_real_even", "sign change already locked")
    open_indices = state.open_indices
    if len(open_indices) == 2:
        return _real_even_endgame(state)
    open_evens = [j for j in open_indices if j % 2 == 0]
    if open_evens:
        return _decide(
            state,
            open_evens[0],
            Fraction(0),
            "wanda_real_even",
            f"zero an even-degree slot (a_{open_evens[0]} = 0)",
        )
    return _decide(
        state,
        open_indices[0],
        Fraction(0),
        "wanda_real_even",
        "no even slot open; harmless zero filler",
    )


def _real_even_endgame(state: GameState) -> PolicyDecision:
    d = state.config.degree
    if state.assigned[d] <= 0:
        raise PolicyError("endgame thresholds assume a positive leading coefficient")
    pair = state.open_indices
    evens = [j for j in pair if j % 2 == 0]
    odds = [j for j in pair if j % 2 == 1]
    g = _set_part(state)
    if len(evens) == 1:
        even, odd = evens[0], odds[0]
        threshold = (g.evaluate(Fraction(1)) + g.evaluate(Fraction(-1))) / 2
        a_value = floor(threshold) + 1
        return _decide(
            state,
            even,
            Fraction(-a_value),
            "wanda_real_even",
            f"mixed-parity endgame: A > (g(1)+g(-1))/2 = {threshold}, "
            f"played a_{even} = -{a_value}",
        )
    if len(odds) == 2:
        low, high = sorted(odds)
        # high = 2i+1, low = 2j+1
        ratio = Fraction(2) ** (high - low)
        rhs = g.evaluate(Fraction(1)) + g.evaluate(Fraction(-2)) * Fraction(2) ** (-low)
        threshold = rhs / (ratio - 1)
        a_value = floor(threshold) + 1
        return _decide(
            state,
            high,
            Fraction(a_value),
            "wanda_real_even",
            f"odd-odd endgame: A(2^{high - low} - 1) > {rhs}, played a_{high} = {a_value}",
        )
    raise PolicyError("both remaining slots have even degree; strategy invariant broken")


def nora_real_quadratic(state: GameState) -> PolicyDecision:
    """Nora as Player I over R with degree 2: a_1 = 0, then copy the end."""
    config = state.config
    if (
        config.domain.kind is not DomainKind.REALS
        or config.degree != 2
        or config.player_one is not Player.NORA
        or state.turn is not Player.NORA
    ):
        raise PolicyError("policy needs Nora as Player I over R, degree 2")
    if not state.history:
        return _decide(state, 1, Fraction(0), "nora_real_quadratic", "open with a_1 = 0")
    if state.assigned[1] != 0:
        raise PolicyError("unexpected flow; the middle slot was not zeroed")
    taken = 0 if state.assigned[0] is not None else 2
    other = 2 - taken
    return _decide(
        state,
        other,
        state.assigned[taken],
        "nora_real_quadratic",
        f"copy a_{other} = a_{taken}; the discriminant is negative",
    )


def wanda_fq_char3_d3_policy(state: GameState) -> PolicyDecision:
    """Wanda as Player I over characteristic 3, degree 3.

    Open with a_2 = 0; afterwards steer the set part into a bijective cubic
    (pure cube, or x^3 - ax with a a non-square), so every constant choice
    leaves a root.
    """
    config = state.config
    domain = config.domain
    if (
        domain.kind is not DomainKind.FINITE_FIELD
        or domain.field_q().p != 3
        or config.degree != 3
        or config.player_one is not Player.WANDA
        or state.turn is not Player.WANDA
    ):
        raise PolicyError("policy needs Wanda as Player I over char 3, degree 3")
    field = domain.field_q()
    if not state.history:
        return _decide(state, 2, field.zero, "wanda_fq_char3_d3", "open with a_2 = 0")
    last = state.history[-1]
    if last.index == 1:
        if not last.value:
            return _decide(
                state, 3, field.one, "wanda_fq_char3_d3", "a_1 = 0: play a_3 = 1, cubing is a bijection"
            )
        for a3 in field.nonzero_elements():
            if not field.is_square(-last.value / a3):
                return _decide(
                    state,
                    3,
                    a3,
                    "wanda_fq_char3_d3",
                    f"played a_3 = {a3.index} so -a_1/a_3 is a non-square; "
                    "the set part permutes the field",
                )
        raise PolicyError("no leading value made -a_1/a_3 a non-square")
    # Nora took the leading or the constant slot: zero the linear slot, the
    # set part becomes a pure cube.
    return _decide(
        state, 1, field.zero, "wanda_fq_char3_d3", "play a_1 = 0; a pure cube permutes the field"
    )


def nora_fq_d3_policy(state: GameState) -> PolicyDecision:
    """Nora as the last player over F_q, char != 3, degree 3.

    Respond to an end move by taking the other end; respond to a middle move
    by arranging that exactly one of a_1, a_2 is zero; close with the
    elimination or image-gap construction, which succeeds because the set
    part can never be a degree-3 permutation map with exactly one middle
    coefficient zero.
    """
    config = state.config
    domain = config.domain
    if (
        domain.kind is not DomainKind.FINITE_FIELD
        or domain.field_q().p == 3
        or config.degree != 3
        or config.player_one is not Player.WANDA
        or state.turn is not Player.NORA
    ):
        raise PolicyError("policy needs Nora as Player II over char != 3, degree 3")
    field = domain.field_q()
    if len(state.history) == 1:
        first = state.history[0]
        if first.index in (0, 3):
            other = 3 - first.index
            return _decide(
                state,
                other,
                field.one,
                "nora_fq_d3",
                f"took the other end a_{other} = 1; the endgame elimination now applies",
            )
        other = 3 - first.index  # 1 <-> 2
        value = field.zero if first.value else field.one
        return _decide(
            state,
            other,
            value,
            "nora_fq_d3",
            "arranged exactly one zero among the middle coefficients",
        )
    return nora_last_move_finitefield(state)


def nora_fq_endpoints_policy(state: GameState) -> PolicyDecision:
    """Nora's non-final play over F_q with degree >= 4: fix the ends early."""
    config = state.config
    domain = config.domain
    if domain.kind is not DomainKind.FINITE_FIELD or config.degree < 4:
        raise PolicyError("endpoint policy needs a finite field and degree >= 4")
    if state.turn is not Player.NORA or config.last_player is not Player.NORA:
        raise PolicyError("endpoint policy is for Nora holding the last move")
    field = domain.field_q()
    d = config.degree
    if len(state.open_indices) == 1:
        return nora_last_move_finitefield(state)
    if state.assigned[0] is None:
        return _decide(state, 0, field.one, "nora_fq_endpoints", "fix the constant slot early")
    if state.assigned[d] is None:
        return _decide(state, d, field.one, "nora_fq_endpoints", "fix the leading slot early")
    i = min(state.open_indices)
    return _decide(state, i, field.zero, "nora_fq_endpoints", "filler; the ends are fixed")


def nora_fq_quadratic_policy(state: GameState) -> PolicyDecision:
    """Nora as Player I over F_q, degree 2: a_1 = 1 then image-gap/elimination."""
    config = state.config
    domain = config.domain
    if (
        domain.kind is not DomainKind.FINITE_FIELD
        or config.degree != 2
        or config.player_one is not Player.NORA
        or state.turn is not Player.NORA
    ):
        raise PolicyError("policy needs Nora as Player I over F_q, degree 2")
    field = domain.field_q()
    if not state.history:
        return _decide(state, 1, field.one, "nora_fq_quadratic", "open with a_1 = 1")
    return nora_last_move_finitefield(state)


# -- dispatcher ---------------------------------------------------------------------


def _heuristic_filler(state: GameState, policy: str = "heuristic_filler",
                      note: str = "non-adversarial filler") -> PolicyDecision:
    """Smallest legal value at the lowest open index, preferring interior slots."""
    d = state.config.degree
    domain = state.config.domain
    open_indices = sorted(state.open_indices, key=lambda j: (j in (0, d), j))
    index = open_indices[0]
    if index in (0, d):
        value = domain.one_value()
    else:
        value = domain.zero_value()
    return _decide(state, index, value, policy, note)


def policy_move(state: GameState) -> PolicyDecision:
    """Select the applicable policy for the side to move.

    When the side to move has no winning policy from this configuration the
    pinned heuristic plays a deliberately simple filler move.
    """
    if state.is_complete:
        raise PolicyError("game is over")
    config = state.config
    domain = config.domain
    mover = state.turn
    d = config.degree
    kind = domain.kind
    last = config.last_player

    if kind is DomainKind.ALGEBRAICALLY_CLOSED:
        return _heuristic_filler(state)

    if mover is Player.WANDA:
        if last is Player.WANDA:
            if kind is DomainKind.FINITE_FIELD and domain.field_q().q <= d:
                return wanda_smallfield_policy(state)
            if len(state.open_indices) == 1:
                return wanda_last_move(state)
            return _heuristic_filler(state, "wanda_waits", "wins on the final move")
        if kind is DomainKind.REALS:
            if d % 2 == 1:
                return _heuristic_filler(state, "wanda_odd_degree", "odd degree always has a real root")
            if d >= 4:
                return wanda_real_even_policy(state)
            return _heuristic_filler(state)
        if kind is DomainKind.FINITE_FIELD and d == 3 and domain.field_q().p == 3:
            return wanda_fq_char3_d3_policy(state)
        return _heuristic_filler(state)

    # Nora to move.
    if last is Player.NORA:
        if kind in (DomainKind.INTEGERS, DomainKind.RATIONALS, DomainKind.Z_INV_N):
            if len(state.open_indices) == 1:
                return nora_last_move_rationals(state)
            return _heuristic_filler(state, "nora_waits", "wins on the final move")
        if kind is DomainKind.NUMBER_FIELD:
            if len(state.open_indices) == 1:
                return nora_last_move_numberfield(state)
            return _heuristic_filler(state, "nora_waits", "wins on the final move")
        if kind is DomainKind.FINITE_FIELD:
            field = domain.field_q()
            if d == 2:
                return nora_fq_quadratic_policy(state)
            if d == 3:
                if field.p == 3:
                    return _heuristic_filler(state)  # char 3: the cube trick beats her
                return nora_fq_d3_policy(state)
            return nora_fq_endpoints_policy(state)
        if kind is DomainKind.REALS and d == 2:
            return nora_real_quadratic(state)
        return _heuristic_filler(state)
    return _heuristic_filler(state)
