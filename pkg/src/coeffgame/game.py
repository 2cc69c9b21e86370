"""Rules of the coefficient-choosing game: domains, state, moves, verdicts.

Two players alternately assign the d+1 coefficients of a degree-d polynomial
over a domain D; the end coefficients must be nonzero.  Wanda wins when the
finished polynomial has a root in the fraction field of D, Nora when it does
not.  The verdict is a pure function of the final coefficient vector and
always carries a machine-checkable certificate.

States are immutable; applying a move returns a new state.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Optional

from .errors import (
    GameOverError,
    IncompleteGameError,
    IndexTakenError,
    InvalidConfigError,
    NotInDomainError,
    ZeroForbiddenError,
)
from .finitefield import FqElement, FqField, fq_element_from_json, fq_eval_table, fq_field
from .numberfield import (
    NumberField,
    NumberFieldElement,
    TragerTranscript,
    nf_element_from_json,
    roots_in_K,
)
from .poly import (
    Poly,
    format_rational,
    parse_rational,
    rational_root_candidates,
    rational_roots,
)
from .realroots import sturm_real_root_count


class Player(enum.Enum):
    WANDA = "wanda"  # wants a root
    NORA = "nora"  # wants no root

    @property
    def opponent(self) -> "Player":
        return Player.NORA if self is Player.WANDA else Player.WANDA

    def __str__(self):
        return "Wanda" if self is Player.WANDA else "Nora"


class DomainKind(enum.Enum):
    INTEGERS = "integers"
    RATIONALS = "rationals"
    Z_INV_N = "z_inv_n"
    NUMBER_FIELD = "number_field"
    REALS = "reals"
    FINITE_FIELD = "finite_field"
    ALGEBRAICALLY_CLOSED = "algebraically_closed"


_RATIONAL_VALUED = {
    DomainKind.INTEGERS,
    DomainKind.RATIONALS,
    DomainKind.Z_INV_N,
    DomainKind.REALS,
    DomainKind.ALGEBRAICALLY_CLOSED,
}


@dataclass(frozen=True)
class DomainSpec:
    """Which ring coefficients are drawn from, plus its parameters."""

    kind: DomainKind
    inv_n: Optional[int] = None  # Z[1/N]
    number_field: Optional[NumberField] = None
    subring_integral: bool = False  # True: integer-coordinate span of theta
    p: Optional[int] = None
    k: Optional[int] = None

    def validate(self):
        if self.kind is DomainKind.Z_INV_N:
            if self.inv_n is None or self.inv_n < 2:
                raise InvalidConfigError("Z[1/N] needs N >= 2")
        if self.kind is DomainKind.NUMBER_FIELD and self.number_field is None:
            raise InvalidConfigError("number field domain needs a field")
        if self.kind is DomainKind.FINITE_FIELD:
            try:
                self.field_q()
            except ValueError as exc:
                raise InvalidConfigError(str(exc)) from exc

    def field_q(self) -> FqField:
        return fq_field(self.p, self.k or 1)

    # -- membership -----------------------------------------------------------

    def contains(self, value) -> bool:
        kind = self.kind
        if kind in _RATIONAL_VALUED:
            if not isinstance(value, (int, Fraction)):
                return False
            value = Fraction(value)
            if kind is DomainKind.INTEGERS:
                return value.denominator == 1
            if kind is DomainKind.Z_INV_N:
                den = value.denominator
                g = _int_gcd(den, self.inv_n)
                while g > 1:
                    while den % g == 0:
                        den //= g
                    g = _int_gcd(den, self.inv_n)
                return den == 1
            return True  # rationals, reals (rational moves), algebraically closed
        if kind is DomainKind.NUMBER_FIELD:
            if not isinstance(value, NumberFieldElement) or value.field != self.number_field:
                return False
            return value.is_integral_coordinates() if self.subring_integral else True
        if kind is DomainKind.FINITE_FIELD:
            return isinstance(value, FqElement) and value.field == self.field_q()
        raise InvalidConfigError(f"unknown domain kind {kind}")

    # -- value codecs -----------------------------------------------------------

    def encode_value(self, value):
        if self.kind in _RATIONAL_VALUED:
            return format_rational(value)
        return value.to_json()

    def parse_value(self, data):
        if self.kind in _RATIONAL_VALUED:
            return parse_rational(data)
        if self.kind is DomainKind.NUMBER_FIELD:
            return nf_element_from_json(self.number_field, data)
        if self.kind is DomainKind.FINITE_FIELD:
            return fq_element_from_json(self.field_q(), data)
        raise InvalidConfigError(f"unknown domain kind {self.kind}")

    def zero_value(self):
        if self.kind in _RATIONAL_VALUED:
            return Fraction(0)
        if self.kind is DomainKind.NUMBER_FIELD:
            return self.number_field.zero
        return self.field_q().zero

    def one_value(self):
        if self.kind in _RATIONAL_VALUED:
            return Fraction(1)
        if self.kind is DomainKind.NUMBER_FIELD:
            return self.number_field.one
        return self.field_q().one

    def int_value(self, n: int):
        if self.kind in _RATIONAL_VALUED:
            return Fraction(n)
        if self.kind is DomainKind.NUMBER_FIELD:
            return self.number_field.from_rational(n)
        return self.field_q().from_int(n)

    def describe(self) -> str:
        kind = self.kind
        if kind is DomainKind.INTEGERS:
            return "Z"
        if kind is DomainKind.RATIONALS:
            return "Q"
        if kind is DomainKind.Z_INV_N:
            return f"Z[1/{self.inv_n}]"
        if kind is DomainKind.NUMBER_FIELD:
            base = f"Q[t]/({self.number_field.minpoly.pretty('t')})"
            return f"integer span of {base}" if self.subring_integral else base
        if kind is DomainKind.REALS:
            return "R (rational moves)"
        if kind is DomainKind.FINITE_FIELD:
            return f"F_{self.field_q().q}"
        return "algebraically closed (rational moves)"

    def to_json(self):
        out = {"type": self.kind.value}
        if self.kind is DomainKind.Z_INV_N:
            out["n"] = self.inv_n
        elif self.kind is DomainKind.NUMBER_FIELD:
            out["minpoly"] = self.number_field.to_json()
            out["subring"] = "integer_span" if self.subring_integral else "field"
        elif self.kind is DomainKind.FINITE_FIELD:
            out["p"] = self.p
            out["k"] = self.k or 1
        return out

    @classmethod
    def from_json(cls, data) -> "DomainSpec":
        kind = DomainKind(data["type"])
        if kind is DomainKind.Z_INV_N:
            spec = cls(kind, inv_n=int(data["n"]))
        elif kind is DomainKind.NUMBER_FIELD:
            spec = cls(
                kind,
                number_field=NumberField.from_json(data["minpoly"]),
                subring_integral=data.get("subring", "field") == "integer_span",
            )
        elif kind is DomainKind.FINITE_FIELD:
            spec = cls(kind, p=int(data["p"]), k=int(data.get("k", 1)))
        else:
            spec = cls(kind)
        spec.validate()
        return spec


def integers() -> DomainSpec:
    return DomainSpec(DomainKind.INTEGERS)


def rationals() -> DomainSpec:
    return DomainSpec(DomainKind.RATIONALS)


def z_inv_n(n: int) -> DomainSpec:
    spec = DomainSpec(DomainKind.Z_INV_N, inv_n=n)
    spec.validate()
    return spec


def number_field_domain(field: NumberField, integral: bool = False) -> DomainSpec:
    return DomainSpec(DomainKind.NUMBER_FIELD, number_field=field, subring_integral=integral)


def reals() -> DomainSpec:
    return DomainSpec(DomainKind.REALS)


def finite_field_domain(p: int, k: int = 1) -> DomainSpec:
    spec = DomainSpec(DomainKind.FINITE_FIELD, p=p, k=k)
    spec.validate()
    return spec


def algebraically_closed() -> DomainSpec:
    return DomainSpec(DomainKind.ALGEBRAICALLY_CLOSED)


@dataclass(frozen=True)
class GameConfig:
    domain: DomainSpec
    degree: int
    player_one: Player

    def validate(self):
        if self.degree < 2:
            raise InvalidConfigError("degree must be at least 2 (degree 1 is trivial)")
        self.domain.validate()

    @property
    def last_player(self) -> Player:
        """Who makes the final (d+1-th) assignment."""
        return self.player_one if self.degree % 2 == 0 else self.player_one.opponent

    def to_json(self):
        return {
            "domain": self.domain.to_json(),
            "degree": self.degree,
            "player_one": self.player_one.value,
        }

    @classmethod
    def from_json(cls, data) -> "GameConfig":
        config = cls(
            domain=DomainSpec.from_json(data["domain"]),
            degree=int(data["degree"]),
            player_one=Player(data["player_one"]),
        )
        config.validate()
        return config


@dataclass(frozen=True)
class Move:
    index: int
    value: object

    def to_json(self, domain: DomainSpec):
        return {"index": self.index, "value": domain.encode_value(self.value)}


@dataclass(frozen=True)
class GameState:
    config: GameConfig
    assigned: tuple  # length d+1, None for open slots
    history: tuple  # of Move

    @property
    def turn(self) -> Player:
        mover_is_one = len(self.history) % 2 == 0
        return self.config.player_one if mover_is_one else self.config.player_one.opponent

    @property
    def open_indices(self) -> tuple:
        return tuple(i for i, v in enumerate(self.assigned) if v is None)

    @property
    def is_complete(self) -> bool:
        return all(v is not None for v in self.assigned)

    def final_poly(self) -> Poly:
        if not self.is_complete:
            raise IncompleteGameError("game is not over yet")
        return Poly(self.assigned)

    def partial_value(self, index: int):
        return self.assigned[index]


def new_game(config: GameConfig) -> GameState:
    config.validate()
    return GameState(config=config, assigned=(None,) * (config.degree + 1), history=())


def validate_move(state: GameState, move: Move):
    config = state.config
    if state.is_complete:
        raise GameOverError("all coefficients are already assigned")
    if not 0 <= move.index <= config.degree:
        raise NotInDomainError(f"index {move.index} out of range 0..{config.degree}")
    if state.assigned[move.index] is not None:
        raise IndexTakenError(f"coefficient a_{move.index} is already set")
    if not config.domain.contains(move.value):
        raise NotInDomainError(
            f"value is not an element of {config.domain.describe()}"
        )
    if move.index in (0, config.degree) and not move.value:
        raise ZeroForbiddenError(
            f"a_{move.index} must be nonzero"
        )


def validate_and_apply(state: GameState, move: Move) -> GameState:
    validate_move(state, move)
    assigned = list(state.assigned)
    assigned[move.index] = move.value
    return GameState(
        config=state.config,
        assigned=tuple(assigned),
        history=state.history + (move,),
    )


# -- verdicts and certificates ---------------------------------------------------


@dataclass(frozen=True)
class RootWitness:
    kind = "root_witness"
    value: object

    def to_json(self, domain: DomainSpec):
        return {"kind": self.kind, "value": domain.encode_value(self.value)}


@dataclass(frozen=True)
class CandidatesExhausted:
    """No-root certificate over Q: every root candidate evaluates nonzero."""

    kind = "candidates_exhausted"
    candidates: tuple  # sorted Fractions
    evaluations: tuple  # f(candidate), same order

    def to_json(self, domain: DomainSpec):
        return {
            "kind": self.kind,
            "candidates": [format_rational(c) for c in self.candidates],
            "evaluations": [format_rational(v) for v in self.evaluations],
        }


@dataclass(frozen=True)
class TragerCertificate:
    """No-root certificate in a number field: the recorded norm transcript."""

    kind = "norm_transcript"
    transcript: TragerTranscript

    def to_json(self, domain: DomainSpec):
        return {"kind": self.kind, "transcript": self.transcript.to_json()}


@dataclass(frozen=True)
class SturmCount:
    kind = "sturm_count"
    distinct_real_roots: int

    def to_json(self, domain: DomainSpec):
        return {"kind": self.kind, "distinct_real_roots": self.distinct_real_roots}


@dataclass(frozen=True)
class FqEvaluationTable:
    kind = "fq_evaluation_table"
    entries: tuple  # of (element, value), all q elements

    def to_json(self, domain: DomainSpec):
        return {
            "kind": self.kind,
            "entries": [[b.to_json(), v.to_json()] for b, v in self.entries],
        }


@dataclass(frozen=True)
class NonconstantOverClosedField:
    """Wanda's trivial certificate over an algebraically closed domain."""

    kind = "algebraically_closed"

    def to_json(self, domain: DomainSpec):
        return {"kind": self.kind}


@dataclass(frozen=True)
class Verdict:
    winner: Player
    certificate: object

    def to_json(self, domain: DomainSpec):
        return {"winner": self.winner.value, "certificate": self.certificate.to_json(domain)}


def _sorted_rationals(values):
    return tuple(sorted(values))


def verdict(state: GameState) -> Verdict:
    """Decide the finished game; history-independent."""
    f = state.final_poly()
    kind = state.config.domain.kind
    if kind in (DomainKind.INTEGERS, DomainKind.RATIONALS, DomainKind.Z_INV_N):
        roots = rational_roots(f)
        if roots:
            witness = min(roots, key=lambda r: (abs(r), r < 0))
            return Verdict(Player.WANDA, RootWitness(witness))
        cands = _sorted_rationals(rational_root_candidates(f))
        evals = tuple(f.evaluate(c) for c in cands)
        return Verdict(Player.NORA, CandidatesExhausted(cands, evals))
    if kind is DomainKind.NUMBER_FIELD:
        roots, transcript = roots_in_K(state.config.domain.number_field, f)
        if roots:
            witness = min(roots, key=lambda z: tuple(z.coords))
            return Verdict(Player.WANDA, RootWitness(witness))
        return Verdict(Player.NORA, TragerCertificate(transcript))
    if kind is DomainKind.REALS:
        count = sturm_real_root_count(f)
        winner = Player.WANDA if count >= 1 else Player.NORA
        return Verdict(winner, SturmCount(count))
    if kind is DomainKind.FINITE_FIELD:
        table = tuple(fq_eval_table(state.config.domain.field_q(), f))
        roots = [b for b, v in table if not v]
        if roots:
            witness = min(roots, key=lambda b: b.index)
            return Verdict(Player.WANDA, RootWitness(witness))
        return Verdict(Player.NORA, FqEvaluationTable(table))
    if kind is DomainKind.ALGEBRAICALLY_CLOSED:
        return Verdict(Player.WANDA, NonconstantOverClosedField())
    raise InvalidConfigError(f"no decision procedure for domain {kind}")


# -- game records -----------------------------------------------------------------


def record_to_json(state: GameState, include_verdict: bool = True) -> dict:
    domain = state.config.domain
    out = {
        "config": state.config.to_json(),
        "moves": [m.to_json(domain) for m in state.history],
    }
    if include_verdict and state.is_complete:
        out["verdict"] = verdict(state).to_json(domain)
    return out


def record_dumps(record: dict) -> str:
    """Canonical serialization used everywhere records are written."""
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def replay_record(record: dict) -> GameState:
    config = GameConfig.from_json(record["config"])
    state = new_game(config)
    for raw in record["moves"]:
        move = Move(index=int(raw["index"]), value=config.domain.parse_value(raw["value"]))
        state = validate_and_apply(state, move)
    return state
