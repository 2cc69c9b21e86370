"""Exact-arithmetic engine for the coefficient-choosing game.

Two players alternately fix the coefficients of a degree-d polynomial over a
chosen domain; one wants the finished polynomial to have a root in the
fraction field, the other wants it rootless.  The package plays, analyzes
and certifies these games over the integers, the rationals, rings Z[1/N],
number fields, the reals, finite fields and algebraically closed fields.
"""

from .game import (
    DomainKind,
    DomainSpec,
    GameConfig,
    GameState,
    Move,
    Player,
    Verdict,
    algebraically_closed,
    finite_field_domain,
    integers,
    new_game,
    number_field_domain,
    rationals,
    reals,
    record_to_json,
    replay_record,
    validate_and_apply,
    verdict,
    z_inv_n,
)
from .numberfield import NumberField, NumberFieldElement, roots_in_K, s_unit_bound
from .poly import Poly, rational_root_candidates, rational_roots
from .qfactor import FactorizationQ, factor_over_Q, is_irreducible_over_Q
from .realroots import sturm_real_root_count
from .solver import best_move_fq, solve_fq, verify_theorems
from .strategies import PolicyDecision, policy_move

__version__ = "0.1.0"

__all__ = [
    "DomainKind",
    "DomainSpec",
    "FactorizationQ",
    "GameConfig",
    "GameState",
    "Move",
    "NumberField",
    "NumberFieldElement",
    "Player",
    "PolicyDecision",
    "Poly",
    "Verdict",
    "algebraically_closed",
    "best_move_fq",
    "factor_over_Q",
    "finite_field_domain",
    "integers",
    "is_irreducible_over_Q",
    "new_game",
    "number_field_domain",
    "policy_move",
    "rational_root_candidates",
    "rational_roots",
    "rationals",
    "reals",
    "record_to_json",
    "replay_record",
    "roots_in_K",
    "s_unit_bound",
    "solve_fq",
    "sturm_real_root_count",
    "validate_and_apply",
    "verdict",
    "verify_theorems",
    "z_inv_n",
]
