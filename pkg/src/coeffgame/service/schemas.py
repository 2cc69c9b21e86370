"""Pydantic request/response models for the /v1 API.

Values travel in the per-domain wire encodings: rationals as "p/q" strings,
number field elements as arrays of rational-coordinate strings, finite field
elements as arrays of power-basis integers.
"""

from __future__ import annotations

from typing import Any, List, Literal, Optional, Union

from pydantic import BaseModel, Field

WireValue = Union[str, int, List[str], List[int]]


class DomainModel(BaseModel):
    type: Literal[
        "integers",
        "rationals",
        "z_inv_n",
        "number_field",
        "reals",
        "finite_field",
        "algebraically_closed",
    ]
    n: Optional[int] = None
    minpoly: Optional[List[str]] = None
    subring: Optional[Literal["field", "integer_span"]] = None
    p: Optional[int] = None
    k: Optional[int] = None


class ConfigModel(BaseModel):
    domain: DomainModel
    degree: int = Field(ge=2)
    player_one: Literal["wanda", "nora"]


class CreateGameRequest(BaseModel):
    config: ConfigModel
    engine_sides: List[Literal["wanda", "nora"]] = Field(default_factory=list)


class MoveRequest(BaseModel):
    index: int
    value: WireValue


class MoveModel(BaseModel):
    index: int
    value: WireValue


class StateModel(BaseModel):
    id: str
    config: ConfigModel
    domain_description: str
    assigned: List[Optional[WireValue]]
    turn: Literal["wanda", "nora"]
    moves: List[MoveModel]
    complete: bool
    engine_sides: List[str]


class CreateGameResponse(BaseModel):
    id: str
    state: StateModel


class VerdictModel(BaseModel):
    winner: Literal["wanda", "nora"]
    certificate: Any


class EngineMoveResponse(BaseModel):
    move: MoveModel
    policy: str
    explanation: str
    state: StateModel


class ErrorModel(BaseModel):
    code: str
    detail: str
