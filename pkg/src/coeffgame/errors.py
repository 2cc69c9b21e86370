"""Exception types shared across the engine.

Game rule violations carry a stable machine-readable ``code`` so the HTTP
layer and the CLI can surface them uniformly.
"""


class CoeffGameError(Exception):
    """Base class for all engine errors."""


class UniverseMismatchError(CoeffGameError, TypeError):
    """Raised when values from incompatible coefficient universes are mixed."""


class GameRuleError(CoeffGameError):
    """A move or query that violates the rules of the game."""

    code = "RuleViolation"


class IndexTakenError(GameRuleError):
    code = "IndexTaken"


class ZeroForbiddenError(GameRuleError):
    code = "ZeroForbidden"


class NotInDomainError(GameRuleError):
    code = "NotInDomain"


class GameOverError(GameRuleError):
    code = "GameOver"


class IncompleteGameError(GameRuleError):
    code = "IncompleteGame"


class InvalidConfigError(GameRuleError):
    code = "InvalidConfig"


class PolicyError(CoeffGameError):
    """A strategy policy was asked to move in a position it does not cover."""


class SearchCapError(CoeffGameError):
    """A verified search exceeded its configured safety cap (diagnostic only)."""


class SolverLimitError(CoeffGameError):
    """Instance exceeds the exhaustive solver's state-count guard."""
