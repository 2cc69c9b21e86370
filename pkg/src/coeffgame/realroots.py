"""Exact real-root counting for rational polynomials via Sturm sequences.

The chain starts from the squarefree part, so the count is the number of
distinct real roots; existence is all the game verdict needs.  Games played
over the reals restrict moves to rational values (they are dense, and every
winning choice in the supporting analysis satisfies an open inequality), so
the verdict stays exactly decidable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, squarefree_part


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder chain with the sign vectors at minus/plus infinity."""

    chain: tuple  # of Poly over Q, starting with the squarefree part
    signs_at_minus_inf: tuple
    signs_at_plus_inf: tuple

    @staticmethod
    def _variations(signs) -> int:
        nonzero = [s for s in signs if s]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a * b < 0)

    @property
    def count(self) -> int:
        return self._variations(self.signs_at_minus_inf) - self._variations(
            self.signs_at_plus_inf
        )


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def sturm_chain(f: Poly) -> SturmChain:
    """Build the chain for a nonconstant rational polynomial."""
    if f.is_zero or f.degree < 1:
        raise ValueError("Sturm chain needs degree >= 1")
    head = squarefree_part(f)
    chain = [head, head.derivative()]
    while chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            # Cannot happen for a squarefree head; guard against misuse.
            break
        chain.append(-rem)
    at_minus = tuple(
        _sign(p.lc) * (1 if p.degree % 2 == 0 else -1) for p in chain if not p.is_zero
    )
    at_plus = tuple(_sign(p.lc) for p in chain if not p.is_zero)
    return SturmChain(tuple(chain), at_minus, at_plus)


def sturm_real_root_count(f: Poly) -> int:
    """Number of distinct real roots of f."""
    return sturm_chain(f).count


def has_real_root(f: Poly) -> bool:
    return sturm_real_root_count(f) >= 1
