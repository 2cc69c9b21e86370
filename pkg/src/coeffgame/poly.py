"""Exact dense univariate polynomial arithmetic over the game's value universes.

A polynomial is a trimmed tuple of coefficients indexed by degree; the zero
polynomial is the empty tuple.  Coefficients may be ints/Fractions, number
field elements or finite field elements; every operation is exact and pure,
so values can be shared freely between threads.

Rationals are plain ``fractions.Fraction`` values: the stdlib type already
keeps them reduced with a positive denominator and prints the canonical
"p/q" form (denominator omitted when 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


def parse_rational(text) -> Fraction:
    """Parse "p/q" (or "p") into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(value) -> str:
    return str(Fraction(value))


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            head = self.coeffs[-1] * other.coeffs[-1]
            zero = head - head  # zero of the product universe
            out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply every coefficient by the scalar ``c``."""
        if not c:
            return Poly()
        return Poly([a * c for a in self.coeffs])

    def shift_up(self, n: int):
        """Multiply by x^n."""
        if self.is_zero:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        return Poly([zero] * n + list(self.coeffs))

    # -- evaluation and calculus --------------------------------------------

    def evaluate(self, x):
        """Horner evaluation; ``x`` may live in an extension of the universe."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.evaluate(x)

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "Poly"):
        """Substitute ``inner`` for x."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    # -- field-coefficient division -----------------------------------------

    def divmod(self, other: "Poly"):
        """Long division; coefficients must support exact division."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(), self
        rem = list(self.coeffs)
        blc = other.lc
        if isinstance(blc, int):
            blc = Fraction(blc)
        bdeg = other.degree
        zero = rem[-1] - rem[-1]
        quo = [zero] * (len(rem) - bdeg)
        for k in range(len(rem) - bdeg - 1, -1, -1):
            t = rem[k + bdeg] / blc
            if t:
                quo[k] = t
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - t * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly"):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.lc
        if isinstance(lead, int):
            lead = Fraction(lead)
        return Poly([c / lead for c in self.coeffs])

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list:
        """Coefficient strings, index = degree (rational universe)."""
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "Poly":
        return cls([parse_rational(c) for c in data])

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                term = cs
            else:
                xs = var if i == 1 else f"{var}^{i}"
                if cs == "1":
                    term = xs
                elif cs == "-1":
                    term = f"-{xs}"
                elif " " in cs or "+" in cs or "-" in cs.lstrip("-"):
                    term = f"({cs}){xs}"
                else:
                    term = f"{cs}{xs}"
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                text += " - " + term[1:]
            else:
                text += " + " + term
        return text


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over a field; gcd(f, 0) = monic(f)."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


gcd_poly = poly_gcd


def poly_xgcd(f: Poly, g: Poly):
    """Extended Euclid: returns (d, u, v) with u*f + v*g = d (d not normalized)."""
    r0, r1 = f, g
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def squarefree_part(f: Poly) -> Poly:
    """Monic f / gcd(f, f'); valid in characteristic 0 or char > deg f."""
    if f.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    char = _coefficient_characteristic(f)
    if char and char <= f.degree:
        raise ValueError("squarefree part needs characteristic 0 or > degree")
    if f.degree == 0:
        return f.monic()
    g = poly_gcd(f, f.derivative())
    return f.exact_div(g).monic()


def _coefficient_characteristic(f: Poly) -> int:
    for c in f.coeffs:
        char = getattr(c, "characteristic", None)
        if char is not None:
            return char
    return 0


def reverse(f: Poly, degree: int | None = None) -> Poly:
    """Swap a_0 and a_d: x^d * f(1/x) for the declared degree d.

    Only defined on fully assigned polynomials (both end coefficients
    nonzero), so nonzero roots invert exactly.
    """
    if f.is_zero:
        raise ValueError("cannot reverse the zero polynomial")
    d = f.degree if degree is None else degree
    if f.degree != d or not f.coeffs[0]:
        raise ValueError("reversal is only defined on fully assigned polynomials")
    return Poly(list(reversed(f.coeffs)))


# -- rational root machinery --------------------------------------------------


def clear_denominators(f: Poly):
    """Scale a rational polynomial to integer coefficients.

    Returns (integer coefficient list, multiplier N) with N * f integral.
    """
    mult = 1
    for c in f.coeffs:
        mult = mult * Fraction(c).denominator // math.gcd(mult, Fraction(c).denominator)
    return [int(Fraction(c) * mult) for c in f.coeffs], mult


def factorize(n: int) -> dict:
    """Trial-division prime factorization of n >= 1."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 5
    while q * q <= n:
        for p in (q, q + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        q += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_root_candidates(f: Poly) -> frozenset:
    """Finite superset of all rational roots, from the end coefficients.

    Every candidate +-p/q (lowest terms) has p dividing the cleared constant
    and q dividing the cleared leading coefficient; the set is closed under
    negation and contains no zero.
    """
    if f.is_zero or not f.coeffs[0] or f.degree < 1:
        raise ValueError("candidates need a nonzero constant and leading coefficient")
    ints, _ = clear_denominators(f)
    const, lead = abs(ints[0]), abs(ints[-1])
    cands = set()
    for p in divisors(const):
        for q in divisors(lead):
            r = Fraction(p, q)
            cands.add(r)
            cands.add(-r)
    return frozenset(cands)


def rational_roots(f: Poly) -> frozenset:
    """Exactly the rational roots of f (requires nonzero end coefficients)."""
    return frozenset(r for r in rational_root_candidates(f) if not f.evaluate(r))
