"""Arithmetic in a number field K = Q(theta) and exact root detection in K.

The field is presented as Q[t]/(m(t)) for a monic irreducible integer
polynomial m.  Root detection for f in K[x] follows the norm route: take the
squarefree part, translate by k*theta until the norm polynomial (a resultant,
computed by fraction-free elimination over Q[x]) is squarefree, factor the
norm over Q, and read roots off the monic linear gcds of f with the norm
factors back in K[x].  Every run records a replayable transcript that serves
as the machine-checkable no-root certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SearchCapError, UniverseMismatchError
from .poly import Poly, format_rational, parse_rational, poly_gcd, poly_xgcd, squarefree_part
from .qfactor import FactorizationQ, factor_over_Q, is_irreducible_over_Q

_SHIFT_CAP = 64


class NumberField:
    """Q(theta) for theta a root of a monic irreducible integer polynomial."""

    def __init__(self, minpoly: Poly):
        coeffs = [Fraction(c) for c in minpoly.coeffs]
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("minimal polynomial must have integer coefficients")
        if minpoly.degree < 2:
            raise ValueError("number field degree must be at least 2")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if not is_irreducible_over_Q(minpoly):
            raise ValueError("minimal polynomial must be irreducible over Q")
        self.minpoly = Poly(coeffs)
        self.degree = minpoly.degree
        # theta^n, ..., theta^(2n-2) reduced to the power basis, for products.
        self._high_powers = self._reduce_powers()

    def _reduce_powers(self):
        n = self.degree
        powers = []
        current = [-c for c in self.minpoly.coeffs[:-1]]  # theta^n
        powers.append(tuple(current))
        for _ in range(n - 2):
            shifted = [Fraction(0)] + current[:-1]
            top = current[-1]
            current = [s + top * h for s, h in zip(shifted, powers[0])]
            powers.append(tuple(current))
        return powers

    # -- element constructors -------------------------------------------------

    def element(self, coords: Sequence) -> "NumberFieldElement":
        cs = [Fraction(c) for c in coords]
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        return NumberFieldElement(self, tuple(cs))

    def from_rational(self, value) -> "NumberFieldElement":
        cs = [Fraction(0)] * self.degree
        cs[0] = Fraction(value)
        return NumberFieldElement(self, tuple(cs))

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    @property
    def gen(self):
        cs = [Fraction(0)] * self.degree
        cs[1] = Fraction(1)
        return NumberFieldElement(self, tuple(cs))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NumberField", self.minpoly.coeffs))

    def __repr__(self):
        return f"NumberField({self.minpoly.pretty('t')})"

    def to_json(self):
        return [format_rational(c) for c in self.minpoly.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Poly([parse_rational(c) for c in data]))


class NumberFieldElement:
    """Element of K as rational coordinates in the power basis of theta."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("NumberFieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise UniverseMismatchError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return self.coords == co.coords

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.coords))

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return NumberFieldElement(self.field, tuple(a + b for a, b in zip(self.coords, co.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return self + (-co)

    def __rsub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return co + (-self)

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        n = self.field.degree
        conv = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(co.coords):
                conv[i + j] += a * b
        out = conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                high = self.field._high_powers[k - n]
                out = [o + c * h for o, h in zip(out, high)]
        return NumberFieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        rep = Poly(self.coords)
        d, u, _ = poly_xgcd(rep, self.field.minpoly)
        if d.degree != 0:
            raise ArithmeticError("minimal polynomial is not irreducible")
        scaled = u.scale(Fraction(1) / d.coeffs[0])
        coords = list(scaled.coeffs) + [Fraction(0)] * (self.field.degree - len(scaled.coeffs))
        return NumberFieldElement(self.field, tuple(coords[: self.field.degree]))

    def __truediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return self * co.inverse()

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return co * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_integral_coordinates(self) -> bool:
        """True when every power-basis coordinate is an integer."""
        return all(c.denominator == 1 for c in self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"NF({self.pretty()})"

    def pretty(self, sym: str = "t") -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = sym if i == 1 else f"{sym}^{i}"
                if c == 1:
                    parts.append(xs)
                elif c == -1:
                    parts.append(f"-{xs}")
                else:
                    parts.append(f"{c}*{xs}")
        if not parts:
            return "0"
        text = parts[0]
        for term in parts[1:]:
            text += " - " + term[1:] if term.startswith("-") else " + " + term
        return text

    def to_json(self):
        return [format_rational(c) for c in self.coords]


def nf_element_from_json(field: NumberField, data) -> NumberFieldElement:
    return field.element([parse_rational(c) for c in data])


def nf_inverse(z: NumberFieldElement) -> NumberFieldElement:
    return z.inverse()


# -- norm polynomial (resultant with the minimal polynomial) -------------------


def _det_bareiss(matrix):
    """Fraction-free determinant of a square matrix of rational Polys."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = Poly([Fraction(1)])
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if pivot_row is None:
                return Poly()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Poly()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det.scale(Fraction(sign)) if sign < 0 else det


def norm_polynomial(field: NumberField, f: Poly) -> Poly:
    """Product of f over all embeddings of K; a rational polynomial.

    Computed as the resultant in t of the minimal polynomial m(t) and f with
    theta replaced by t, via fraction-free elimination on the Sylvester
    matrix over Q[x].  Since m is monic the resultant equals the conjugate
    product exactly, and deg N(f) = [K:Q] * deg f.
    """
    if f.is_zero:
        raise ValueError("norm of the zero polynomial")
    n = field.degree
    lifted = Poly(
        [c if isinstance(c, NumberFieldElement) else field.from_rational(c) for c in f.coeffs]
    )
    # Collect f as a polynomial in t with coefficients in Q[x].
    t_coeffs = []
    for i in range(n):
        xs = [c.coords[i] for c in lifted.coeffs]
        t_coeffs.append(Poly(xs))
    while len(t_coeffs) > 1 and t_coeffs[-1].is_zero:
        t_coeffs.pop()
    e = len(t_coeffs) - 1
    if e == 0:
        return t_coeffs[0] ** n
    m_coeffs = [Poly([c]) for c in field.minpoly.coeffs]  # degree n in t
    size = n + e
    rows = []
    for shift in range(e):
        row = [Poly()] * size
        for idx, entry in enumerate(reversed(m_coeffs)):
            row[shift + idx] = entry
        rows.append(row)
    for shift in range(n):
        row = [Poly()] * size
        for idx, entry in enumerate(reversed(t_coeffs)):
            row[shift + idx] = entry
        rows.append(row)
    return _det_bareiss(rows)


def _shift_candidates():
    """Translation amounts in the pinned scan order: integers, then halves."""
    yield Fraction(0)
    for k in range(1, _SHIFT_CAP + 1):
        yield Fraction(k)
        yield Fraction(-k)
    for k in range(_SHIFT_CAP):
        yield Fraction(2 * k + 1, 2)
        yield Fraction(-(2 * k + 1), 2)


def _translate(field: NumberField, f: Poly, k: Fraction) -> Poly:
    """f(x - k*theta) as a polynomial over K."""
    shift = Poly([-(field.gen * k), field.one])
    lifted = Poly([c if isinstance(c, NumberFieldElement) else field.from_rational(c) for c in f.coeffs])
    return lifted.compose(shift)


def _is_squarefree_q(f: Poly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_norm_shift(field: NumberField, f: Poly):
    """First k in the scan order with N(f(x - k*theta)) squarefree.

    Requires f itself squarefree over K.  Returns (k, shifted f, norm).
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise ValueError("polynomial must be squarefree over K")
    for k in _shift_candidates():
        shifted = _translate(field, f, k) if k else f
        norm = norm_polynomial(field, shifted)
        if _is_squarefree_q(norm):
            return k, shifted, norm
    raise SearchCapError("no squarefree translate found within the scan cap")


@dataclass(frozen=True)
class TragerTranscript:
    """Replayable record of one root-detection run in K[x]."""

    field: NumberField
    input: Poly
    squarefree: Poly
    shift: Fraction
    shifted: Poly
    norm: Poly
    norm_factors: FactorizationQ
    gcds: tuple  # of (norm factor Poly over Q, unit NumberFieldElement, monic gcd Poly over K)
    roots: tuple  # of NumberFieldElement

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "input": _poly_over_K_json(self.input),
            "squarefree": _poly_over_K_json(self.squarefree),
            "shift": format_rational(self.shift),
            "shifted": _poly_over_K_json(self.shifted),
            "norm": self.norm.to_json(),
            "norm_factors": {
                "unit": format_rational(self.norm_factors.unit),
                "factors": [[p.to_json(), m] for p, m in self.norm_factors.factors],
            },
            "gcds": [
                [factor.to_json(), unit.to_json(), _poly_over_K_json(g)]
                for factor, unit, g in self.gcds
            ],
            "roots": [r.to_json() for r in self.roots],
        }


def _poly_over_K_json(f: Poly):
    return [c.to_json() for c in f.coeffs]


def _lift_to_K(field: NumberField, f: Poly) -> Poly:
    return Poly([field.from_rational(c) for c in f.coeffs])


def _gcd_with_unit(f: Poly, g: Poly):
    """Monic gcd in K[x] plus the unit (leading coefficient) it discarded."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.lc, a.monic()


def roots_in_K(field: NumberField, f: Poly):
    """All roots of f in K with a replayable transcript.

    An empty root set together with the transcript is the no-root
    certificate: the norm factorization and the gcd list can be re-derived
    and checked independently.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("root search needs a nonzero polynomial of degree >= 1")
    lifted = Poly([c if isinstance(c, NumberFieldElement) else field.from_rational(c) for c in f.coeffs])
    sq = lifted
    g = poly_gcd(sq, sq.derivative())
    if g.degree > 0:
        sq = sq.exact_div(g)
    sq = sq.monic()
    k, shifted, norm = squarefree_norm_shift(field, sq)
    factorization = factor_over_Q(norm)
    gcds = []
    roots = []
    for factor, _mult in factorization.factors:
        unit, gg = _gcd_with_unit(shifted, _lift_to_K(field, factor))
        gcds.append((factor, unit, gg))
        if gg.degree == 1:
            shifted_root = -gg.coeffs[0]
            root = shifted_root - field.gen * k
            roots.append(root)
    for root in roots:
        if lifted.evaluate(root):
            raise ArithmeticError("root candidate failed exact re-evaluation")
    roots.sort(key=lambda z: tuple(z.coords))
    transcript = TragerTranscript(
        field=field,
        input=lifted,
        squarefree=sq,
        shift=k,
        shifted=shifted,
        norm=norm,
        norm_factors=factorization,
        gcds=tuple(gcds),
        roots=tuple(roots),
    )
    return frozenset(roots), transcript


def s_unit_bound(n: int, s: int) -> int:
    """Solution-count bound (2^35 n^2)^(n^3 s); diagnostic quantity only."""
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    return (2**35 * n * n) ** (n**3 * s)
