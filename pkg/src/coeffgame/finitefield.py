"""Arithmetic in F_q for q = p^k (k <= 3), root finding and permutation tests.

Moduli for the extension fields are pinned so element encodings are stable
across runs:  F_4: t^2+t+1,  F_8: t^3+t+1,  F_9: t^2+1.  Elements are
tuples of residues in the power basis; the canonical enumeration maps the
element with coordinates (c_0, ..., c_{k-1}) to the index sum(c_i * p^i),
so index 1 is always the field's one.

Everything here is exhaustive by design: q is tiny, so root sets come from
full evaluation tables and squares come from a squaring table.
"""

from __future__ import annotations

from typing import Sequence

from .errors import UniverseMismatchError
from .poly import Poly

_SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)

_MODULI = {
    (2, 2): (1, 1, 1),  # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (3, 2): (1, 0, 1),  # t^2 + 1
}

_FIELD_CACHE: dict = {}


def fq_field(p: int, k: int = 1) -> "FqField":
    """The supported field with q = p^k elements (pinned modulus)."""
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FqField(p, k)
    return _FIELD_CACHE[key]


class FqField:
    """F_q with a fixed irreducible modulus for k > 1."""

    def __init__(self, p: int, k: int):
        if p not in _SUPPORTED_PRIMES:
            raise ValueError(f"{p} is not a supported prime")
        if k == 1:
            modulus = None
        elif (p, k) in _MODULI:
            modulus = _MODULI[(p, k)]
        else:
            raise ValueError(f"unsupported field F_{p}^{k}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        if modulus is not None:
            self._check_modulus_irreducible()
        self._elements = [
            FqElement(self, self._index_to_coords(i)) for i in range(self.q)
        ]
        self._squares = frozenset((e * e).index for e in self._elements)

    def _index_to_coords(self, i: int) -> tuple:
        coords = []
        for _ in range(self.k):
            coords.append(i % self.p)
            i //= self.p
        return tuple(coords)

    def _check_modulus_irreducible(self):
        # Degree 2 or 3: irreducible over F_p iff it has no roots there.
        mod = self.modulus
        for a in range(self.p):
            value = 0
            for c in reversed(mod):
                value = (value * a + c) % self.p
            if value == 0:
                raise ValueError("pinned modulus has a root; not irreducible")

    # -- elements --------------------------------------------------------------

    def element(self, coords: Sequence[int]) -> "FqElement":
        cs = tuple(int(c) % self.p for c in coords)
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} coordinates")
        return FqElement(self, cs)

    def from_int(self, value: int) -> "FqElement":
        coords = (value % self.p,) + (0,) * (self.k - 1)
        return FqElement(self, coords)

    @property
    def zero(self):
        return self._elements[0]

    @property
    def one(self):
        return self._elements[1]

    def elements(self):
        """All q elements in canonical index order."""
        return list(self._elements)

    def nonzero_elements(self):
        return self._elements[1:]

    def by_index(self, i: int) -> "FqElement":
        return self._elements[i]

    def is_square(self, e: "FqElement") -> bool:
        return e.index in self._squares

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("FqField", self.p, self.k))

    def __repr__(self):
        return f"FqField(p={self.p}, k={self.k})"

    def to_json(self):
        return {"p": self.p, "k": self.k}


class FqElement:
    """Element of F_q as residues in the power basis of the modulus root."""

    __slots__ = ("field", "coords")

    def __init__(self, field: FqField, coords: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FqElement is immutable")

    @property
    def index(self) -> int:
        i = 0
        for c in reversed(self.coords):
            i = i * self.field.p + c
        return i

    @property
    def characteristic(self) -> int:
        return self.field.p

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise UniverseMismatchError("elements of different finite fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return self.coords == co.coords

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coords))

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        p = self.field.p
        return FqElement(self.field, tuple((a + b) % p for a, b in zip(self.coords, co.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple((-a) % p for a in self.coords))

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
        field = self.field
        p, k = field.p, field.k
        if k == 1:
            return FqElement(field, ((self.coords[0] * co.coords[0]) % p,))
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(co.coords):
                    conv[i + j] += a * b
        mod = field.modulus
        # Reduce by the monic modulus.
        for deg in range(2 * k - 2, k - 1, -1):
            c = conv[deg] % p
            if c:
                for j in range(k):
                    conv[deg - k + j] -= c * mod[j]
            conv[deg] = 0
        return FqElement(field, tuple(c % p for c in conv[:k]))

    __rmul__ = __mul__

    def inverse(self) -> "FqElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        # q is tiny; scan the multiplication table.
        for e in self.field.nonzero_elements():
            if (self * e) == self.field.one:
                return e
        raise ArithmeticError("no inverse found; modulus not irreducible")

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

    def __str__(self):
        if self.field.k == 1:
            return str(self.coords[0])
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        if self.field.k == 1:
            return f"Fq({self.coords[0]} mod {self.field.p})"
        return f"Fq{self.coords} over F_{self.field.p}^{self.field.k}"

    def to_json(self):
        return list(self.coords)


def fq_element_from_json(field: FqField, data) -> FqElement:
    return field.element([int(c) for c in data])


# -- root finding and permutation tests ----------------------------------------


def fq_eval_table(field: FqField, f: Poly):
    """[(b, f(b))] over every element of the field, in canonical order."""
    return [(b, f.evaluate(b)) for b in field.elements()]


def fq_roots(field: FqField, f: Poly) -> frozenset:
    """All roots of f in F_q, by full enumeration."""
    if f.is_zero:
        raise ValueError("root set of the zero polynomial is everything")
    return frozenset(b for b, value in fq_eval_table(field, f) if not value)


def is_permutation_poly(field: FqField, g: Poly) -> bool:
    """True iff x -> g(x) is a bijection of F_q."""
    if g.is_zero:
        raise ValueError("zero polynomial is not a map worth asking about")
    image = {g.evaluate(b).coords for b in field.elements()}
    return len(image) == field.q


def dickson_predicate_deg3(field: FqField, g: Poly) -> bool:
    """Membership in the classified family of degree-3 permutation maps.

    Decided without enumeration.  Away from characteristic 3, the family is
    a3*(x+b)^3 + c and exists only when q is not 1 mod 3; matching
    coefficients forces b = a2/(3*a3) and a1 = 3*a3*b^2.  In characteristic
    3 cubing is additive, so membership means a2 = 0 and either a1 = 0 (pure
    cube) or -a1/a3 a non-square.
    """
    if g.degree != 3:
        raise ValueError("predicate is only defined for degree 3")
    a3, a2, a1 = g.coeffs[3], g.coeffs[2], g.coeffs[1]
    if field.p == 3:
        if a2:
            return False
        if not a1:
            return True
        return not field.is_square(-a1 / a3)
    if field.q % 3 == 1:
        return False
    three = field.from_int(3)
    b = a2 / (three * a3)
    return a1 == three * a3 * b * b
