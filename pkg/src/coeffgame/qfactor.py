"""Complete factorization of rational polynomials into irreducibles.

Pipeline: squarefree decomposition (Yun), factorization modulo a small odd
prime (Berlekamp), quadratic Hensel lifting past a Mignotte-style coefficient
bound, then subset recombination with trial division (Zassenhaus).  Factors
are returned as primitive integer polynomials with positive leading
coefficient; a rational unit carries the rest, so the product reconstructs
the input bit-exactly.

Internal helpers work on trimmed lists of ints (index = degree), either over
Z or over Z/p for a small prime p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .poly import Poly, clear_denominators, poly_gcd

# -- dense integer polynomial helpers (lists of ints, index = degree) ---------


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _content(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
    return g


def _primitive(a):
    """(content-with-sign, primitive positive-lc polynomial)."""
    if not a:
        return 0, []
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return g, [c // g for c in a]


def _divmod_exact(a, b):
    """Exact division of integer polynomials; returns None if it fails."""
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c % b[-1]:
            return None
        t = c // b[-1]
        quo[k] = t
        if t:
            for j, y in enumerate(b):
                rem[k + j] -= t * y
    if any(rem):
        return None
    return _trim(quo)


def _max_norm(a) -> int:
    return max((abs(c) for c in a), default=0)


def _trunc_sym(a, m):
    """Coefficients reduced into the symmetric range (-m/2, m/2]."""
    out = []
    half = m // 2
    for c in a:
        r = c % m
        if r > half:
            r -= m
        out.append(r)
    return _trim(out)


# -- arithmetic mod a small prime p -------------------------------------------


def _gp_trim(a, p):
    a = [c % p for c in a]
    return _trim(a)


def _gp_add(a, b, p):
    return _gp_trim(_add(a, b), p)


def _gp_sub(a, b, p):
    return _gp_trim(_sub(a, b), p)


def _gp_mul(a, b, p):
    return _gp_trim(_mul(a, b), p)


def _gp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    rem = [c % p for c in a]
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    for k in range(len(rem) - len(b), -1, -1):
        t = rem[k + len(b) - 1] * inv % p
        quo[k] = t
        if t:
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - t * y) % p
    return _trim(quo), _trim(rem)


def _gp_gcd(a, b, p):
    while b:
        a, b = b, _gp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _gp_gcdex(a, b, p):
    """(u, v, g) monic g with u*a + v*b = g."""
    r0, r1 = _gp_trim(a, p), _gp_trim(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gp_sub(s0, _gp_mul(q, s1, p), p)
        t0, t1 = t1, _gp_sub(t0, _gp_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    norm = lambda c: _gp_trim([x * inv for x in c], p)
    return norm(s0), norm(t0), norm(r0)


def _gp_deriv(a, p):
    return _gp_trim([i * c for i, c in enumerate(a)][1:], p)


def _gp_pow_mod(base, e, mod, p):
    result = [1]
    base = _gp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gp_divmod(_gp_mul(result, base, p), mod, p)[1]
        base = _gp_divmod(_gp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gp_squarefree(a, p) -> bool:
    d = _gp_deriv(a, p)
    if not d:
        return False
    return len(_gp_gcd(a, d, p)) == 1


def _berlekamp(f, p):
    """Factor a squarefree polynomial mod p into monic irreducibles."""
    inv = pow(f[-1], -1, p)
    f = _gp_trim([c * inv for c in f], p)
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Frobenius matrix: row i holds x^(p*i) mod f.
    xp = _gp_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gp_divmod(_gp_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # Null space of (Q - I) transposed, over F_p.
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)] for j in range(n)]
    basis = _nullspace(mat, p)
    if len(basis) == 1:
        return [f]
    factors = [f]
    for v in basis:
        vpoly = _trim(list(v))
        if len(vpoly) <= 1:
            continue  # constant vectors do not split anything
        for s in range(p):
            if len(factors) == len(basis):
                return factors
            shifted = _gp_sub(vpoly, [s], p)
            next_factors = []
            for u in factors:
                g = _gp_gcd(u, shifted, p)
                if 0 < len(g) - 1 < len(u) - 1:
                    next_factors.append(g)
                    next_factors.append(_gp_divmod(u, g, p)[0])
                else:
                    next_factors.append(u)
            factors = next_factors
    return factors


def _nullspace(mat, p):
    """Basis of the null space of an n x n matrix over F_p (row vectors)."""
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for col, prow in pivots.items():
            v[col] = (-m[prow][fc]) % p
        basis.append(v)
    return basis


# -- Hensel lifting ------------------------------------------------------------


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h, s*g + t*h = 1 from mod m to mod m^2 (h monic)."""
    m2 = m * m
    e = _trunc_sym(_sub(f, _mul(g, h)), m2)
    q, r = _divmod_monic_mod(_mul(s, e), h, m2)
    g1 = _trunc_sym(_add(g, _add(_mul(t, e), _mul(q, g))), m2)
    h1 = _trunc_sym(_add(h, r), m2)
    b = _trunc_sym(_sub(_add(_mul(s, g1), _mul(t, h1)), [1]), m2)
    c, d = _divmod_monic_mod(_mul(s, b), h1, m2)
    s1 = _trunc_sym(_sub(s, d), m2)
    t1 = _trunc_sym(_sub(t, _add(_mul(t, b), _mul(c, g1))), m2)
    return g1, h1, s1, t1


def _divmod_monic_mod(a, b, m):
    """Division by a monic polynomial with coefficients mod m."""
    rem = [c % m for c in a]
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    for k in range(len(rem) - len(b), -1, -1):
        t = rem[k + len(b) - 1] % m
        quo[k] = t
        if t:
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - t * y) % m
    return _trunc_sym(quo, m), _trunc_sym(rem, m)


def _hensel_lift(p, f, factors, exponent):
    """Lift monic factors of f mod p to factors mod p**(2^ceil(log2 e)) >= p**e.

    lc(f) must be invertible mod p; lifted factors are monic except that the
    first one absorbs lc(f) during recombination (classic Zassenhaus setup).
    """
    r = len(factors)
    lc = f[-1]
    pl = p**exponent
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc_sym([c * inv % pl for c in f], pl)]
    k = r // 2
    d = max(1, math.ceil(math.log2(exponent)))
    g = [lc % p]
    for fac in factors[:k]:
        g = _gp_mul(g, fac, p)
    h = [1]
    for fac in factors[k:]:
        h = _gp_mul(h, fac, p)
    s, t, one = _gp_gcdex(g, h, p)
    assert one == [1]
    g, h, s, t = (_trunc_sym(x, p) for x in (g, h, s, t))
    m = p
    for _ in range(d):
        if m >= pl:
            break
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift_chain(p, g, factors[:k], exponent) + _hensel_lift_chain(
        p, h, factors[k:], exponent
    )


def _hensel_lift_chain(p, f, factors, exponent):
    return _hensel_lift(p, _trim(list(f)), factors, exponent)


# -- Zassenhaus factorization of primitive squarefree integer polynomials ------


def _mignotte_exponent(f, p):
    """Smallest l with p**l > 2*B for the factor coefficient bound B."""
    n = len(f) - 1
    bound = 2 * (math.isqrt(n + 1) + 1) * (1 << n) * _max_norm(f) * abs(f[-1])
    l = 1
    while p**l <= 2 * bound:
        l += 1
    return l


def _choose_prime(f):
    """Smallest odd prime keeping f squarefree with invertible lc."""
    p = 3
    while True:
        if _is_prime(p) and f[-1] % p:
            fp = _gp_trim(f, p)
            if len(fp) == len(f) and _gp_squarefree(fp, p):
                return p
        p += 2


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factor_squarefree_primitive(f):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    if len(f) - 1 <= 1:
        return [list(f)]
    p = _choose_prime(f)
    modular = _berlekamp(_gp_trim(f, p), p)
    if len(modular) == 1:
        return [list(f)]
    exponent = _mignotte_exponent(f, p)
    pl = p**exponent
    lifted = _hensel_lift(p, list(f), sorted(modular), exponent)
    # Make every lifted factor monic mod p^l; the leading coefficient is
    # reintroduced on each candidate product.
    lifted = [_trunc_sym(fac, pl) for fac in lifted]

    remaining = list(range(len(lifted)))
    current = list(f)
    found = []
    size = 1
    while 2 * size <= len(remaining):
        lc = current[-1]
        hit = None
        for subset in combinations(remaining, size):
            prod = [lc]
            for i in subset:
                prod = _trunc_sym(_mul(prod, lifted[i]), pl)
            _, cand = _primitive(prod)
            if not cand:
                continue
            # Cheap pretest on the constant term before trial division.
            if cand[0] and current[0] % cand[0]:
                continue
            quo = _divmod_exact(current, cand)
            if quo is not None:
                hit = (subset, cand, quo)
                break
        if hit is None:
            size += 1
            continue
        subset, cand, quo = hit
        found.append(cand)
        current = quo
        remaining = [i for i in remaining if i not in subset]
    if len(current) > 1:
        found.append(_primitive(current)[1])
    return found


# -- squarefree decomposition (Yun) --------------------------------------------


def _yun_squarefree(f: Poly):
    """[(squarefree monic part, multiplicity)] for a rational polynomial."""
    parts = []
    fp = f.monic()
    d = fp.derivative()
    g = poly_gcd(fp, d)
    c = fp.exact_div(g)
    w = d.exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        pi = poly_gcd(c, w)
        if pi.degree > 0:
            parts.append((pi, i))
        c = c.exact_div(pi)
        w = w.exact_div(pi) - c.derivative()
        i += 1
    return parts


# -- public surface -------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationQ:
    """unit * prod(factor^multiplicity) reconstructs the input exactly."""

    unit: Fraction
    factors: tuple  # of (Poly with integer coefficients, multiplicity)

    def expand(self) -> Poly:
        out = Poly([self.unit])
        for poly, mult in self.factors:
            out = out * poly**mult
        return out


def factor_over_Q(f: Poly) -> FactorizationQ:
    """Factor a nonzero rational polynomial into rational irreducibles."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    ints, mult = clear_denominators(f)
    sign_content, prim = _primitive(ints)
    unit = Fraction(sign_content, mult)
    if len(prim) <= 1:
        return FactorizationQ(unit * prim[0] if prim else unit, ())
    factors = []
    for part, multiplicity in _yun_squarefree(Poly([Fraction(c) for c in prim])):
        part_ints, _ = clear_denominators(part)
        _, part_prim = _primitive(part_ints)
        for irr in _factor_squarefree_primitive(part_prim):
            factors.append((Poly(irr), multiplicity))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return FactorizationQ(unit, tuple(factors))


def is_irreducible_over_Q(f: Poly) -> bool:
    """True iff f factors as a unit times a single irreducible."""
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    fac = factor_over_Q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
