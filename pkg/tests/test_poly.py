"""Polynomial kernel: evaluation, gcd, squarefree part, reversal, root candidates."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coeffgame.poly import (
    Poly,
    gcd_poly,
    rational_root_candidates,
    rational_roots,
    reverse,
    squarefree_part,
)

small_ints = st.integers(min_value=-20, max_value=20)


def poly_strategy(max_degree=5):
    return st.lists(small_ints, min_size=0, max_size=max_degree + 1).map(Poly)


def test_eval_examples():
    f = Poly([4, 10000, -12, 7])
    assert f.evaluate(1) == 9999
    assert f.evaluate(2) == 20012
    assert Poly([-5, 1, 3, 1]).evaluate(1) == 0


def test_eval_fraction_point():
    f = Poly([Fraction(1, 2), Fraction(1, 3)])
    assert f.evaluate(Fraction(3)) == Fraction(3, 2)


@settings(max_examples=200)
@given(poly_strategy(), poly_strategy(), small_ints)
def test_eval_is_ring_homomorphism(f, g, x):
    assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)
    assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)


def test_gcd_examples():
    assert gcd_poly(Poly([-1, 0, 1]), Poly([1, -2, 1])) == Poly([Fraction(-1), Fraction(1)])
    assert gcd_poly(Poly([1, 0, 1]), Poly([-1, 0, 1])).degree == 0
    assert gcd_poly(Poly([1, 2, 1]), Poly()) == Poly([1, 2, 1]).monic()


def test_gcd_of_two_zeros_rejected():
    with pytest.raises(ValueError):
        gcd_poly(Poly(), Poly())


@settings(max_examples=150)
@given(poly_strategy(3), poly_strategy(3))
def test_gcd_divides_both_and_is_monic(f, g):
    if f.is_zero and g.is_zero:
        return
    d = gcd_poly(f, g)
    assert d.lc == 1
    for h in (f, g):
        if not h.is_zero:
            assert (h % d).is_zero


def test_squarefree_examples():
    doubled = Poly([-2, 1]) * Poly([-2, 1]) * Poly([1, 1])
    assert squarefree_part(doubled) == (Poly([-2, 1]) * Poly([1, 1])).monic()
    quartic = Poly([-4, -12, 3, -2, 1])
    f = Poly([-2, 1]) * Poly([-2, 1]) * quartic
    assert squarefree_part(f) == (Poly([-2, 1]) * quartic).monic()
    assert gcd_poly(quartic, quartic.derivative()).degree == 0
    assert squarefree_part(Poly([0, 0, 0, 1])) == Poly([0, 1])


def test_squarefree_of_zero_rejected():
    with pytest.raises(ValueError):
        squarefree_part(Poly())


@settings(max_examples=100)
@given(poly_strategy(4))
def test_squarefree_properties(f):
    if f.degree < 1:
        return
    u = squarefree_part(f)
    assert gcd_poly(u, u.derivative()).degree == 0
    assert (Poly([Fraction(c) for c in f.coeffs]) % u).is_zero


def test_reverse_examples():
    assert reverse(Poly([4, 5, -12, 7])) == Poly([7, -12, 5, 4])
    assert reverse(Poly([2, 0, 0, 1])) == Poly([1, 0, 0, 2])
    with pytest.raises(ValueError):
        reverse(Poly([0, 1, 3]), degree=2)  # constant slot empty
    with pytest.raises(ValueError):
        reverse(Poly([1, 1]), degree=2)  # leading slot empty


@settings(max_examples=150)
@given(poly_strategy(5))
def test_reverse_involution_and_root_inversion(f):
    if f.is_zero or not f.coeffs[0] or f.degree < 1:
        return
    assert reverse(reverse(f)) == f
    # construct a nonzero rational root and check inversion
    r = Fraction(3, 2)
    g = f * Poly([-r, 1])
    if g.coeffs[0]:
        assert g.evaluate(r) == 0
        assert reverse(g).evaluate(1 / r) == 0


def test_candidates_examples():
    f = Poly([4, 1, -12, 7])
    expected = {Fraction(s * n, d) for n in (1, 2, 4) for d in (1, 7) for s in (1, -1)}
    assert rational_root_candidates(f) == expected
    assert rational_root_candidates(Poly([1, 0, 1])) == {Fraction(1), Fraction(-1)}
    halves = Poly([Fraction(-1, 2), Fraction(0), Fraction(1, 2)])
    assert rational_root_candidates(halves) == {Fraction(1), Fraction(-1)}


def test_candidates_require_nonzero_ends():
    with pytest.raises(ValueError):
        rational_root_candidates(Poly([0, 1, 1]))


def test_candidates_closed_under_negation():
    cands = rational_root_candidates(Poly([6, 7, 10]))
    assert all(-c in cands for c in cands)
    assert all(c != 0 for c in cands)


def test_rational_roots_examples():
    assert rational_roots(Poly([4, 10000, -12, 7])) == frozenset()
    assert rational_roots(Poly([-1, -1, 2])) == {Fraction(1), Fraction(-1, 2)}
    assert rational_roots(Poly([-2, 0, 1])) == frozenset()


@settings(max_examples=100)
@given(st.lists(small_ints, min_size=2, max_size=5))
def test_rational_roots_scale_invariance(coeffs):
    f = Poly(coeffs)
    if f.is_zero or not f.coeffs[0] or f.degree < 1:
        return
    assert rational_roots(f) == rational_roots(f.scale(Fraction(7, 3)))


def test_rational_roots_brute_force_oracle():
    rng = random.Random(20260809)
    for _ in range(300):
        degree = rng.randint(1, 4)
        coeffs = [rng.randint(-20, 20) for _ in range(degree + 1)]
        f = Poly(coeffs)
        if f.is_zero or f.degree < 1 or not f.coeffs[0]:
            continue
        # independent enumeration over divisor pairs
        const, lead = abs(f.coeffs[0]), abs(f.lc)
        found = set()
        for p in range(1, const + 1):
            if const % p:
                continue
            for q in range(1, lead + 1):
                if lead % q:
                    continue
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    if f.evaluate(r) == 0:
                        found.add(r)
        assert rational_roots(f) == found


def test_eval_homomorphism_in_extension_universes():
    """The ring-homomorphism law holds over F_q and over number fields too."""
    import random

    from coeffgame.finitefield import fq_field
    from coeffgame.numberfield import NumberField

    rng = random.Random(515)
    for p, k in [(5, 1), (3, 2), (2, 3)]:
        F = fq_field(p, k)
        els = F.elements()
        for _ in range(25):
            f = Poly([rng.choice(els) for _ in range(rng.randint(1, 4))])
            g = Poly([rng.choice(els) for _ in range(rng.randint(1, 4))])
            x = rng.choice(els)
            assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)
            assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
    K = NumberField(Poly([-2, 0, 1]))
    for _ in range(25):
        f = Poly([K.element([rng.randint(-4, 4), rng.randint(-4, 4)]) for _ in range(3)])
        g = Poly([K.element([rng.randint(-4, 4), rng.randint(-4, 4)]) for _ in range(3)])
        x = K.element([rng.randint(-4, 4), rng.randint(-4, 4)])
        assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
