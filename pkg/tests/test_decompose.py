from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polys, rationals, to_sympy
from genus2ap import known
from genus2ap.decompose import (
    LeadingCoeffNotSquare,
    NotASquareScale,
    OddDegree,
    complete_square,
    scaled_remainder,
)
from genus2ap.exactmath import Poly, RationalFn, specialize
from genus2ap.families import DEG5_SCALE, to_z_basis

X = Poly.x()


def test_exact_square():
    d = complete_square((X * X + 1) ** 2)
    assert d.h == X * X + 1
    assert d.r.is_zero()


def test_square_minus_one():
    g = (X * X + 1) ** 2 - 1
    assert scaled_remainder(g, 1) == Poly((1,))


def test_errors():
    with pytest.raises(OddDegree):
        complete_square(X ** 3)
    with pytest.raises(LeadingCoeffNotSquare):
        complete_square(Poly((0, 0, 2)))
    with pytest.raises(NotASquareScale):
        scaled_remainder(X ** 2, 2)
    with pytest.raises(NotASquareScale):
        scaled_remainder(X ** 2, 0)


def test_degree5_seed_coefficients():
    u = RationalFn.var()
    g = Poly.from_roots(range(1, 11)) * Poly((-u, 1)) ** 2
    r = complete_square(g).r
    f = r / DEG5_SCALE
    assert [c.num for c in f.coeffs] == known.DEG5_A
    assert f.coeff(5).num == Poly((36551680, -6645760))


def test_degree5_seed_values_are_squares():
    u = RationalFn.var()
    g = Poly.from_roots(range(1, 11)) * Poly((-u, 1)) ** 2
    h = complete_square(g).h
    f = scaled_remainder(g, DEG5_SCALE)
    for i in range(1, 11):
        xi = Fraction(i)
        assert f(xi) == (Fraction(1024, 5) * h(xi)) ** 2


def test_symmetric_degree16_input():
    t = RationalFn.var()
    g = Poly.from_roots(range(1, 15)) * Poly((4 * t, -15, 1))
    assert g.degree == 16
    d = complete_square(g)
    assert d.h.degree == 8
    # symmetry under x -> 15 - x forces an even-degree remainder
    assert d.r.degree == 6
    assert d.r.reflect(15) == d.r
    # raw remainder is four times the quoted H
    z = to_z_basis(d.r, 15, -1)
    assert z[3].num == known.DEG6_H_A[3] * 4


def test_symmetric_remainder_values():
    t = RationalFn.var()
    g = Poly.from_roots(range(1, 15)) * Poly((4 * t, -15, 1))
    d = complete_square(g)
    for i in range(1, 15):
        assert d.r(Fraction(i)) == d.h(Fraction(i)) ** 2


def _even_degree_square_lead(p: Poly, lead_root: int) -> Poly:
    if p.degree < 1 or p.degree % 2:
        p = p * Poly.x()
    if p.degree % 2:
        return p
    return Poly(list(p.coeffs[:-1]) + [lead_root * lead_root])


@settings(max_examples=100, deadline=None)
@given(polys(max_degree=8), st.integers(1, 1000))
def test_reconstruction_and_sign_uniqueness(p, lead_root):
    g = _even_degree_square_lead(p, lead_root)
    if g.degree < 2 or g.degree % 2:
        return
    d = complete_square(g)
    m = g.degree // 2
    assert d.h * d.h - d.r == g
    assert d.h.degree == m
    assert d.r.degree <= m - 1
    assert d.h.lead > 0
    flipped = complete_square(g, sign=-1)
    assert flipped.h == -d.h
    assert flipped.r == d.r


@settings(max_examples=30, deadline=None)
@given(polys(max_degree=6, max_height=50))
def test_square_plus_low_remainder_recovered(p):
    if p.degree < 1:
        return
    m = p.degree
    r = Poly(p.coeffs[:m])  # deg < m
    h = p if p.lead > 0 else -p
    d = complete_square(h * h - r)
    assert d.h == h
    assert d.r == r


def test_specialization_commutes():
    t = RationalFn.var()
    g = Poly.from_roots(range(1, 11)) * Poly((-t, 1)) ** 2
    d = complete_square(g)
    import random

    rng = random.Random(20240611)
    for _ in range(20):
        t0 = Fraction(rng.randint(-500, 500), rng.randint(1, 60))
        gd = complete_square(specialize(g, t0))
        assert specialize(d.h, t0) == gd.h
        assert specialize(d.r, t0) == gd.r


def test_rational_function_leading_coefficient():
    t = RationalFn.var()
    # ((t^2+1)/(t-3))^2 x^2 + t x + 1
    lead = ((t * t + 1) / (t - 3)) ** 2
    g = Poly((RationalFn.const(1), t, lead))
    d = complete_square(g)
    assert d.h.lead == (t * t + 1) / (t - 3)
    assert d.h * d.h - d.r == g


def test_matches_sympy_series_oracle(x):
    # independent route: h is the polynomial part of sqrt(g) expanded at x = oo
    g = Poly((7, -3, 0, 5, 2, -1, 4))
    d = complete_square(g)
    y = sympy.Symbol("y", positive=True)
    expansion = sympy.series(sympy.sqrt(to_sympy(g, x).subs(x, 1 / y)), y, 0, 1).removeO()
    assert sympy.expand(to_sympy(d.h, x) - expansion.subs(y, 1 / x)) == 0
