from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from genus2ap.exactmath import Poly, RationalFn


def to_sympy(p: Poly, x, t=None):
    """Independent view of a Poly (over Q or Q(t)) as a sympy expression."""
    out = 0
    for k, c in enumerate(p.coeffs):
        if isinstance(c, RationalFn):
            c = to_sympy(c.num, t) / to_sympy(c.den, t)
        else:
            c = sympy.Rational(c.numerator, c.denominator)
        out += c * x**k
    return out


def from_sympy(expr, x) -> Poly:
    coeffs = sympy.Poly(sympy.expand(expr), x).all_coeffs()[::-1]
    return Poly(Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in coeffs)


def rationals(max_height=10**6):
    return st.builds(
        Fraction,
        st.integers(-max_height, max_height),
        st.integers(1, max_height),
    )


def polys(max_degree=8, max_height=10**6):
    return st.lists(st.integers(-max_height, max_height), min_size=1, max_size=max_degree + 1).map(Poly)


@pytest.fixture(scope="session")
def x():
    return sympy.Symbol("x")


@pytest.fixture(scope="session")
def t():
    return sympy.Symbol("t")
