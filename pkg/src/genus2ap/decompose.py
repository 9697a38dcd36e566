"""Square completion: write g = h**2 - r with deg r < deg(g)/2."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from genus2ap.exactmath import Poly, RationalFn, as_rational, rational_square_root


class OddDegree(ValueError):
    pass


class LeadingCoeffNotSquare(ValueError):
    pass


class NotASquareScale(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    h: Poly
    r: Poly

    def reconstruct(self) -> Poly:
        return self.h * self.h - self.r


def scalar_sqrt(c):
    """Square root of a Fraction or RationalFn with the canonical sign, or None."""
    if isinstance(c, RationalFn):
        return _rf_sqrt(c)
    return rational_square_root(c)


def _poly_sqrt(p: Poly) -> Poly | None:
    if p.is_zero():
        return Poly()
    if p.degree % 2:
        return None
    try:
        d = complete_square(p)
    except LeadingCoeffNotSquare:
        return None
    return d.h if d.r.is_zero() else None


def _rf_sqrt(c: RationalFn) -> RationalFn | None:
    # den is monic, so a square numerator must carry the square leading coefficient
    n = _poly_sqrt(c.num)
    if n is None:
        return None
    d = _poly_sqrt(c.den)
    if d is None:
        return None
    return RationalFn(n, d)


def _positive(c) -> bool:
    if isinstance(c, RationalFn):
        return c.num.lead > 0
    return c > 0


def complete_square(g: Poly, *, sign: int = 1) -> Decomposition:
    """Return the unique (h, r) with ``g == h*h - r``, ``deg h = deg(g)/2``, ``deg r < deg h``.

    Coefficients of h are found from the top down: the coefficient of
    x**(m+k) in h*h involves h[m-k] linearly (through 2*h[m]*h[m-k]) and
    otherwise only coefficients already fixed.  ``sign=-1`` returns the
    other root (-h, r).
    """
    if g.is_zero() or g.degree % 2:
        raise OddDegree(f"degree {g.degree} is not a positive even number")
    m = g.degree // 2
    lead = scalar_sqrt(g.lead)
    if lead is None:
        raise LeadingCoeffNotSquare(f"leading coefficient {g.lead} is not a square")
    if not _positive(lead):
        lead = -lead
    if sign < 0:
        lead = -lead
    two_lead = 2 * lead
    h = [Fraction(0)] * (m + 1)
    h[m] = lead
    for k in range(1, m + 1):
        # coefficient of x**(2m-k) in h*h, excluding the two unknown h[m-k] terms
        acc = Fraction(0)
        for i in range(m - k + 1, m):
            j = 2 * m - k - i
            if m - k < j <= m:
                acc = acc + h[i] * h[j]
        h[m - k] = (g.coeff(2 * m - k) - acc) / two_lead
    hp = Poly(h)
    r = hp * hp - g
    if r.degree >= m:
        raise ArithmeticError("square completion left a high-degree remainder")
    return Decomposition(hp, r)


def scaled_remainder(g: Poly, scale) -> Poly:
    """Return f = r/scale where g = h**2 - r; then g = h**2 - scale*f.

    At every root x0 of g, f(x0) = (h(x0)/sqrt(scale))**2.
    """
    scale = as_rational(scale)
    if scale == 0 or rational_square_root(scale) is None:
        raise NotASquareScale(f"scale {scale} is not a nonzero rational square")
    return complete_square(g).r / scale
