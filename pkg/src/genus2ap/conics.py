"""Rational parametrizations of conics and of the diagonal quadric, via lines through a point."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from genus2ap.exactmath import MPoly, Poly, RationalFn, as_rational


class BasePointNotOnConic(ValueError):
    pass


class SubstitutionDegenerate(ValueError):
    pass


@dataclass(frozen=True)
class ConicParam:
    """t -> (u(t), p(t)) on the conic p**2 = q(u)."""

    u_of_t: RationalFn
    p_of_t: RationalFn

    def __call__(self, t) -> tuple[Fraction, Fraction]:
        return self.u_of_t(t), self.p_of_t(t)

    def satisfies(self, q: Poly) -> bool:
        return self.p_of_t * self.p_of_t - q(self.u_of_t) == 0


def parametrize_conic(q: Poly, base) -> ConicParam:
    """Parametrize p**2 = q(u) from the rational point ``base = (u0, p0)``.

    The line p - p0 = k*(u - u0) meets the conic in one further point.  The
    parameter is t = 1/k, so t = 0 is the vertical line and gives (u0, -p0);
    the base point itself comes back at t = 2*p0/q'(u0), or at t = oo when
    q'(u0) = 0.
    """
    u0, p0 = (as_rational(v) for v in base)
    if q.degree < 1 or q.degree > 2:
        raise ValueError("q must be a nonconstant polynomial of degree at most 2")
    if p0 * p0 != q(u0):
        raise BasePointNotOnConic(f"({u0}, {p0}) does not satisfy p^2 = q(u)")
    # q(u0 + s) = p0^2 + d1*s + c*s^2
    d1 = q.derivative()(u0)
    c = q.coeff(2)
    t = Poly.x()
    # with k = 1/t:  s = (d1 - 2*p0*k)/(k^2 - c) = t*(d1*t - 2*p0)/(1 - c*t^2)
    den = Poly((1, 0, -c))
    s_num = t * Poly((-2 * p0, d1))
    u_num = s_num + den * u0
    # p = p0 + k*s = p0 + (d1*t - 2*p0)/(1 - c*t^2)
    p_num = den * p0 + Poly((-2 * p0, d1))
    return ConicParam(RationalFn(u_num, den), RationalFn(p_num, den))


def mobius_equivalent(first: ConicParam, second: ConicParam, base) -> RationalFn | None:
    """Return the degree-1 m with first∘m == second, or None.

    Both parametrizations must pass through ``base``; the inverse of
    ``first`` is recovered from the slope of the line joining base to a
    point, and is then composed with ``second``.
    """
    u0, p0 = (as_rational(v) for v in base)
    slope_first = _slope_inverse(first, u0, p0)
    if slope_first is None:
        return None
    k2 = (second.p_of_t - p0) / (second.u_of_t - u0)
    m = slope_first(k2)
    if m.degree != 1:
        return None
    if first.u_of_t(m) == second.u_of_t and first.p_of_t(m) == second.p_of_t:
        return m
    return None


def _slope_inverse(param: ConicParam, u0, p0) -> RationalFn | None:
    # slope k(t) = (p(t)-p0)/(u(t)-u0) is a Mobius map of t for a genuine
    # line-pencil parametrization; its inverse turns slopes back into t.
    k = (param.p_of_t - p0) / (param.u_of_t - u0)
    if k.degree != 1:
        return None
    # k = (a t + b)/(c t + d)  =>  t = (d k - b)/(-c k + a)
    n, d = k.num, k.den
    a, b = n.coeff(1), n.coeff(0)
    c, dd = d.coeff(1), d.coeff(0)
    return RationalFn(Poly((-b, dd)), Poly((a, -c)))


# --------------------------------------------------------------------------
# diagonal quadric in five variables


@dataclass(frozen=True)
class QuadricParam:
    """Five quadratic forms in (a, b, c, d), one per coordinate (p, q, r, s, u)."""

    forms: tuple[MPoly, ...]

    def __call__(self, *abcd):
        return tuple(f(*abcd) for f in self.forms)

    def substitute(self, values: Sequence) -> tuple:
        return tuple(f(*values) for f in self.forms)


def quadric_form(coeffs: Sequence) -> MPoly:
    """The form a_p p^2 + a_q q^2 + a_r r^2 + a_s s^2 - a_u u^2 in 5 variables."""
    cp, cq, cr, cs, cu = (as_rational(c) for c in coeffs)
    p, q, r, s, u = MPoly.gens(5)
    return cp * p * p + cq * q * q + cr * r * r + cs * s * s - cu * u * u


def parametrize_diagonal_quadric(coeffs: Sequence, base_direction: Sequence = (1, 1, 1, 1, 1)) -> QuadricParam:
    """Solve a_p p^2 + a_q q^2 + a_r r^2 + a_s s^2 = a_u u^2 by a shift substitution.

    With e = ``base_direction`` a rational point of the quadric, put
    X = (a, b, c, d, 0) + w*e.  The w**2 term drops out, the equation becomes
    linear in w, and clearing the denominator gives
    X = -2*B(y, e)*y + Q(y)*e with y = (a, b, c, d, 0).
    """
    alphas = [as_rational(c) for c in coeffs]
    if len(alphas) != 5:
        raise ValueError("expected five coefficients (a_p, a_q, a_r, a_s, a_u)")
    e = [as_rational(v) for v in base_direction]
    weights = alphas[:4] + [-alphas[4]]
    if sum(w * v * v for w, v in zip(weights, e)) != 0:
        raise SubstitutionDegenerate("base direction is not a point of the quadric")
    a, b, c, d = MPoly.gens(4)
    y = [a, b, c, d, MPoly.constant(4, 0)]
    Q = sum((w * yi * yi for w, yi in zip(weights, y)), MPoly.constant(4, 0))
    B = sum((w * yi * ei for w, yi, ei in zip(weights, y, e)), MPoly.constant(4, 0))
    if B.is_zero():
        raise SubstitutionDegenerate("the shift leaves no linear term to solve for")
    forms = tuple(-2 * B * yi + ei * Q for yi, ei in zip(y, e))
    return QuadricParam(forms)
