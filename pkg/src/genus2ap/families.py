"""Curve families carrying long arithmetic progressions, and their certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Sequence

from genus2ap import known
from genus2ap.conics import ConicParam, parametrize_conic, parametrize_diagonal_quadric
from genus2ap.decompose import complete_square, scalar_sqrt, scaled_remainder
from genus2ap.exactmath import (
    DenominatorVanishes,
    Poly,
    RationalFn,
    as_rational,
    format_rational,
    is_squarefree,
    lift_to_rf,
    poly_from_json,
    poly_to_json,
    rational_square_root,
    specialize,
)

DEG5_SCALE = Fraction(25, 1048576)
DEG6_SCALE = Fraction(4)


class NotSquarefree(ValueError):
    pass


class DegenerateA(ValueError):
    """A lies in the exceptional set; ``kind`` is "degree drop" or "multiple roots"."""

    def __init__(self, A, kind: str):
        super().__init__(f"A = {A}: {kind}")
        self.A = A
        self.kind = kind


# --------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class APCertificate:
    """Points (x0 + k*step, ys[k]) for k < length on y**2 = poly(x)."""

    poly: Poly
    x0: Fraction
    step: Fraction
    length: int
    ys: tuple[Fraction, ...]
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def xs(self) -> list[Fraction]:
        return [self.x0 + k * self.step for k in range(self.length)]

    def points(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.xs, self.ys))

    def to_dict(self) -> dict[str, Any]:
        return {
            "poly": poly_to_json(self.poly),
            "x0": format_rational(self.x0),
            "step": format_rational(self.step),
            "length": self.length,
            "ys": [format_rational(y) for y in self.ys],
            "meta": dict(self.meta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> APCertificate:
        try:
            length = data["length"]
            if isinstance(length, bool) or not isinstance(length, (int, str)):
                raise ValueError("length must be an integer")
            return cls(
                poly=poly_from_json(data["poly"]),
                x0=as_rational(data["x0"]),
                step=as_rational(data["step"]),
                length=int(length),
                ys=tuple(as_rational(y) for y in data["ys"]),
                meta=dict(data.get("meta", {})),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> APCertificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    failing_index: int | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"valid": self.valid}
        if not self.valid:
            out["failing_index"] = self.failing_index
            out["reason"] = self.reason
        return out


def verify_certificate(cert: APCertificate, *, genus2: bool = True) -> Verdict:
    """Check every point, squarefreeness and (if ``genus2``) 5 <= deg <= 6."""
    if cert.length < 1 or len(cert.ys) != cert.length:
        return Verdict(False, None, f"length {cert.length} does not match {len(cert.ys)} y-values")
    if cert.step == 0:
        return Verdict(False, None, "step is zero")
    if cert.poly.is_zero():
        return Verdict(False, None, "zero polynomial")
    if genus2 and not 5 <= cert.poly.degree <= 6:
        return Verdict(False, None, f"degree {cert.poly.degree} is not 5 or 6")
    for k, (x, y) in enumerate(cert.points()):
        if y * y != cert.poly(x):
            return Verdict(False, k, f"y^2 != f(x) at x = {x}")
    if not is_squarefree(cert.poly):
        return Verdict(False, None, "polynomial has a multiple root")
    return Verdict(True)


def make_certificate(poly: Poly, x0, step, length: int, ys=None, meta=None) -> APCertificate:
    """Build a certificate, taking square roots of poly at the progression if ys is omitted."""
    x0, step = as_rational(x0), as_rational(step)
    if ys is None:
        ys = []
        for k in range(length):
            x = x0 + k * step
            y = rational_square_root(poly(x))
            if y is None:
                raise ValueError(f"f({x}) = {poly(x)} is not a rational square")
            ys.append(y)
    return APCertificate(poly, x0, step, length, tuple(abs(as_rational(y)) for y in ys), dict(meta or {}))


def _require_squarefree(poly: Poly, what: str) -> None:
    if poly.degree < 1 or not is_squarefree(poly):
        raise NotSquarefree(f"{what} has a multiple root")


# --------------------------------------------------------------------------
# degree 5


@lru_cache(maxsize=None)
def degree5_base() -> Poly:
    """f(u, x) with (x-u)^2 prod_{i=1}^{10}(x-i) = h^2 - (25/1048576) f."""
    u = RationalFn.var()
    g = Poly.from_roots(range(1, 11)) * Poly((-u, 1)) ** 2
    return scaled_remainder(g, DEG5_SCALE)


@lru_cache(maxsize=None)
def degree5_base_square_root() -> Poly:
    """h(u, x) scaled so that f(u, i) = (this)(u, i)^2 at i = 1..10."""
    u = RationalFn.var()
    g = Poly.from_roots(range(1, 11)) * Poly((-u, 1)) ** 2
    return complete_square(g).h * Fraction(1024, 5)


def _as_u_poly(c) -> Poly:
    c = RationalFn.const(c)
    assert c.is_polynomial()
    return c.num


_BASES = {"Q1": (11, (11, 16225)), "Q2": (0, (0, 16225))}


@lru_cache(maxsize=None)
def degree5_conic(variant: str) -> tuple[Poly, ConicParam]:
    """The conic p^2 = f(u, x_fixed) in u and its parametrization."""
    if variant not in _BASES:
        raise ValueError(f"unknown variant {variant!r}; expected Q1 or Q2")
    x_fixed, base = _BASES[variant]
    q = _as_u_poly(degree5_base()(Fraction(x_fixed)))
    return q, parametrize_conic(q, base)


@lru_cache(maxsize=None)
def degree5_family_symbolic(variant: str) -> Poly:
    """F(t, x) = f(u(t), x) over Q(t)."""
    _, param = degree5_conic(variant)
    return degree5_base().map_coeffs(lambda c: _as_u_poly(c)(param.u_of_t))


def degree5_family(variant: str, t) -> tuple[Poly, APCertificate]:
    """Specialize F_variant at t and certify 11 points (x=1..11 for Q1, 0..10 for Q2)."""
    t = as_rational(t)
    _, param = degree5_conic(variant)
    u = param.u_of_t(t)  # raises DenominatorVanishes
    F = specialize(degree5_base(), u)
    _require_squarefree(F, f"F_{variant}(t={t}, x)")
    x0 = 1 if variant == "Q1" else 0
    return F, make_certificate(F, x0, 1, 11, meta={"family": f"deg5-{variant.lower()}", "t": format_rational(t)})


def clear_square_denominator(value: RationalFn) -> Poly:
    """Multiply num/den by the square d^2 making den = d^2 integral and primitive."""
    d = scalar_sqrt(RationalFn(value.den))
    if d is None:
        raise ValueError("denominator is not a square")
    dpoly = d.num
    lcm = 1
    for c in dpoly.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    scaled = dpoly * lcm
    content = 0
    for c in scaled.coeffs:
        content = gcd(content, c.numerator)
    scale = Fraction(lcm, content)
    return value.num * (scale * scale)


@lru_cache(maxsize=None)
def twelfth_point_quartics() -> tuple[Poly, Poly]:
    """Quartics in t whose square values extend the Q1 family to x=1..12 and x=0..11."""
    F1 = degree5_family_symbolic("Q1")
    return (
        clear_square_denominator(F1(Fraction(12))),
        clear_square_denominator(F1(Fraction(0))),
    )


@lru_cache(maxsize=None)
def remark1_decomposition() -> tuple[Poly, Poly]:
    """(p, F) with (x-t) prod_{i=1}^{11}(x-i) = p^2 - F over Q(t)."""
    t = RationalFn.var()
    g = Poly.from_roots(range(1, 12)) * Poly((-t, 1))
    d = complete_square(g)
    return d.h, d.r


def remark1_family() -> Poly:
    return remark1_decomposition()[1]


def remark1_family_at(t) -> tuple[Poly, APCertificate]:
    """F(t, x) at a rational t, with its points (i, |p(t, i)|) for i = 1..11."""
    t = as_rational(t)
    p, F = remark1_decomposition()
    Ft = specialize(F, t)
    _require_squarefree(Ft, f"F(t={t}, x)")
    pt = specialize(p, t)
    ys = [pt(Fraction(i)) for i in range(1, 12)]
    return Ft, make_certificate(Ft, 1, 1, 11, ys, meta={"family": "remark1", "t": format_rational(t)})


# --------------------------------------------------------------------------
# degree 6, one-parameter family with 14 points


def z_poly(N, orientation: int = 1) -> Poly:
    """x(x-N) for orientation 1, x(N-x) for orientation -1."""
    return Poly((0, -N, 1)) * orientation


def to_z_basis(p: Poly, N, orientation: int = 1) -> list:
    """Coefficients c_k with p = sum c_k z^k, z = z_poly(N, orientation).

    Raises ValueError if p is not invariant under x -> N - x.
    """
    z = z_poly(N, orientation)
    out = []
    rest = p
    while not rest.is_zero():
        c0 = rest.coeff(0)
        out.append(c0)
        quot, rem = divmod(rest - c0, z)
        if not rem.is_zero():
            raise ValueError("polynomial is not symmetric under x -> N - x")
        rest = quot
    return out


def from_z_basis(coeffs: Sequence, N, orientation: int = 1) -> Poly:
    z = z_poly(N, orientation)
    acc = Poly()
    for c in reversed(list(coeffs)):
        acc = acc * z + c
    return acc


@lru_cache(maxsize=None)
def degree6_decomposition() -> tuple[Poly, Poly]:
    """(g, H) with (x^2-15x+4t) prod_{i=1}^{14}(x-i) = g^2 - 4H over Q(t)."""
    t = RationalFn.var()
    h = Poly.from_roots(range(1, 15)) * Poly((4 * t, -15, 1))
    d = complete_square(h)
    return d.h, d.r / DEG6_SCALE


def degree6_H_symbolic() -> Poly:
    return degree6_decomposition()[1]


def degree6_H_z_coeffs() -> list:
    """a_0..a_3 of H(t, x) in the basis z = x(15-x), as polynomials in t."""
    return [_as_u_poly(c) for c in to_z_basis(degree6_H_symbolic(), 15, -1)]


def degree6_H(t) -> tuple[Poly, APCertificate]:
    """H(t, x) at a rational t with its 14 points (i, |g(t,i)|/2), i = 1..14."""
    t = as_rational(t)
    g, H = degree6_decomposition()
    Ht = specialize(H, t)
    _require_squarefree(Ht, f"H(t={t}, x)")
    gt = specialize(g, t)
    ys = [abs(gt(Fraction(i))) / 2 for i in range(1, 15)]
    return Ht, make_certificate(Ht, 1, 1, 14, ys, meta={"family": "deg6-h", "t": format_rational(t)})


# --------------------------------------------------------------------------
# symmetric sextics


@dataclass(frozen=True)
class SymmetricSextic:
    """sum b_k (x(x-N))^k, k = 0..3; invariant under x -> N - x."""

    b0: Any
    b1: Any
    b2: Any
    b3: Any
    N: int

    @property
    def coeffs(self) -> tuple:
        return (self.b0, self.b1, self.b2, self.b3)

    @property
    def poly(self) -> Poly:
        return from_z_basis(self.coeffs, self.N)

    def at(self, x):
        """Value at x, evaluated through z = x(x-N)."""
        z = as_rational(x) * (as_rational(x) - self.N)
        return ((self.b3 * z + self.b2) * z + self.b1) * z + self.b0


def _form(weights, divisor, squares):
    acc = 0
    for w, sq in zip(weights, squares):
        acc = acc + w * sq
    return acc * Fraction(1, divisor)


def _sq(v):
    return v * v


def symmetric_sextic(p, q, r, s) -> SymmetricSextic:
    """The N=15 sextic with f(1)=p^2, f(2)=q^2, f(3)=r^2, f(4)=s^2.

    Accepts rationals or polynomials for p, q, r, s.  The quoted formulas
    carry their labels in reverse order of the powers of z.
    """
    squares = [_sq(_num(v)) for v in (p, q, r, s)]
    top = [_form(*known.R1_QUOTED[k], squares) for k in ("b0", "b1", "b2", "b3")]
    return SymmetricSextic(top[3], top[2], top[1], top[0], 15)


def _num(v):
    if isinstance(v, (int, str)):
        return as_rational(v)
    return v


def r3_residuals(p, q, r, s) -> tuple:
    """(f(5), f(6), f(7)) for symmetric_sextic(p, q, r, s), from the closed forms."""
    squares = [_sq(_num(v)) for v in (p, q, r, s)]
    return tuple(_form(w, d, squares) for w, d in known.R3_FORMULAS)


def _primitive_positive(p: Poly) -> Poly:
    num_g = 0
    den_l = 1
    for c in p.coeffs:
        num_g = gcd(num_g, c.numerator)
        den_l = den_l * c.denominator // gcd(den_l, c.denominator)
    p = p * Fraction(den_l, num_g)
    return -p if p.lead < 0 else p


@lru_cache(maxsize=None)
def r4_polys() -> tuple[Poly, ...]:
    """(p, q, r, s, u, v, w) as quadratics in A making f(5), f(6), f(7) squares."""
    quad = parametrize_diagonal_quadric((-14, 77, -162, 154, 55))
    vals = quad.substitute(known.R4_SUBSTITUTION)
    p, q, r, s, u = (_primitive_positive(v) for v in vals)
    f5, f6, f7 = r3_residuals(p, q, r, s)
    roots = []
    for target in (f5, f6, f7):
        d = complete_square(target)
        if not d.r.is_zero():
            raise ArithmeticError("one of f(5), f(6), f(7) is not a square in Q[A]")
        roots.append(d.h)
    # u from the quadric and sqrt(f5) agree up to sign
    if roots[0] != u and roots[0] != -u:
        raise ArithmeticError("quadric parametrization disagrees with f(5)")
    return (p, q, r, s, u, roots[1], roots[2])


def r4_specialize(A) -> tuple[Fraction, ...]:
    A = as_rational(A)
    return tuple(P(A) for P in r4_polys())


@lru_cache(maxsize=None)
def g_A_coeffs() -> tuple[Poly, ...]:
    """b_0..b_3 of g_A = 36 f in the basis x(x-15), as polynomials in A."""
    p, q, r, s = r4_polys()[:4]
    sext = symmetric_sextic(p, q, r, s)
    return tuple(c * 36 for c in sext.coeffs)


def g_A_sextic(A) -> SymmetricSextic:
    A = as_rational(A)
    return SymmetricSextic(*(c(A) for c in g_A_coeffs()), 15)


def g_A(A) -> tuple[Poly, APCertificate]:
    """g_A(x) and its 14 points at x = 1..14."""
    A = as_rational(A)
    poly = g_A_sextic(A).poly
    _check_A(A, poly)
    p, q, r, s, u, v, w = r4_specialize(A)
    half = [p, q, r, s, u, v, w]
    # g_A(k) = 36 f(k) = (6 y_k)^2 and g_A(15-k) = g_A(k)
    ys = [6 * y for y in half] + [6 * y for y in reversed(half)]
    cert = make_certificate(poly, 1, 1, 14, ys, meta={"family": "ga", "A": format_rational(A)})
    return poly, cert


def _check_A(A, poly: Poly) -> None:
    if poly.degree < 6:
        raise DegenerateA(A, "degree drop")
    if not is_squarefree(poly):
        raise DegenerateA(A, "multiple roots")
    if A in known.EXCEPTIONAL_A:
        raise DegenerateA(A, "listed exceptional value")


def r5_template(c0, c1, c2, c3) -> SymmetricSextic:
    return SymmetricSextic(*(as_rational(c) for c in (c0, c1, c2, c3)), 19)


def r5_certificate(c0, c1, c2, c3) -> APCertificate:
    sext = r5_template(c0, c1, c2, c3)
    return make_certificate(sext.poly, 1, 1, 18, meta={"family": "r5", "c": [str(c) for c in (c0, c1, c2, c3)]})


def twelve_point_certificate() -> APCertificate:
    return APCertificate(known.TWELVE_POINT_POLY, Fraction(1), Fraction(1), 12,
                         tuple(Fraction(y) for y in known.TWELVE_POINT_YS), {"family": "deg5-example"})


__all__ = [
    "APCertificate",
    "DegenerateA",
    "DenominatorVanishes",
    "NotSquarefree",
    "SymmetricSextic",
    "Verdict",
    "degree5_base",
    "degree5_family",
    "degree6_H",
    "g_A",
    "lift_to_rf",
    "r3_residuals",
    "r4_specialize",
    "r5_template",
    "remark1_family",
    "symmetric_sextic",
    "twelfth_point_quartics",
    "verify_certificate",
]
