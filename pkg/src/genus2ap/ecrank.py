"""Quartic y^2 = q(A), its Weierstrass model, and the group law over Q.

Points on the elliptic curve give rational A with q(A) a square; each such A
outside the exceptional set extends the 14-point g_A family to 16 points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from genus2ap import known
from genus2ap.exactmath import Poly, as_rational, format_rational, is_squarefree, rational_square_root


class PointNotOnCurve(ValueError):
    pass


class SingularQuartic(ValueError):
    pass


class ExhaustedCombinations(RuntimeError):
    pass


class NotASquareAtEnds(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.discriminant == 0:
            raise ValueError("singular Weierstrass equation")

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> tuple[Fraction, ...]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self) -> Fraction:
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    @property
    def c6(self) -> Fraction:
        b2, b4, b6, _ = self.b_invariants
        return -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self) -> Fraction:
        return self.c4 ** 3 / self.discriminant

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        a1, a2, a3, a4, a6 = self.ainvs
        x, y = P.x, P.y
        return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6

    def point(self, x, y) -> ECPoint:
        P = ECPoint(as_rational(x), as_rational(y))
        if not self.contains(P):
            raise PointNotOnCurve(f"({x}, {y}) is not on {self}")
        return P

    def __str__(self):
        return "[" + ", ".join(format_rational(a) for a in self.ainvs) + "]"


@dataclass(frozen=True)
class ECPoint:
    """Affine point, or the point at infinity when x and y are both None."""

    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


INFINITY = ECPoint()


def _check(E: WeierstrassCurve, *points: ECPoint) -> None:
    for P in points:
        if not E.contains(P):
            raise PointNotOnCurve(f"{P} is not on {E}")


def ec_neg(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    _check(E, P)
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y - E.a1 * P.x - E.a3)


def _add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return INFINITY
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - (y1 - lam * x1) - a3
    return ECPoint(x3, y3)


def ec_add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    _check(E, P, Q)
    return _add(E, P, Q)


def ec_mul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    _check(E, P)
    if n < 0:
        n, P = -n, ec_neg(E, P)
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = _add(E, result, addend)
        addend = _add(E, addend, addend)
        n >>= 1
    return result


def combination(E: WeierstrassCurve, coeffs: Sequence[int], points: Sequence[ECPoint]) -> ECPoint:
    acc = INFINITY
    for n, P in zip(coeffs, points):
        if n:
            acc = _add(E, acc, ec_mul(E, n, P))
    return acc


# --------------------------------------------------------------------------
# isomorphisms between Weierstrass models


@dataclass(frozen=True)
class Isomorphism:
    """x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, taking ``source`` to ``target``."""

    source: WeierstrassCurve
    target: WeierstrassCurve
    u: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __call__(self, P: ECPoint) -> ECPoint:
        if P.is_infinity:
            return P
        x = (P.x - self.r) / self.u ** 2
        y = (P.y - self.s * (P.x - self.r) - self.t) / self.u ** 3
        return ECPoint(x, y)

    def inverse(self, P: ECPoint) -> ECPoint:
        if P.is_infinity:
            return P
        x = self.u ** 2 * P.x + self.r
        y = self.u ** 3 * P.y + self.s * self.u ** 2 * P.x + self.t
        return ECPoint(x, y)


def _transform(E: WeierstrassCurve, u, r, s, t) -> tuple[Fraction, ...]:
    a1, a2, a3, a4, a6 = E.ainvs
    return (
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u ** 2,
        (a3 + r * a1 + 2 * t) / u ** 3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4,
        (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6,
    )


def _rational_root(v: Fraction, n: int) -> Fraction | None:
    """Exact rational n-th root (n = 2 or 4 or 6 via repeated square/cube)."""
    sign = 1
    if v < 0:
        if n % 2 == 0:
            return None
        sign, v = -1, -v
    num = _int_root(v.numerator, n)
    den = _int_root(v.denominator, n)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _int_root(m: int, n: int) -> int | None:
    lo, hi = 0, 1
    while hi ** n <= m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** n <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** n == m else None


def find_isomorphism(source: WeierstrassCurve, target: WeierstrassCurve) -> Isomorphism | None:
    """An admissible change of variables over Q from source to target, if one exists."""
    if source.j_invariant != target.j_invariant:
        return None
    candidates = []
    if source.c4 != 0 and source.c6 != 0:
        # u^2 = (c6/c4) / (c6'/c4')
        u2 = (source.c6 / source.c4) / (target.c6 / target.c4)
        u = rational_square_root(u2)
        if u is not None:
            candidates = [u, -u]
    elif source.c4 != 0:
        u = _rational_root(source.c4 / target.c4, 4)
        if u is not None:
            candidates = [u, -u]
    else:
        u = _rational_root(source.c6 / target.c6, 6)
        if u is not None:
            candidates = [u, -u]
    for u in candidates:
        a1, a2, a3, _, _ = source.ainvs
        s = (u * target.a1 - a1) / 2
        r = (u * u * target.a2 - a2 + s * a1 + s * s) / 3
        t = (u ** 3 * target.a3 - a3 - r * a1) / 2
        if _transform(source, u, r, s, t) == target.ainvs:
            return Isomorphism(source, target, u, r, s, t)
    return None


# --------------------------------------------------------------------------
# the quartic and its Weierstrass model


@dataclass(frozen=True)
class QuarticModel:
    q: Poly
    base: tuple[Fraction, Fraction]

    def __post_init__(self):
        A0, y0 = (as_rational(v) for v in self.base)
        object.__setattr__(self, "base", (A0, y0))
        if self.q.degree != 4:
            raise ValueError("quartic model needs a degree-4 polynomial")
        if y0 * y0 != self.q(A0):
            raise ValueError(f"base point {self.base} is not on y^2 = q(A)")


def b0_quartic() -> QuarticModel:
    """y^2 = b_0(A), the constant term of g_A, with the point (1, 1342374)."""
    from genus2ap.families import g_A_coeffs

    return QuarticModel(g_A_coeffs()[0], known.B0_BASE_POINT)


@dataclass(frozen=True)
class BirationalMaps:
    """Quartic point (A, y) <-> Weierstrass point; the base point goes to O."""

    forward: Callable[[Fraction, Fraction], ECPoint]
    inverse: Callable[[ECPoint], tuple[Fraction, Fraction] | None]


def quartic_to_weierstrass(m: QuarticModel) -> tuple[WeierstrassCurve, BirationalMaps]:
    """Weierstrass model of y^2 = q(A) from the rational base point (A0, y0), y0 != 0.

    After A = A0 + U the quartic reads v^2 = a U^4 + b U^3 + c U^2 + d U + e^2
    with e = y0, and the classical substitution
        X = (2e(v + e) + dU) / U^2,
        Y = (4e^2(v + e) + 2e(dU + cU^2) - d^2 U^2 / (2e)) / U^3
    lands on Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with
    a1 = d/e, a2 = c - d^2/(4e^2), a3 = 2eb, a4 = -4e^2 a, a6 = a2 a4.
    """
    if not is_squarefree(m.q):
        raise SingularQuartic("quartic has a repeated root")
    A0, e = m.base
    if e == 0:
        raise SingularQuartic("base point with y = 0 needs the cubic-resolvent model")
    shifted = m.q.compose(Poly((A0, 1)))
    e0, d, c, b, a = (shifted.coeff(k) for k in range(5))
    assert e0 == e * e
    a1 = d / e
    a2 = c - d * d / (4 * e * e)
    a3 = 2 * e * b
    a4 = -4 * e * e * a
    E = WeierstrassCurve(a1, a2, a3, a4, a2 * a4)

    def forward(A, v) -> ECPoint:
        U = as_rational(A) - A0
        v = as_rational(v)
        if v * v != m.q(A0 + U):
            raise PointNotOnCurve(f"({A}, {v}) is not on the quartic")
        if U == 0:
            if v == e:
                return INFINITY
            return ECPoint(-a2, a1 * a2 - a3)
        X = (2 * e * (v + e) + d * U) / (U * U)
        Y = (4 * e * e * (v + e) + 2 * e * (d * U + c * U * U) - d * d * U * U / (2 * e)) / U ** 3
        return ECPoint(X, Y)

    def inverse(P: ECPoint):
        if P.is_infinity:
            return (A0, e)
        if P.y == 0:
            return None
        U = (2 * e * (P.x + c) - d * d / (2 * e)) / P.y
        v = -e + U * (U * P.x - d) / (2 * e)
        return (A0 + U, v)

    return E, BirationalMaps(forward, inverse)


def paper_curve() -> WeierstrassCurve:
    return WeierstrassCurve(*known.CURVE_E)


def paper_points() -> tuple[ECPoint, list[ECPoint]]:
    """(torsion point, generators) on the quoted curve E, checked on-curve."""
    E = paper_curve()
    T = E.point(*known.TORSION_POINT)
    gens = [E.point(*g) for g in known.GENERATORS]
    return T, gens


def seeds_on_model(model: WeierstrassCurve) -> list[ECPoint]:
    """T, G1..G4 transported from the quoted curve onto ``model``."""
    iso = find_isomorphism(paper_curve(), model)
    if iso is None:
        raise ValueError("the model is not isomorphic over Q to the quoted curve")
    T, gens = paper_points()
    return [iso(P) for P in gens + [T]]


def coefficient_vectors(n: int, max_norm: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors of length n, by l1-norm then lexicographically."""
    for norm in range(max_norm + 1):
        for vec in itertools.product(range(-norm, norm + 1), repeat=n):
            if sum(abs(c) for c in vec) == norm:
                yield vec


def generate_A_values(m: QuarticModel, seeds: Sequence[ECPoint], count: int, *, max_norm: int = 4,
                      model: tuple[WeierstrassCurve, BirationalMaps] | None = None) -> list[Fraction]:
    """``count`` distinct A with q(A) a rational square, from small combinations of seeds."""
    E, maps = model or quartic_to_weierstrass(m)
    _check(E, *seeds)
    found: list[Fraction] = []
    seen: set[Fraction] = set()
    for vec in coefficient_vectors(len(seeds), max_norm):
        P = combination(E, vec, seeds)
        image = maps.inverse(P)
        if image is None:
            continue
        A, y = image
        if A in seen:
            continue
        if rational_square_root(m.q(A)) is None:
            raise ArithmeticError(f"inverse map produced A = {A} off the quartic")
        seen.add(A)
        found.append(A)
        if len(found) == count:
            return found
    raise ExhaustedCombinations(f"only {len(found)} distinct A values within l1-norm {max_norm}")


def sixteen_point_curve(A):
    """Certificate for g_A on x = 0..15; needs g_A(0) = q(A) to be a square."""
    from genus2ap.families import APCertificate, g_A

    A = as_rational(A)
    poly, cert14 = g_A(A)
    end = rational_square_root(poly(Fraction(0)))
    if end is None:
        raise NotASquareAtEnds(f"g_A(0) is not a square for A = {A}")
    ys = (end,) + cert14.ys + (end,)
    return APCertificate(poly, Fraction(0), Fraction(1), 16, ys, {"family": "sixteen", "A": format_rational(A)})
