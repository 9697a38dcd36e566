"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a positive
denominator).  :class:`Poly` is a dense univariate polynomial whose
coefficients may be Fractions or :class:`RationalFn` values, so the same class
covers Q[x] and Q(t)[x].  :class:`MPoly` is a small sparse multivariate
polynomial used for quadratic forms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Sequence

Rational = Fraction

#: Degree reported for the zero polynomial.  Never a natural number.
DEG_ZERO = -1

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class DenominatorVanishes(ZeroDivisionError):
    """A parameter value annihilates the denominator of a rational function."""


# --------------------------------------------------------------------------
# scalars


def as_rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


def parse_rational(s: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``; floats and exponents are rejected."""
    s = s.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational literal: {s!r}")
    return Fraction(s)


def format_rational(v) -> str:
    v = as_rational(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


# Quadratic residues mod 64, 63, 65 and 11.  A true square is never rejected.
_QR = {m: frozenset(i * i % m for i in range(m)) for m in (64, 63, 65, 11)}


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    for m, res in _QR.items():
        if n % m not in res:
            return False
    r = isqrt(n)
    return r * r == n


def int_square_root(n: int) -> int | None:
    """Nonnegative integer root of ``n`` or ``None``."""
    if not is_square_int(n):
        return None
    return isqrt(n)


def rational_square_root(v) -> Fraction | None:
    """Return the nonnegative rational r with r*r == v, or None if v is not a square."""
    v = as_rational(v)
    if v < 0:
        return None
    a = int_square_root(v.numerator)
    if a is None:
        return None
    b = int_square_root(v.denominator)
    if b is None:
        return None
    return Fraction(a, b)


# --------------------------------------------------------------------------
# univariate polynomials


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction, RationalFn))


class Poly:
    """Dense polynomial, ``coeffs[i]`` is the coefficient of x**i.

    Instances are immutable.  Trailing zero coefficients are trimmed, so the
    zero polynomial has an empty coefficient tuple and degree ``DEG_ZERO``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors
    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-_coerce(r), 1))
        return p

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    @property
    def lead(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if isinstance(c, RationalFn):
                cs = f"({cs})"
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations
    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly((other,))
        return None

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + b[i] for i in range(len(b))] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            return Poly(a * c for a in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            return Poly(c * a for a in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            c = _coerce(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return Poly(a / c for a in self.coeffs)
        return NotImplemented

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    # evaluation and calculus
    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def compose(self, inner: Poly) -> Poly:
        """Return ``self(inner(x))``."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self / self.lead

    def map_coeffs(self, fn: Callable) -> Poly:
        return Poly(fn(c) for c in self.coeffs)

    def reflect(self, n) -> Poly:
        """Return the polynomial ``self(n - x)``."""
        return self.compose(Poly((n, -1)))


def divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``p == quot*q + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    lq = q.lead
    if len(rem) - 1 < dq:
        return Poly(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        c = c / lq
        quot[k] = c
        for j, qj in enumerate(q.coeffs):
            rem[k + j] = rem[k + j] - c * qj
    return Poly(quot), Poly(rem[:dq])


def poly_arith(p: Poly, q: Poly, op: str):
    """Dispatch ``add``, ``sub``, ``mul`` or ``divrem`` on two polynomials."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divrem":
        return divrem(p, q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor over a field (Euclid)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, divrem(a, b)[1].monic()
    return a.monic()


def is_squarefree(p: Poly) -> bool:
    if p.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    return poly_gcd(p, p.derivative()).degree == 0


def evaluate(p, point):
    """Evaluate a Poly, a RationalFn, or a Poly over Q(t) at ``point``.

    For a Poly with RationalFn coefficients, ``point`` is a pair ``(t, x)``;
    the result raises :class:`DenominatorVanishes` when ``t`` kills a
    coefficient denominator.
    """
    if isinstance(p, RationalFn):
        return p(as_rational(point) if not isinstance(point, RationalFn) else point)
    if is_bivariate(p):
        t, x = point
        return specialize(p, t)(as_rational(x))
    if isinstance(point, (int, str)):
        point = as_rational(point)
    return p(point)


def is_bivariate(p: Poly) -> bool:
    return any(isinstance(c, RationalFn) for c in p.coeffs)


def specialize(p: Poly, t) -> Poly:
    """Substitute a value for the parameter in every coefficient of ``p``."""
    t = as_rational(t) if isinstance(t, (int, str)) else t
    return p.map_coeffs(lambda c: c(t) if isinstance(c, RationalFn) else c)


def lift_to_rf(p: Poly) -> Poly:
    """View a Poly over Q as a Poly over Q(t) (constant coefficients)."""
    return p.map_coeffs(RationalFn.const)


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton divided-difference interpolation through the points (xs[i], ys[i])."""
    xs = [as_rational(x) for x in xs]
    coef = [as_rational(y) for y in ys]
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly((coef[-1],)) if coef else Poly()
    for i in range(n - 2, -1, -1):
        p = p * Poly((-xs[i], 1)) + coef[i]
    return p


# --------------------------------------------------------------------------
# rational functions in one parameter


class RationalFn:
    """Quotient ``num/den`` of polynomials over Q, reduced, with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly((num,))
        if den is None:
            den = Poly((1,))
        elif not isinstance(den, Poly):
            den = Poly((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @classmethod
    def const(cls, c) -> RationalFn:
        if isinstance(c, RationalFn):
            return c
        return cls(Poly((as_rational(c),)), Poly((1,)), _reduced=True)

    @classmethod
    def var(cls) -> RationalFn:
        return cls(Poly.x(), Poly((1,)), _reduced=True)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    @property
    def degree(self) -> int:
        """max(deg num, deg den), the degree of the map t -> self(t)."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == Poly((other,))
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __str__(self):
        n = str(self.num).replace("x", "t")
        if self.den == Poly((1,)):
            return n
        return f"({n})/({str(self.den).replace('x', 't')})"

    def _lift(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFn.const(other)
        return None

    def __neg__(self):
        return RationalFn(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den.degree == 0:
                return RationalFn(self.num + o.num, self.den, _reduced=True)
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFn.const(0)
            return RationalFn(self.num * _coerce(other), self.den, _reduced=True)
        if not isinstance(other, RationalFn):
            return NotImplemented
        if self.den.degree == 0 and other.den.degree == 0:
            return RationalFn(self.num * other.num, self.den, _reduced=True)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFn.const(1) / self ** (-n)
        return RationalFn(self.num ** n, self.den ** n, _reduced=True)

    def __call__(self, t):
        """Evaluate at a rational ``t`` or compose with another RationalFn."""
        if isinstance(t, RationalFn):
            return self.num(t) / self.den(t)
        t = as_rational(t)
        d = self.den(t)
        if d == 0:
            raise DenominatorVanishes(f"denominator {self.den} vanishes at t = {t}")
        return self.num(t) / d


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly((1,))
    if den.degree > 0 and num.degree >= 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = divrem(num, g)[0]
            den = divrem(den, g)[0]
    lc = den.lead
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


# --------------------------------------------------------------------------
# multivariate polynomials (sparse)


class MPoly:
    """Sparse polynomial in ``nvars`` variables, ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = _coerce(c)
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def gens(cls, nvars: int) -> list[MPoly]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(nvars, {tuple(e): 1}))
        return out

    @classmethod
    def constant(cls, nvars: int, c) -> MPoly:
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return DEG_ZERO
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.nvars, other)
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MPoly.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, *vals):
        """Substitute values (scalars, Polys, ...) for the variables."""
        if len(vals) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(vals)}")
        acc = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            acc = term + acc
        return acc

    def __repr__(self):
        items = sorted(self.terms.items(), reverse=True)
        return f"MPoly({self.nvars}, {{{', '.join(f'{e}: {c}' for e, c in items)}}})"


# --------------------------------------------------------------------------
# serialization


def poly_to_json(p: Poly) -> list[str]:
    if is_bivariate(p):
        raise TypeError("only polynomials over Q serialize to a coefficient list")
    return [format_rational(c) for c in p.coeffs]


def poly_from_json(data: Sequence) -> Poly:
    if not isinstance(data, (list, tuple)):
        raise ValueError("a polynomial serializes as a JSON array of rational strings")
    return Poly(_parse_json_scalar(c) for c in data)


def _parse_json_scalar(c) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, (str, int)):
        raise ValueError(f"bad coefficient {c!r}")
    return as_rational(c)


def rf_to_json(r: RationalFn) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rf_from_json(data: dict) -> RationalFn:
    return RationalFn(poly_from_json(data["num"]), poly_from_json(data["den"]))


def bivar_to_json(p: Poly) -> list:
    return [rf_to_json(RationalFn.const(c) if not isinstance(c, RationalFn) else c) for c in p.coeffs]
