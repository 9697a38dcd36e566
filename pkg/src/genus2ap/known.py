"""Coefficient blocks, curves and points quoted verbatim, for fidelity checks.

Nothing here is used to *build* anything; the constructors derive every
polynomial from scratch and the tests compare against these values.
"""

from fractions import Fraction as F

from genus2ap.exactmath import Poly, RationalFn

# f(u, x) = sum a_k(u) x^k for the (x-u)^2 * prod_{i=1}^{10} (x-i) completion.
# Each entry lists the coefficients of a_k in u, low degree first.
DEG5_A = [
    Poly((263250625, -12894461800, 5695244944)),
    Poly((-1611807725, -873304794, 533634200)) * -8,
    Poly((-396302603, -8034400, 37257330)) * 32,
    Poly((-1285845, 145226, 41536)) * -3520,
    Poly((-193477, 31152, 1888)) * 3520,
    -Poly((-36551680, 6645760)),
]
DEG5_NONSQUAREFREE_U = F(11, 2)

_D = Poly((-1, 0, 5695244944))
CONIC_Q1 = {
    "base": (F(11), F(16225)),
    "p": RationalFn(Poly((1, -794728, 5695244944)) * 16225, _D),
    "u": RationalFn(Poly((-1, 2950, 4523021144)) * 11, _D),
}
CONIC_Q2 = {
    "base": (F(0), F(16225)),
    "p": RationalFn(Poly((1, 794728, 5695244944)) * 16225, _D),
    "u": RationalFn(Poly((0, 1, 397364)) * 32450, _D),
}

# y^2 = quartic(t) whose rational points would give a twelfth point
TWELFTH_POINT_QUARTICS = (
    Poly((-30556659591, -633115875308400, 611541611111856733408,
          -5858532530788995918150400, -543542815457978537904123051776)),
    Poly((547548809049, -3647410080111600, -4781502606421467214112,
          16006824835104105921670400, 10452723797211797241575306232064)),
)

# H(t, x) = sum a_k(t) * (x(15-x))^k for the 14-point family
DEG6_H_A = [
    Poly((46228440064, -37262033920, 10620980224, -1420209280,
          106891216, -4876960, 144760, -2800, 25)),
    Poly((-790888960, 642389312, -177526160, 21803240,
          -1364540, 42826, -630, 5)) * 4,
    # the t^3 term is typeset with a stray variable u in the source; t is meant
    Poly((35503616, -29056640, 7910592, -929040, 52318, -1260, 7)) * 2,
    Poly((-261120, 215008, -58040, 6636, -350, 7)) * 2,
]

# Linear formulas for the symmetric sextic in z = x(x-15), as quoted.  Each
# row holds the weights of (p^2, q^2, r^2, s^2) and the divisor.  The labels
# run opposite to the powers of z: the row quoted as "b0" is the z^3
# coefficient, "b3" the constant term.
R1_QUOTED = {
    "b0": ((6, -22, 27, -11), 47520),
    "b1": ((159, -517, 567, -209), 11880),
    "b2": ((5496, -14872, 14337, -4961), 11880),
    "b3": ((156, -308, 273, -91), 30),
}

# f(5), f(6), f(7) as quadratic forms in (p, q, r, s)
R3_FORMULAS = (
    ((-14, 77, -162, 154), 55),
    ((-21, 110, -210, 154), 33),
    ((-60, 308, -567, 385), 66),
)

QUADRIC_TUPLE_TERMS = (
    # (p, q, r, s, u) in (a, b, c, d): monomial exponents -> coefficient
    {(2, 0, 0, 0): 14, (1, 1, 0, 0): -154, (0, 2, 0, 0): 77, (1, 0, 1, 0): 324,
     (0, 0, 2, 0): -162, (1, 0, 0, 1): -308, (0, 0, 0, 2): 154},
    {(2, 0, 0, 0): 14, (1, 1, 0, 0): -28, (0, 2, 0, 0): 77, (0, 1, 1, 0): -324,
     (0, 0, 2, 0): 162, (0, 1, 0, 1): 308, (0, 0, 0, 2): -154},
    {(2, 0, 0, 0): -14, (0, 2, 0, 0): 77, (1, 0, 1, 0): 28, (0, 1, 1, 0): -154,
     (0, 0, 2, 0): 162, (0, 0, 1, 1): -308, (0, 0, 0, 2): 154},
    {(2, 0, 0, 0): 14, (0, 2, 0, 0): -77, (0, 0, 2, 0): 162, (1, 0, 0, 1): -28,
     (0, 1, 0, 1): 154, (0, 0, 1, 1): -324, (0, 0, 0, 2): 154},
    {(2, 0, 0, 0): -14, (0, 2, 0, 0): 77, (0, 0, 2, 0): -162, (0, 0, 0, 2): 154},
)

# (a, b, c, d) as polynomials in A
R4_SUBSTITUTION = (Poly((0, 946)), Poly((946,)), Poly((781, 165)), Poly((505, 441)))

# (p, q, r, s, u, v, w) as quadratics in A
R4_TUPLE = (
    Poly((-42585, 85170, 181144)),
    Poly((-164589, -118280, 59140)),
    Poly((-128454, -112505, 17230)),
    Poly((68010, 102845, 52874)),
    Poly((42585, 122004, 59140)),
    Poly((75675, 104070, 43984)),
    Poly((99984, 107955, 15790)),
)

_A1 = Poly((-1, 1))
_A219 = Poly((219, 254))
# g_A(x) = sum b_k(A) (x(x-15))^k
G_A_B = [
    Poly((-132565503600, -216866857320, 34730973441, 235814377620, 128941675300)) * 36,
    _A1 * _A219 * Poly((620203644, 848446325, 354070194)) * 4,
    _A1 * _A219 * Poly((73722213, 96399845, 35708622)),
    _A1 * _A219 * Poly((164709, 210275, 72474)) * 4,
]
EXCEPTIONAL_A = frozenset({F(-240, 233), F(-219, 254), F(1), F(475, 2)})

B0_BASE_POINT = (F(1), F(1342374))

# y^2 + xy + y = x^3 - x^2 + 21015110653 x + 1214962664541571
CURVE_E = (F(1), F(-1), F(1), F(21015110653), F(1214962664541571))
TORSION_POINT = (F(-51365), F(25682))
GENERATORS = (
    (F(-45989), F(-12274606)),
    (F(751451), F(-664705966)),
    (F(-17669), F(-28941646)),
    (F(24913585, 256), F(264676595567, 4096)),
)

# degree-5 curve with twelve points at x = 1..12
TWELVE_POINT_POLY = Poly((-16079, 27980, -14438, 3208, -322, 12))
TWELVE_POINT_YS = (19, 55, 37, 1, 11, 31, 35, 23, 29, 89, 181, 305)

# (c0, c1, c2, c3) for the x -> 19-x symmetric sextics with 18 square values
TABLE_N19 = (
    (358043904, 18892800, 321792, 1664),
    (864002304, 37085184, 524544, 2432),
)
