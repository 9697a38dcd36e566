"""Arithmetic progressions on genus-two curves y^2 = f(x), in exact arithmetic."""

from genus2ap.exactmath import (
    MPoly,
    Poly,
    RationalFn,
    evaluate,
    is_squarefree,
    poly_gcd,
    rational_square_root,
)
from genus2ap.decompose import Decomposition, complete_square, scaled_remainder
from genus2ap.families import APCertificate, Verdict, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "APCertificate",
    "Decomposition",
    "MPoly",
    "Poly",
    "RationalFn",
    "Verdict",
    "complete_square",
    "evaluate",
    "is_squarefree",
    "poly_gcd",
    "rational_square_root",
    "scaled_remainder",
    "verify_certificate",
]
