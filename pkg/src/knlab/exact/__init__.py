"""Exact arithmetic kernel: rationals, polynomials, matrices, Smith form."""

from fractions import Fraction

from .linalg import Matrix, normalize_vector, solve
from .poly import Poly, RatFunc, poly_gcd, poly_lcm, rational_roots
from .snf import IntMatrix, SmithForm, abelian_invariants, smith_normal_form

__all__ = [
    "Fraction",
    "Matrix",
    "normalize_vector",
    "solve",
    "Poly",
    "RatFunc",
    "poly_gcd",
    "poly_lcm",
    "rational_roots",
    "IntMatrix",
    "SmithForm",
    "abelian_invariants",
    "smith_normal_form",
    "rational_arith",
]


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Dispatch one exact rational operation; '/' by zero raises ZeroDivisionError."""
    a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
