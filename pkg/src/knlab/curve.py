"""Legendre-form elliptic curves y^2 = x(x-1)(x-lambda) with their
Klein four-group of symmetries.

The distinguished 2-torsion point is T = (0, 0); translation by T and sign
negation generate a group isomorphic to (Z/2Z)^2 acting on the curve.  The
four rational 2-torsion points O, (0,0), (1,0), (lambda,0) carry all exact
computations; 4-torsion preimages live in quadratic extensions and are
produced numerically.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact.poly import Poly

Coord = Union[Fraction, complex]


@dataclass(frozen=True)
class CurvePoint:
    """A point of the curve: the point at infinity, an exact affine point,
    or a numeric (complex floating) affine point."""

    x: Coord | None = None
    y: Coord | None = None
    infinity: bool = False
    numeric: bool = False

    @classmethod
    def at_infinity(cls) -> "CurvePoint":
        return cls(infinity=True)

    @classmethod
    def exact(cls, x, y) -> "CurvePoint":
        return cls(x=Fraction(x), y=Fraction(y))

    @classmethod
    def of_floats(cls, x: complex, y: complex) -> "CurvePoint":
        return cls(x=complex(x), y=complex(y), numeric=True)

    def is_two_torsion(self) -> bool:
        return self.infinity or (not self.numeric and self.y == 0)

    def __repr__(self) -> str:
        if self.infinity:
            return "O"
        return f"({self.x}, {self.y})"


O = CurvePoint.at_infinity()


@dataclass(frozen=True)
class CurveSymmetry:
    """Element of the (Z/2Z)^2 symmetry group: an optional negation
    composed with an optional translation by T = (0,0).

    The two components commute as point maps, so the order of application
    never matters.
    """

    sign: int = 1  # +1 or -1
    shift: bool = False  # translate by T

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign component must be +1 or -1")

    def compose(self, other: "CurveSymmetry") -> "CurveSymmetry":
        return CurveSymmetry(self.sign * other.sign, self.shift != other.shift)

    def inverse(self) -> "CurveSymmetry":
        return self  # every element is an involution

    def is_identity(self) -> bool:
        return self.sign == 1 and not self.shift

    def __repr__(self) -> str:
        names = {(1, False): "id", (-1, False): "neg", (1, True): "t_T", (-1, True): "neg*t_T"}
        return names[(self.sign, self.shift)]


IDENTITY = CurveSymmetry()
NEGATION = CurveSymmetry(sign=-1)
TRANSLATION = CurveSymmetry(shift=True)
NEG_TRANSLATION = CurveSymmetry(sign=-1, shift=True)
SYMMETRIES = (IDENTITY, NEGATION, TRANSLATION, NEG_TRANSLATION)


class LegendreCurve:
    """y^2 = x(x-1)(x-lambda) with lambda a rational != 0, 1."""

    __slots__ = ("lam",)

    def __init__(self, lam):
        lam = Fraction(lam)
        if lam in (0, 1):
            raise ValueError("lambda in {0, 1} gives a singular cubic")
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, *a):
        raise AttributeError("LegendreCurve is immutable")

    def __eq__(self, other):
        return isinstance(other, LegendreCurve) and self.lam == other.lam

    def __hash__(self):
        return hash(("LegendreCurve", self.lam))

    def __repr__(self):
        return f"LegendreCurve(lambda={self.lam})"

    def rhs(self) -> Poly:
        """The cubic x(x-1)(x-lambda)."""
        return Poly((0, self.lam, -(1 + self.lam), 1))

    @property
    def T(self) -> CurvePoint:
        return CurvePoint.exact(0, 0)

    def two_torsion(self) -> tuple[CurvePoint, ...]:
        return (O, self.T, CurvePoint.exact(1, 0), CurvePoint.exact(self.lam, 0))

    def contains(self, p: CurvePoint, tol: float = 1e-9) -> bool:
        if p.infinity:
            return True
        if p.numeric:
            return abs(p.y**2 - self.rhs()(p.x)) <= tol * max(1.0, abs(p.x) ** 3)
        return p.y**2 == self.rhs()(p.x)

    def require_on_curve(self, p: CurvePoint) -> None:
        if not self.contains(p):
            raise ValueError(f"point {p} is not on {self}")


def apply_symmetry(curve: LegendreCurve, sym: CurveSymmetry, p: CurvePoint) -> CurvePoint:
    """Image of p under the symmetry; exact points stay exact."""
    curve.require_on_curve(p)
    lam = curve.lam
    if sym.sign == -1:
        p = p if p.infinity else _mk(p, p.x, -p.y)
    if sym.shift:
        if p.infinity:
            p = curve.T
        elif not p.numeric and p.x == 0:
            p = O
        elif p.numeric and p.x == 0:
            p = O
        else:
            # translation by T never divides by zero away from x = 0
            p = _mk(p, lam / p.x, -lam * p.y / (p.x * p.x))
    return p


def _mk(template: CurvePoint, x, y) -> CurvePoint:
    if template.numeric:
        return CurvePoint.of_floats(complex(x), complex(y))
    return CurvePoint.exact(x, y)


def double_point(curve: LegendreCurve, p: CurvePoint) -> CurvePoint:
    """[2]p via the tangent construction; 2-torsion doubles to O."""
    curve.require_on_curve(p)
    if p.infinity or p.y == 0:
        return O
    lam = curve.lam
    a = -(1 + lam)
    m = (3 * p.x * p.x + 2 * a * p.x + lam) / (2 * p.y)
    x2 = m * m - a - 2 * p.x
    y2 = m * (p.x - x2) - p.y
    return _mk(p, x2, y2)


def halve_to(curve: LegendreCurve, target: CurvePoint, precision: float = 1e-12) -> list[CurvePoint]:
    """The four numeric points R with [2]R = T.

    On the Legendre model x([2]P) = (x^2 - lambda)^2 / (4 y^2), so halving
    T = (0,0) means x^2 = lambda with y != 0.  Each root is polished by
    Newton iteration on x^2 - lambda until |x^2 - lambda| < precision.
    """
    if target.infinity or target.numeric or target.x != 0 or target.y != 0:
        raise ValueError("halving is only supported toward the 2-torsion point (0,0)")
    lam = complex(curve.lam)
    points = []
    for x0 in (cmath.sqrt(lam), -cmath.sqrt(lam)):
        x = x0
        for _ in range(64):
            r = x * x - lam
            if abs(r) < precision:
                break
            x = x - r / (2 * x)
        else:
            raise ArithmeticError("Newton refinement failed to reach requested precision")
        y = cmath.sqrt(x * (x - 1) * (x - lam))
        for ys in (y, -y):
            points.append(CurvePoint.of_floats(x, ys))
    return points
