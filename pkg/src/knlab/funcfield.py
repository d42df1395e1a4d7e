"""Arithmetic in the function field of a Legendre curve.

Elements are written a(x) + b(x) y with a, b rational functions of x,
reduced modulo y^2 = x(x-1)(x-lambda).  The canonical form (reduced
fractions, monic denominators) makes equality a plain comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import CurvePoint, CurveSymmetry, LegendreCurve
from .exact.poly import Poly, RatFunc


@dataclass(frozen=True)
class FunctionFieldElement:
    curve: LegendreCurve
    a: RatFunc
    b: RatFunc

    @classmethod
    def of(cls, curve: LegendreCurve, a, b=0) -> "FunctionFieldElement":
        return cls(curve, _rf(a), _rf(b))

    @classmethod
    def constant(cls, curve: LegendreCurve, c) -> "FunctionFieldElement":
        return cls(curve, RatFunc(Poly((Fraction(c),))), RatFunc(0))

    @classmethod
    def x(cls, curve: LegendreCurve) -> "FunctionFieldElement":
        return cls(curve, RatFunc.x(), RatFunc(0))

    @classmethod
    def y(cls, curve: LegendreCurve) -> "FunctionFieldElement":
        return cls(curve, RatFunc(0), RatFunc(1))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _like(self, other) -> "FunctionFieldElement":
        if isinstance(other, FunctionFieldElement):
            if other.curve != self.curve:
                raise ValueError("elements live on different curves")
            return other
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            return FunctionFieldElement(self.curve, _rf(other), RatFunc(0))
        return NotImplemented

    def __add__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        return FunctionFieldElement(self.curve, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(self.curve, -self.a, -self.b)

    def __sub__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        c = RatFunc(self.curve.rhs())
        a = self.a * other.a + self.b * other.b * c
        b = self.a * other.b + self.b * other.a
        return FunctionFieldElement(self.curve, a, b)

    __rmul__ = __mul__

    def conjugate(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, self.a, -self.b)

    def norm(self) -> RatFunc:
        """a^2 - b^2 c, the product with the conjugate; zero only for zero."""
        c = RatFunc(self.curve.rhs())
        return self.a * self.a - self.b * self.b * c

    def inverse(self) -> "FunctionFieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero function")
        n = self.norm()
        return FunctionFieldElement(self.curve, self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = FunctionFieldElement.constant(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pullback(self, sym: CurveSymmetry) -> "FunctionFieldElement":
        """f composed with the symmetry as a point map.

        Negation sends y to -y; translation by T substitutes
        x -> lambda/x and y -> -lambda y / x^2.
        """
        f = self
        if sym.shift:
            lam = f.curve.lam
            inner = RatFunc(Poly((lam,)), Poly.x())
            scale = RatFunc(Poly((-lam,)), Poly.x() * Poly.x())
            f = FunctionFieldElement(f.curve, f.a.compose(inner), f.b.compose(inner) * scale)
        if sym.sign == -1:
            f = f.conjugate()
        return f

    def evaluate(self, p: CurvePoint):
        """Value at an affine point; exact for exact points, complex otherwise."""
        if p.infinity:
            raise ValueError("evaluation at the point at infinity is a limit, not a value")
        return self.a(p.x) + self.b(p.x) * p.y

    def invariant_derivative(self) -> "FunctionFieldElement":
        """Derivative along the curve with respect to the global 1-form,
        normalized as D = 2y d/dx + c'(x) d/dy."""
        c = self.curve.rhs()
        da, db = self.a.derivative(), self.b.derivative()
        new_a = 2 * db * RatFunc(c) + self.b * RatFunc(c.derivative())
        new_b = 2 * da
        return FunctionFieldElement(self.curve, new_a, new_b)

    def __repr__(self) -> str:
        if self.b.is_zero():
            return f"{self.a!r}"
        if self.a.is_zero():
            return f"{self.b!r}*y"
        return f"{self.a!r} + {self.b!r}*y"


def _rf(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    return RatFunc(v)
