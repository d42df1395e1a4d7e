"""Truncated Laurent series over the rationals.

A Series knows its coefficients for exponents in [low, prec) and nothing
beyond; addition can cancel leading terms, in which case the window shrinks
honestly rather than pretending to more precision.  A series whose window
is entirely zero has undetermined valuation, which callers treat as a
signal to recompute at greater depth.
"""

from __future__ import annotations

from fractions import Fraction

INF = 10**9  # effectively infinite absolute precision


class Series:
    __slots__ = ("low", "coeffs", "prec")

    def __init__(self, low: int, coeffs, prec: int):
        if prec >= INF // 2:  # absorb arithmetic drift around the sentinel
            prec = INF
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        if prec < INF:
            cs = cs[: max(prec - low, 0)]
        else:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            low = prec
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, *a):
        raise AttributeError("Series is immutable")

    @classmethod
    def const(cls, c) -> "Series":
        return cls(0, (Fraction(c),), INF)

    @classmethod
    def t_power(cls, k: int, c=1, prec: int = INF) -> "Series":
        return cls(k, (Fraction(c),), prec)

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec >= INF

    def valuation(self) -> int | None:
        """Exponent of the first nonzero term, or None when the whole
        window is zero (valuation >= prec, undetermined)."""
        if self.coeffs:
            return self.low
        return None if self.prec < INF else INF

    def coefficient(self, k: int) -> Fraction:
        if k >= self.prec:
            raise ValueError(f"coefficient of t^{k} beyond precision O(t^{self.prec})")
        if self.low <= k < self.low + len(self.coeffs):
            return self.coeffs[k - self.low]
        return Fraction(0)

    def __neg__(self) -> "Series":
        return Series(self.low, tuple(-c for c in self.coeffs), self.prec)

    def __add__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        prec = min(self.prec, other.prec)
        if not self.coeffs and not other.coeffs:
            return Series(0, (), prec)
        lows = [s.low for s in (self, other) if s.coeffs]
        low = min(lows)
        hi = min(prec, max((s.low + len(s.coeffs) for s in (self, other) if s.coeffs), default=low))
        out = [Fraction(0)] * max(hi - low, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.low + i - low
                if 0 <= k < len(out):
                    out[k] += c
        return Series(low, out, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # error terms: O(t^p1) * t^low2 and O(t^p2) * t^low1
        lo1 = self.low if self.coeffs else self.prec
        lo2 = other.low if other.coeffs else other.prec
        prec = min(self.prec + lo2, other.prec + lo1)
        prec = min(prec, INF)
        if not self.coeffs or not other.coeffs:
            return Series(0, (), prec)
        low = self.low + other.low
        n = min(prec - low, len(self.coeffs) + len(other.coeffs) - 1)
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j < len(out):
                    out[i + j] += a * b
        return Series(low, out, prec)

    __rmul__ = __mul__

    def truncate(self, prec: int) -> "Series":
        return Series(self.low, self.coeffs, min(self.prec, prec))

    def inverse(self) -> "Series":
        if not self.coeffs:
            raise ZeroDivisionError("cannot invert a series with undetermined valuation")
        if self.prec >= INF:
            if len(self.coeffs) == 1:
                return Series(-self.low, (1 / self.coeffs[0],), INF)
            raise ValueError("inverse of an exact multi-term series is infinite; truncate first")
        v = self.low
        rel = self.prec - v
        a = list(self.coeffs) + [Fraction(0)] * (rel - len(self.coeffs))
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, rel):
            s = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
            b.append(-inv0 * s)
        return Series(-v, b, rel - v)

    def __truediv__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Series":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return self.inverse() ** (-n)
        result = Series.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"O(t^{self.prec})"
        terms = " + ".join(
            f"{c}*t^{self.low + i}" for i, c in enumerate(self.coeffs) if c != 0
        )
        tail = "" if self.prec >= INF else f" + O(t^{self.prec})"
        return terms + tail


def _coerce(v):
    if isinstance(v, Series):
        return v
    if isinstance(v, (int, Fraction)):
        return Series.const(v)
    return None
