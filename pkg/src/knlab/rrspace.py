"""Divisors, orders of vanishing, and Riemann-Roch spaces on a Legendre curve.

order_at expands a function in the local parameter of the point: x/y at
infinity, y at the 2-torsion points, x - x0 elsewhere.  The expansion depth
starts at 8 terms and doubles whenever cancellation swallows the whole
window, with a hard cap of 128.

rr_space clears all finite poles into L(M*[O]) by multiplying with a power
product of (x - x0), expresses the result over the monomial frame
{x^i, x^i y}, imposes the vanishing conditions as exact linear constraints,
and reads the solution space off an exact nullspace.  Bases are
canonicalized by reduced row echelon form over the frame, so output is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .curve import CurvePoint, CurveSymmetry, LegendreCurve, O, apply_symmetry
from .exact.linalg import Matrix, Vector
from .exact.poly import Poly, RatFunc, poly_gcd, rational_roots
from .funcfield import FunctionFieldElement
from .series import INF, Series

_DEPTHS = (8, 16, 32, 64, 128)


class PrecisionExhausted(ArithmeticError):
    """Raised when the valuation stays hidden past the maximal expansion depth."""


# ---------------------------------------------------------------------------
# divisors


def _point_key(p: CurvePoint):
    return (0, 0, 0) if p.infinity else (1, p.x, p.y)


@dataclass(frozen=True)
class Divisor:
    """Finite formal sum of exact points with integer multiplicities."""

    curve: LegendreCurve
    items: tuple[tuple[CurvePoint, int], ...]

    @classmethod
    def of(cls, curve: LegendreCurve, mults: Mapping[CurvePoint, int]) -> "Divisor":
        cleaned = {}
        for p, m in mults.items():
            if p.numeric:
                raise ValueError("divisors need exact points")
            curve.require_on_curve(p)
            if m:
                cleaned[p] = cleaned.get(p, 0) + int(m)
        items = tuple(sorted(((p, m) for p, m in cleaned.items() if m), key=lambda it: _point_key(it[0])))
        return cls(curve, items)

    @classmethod
    def zero(cls, curve: LegendreCurve) -> "Divisor":
        return cls(curve, ())

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.items)

    def support(self) -> tuple[CurvePoint, ...]:
        return tuple(p for p, _ in self.items)

    def multiplicity(self, p: CurvePoint) -> int:
        for q, m in self.items:
            if q == p:
                return m
        return 0

    def __add__(self, other: "Divisor") -> "Divisor":
        if self.curve != other.curve:
            raise ValueError("divisors on different curves")
        out = dict(self.items)
        for p, m in other.items:
            out[p] = out.get(p, 0) + m
        return Divisor.of(self.curve, out)

    def __neg__(self) -> "Divisor":
        return Divisor.of(self.curve, {p: -m for p, m in self.items})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, k: int) -> "Divisor":
        return Divisor.of(self.curve, {p: k * m for p, m in self.items})

    def apply_symmetry(self, sym: CurveSymmetry) -> "Divisor":
        return Divisor.of(self.curve, {apply_symmetry(self.curve, sym, p): m for p, m in self.items})

    def is_zero(self) -> bool:
        return not self.items

    def __repr__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{m}[{p}]" for p, m in self.items)


# ---------------------------------------------------------------------------
# local expansions


def local_expansion(curve: LegendreCurve, p: CurvePoint, depth: int) -> tuple[Series, Series]:
    """Series for (x, y) in the local parameter at p, to absolute order depth."""
    lam = curve.lam
    if p.infinity:
        # t = x/y; with x = u/t^2 the curve forces u^2 = u(1 + (1+lam)t^2) - lam t^4
        g = Series(0, (1, 0, 1 + lam), depth + 4)
        h = Series(4, (lam,), depth + 4)
        u = Series(0, (1,), depth + 4)
        for _ in range(depth.bit_length() + 2):
            f_val = u * u - u * g + h
            u_next = u - f_val / (2 * u - g)
            if u_next.coeffs == u.coeffs and u_next.low == u.low:
                break
            u = u_next
        t2 = Series.t_power(-2)
        t3 = Series.t_power(-3)
        return (u * t2).truncate(depth), (u * t3).truncate(depth)
    if p.numeric:
        raise ValueError("local expansion needs an exact point")
    curve.require_on_curve(p)
    x0, y0 = p.x, p.y
    if y0 == 0:
        # t = y; x = x0 + t^2/q(x) with q the complementary quadratic
        q = curve.rhs() // Poly((-x0, 1))
        t2 = Series.t_power(2)
        e = Series(0, (), depth + 2)
        for _ in range(depth // 2 + 2):
            base = Series(0, (x0,), depth + 2) + e
            e = t2 * q(base).inverse()
        xs = (Series.const(x0) + e).truncate(depth)
        ys = Series(1, (1,), depth)
        return xs, ys
    # ordinary point: t = x - x0, y = y0 * sqrt(c(x0+t))/y0^2 ... via Newton
    xs = Series(0, (x0, 1), depth)
    hseries = curve.rhs()(xs) * (1 / (y0 * y0))
    s = Series(0, (1,), depth)
    for _ in range(depth.bit_length() + 2):
        s_next = (s + hseries / s) * Fraction(1, 2)
        if s_next.coeffs == s.coeffs and s_next.low == s.low:
            break
        s = s_next
    return xs, (y0 * s).truncate(depth)


def order_at(curve: LegendreCurve, f: FunctionFieldElement, p: CurvePoint) -> int:
    """Exact valuation ord_p(f); the zero function is rejected."""
    if f.curve != curve:
        raise ValueError("function lives on a different curve")
    if f.is_zero():
        raise ValueError("the zero function has no order of vanishing")
    if p.numeric:
        raise ValueError("order_at needs an exact rational point")
    curve.require_on_curve(p)
    for depth in _DEPTHS:
        try:
            xs, ys = local_expansion(curve, p, depth)
            series = f.a(xs) + f.b(xs) * ys
        except ZeroDivisionError:
            continue  # denominator valuation ate the window; retry deeper
        v = series.valuation()
        if v is not None and v < INF:
            return v
    raise PrecisionExhausted(f"valuation of {f!r} at {p!r} hidden past depth {_DEPTHS[-1]}")


# ---------------------------------------------------------------------------
# Riemann-Roch spaces


@dataclass(frozen=True)
class _Frame:
    """Monomial frame of L(M*[O]) together with the pole-clearing multiplier."""

    monomials: tuple[tuple[int, bool], ...]  # (power of x, carries y)
    clear: RatFunc  # power product of (x - x0)
    rows: Matrix  # RREF coordinate rows of the basis over the monomials
    pivots: tuple[int, ...]


@dataclass(frozen=True)
class RRBasis:
    """A computed basis of L(D)."""

    curve: LegendreCurve
    divisor: Divisor
    functions: tuple[FunctionFieldElement, ...]
    frame: _Frame

    @property
    def dimension(self) -> int:
        return len(self.functions)

    def coordinates(self, f: FunctionFieldElement) -> Vector:
        """Exact coordinates of f in this basis; raises if f is not in L(D)."""
        vec = self._frame_vector(f)
        coords = tuple(vec[c] for c in self.frame.pivots)
        recon = [Fraction(0)] * len(vec)
        for ci, row in zip(coords, self.frame.rows.entries):
            for j, rv in enumerate(row):
                recon[j] += ci * rv
        if tuple(recon) != vec:
            raise ValueError("function does not lie in the computed space")
        return coords

    def from_coordinates(self, coords: Sequence) -> FunctionFieldElement:
        out = FunctionFieldElement.constant(self.curve, 0)
        for c, f in zip(coords, self.functions):
            out = out + FunctionFieldElement.constant(self.curve, Fraction(c)) * f
        return out

    def _frame_vector(self, f: FunctionFieldElement) -> Vector:
        g = f * FunctionFieldElement.of(self.curve, self.frame.clear)
        if not (g.a.is_polynomial() and g.b.is_polynomial()):
            raise ValueError("function does not lie in the computed space")
        pa, pb = g.a.as_poly(), g.b.as_poly()
        index = {mon: i for i, mon in enumerate(self.frame.monomials)}
        vec = [Fraction(0)] * len(self.frame.monomials)
        for k, c in enumerate(pa.coeffs):
            if c:
                if (k, False) not in index:
                    raise ValueError("function does not lie in the computed space")
                vec[index[(k, False)]] = c
        for k, c in enumerate(pb.coeffs):
            if c:
                if (k, True) not in index:
                    raise ValueError("function does not lie in the computed space")
                vec[index[(k, True)]] = c
        return tuple(vec)


def _monomial_ffe(curve: LegendreCurve, mon: tuple[int, bool]) -> FunctionFieldElement:
    k, has_y = mon
    xs = FunctionFieldElement.x(curve) ** k
    return xs * FunctionFieldElement.y(curve) if has_y else xs


def rr_space(curve: LegendreCurve, div: Divisor) -> RRBasis:
    """Basis of L(div) = {f : (f) + div >= 0} for divisors on exact points."""
    if div.curve != curve:
        raise ValueError("divisor lives on a different curve")
    n_inf = div.multiplicity(O)
    finite = [(p, m) for p, m in div.items if not p.infinity]

    # group the pole-clearing multiplier by x-coordinate
    fibers: dict[Fraction, int] = {}
    for p, m in finite:
        fibers[p.x] = max(fibers.get(p.x, 0), m, 0)
    clear_poly = Poly((1,))
    for x0, e in sorted(fibers.items()):
        clear_poly = clear_poly * Poly((-x0, 1)) ** e

    # shifted divisor E = div - (clear); poles of g = f*clear live only at O
    shifted: dict[CurvePoint, int] = {}
    m_inf = n_inf
    for x0, e in fibers.items():
        m_inf += 2 * e
    for p, m in finite:
        e = fibers[p.x]
        ord_factor = 2 if p.y == 0 else 1
        shifted[p] = m - ord_factor * e
        if p.y != 0:
            conj = CurvePoint.exact(p.x, -p.y)
            if div.multiplicity(conj) == 0:
                shifted[conj] = -e

    big_m = max(m_inf, 0)
    monomials = [(k, False) for k in range(big_m // 2 + 1)]
    monomials += [(k, True) for k in range((big_m - 3) // 2 + 1)]
    monomials = tuple(monomials)

    conditions: list[tuple[CurvePoint, int]] = [(p, -m) for p, m in shifted.items() if m < 0]
    if m_inf < 0:
        conditions.append((O, -m_inf))

    rows: list[list[Fraction]] = []
    for point, need in conditions:
        depth = max(16, 2 * need + big_m + 8)
        xs, ys = local_expansion(curve, point, depth)
        expansions = []
        for mon in monomials:
            k, has_y = mon
            s = xs**k
            if has_y:
                s = s * ys
            expansions.append(s)
        low = min(s.low for s in expansions)
        for exp in range(low, need):
            rows.append([s.coefficient(exp) for s in expansions])

    constraint = Matrix(rows, cols=len(monomials))
    kernel = constraint.nullspace()
    if kernel:
        reduced, pivots = Matrix(kernel, cols=len(monomials)).rref()
        basis_rows = Matrix(reduced.entries[: len(pivots)], cols=len(monomials))
    else:
        basis_rows = Matrix([], cols=len(monomials))
        pivots = ()

    clear = RatFunc(clear_poly)
    inv_clear = FunctionFieldElement.of(curve, 1 / clear)
    functions = []
    for row in basis_rows.entries:
        g = FunctionFieldElement.constant(curve, 0)
        for c, mon in zip(row, monomials):
            if c:
                g = g + FunctionFieldElement.constant(curve, c) * _monomial_ffe(curve, mon)
        functions.append(g * inv_clear)

    frame = _Frame(monomials=monomials, clear=clear, rows=basis_rows, pivots=tuple(pivots))
    return RRBasis(curve, div, tuple(functions), frame)


def base_locus(space: RRBasis, subspace: Sequence[FunctionFieldElement] | None = None) -> Divisor:
    """Greatest divisor bounded by every zero divisor (f) + D, f in the subspace.

    At each candidate point the minimum of ord(f) over a basis is attained by
    a generic combination, so the pointwise minimum over the given elements
    is the exact base multiplicity.
    """
    curve = space.curve
    elems = tuple(subspace) if subspace is not None else space.functions
    if not elems or any(f.is_zero() for f in elems):
        raise ValueError("base locus needs a nonzero subspace")
    for f in elems:
        space.coordinates(f)  # membership guard

    found: dict[CurvePoint, int] = {}
    for p in space.divisor.support():
        m = min(order_at(curve, f, p) for f in elems) + space.divisor.multiplicity(p)
        if m > 0:
            found[p] = m

    support_x = {p.x for p in space.divisor.support() if not p.infinity}
    for x0 in _common_zero_candidates(curve, elems):
        y2 = curve.rhs()(x0)
        y0 = _fraction_sqrt(y2)
        if y0 is None:
            continue
        for yy in {y0, -y0}:
            q = CurvePoint.exact(x0, yy)
            if x0 in support_x and space.divisor.multiplicity(q):
                continue
            m = min(order_at(curve, f, q) for f in elems)
            if m > 0:
                found[q] = m
    return Divisor.of(curve, found)


def _numerator_pair(f: FunctionFieldElement) -> tuple[Poly, Poly]:
    """(A, B) with f = (A + B y) / delta for a polynomial delta."""
    da, db = f.a.den, f.b.den
    g = poly_gcd(da, db)
    delta = (da * db) // g if g.degree > 0 else da * db
    return f.a.num * (delta // da), f.b.num * (delta // db)


def _common_zero_candidates(curve: LegendreCurve, elems) -> list[Fraction]:
    c = curve.rhs()
    norms = []
    for f in elems:
        a_part, b_part = _numerator_pair(f)
        norms.append(a_part * a_part - b_part * b_part * c)
    g = norms[0]
    for n in norms[1:]:
        g = poly_gcd(g, n)
    if g.degree <= 0:
        return []
    roots = rational_roots(g)
    residual = g
    for r in roots:
        lin = Poly((-r, 1))
        while (residual % lin).is_zero():
            residual = residual // lin
    if residual.degree > 0 and not _irrational_part_safe(elems, residual, c):
        raise ValueError("base locus meets non-rational points; outside supported scope")
    return roots


def _irrational_part_safe(elems, residual: Poly, c: Poly) -> bool:
    """True when the residual common factor provably carries no common zero
    of the subspace (the conjugate-split case).

    A common zero over a root of the residual needs either a common root of
    every A and B part, or, when some B survives, a common root of every
    pairwise cross A_i B_j - A_j B_i.
    """
    if len(elems) == 1:
        return False
    pairs = [_numerator_pair(f) for f in elems]
    g_ab = Poly()
    for a_part, b_part in pairs:
        for q in (a_part, b_part):
            if not q.is_zero():
                g_ab = poly_gcd(g_ab, q) if not g_ab.is_zero() else q
    if poly_gcd(residual, g_ab).degree > 0:
        return False
    crosses = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            ai, bi = pairs[i]
            aj, bj = pairs[j]
            w = ai * bj - aj * bi
            if not w.is_zero():
                crosses.append(w)
    if not crosses:
        return all(b.is_zero() for _, b in pairs)
    g_cross = crosses[0]
    for w in crosses[1:]:
        g_cross = poly_gcd(g_cross, w)
    return poly_gcd(residual, g_cross).degree <= 0


def _fraction_sqrt(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    num, den = v.numerator, v.denominator
    rn, rd = _isqrt(num), _isqrt(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt(n: int) -> int | None:
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None
