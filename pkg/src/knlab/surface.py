"""Assembly of the surface data: the invariant branch system on a product of
two Legendre curves, the free-action test at the 16 fixed points, the
invariant ledgers, and the bicanonical quadric relations.

Sections of the (4,4) bundle are kept as sums of separable terms
c * u(x1,y1) * v(x2,y2); equality of such sections reduces to an exact
coefficient tensor over monomial frames on the two factors, so all quadric
identities are verified symbolically, with numeric sampling as a second,
independent route.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine import GAMMA_1, GAMMA_2, AffineElement
from .covers import BranchType, cover_invariants, quotient_invariants
from .curve import CurvePoint, CurveSymmetry, LegendreCurve, NEGATION, TRANSLATION, halve_to
from .equivariant import (
    CHI_MM,
    CHI_PP,
    FIRST_FACTOR,
    SECOND_FACTOR,
    canonical_eigen_table,
    degree_four_space,
    eigen_dims,
    h_dim_table,
    product_eigen_dims,
    v_dim_table,
    volume_form_character,
)
from .exact.linalg import Matrix, solve
from .exact.poly import Poly, RatFunc, poly_gcd, poly_lcm
from .funcfield import FunctionFieldElement
from .rrspace import RRBasis


@dataclass(frozen=True)
class KNParams:
    """Family parameters: the two Legendre parameters, the coefficient vector
    in the invariant branch basis, and the numeric precision for the
    floating-point checks."""

    lambda1: Fraction
    lambda2: Fraction
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]
    precision: float = 1e-12

    def __post_init__(self):
        object.__setattr__(self, "lambda1", Fraction(self.lambda1))
        object.__setattr__(self, "lambda2", Fraction(self.lambda2))
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.lambda1 in (0, 1) or self.lambda2 in (0, 1):
            raise ValueError("Legendre parameters must avoid 0 and 1")
        if len(self.coeffs) != 5:
            raise ValueError("expected 5 coefficients")
        if all(c == 0 for c in self.coeffs):
            raise ValueError("coefficients must not all vanish")
        if self.precision <= 0:
            raise ValueError("precision must be positive")

    @classmethod
    def from_seed(cls, lambda1, lambda2, seed: int, precision: float = 1e-12) -> "KNParams":
        import random

        rng = random.Random(seed)
        while True:
            coeffs = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5))
            if any(coeffs):
                return cls(Fraction(lambda1), Fraction(lambda2), coeffs, precision)


# ---------------------------------------------------------------------------
# separable sections on the product


@dataclass(frozen=True)
class SeparableSection:
    """Sum of separable terms c * (s1 tensor s2)."""

    curve1: LegendreCurve
    curve2: LegendreCurve
    terms: tuple[tuple[FunctionFieldElement, FunctionFieldElement, Fraction], ...]

    @classmethod
    def of_terms(cls, terms) -> "SeparableSection":
        terms = tuple((s1, s2, Fraction(c)) for s1, s2, c in terms)
        if not terms:
            raise ValueError("a separable section needs at least one term")
        c1 = terms[0][0].curve
        c2 = terms[0][1].curve
        for s1, s2, _ in terms:
            if s1.curve != c1 or s2.curve != c2:
                raise ValueError("terms live on different curve pairs")
        return cls(c1, c2, terms)

    def _compatible(self, other: "SeparableSection") -> None:
        if (self.curve1, self.curve2) != (other.curve1, other.curve2):
            raise ValueError("sections on different products")

    def __add__(self, other: "SeparableSection") -> "SeparableSection":
        self._compatible(other)
        return SeparableSection(self.curve1, self.curve2, self.terms + other.terms)

    def __sub__(self, other: "SeparableSection") -> "SeparableSection":
        return self + other.scaled(-1)

    def scaled(self, c) -> "SeparableSection":
        c = Fraction(c)
        return SeparableSection(
            self.curve1, self.curve2, tuple((s1, s2, c * w) for s1, s2, w in self.terms)
        )

    def __mul__(self, other: "SeparableSection") -> "SeparableSection":
        self._compatible(other)
        terms = []
        for s1, s2, c in self.terms:
            for t1, t2, d in other.terms:
                terms.append((s1 * t1, s2 * t2, c * d))
        return SeparableSection(self.curve1, self.curve2, tuple(terms))

    def coefficient_tensor(self) -> dict[tuple[tuple[int, bool], tuple[int, bool]], Fraction]:
        """Exact tensor of the section over denominator-cleared monomial
        frames of the two factors; empty dict iff the section is zero."""
        left = [t[0] for t in self.terms]
        right = [t[1] for t in self.terms]
        d1 = _common_denominator(left)
        d2 = _common_denominator(right)
        tensor: dict = {}
        for s1, s2, c in self.terms:
            if c == 0:
                continue
            v1 = _cleared_vector(s1, d1)
            v2 = _cleared_vector(s2, d2)
            for m1, a in v1.items():
                for m2, b in v2.items():
                    key = (m1, m2)
                    tensor[key] = tensor.get(key, Fraction(0)) + c * a * b
        return {k: v for k, v in tensor.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.coefficient_tensor()

    def equals(self, other: "SeparableSection") -> bool:
        return (self - other).is_zero()

    def evaluate(self, p1: CurvePoint, p2: CurvePoint) -> complex:
        total = 0j
        for s1, s2, c in self.terms:
            total += complex(c) * complex(s1.evaluate(p1)) * complex(s2.evaluate(p2))
        return total

    def pullback_generator(self, k: int) -> "SeparableSection":
        """Pullback under group generator k (1 or 2), acting per factor by
        the two conventions (g1 translates factor 1 and negates factor 2)."""
        sym1, sym2 = _GENERATOR_ACTIONS[k]
        return SeparableSection(
            self.curve1,
            self.curve2,
            tuple((s1.pullback(sym1), s2.pullback(sym2), c) for s1, s2, c in self.terms),
        )

    def is_invariant(self) -> bool:
        return all((self.pullback_generator(k) - self).is_zero() for k in (1, 2))

    def map_factors(self, d1: int = 0, d2: int = 0) -> "SeparableSection":
        """Apply the curve derivative d1 times on the first factor and d2
        times on the second."""
        terms = []
        for s1, s2, c in self.terms:
            for _ in range(d1):
                s1 = s1.invariant_derivative()
            for _ in range(d2):
                s2 = s2.invariant_derivative()
            terms.append((s1, s2, c))
        return SeparableSection(self.curve1, self.curve2, tuple(terms))


_GENERATOR_ACTIONS = {
    1: (FIRST_FACTOR.g1, SECOND_FACTOR.g1),
    2: (FIRST_FACTOR.g2, SECOND_FACTOR.g2),
}


def _common_denominator(elems: Sequence[FunctionFieldElement]) -> Poly:
    den = Poly((1,))
    for f in elems:
        den = poly_lcm(den, f.a.den)
        den = poly_lcm(den, f.b.den)
    return den


def _cleared_vector(f: FunctionFieldElement, den: Poly) -> dict[tuple[int, bool], Fraction]:
    cleared_a = f.a * RatFunc(den)
    cleared_b = f.b * RatFunc(den)
    pa, pb = cleared_a.as_poly(), cleared_b.as_poly()
    vec: dict[tuple[int, bool], Fraction] = {}
    for k, c in enumerate(pa.coeffs):
        if c:
            vec[(k, False)] = c
    for k, c in enumerate(pb.coeffs):
        if c:
            vec[(k, True)] = c
    return vec


# ---------------------------------------------------------------------------
# the invariant branch system


@dataclass(frozen=True)
class BranchSystem:
    """The rank-five invariant system on one product, with the distinguished
    per-factor data it was built from."""

    curve1: LegendreCurve
    curve2: LegendreCurve
    space1: object
    space2: object
    w1: FunctionFieldElement
    w2: FunctionFieldElement
    psi1: FunctionFieldElement
    psi2: FunctionFieldElement
    sections: tuple[SeparableSection, ...]
    invariant_dim: int
    anti_invariant_dim: int


def _plus_generator(curve: LegendreCurve) -> FunctionFieldElement:
    """x + lambda/x, the non-constant invariant of both symmetries."""
    x = FunctionFieldElement.x(curve)
    return x + FunctionFieldElement.constant(curve, curve.lam) / x


def _minus_generator(curve: LegendreCurve) -> FunctionFieldElement:
    """y/x, anti-invariant under both symmetries."""
    return FunctionFieldElement.y(curve) / FunctionFieldElement.x(curve)


def branch_system(lam1, lam2) -> BranchSystem:
    """Build and certify the five-dimensional invariant (4,4) system."""
    c1, c2 = LegendreCurve(lam1), LegendreCurve(lam2)
    sp1, sp2 = degree_four_space(c1, FIRST_FACTOR), degree_four_space(c2, SECOND_FACTOR)
    eig1, eig2 = eigen_dims(sp1), eigen_dims(sp2)
    if eig1.table() != (2, 0, 1, 1) or eig2.table() != (2, 1, 0, 1):
        raise AssertionError("per-factor eigenspace tables are off")

    w1, w2 = _plus_generator(c1), _plus_generator(c2)
    psi1, psi2 = _minus_generator(c1), _minus_generator(c2)
    for f, syms in ((w1, 1), (w2, 1), (psi1, -1), (psi2, -1)):
        for sym in (NEGATION, TRANSLATION):
            img = f.pullback(sym)
            expected = f if syms == 1 else -f
            if img != expected:
                raise AssertionError("distinguished generator has the wrong character")
    # membership in the degree-four spaces
    sp1.base.coordinates(w1), sp2.base.coordinates(w2)
    sp1.base.coordinates(psi1), sp2.base.coordinates(psi2)

    one1 = FunctionFieldElement.constant(c1, 1)
    one2 = FunctionFieldElement.constant(c2, 1)
    sections = tuple(
        SeparableSection.of_terms([(u, v, 1)])
        for u, v in (
            (one1, one2),
            (one1, w2),
            (w1, one2),
            (w1, w2),
            (psi1, psi2),
        )
    )
    for s in sections:
        if not s.is_invariant():
            raise AssertionError("branch basis section is not invariant")
    if not _independent(sections):
        raise AssertionError("branch basis sections are linearly dependent")

    prod = product_eigen_dims(eig1.dims, eig2.dims)
    return BranchSystem(
        curve1=c1,
        curve2=c2,
        space1=sp1,
        space2=sp2,
        w1=w1,
        w2=w2,
        psi1=psi1,
        psi2=psi2,
        sections=sections,
        invariant_dim=prod[CHI_PP],
        anti_invariant_dim=prod[CHI_MM],
    )


def invariant_branch_basis(lam1, lam2) -> tuple[SeparableSection, ...]:
    """The five invariant (4,4) sections, constant-first ordering."""
    return branch_system(lam1, lam2).sections


def _independent(sections: Sequence[SeparableSection]) -> bool:
    keys: list = []
    tensors = [s.coefficient_tensor() for s in sections]
    for t in tensors:
        for k in t:
            if k not in keys:
                keys.append(k)
    rows = [[t.get(k, Fraction(0)) for k in keys] for t in tensors]
    return Matrix(rows, cols=len(keys)).rank() == len(sections)


def assemble_branch_section(system: BranchSystem, coeffs: Sequence) -> SeparableSection:
    coeffs = [Fraction(c) for c in coeffs]
    terms = []
    for c, s in zip(coeffs, system.sections):
        if c:
            terms.extend(s.scaled(c).terms)
    if not terms:
        raise ValueError("coefficients must not all vanish")
    return SeparableSection(system.curve1, system.curve2, tuple(terms))


# ---------------------------------------------------------------------------
# free action at the 16 fixed points


@dataclass(frozen=True)
class FreeActionResult:
    margin: float
    threshold: float
    worst_point: tuple[CurvePoint, CurvePoint]
    values: tuple[complex, ...]

    @property
    def passed(self) -> bool:
        return self.margin > self.threshold


def composite_fixed_points(lam1, lam2, precision: float = 1e-12):
    """The 16 fixed points of the composite involution: per factor the four
    halvings of the 2-torsion point, paired up."""
    c1, c2 = LegendreCurve(lam1), LegendreCurve(lam2)
    pts1 = halve_to(c1, c1.T, precision)
    pts2 = halve_to(c2, c2.T, precision)
    return [(p, q) for p in pts1 for q in pts2]


def free_action_check(params: KNParams) -> FreeActionResult:
    """Minimum modulus of the branch section over the 16 fixed points,
    normalized by the largest coefficient so the margin is scale-invariant."""
    system = branch_system(params.lambda1, params.lambda2)
    section = assemble_branch_section(system, params.coeffs)
    scale = float(max(abs(c) for c in params.coeffs))
    worst = None
    values = []
    margin = float("inf")
    for p, q in composite_fixed_points(params.lambda1, params.lambda2, params.precision):
        v = section.evaluate(p, q)
        values.append(v)
        m = abs(v) / scale
        if m < margin:
            margin, worst = m, (p, q)
    return FreeActionResult(margin, params.precision, worst, tuple(values))


# ---------------------------------------------------------------------------
# invariant and dimension ledgers


def one_form_invariant_count(generators: Sequence[AffineElement] = (GAMMA_1, GAMMA_2)) -> int:
    """Number of coordinate 1-forms fixed by every generator's linear part;
    with no generators (trivial group) both survive."""
    count = 0
    for i in (0, 1):
        if all(g.signs[i] == 1 for g in generators):
            count += 1
    return count


@dataclass(frozen=True)
class InvariantLedger:
    k2_cover: int
    chi_cover: int
    k2: int
    chi: int
    p_g: int
    q: int

    def noether_consistent(self) -> bool:
        return self.chi == 1 - self.q + self.p_g

    def severi_equality(self) -> bool:
        return self.k2 == 4 * self.chi


def surface_invariant_ledger(params: KNParams) -> InvariantLedger:
    """K^2, chi, p_g, q of the quotient surface, each wired to the module
    that actually computes it."""
    k2c, chic = cover_invariants(BranchType(2, 2))
    k2, chi = quotient_invariants(k2c, chic, 4)
    table = canonical_eigen_table(params.lambda1, params.lambda2)
    p_g = table[CHI_PP]
    q = one_form_invariant_count()
    return InvariantLedger(k2c, chic, k2, chi, p_g, q)


def moduli_dimension_ledger(lam1=2, lam2=3, branch_parameter_count: int = 2,
                            invariant_dim: int | None = None) -> int:
    """Parameters of the family: the two branch points plus the projectivized
    invariant system.  The system dimension is fed from the equivariant
    computation unless explicitly overridden."""
    if invariant_dim is None:
        v1 = v_dim_table(LegendreCurve(lam1), FIRST_FACTOR)
        v2 = v_dim_table(LegendreCurve(lam2), SECOND_FACTOR)
        invariant_dim = product_eigen_dims(v1, v2)[CHI_PP]
    return branch_parameter_count + (invariant_dim - 1)


@dataclass(frozen=True)
class Ext1Ledger:
    h0_branch_invariant: int  # sections of the branch bundle, invariant part
    components: tuple[int, int, int]
    bound: int


def ext1_bound_ledger(lam1, lam2) -> Ext1Ledger:
    """Tangent-space bound from the restriction sequence: invariant sections
    of the branch bundle on its divisor, of the half bundle, minus the
    obstruction from invariant 1-forms (none here)."""
    c1, c2 = LegendreCurve(lam1), LegendreCurve(lam2)
    h0_d = product_eigen_dims(v_dim_table(c1, FIRST_FACTOR), v_dim_table(c2, SECOND_FACTOR))[CHI_PP]
    restricted_d = h0_d - 1  # h^0 of the structure sheaf is one-dimensional
    h0_l = product_eigen_dims(h_dim_table(c1, FIRST_FACTOR), h_dim_table(c2, SECOND_FACTOR))[CHI_PP]
    obstruction = 2 * one_form_invariant_count()
    return Ext1Ledger(
        h0_branch_invariant=h0_d,
        components=(restricted_d, h0_l, obstruction),
        bound=restricted_d + h0_l - obstruction,
    )


# ---------------------------------------------------------------------------
# bicanonical basis and quadric identities


@dataclass(frozen=True)
class BicanonicalBasis:
    z0: SeparableSection
    z1: SeparableSection
    z2: SeparableSection
    z3: SeparableSection
    z4: SeparableSection
    square_coords: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

    def coordinates(self) -> tuple[SeparableSection, ...]:
        return (self.z0, self.z1, self.z2, self.z3, self.z4)

    def first_quadric_residual(self) -> SeparableSection:
        return self.z0 * self.z3 - self.z1 * self.z2

    def second_quadric_residual(self) -> SeparableSection:
        return self.z4 * self.z4 - self.z0 * self.z3

    def identities_hold(self) -> bool:
        return self.first_quadric_residual().is_zero() and self.second_quadric_residual().is_zero()

    def with_scaled_z4(self, c) -> "BicanonicalBasis":
        return BicanonicalBasis(
            self.z0, self.z1, self.z2, self.z3, self.z4.scaled(c), self.square_coords
        )


def express_square_in_plus_basis(space_base: RRBasis, psi: FunctionFieldElement,
                                 w: FunctionFieldElement) -> tuple[Fraction, Fraction]:
    """Solve psi^2 = alpha * 1 + beta * w exactly; failure would mean the
    square left the invariant system."""
    curve = psi.curve
    target = space_base.coordinates(psi * psi)
    col_one = space_base.coordinates(FunctionFieldElement.constant(curve, 1))
    col_w = space_base.coordinates(w)
    a = Matrix([[col_one[i], col_w[i]] for i in range(len(target))], cols=2)
    sol = solve(a, target)
    if sol is None:
        raise ArithmeticError("square of the anti-invariant generator escaped the plus system")
    return sol[0], sol[1]


def bicanonical_basis(lam1, lam2) -> BicanonicalBasis:
    """The five sections z0..z4 with z0 z3 = z1 z2 and z4^2 = z0 z3.

    Per factor, u = 1 and v = psi^2; the mixed coordinate is psi1 psi2.
    """
    system = branch_system(lam1, lam2)
    co1 = express_square_in_plus_basis(system.space1.base, system.psi1, system.w1)
    co2 = express_square_in_plus_basis(system.space2.base, system.psi2, system.w2)
    one1 = FunctionFieldElement.constant(system.curve1, 1)
    one2 = FunctionFieldElement.constant(system.curve2, 1)
    v1 = system.psi1 * system.psi1
    v2 = system.psi2 * system.psi2
    mk = SeparableSection.of_terms
    basis = BicanonicalBasis(
        z0=mk([(one1, one2, 1)]),
        z1=mk([(one1, v2, 1)]),
        z2=mk([(v1, one2, 1)]),
        z3=mk([(v1, v2, 1)]),
        z4=mk([(system.psi1, system.psi2, 1)]),
        square_coords=(co1, co2),
    )
    if not basis.identities_hold():
        raise AssertionError("bicanonical quadric identities failed symbolically")
    return basis


@dataclass(frozen=True)
class DegreeLedger:
    """Multiplicativity bookkeeping for the bicanonical map degree."""

    albanese_degree: int = 2  # double cover over the product of curves
    product_to_grid: int = 16  # two bidouble covers of the line, 4 each
    group_order: int = 4
    image_to_grid: int = 2  # the quadric image doubly covers the grid

    def per_factor_quotient_degree(self) -> int:
        return 4

    def total(self) -> int:
        return self.albanese_degree * self.product_to_grid // self.group_order // self.image_to_grid


def bicanonical_degree_ledger() -> DegreeLedger:
    return DegreeLedger()


NODES = (
    (1, 0, 0, 0, 0),  # z4 = z1 = z2 = z3 = 0
    (0, 0, 0, 1, 0),  # z4 = z1 = z2 = z0 = 0
    (0, 0, 1, 0, 0),  # z4 = z0 = z3 = z1 = 0
    (0, 1, 0, 0, 0),  # z4 = z0 = z3 = z2 = 0
)


def node_check(basis: BicanonicalBasis) -> tuple[tuple[int, ...], ...]:
    """The four coordinate nodes, each verified to satisfy both quadrics."""
    if not basis.identities_hold():
        raise ValueError("invalid bicanonical basis")
    for p in NODES:
        z0, z1, z2, z3, z4 = p
        if z0 * z3 - z1 * z2 != 0 or z4 * z4 - z0 * z3 != 0:
            raise AssertionError(f"node {p} misses a quadric")
    if len(set(NODES)) != 4:
        raise AssertionError("nodes are not distinct")
    return NODES


@dataclass(frozen=True)
class ResidualReport:
    max_residual: float
    samples: int
    vacuous: bool


def random_curve_point(curve: LegendreCurve, rng) -> CurvePoint:
    r = 0.6 + 1.2 * rng.random()
    theta = 2 * cmath.pi * rng.random()
    x = r * cmath.exp(1j * theta)
    y = cmath.sqrt(complex(curve.rhs()(x)))
    if rng.random() < 0.5:
        y = -y
    return CurvePoint.of_floats(x, y)


def pullback_consistency_check(basis: BicanonicalBasis, samples: int,
                               precision: float = 1e-9, seed: int = 0) -> ResidualReport:
    """Numeric end-to-end guard: sample points on the product and check both
    quadric residuals relative to the term magnitudes."""
    import random

    if samples == 0:
        return ResidualReport(0.0, 0, True)
    rng = random.Random(seed)
    curve1, curve2 = basis.z0.curve1, basis.z0.curve2
    worst = 0.0
    for _ in range(samples):
        p = random_curve_point(curve1, rng)
        q = random_curve_point(curve2, rng)
        vals = [z.evaluate(p, q) for z in basis.coordinates()]
        v0, v1, v2, v3, v4 = vals
        s1 = max(abs(v0 * v3), abs(v1 * v2), 1e-30)
        s2 = max(abs(v4 * v4), abs(v0 * v3), 1e-30)
        worst = max(worst, abs(v0 * v3 - v1 * v2) / s1, abs(v4 * v4 - v0 * v3) / s2)
    return ResidualReport(worst, samples, worst >= precision)


# ---------------------------------------------------------------------------
# heuristic singularity scan of the branch divisor


@dataclass(frozen=True)
class SingularHit:
    x1: complex
    x2: complex
    section_value: float


def smoothness_scan(params: KNParams, grid: int = 3, tol: float = 1e-8) -> list[SingularHit]:
    """Newton search for common zeros of the section and both curve
    derivatives, started from a coarse grid.  Convergent hits fail the
    surface report; an empty list is the (heuristic) pass."""
    system = branch_system(params.lambda1, params.lambda2)
    f = assemble_branch_section(system, params.coeffs)
    f1 = f.map_factors(1, 0)
    f2 = f.map_factors(0, 1)
    f11 = f.map_factors(2, 0)
    f12 = f.map_factors(1, 1)
    f22 = f.map_factors(0, 2)
    scale = float(max(abs(c) for c in params.coeffs))
    c1, c2 = system.curve1, system.curve2
    hits: list[SingularHit] = []

    starts = [0.9 * cmath.exp(2j * cmath.pi * k / grid) + 0.37 for k in range(grid)]
    for s1 in (1, -1):
        for s2 in (1, -1):
            for a in starts:
                for b in starts:
                    hit = _newton_critical_point(f, f1, f2, f11, f12, f22, c1, c2,
                                                 a, b, s1, s2, scale, tol)
                    if hit is not None:
                        hits.append(hit)
    return hits


def _newton_critical_point(f, f1, f2, f11, f12, f22, c1, c2, x1, x2, s1, s2, scale, tol):
    for _ in range(40):
        y1 = s1 * cmath.sqrt(complex(c1.rhs()(x1)))
        y2 = s2 * cmath.sqrt(complex(c2.rhs()(x2)))
        if abs(y1) < 1e-8 or abs(y2) < 1e-8:
            return None
        p = CurvePoint.of_floats(x1, y1)
        q = CurvePoint.of_floats(x2, y2)
        g1 = f1.evaluate(p, q)
        g2 = f2.evaluate(p, q)
        if abs(g1) + abs(g2) < tol * scale:
            if abs(f.evaluate(p, q)) < tol * scale:
                return SingularHit(x1, x2, abs(f.evaluate(p, q)))
            return None
        j11 = f11.evaluate(p, q) / (2 * y1)
        j12 = f12.evaluate(p, q) / (2 * y2)
        j21 = f12.evaluate(p, q) / (2 * y1)
        j22 = f22.evaluate(p, q) / (2 * y2)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            return None
        dx1 = (-g1 * j22 + g2 * j12) / det
        dx2 = (-j11 * g2 + j21 * g1) / det
        x1, x2 = x1 + dx1, x2 + dx2
        if abs(x1) > 1e6 or abs(x2) > 1e6:
            return None
    return None
