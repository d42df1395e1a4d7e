"""Klein four-group linearizations on section spaces.

The group G acts on each curve through negation and translation by the
2-torsion point; the two factor conventions differ in which generator is
the translation.  Eigenspaces are carved out by the exact projectors
P_chi = (1/4) sum over g of chi(g) rho(g), and all dimension tables in the
verification suite come from these decompositions and their products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .curve import (
    CurveSymmetry,
    IDENTITY,
    LegendreCurve,
    NEGATION,
    O,
    TRANSLATION,
)
from .exact.linalg import Matrix, Vector
from .funcfield import FunctionFieldElement
from .rrspace import Divisor, RRBasis, rr_space


@dataclass(frozen=True)
class CharacterG:
    """A character of (Z/2Z)^2, recorded as the signs on the two generators."""

    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 not in (1, -1) or self.s2 not in (1, -1):
            raise ValueError("character values must be +1 or -1")

    def __mul__(self, other: "CharacterG") -> "CharacterG":
        return CharacterG(self.s1 * other.s1, self.s2 * other.s2)

    def inverse(self) -> "CharacterG":
        return self

    def __repr__(self) -> str:
        return ("+" if self.s1 == 1 else "-") + ("+" if self.s2 == 1 else "-")


CHI_PP = CharacterG(1, 1)
CHI_PM = CharacterG(1, -1)
CHI_MP = CharacterG(-1, 1)
CHI_MM = CharacterG(-1, -1)
CHARACTERS = (CHI_PP, CHI_PM, CHI_MP, CHI_MM)

# the fibre coordinate of the canonical linearization transforms by this
W_CHARACTER = CHI_PM


@dataclass(frozen=True)
class FactorConvention:
    """Which curve symmetry realizes each group generator on one factor."""

    g1: CurveSymmetry
    g2: CurveSymmetry


# first factor: g1 translates, g2 negates; second factor the other way round
FIRST_FACTOR = FactorConvention(g1=TRANSLATION, g2=NEGATION)
SECOND_FACTOR = FactorConvention(g1=NEGATION, g2=TRANSLATION)


def action_matrix(basis: RRBasis, sym: CurveSymmetry) -> Matrix:
    """Exact matrix of f -> f o sym^{-1} on the basis; requires the divisor
    to be invariant under sym."""
    if basis.divisor.apply_symmetry(sym) != basis.divisor:
        raise ValueError(f"divisor {basis.divisor} is not invariant under {sym}")
    cols = []
    for f in basis.functions:
        image = f.pullback(sym.inverse())
        cols.append(basis.coordinates(image))
    n = len(cols)
    m = Matrix([[cols[j][i] for j in range(n)] for i in range(n)], cols=n)
    if not (m * m).is_identity():
        raise AssertionError("action matrix is not an involution")
    return m


@dataclass(frozen=True)
class LinearizedSpace:
    """A section space with the two commuting generator actions and an
    optional character twist."""

    base: RRBasis
    act1: Matrix
    act2: Matrix
    twist: CharacterG = CHI_PP

    def __post_init__(self):
        if self.act1 * self.act2 != self.act2 * self.act1:
            raise AssertionError("generator actions fail to commute")

    @classmethod
    def natural(
        cls,
        curve: LegendreCurve,
        div: Divisor,
        convention: FactorConvention,
        twist: CharacterG = CHI_PP,
    ) -> "LinearizedSpace":
        basis = rr_space(curve, div)
        return cls(
            base=basis,
            act1=action_matrix(basis, convention.g1),
            act2=action_matrix(basis, convention.g2),
            twist=twist,
        )

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def representation(self, chi_index: tuple[int, int]) -> Matrix:
        """rho'(g) for g = g1^a g2^b including the twist."""
        a, b = chi_index
        m = Matrix.identity(self.dimension)
        sign = 1
        if a:
            m = m * self.act1
            sign *= self.twist.s1
        if b:
            m = m * self.act2
            sign *= self.twist.s2
        return m.scale(sign)

    def projector(self, chi: CharacterG) -> Matrix:
        n = self.dimension
        total = Matrix.zero(n, n)
        for a in (0, 1):
            for b in (0, 1):
                weight = (chi.s1**a) * (chi.s2**b)
                total = total + self.representation((a, b)).scale(weight)
        return total.scale(Fraction(1, 4))


@dataclass(frozen=True)
class EigenDecomposition:
    """Per-character dimensions and exact bases (coordinates in the ambient
    RRBasis, first nonzero coordinate normalized to 1)."""

    space: LinearizedSpace
    dims: Mapping[CharacterG, int]
    bases: Mapping[CharacterG, tuple[Vector, ...]]

    def dim(self, chi: CharacterG) -> int:
        return self.dims[chi]

    def table(self) -> tuple[int, int, int, int]:
        """Dimensions in the order (++, +-, -+, --)."""
        return tuple(self.dims[chi] for chi in CHARACTERS)

    def basis_functions(self, chi: CharacterG) -> tuple[FunctionFieldElement, ...]:
        return tuple(self.space.base.from_coordinates(v) for v in self.bases[chi])


def eigen_dims(space: LinearizedSpace) -> EigenDecomposition:
    """Decompose the space by exact character projectors."""
    dims = {}
    bases = {}
    for chi in CHARACTERS:
        proj = space.projector(chi)
        image_rows = [proj.column(j) for j in range(space.dimension)]
        reduced, pivots = Matrix(image_rows, cols=space.dimension).rref()
        vecs = tuple(reduced.row(i) for i in range(len(pivots)))
        dims[chi] = len(vecs)
        bases[chi] = vecs
    if sum(dims.values()) != space.dimension:
        raise AssertionError("eigenspace dimensions fail to add up")
    return EigenDecomposition(space, dims, bases)


DimTable = dict[CharacterG, int]


def product_eigen_dims(
    d1: Mapping[CharacterG, int],
    d2: Mapping[CharacterG, int],
    twist: CharacterG = CHI_PP,
) -> DimTable:
    """Character dimensions of a tensor product, optionally twisted:
    dim^chi = sum over chi1 * chi2 * twist = chi of d1^chi1 * d2^chi2."""
    out = {chi: 0 for chi in CHARACTERS}
    for c1 in CHARACTERS:
        for c2 in CHARACTERS:
            out[c1 * c2 * twist] += d1.get(c1, 0) * d2.get(c2, 0)
    return out


def half_period_divisor(curve: LegendreCurve, weight: int = 1) -> Divisor:
    """weight * ([O] + [T]), the bundle divisor on one factor."""
    return Divisor.of(curve, {O: weight, curve.T: weight})


def degree_two_space(curve: LegendreCurve, convention: FactorConvention) -> LinearizedSpace:
    """L([O] + [T]) with its natural linearization."""
    return LinearizedSpace.natural(curve, half_period_divisor(curve, 1), convention)


def degree_four_space(curve: LegendreCurve, convention: FactorConvention) -> LinearizedSpace:
    """L(2[O] + 2[T]) with its natural linearization."""
    return LinearizedSpace.natural(curve, half_period_divisor(curve, 2), convention)


def h_dim_table(curve: LegendreCurve, convention: FactorConvention) -> DimTable:
    return dict(eigen_dims(degree_two_space(curve, convention)).dims)


def v_dim_table(curve: LegendreCurve, convention: FactorConvention) -> DimTable:
    return dict(eigen_dims(degree_four_space(curve, convention)).dims)


def one_form_characters() -> tuple[CharacterG, CharacterG]:
    """How the generators scale dz1 and dz2: read off the diagonal linear
    parts (g1 translates factor 1, negates factor 2; g2 the other way)."""
    return (CharacterG(1, -1), CharacterG(-1, 1))


def volume_form_character() -> CharacterG:
    c1, c2 = one_form_characters()
    return c1 * c2


def canonical_eigen_table(lam1, lam2) -> DimTable:
    """Character dimensions of the sections of the canonical bundle upstairs.

    The invariant summand is the volume form line; the anti-invariant one is
    the product of the two degree-2 section spaces carried by 1/w, whose
    character divides out the fibre character.
    """
    h1 = h_dim_table(LegendreCurve(lam1), FIRST_FACTOR)
    h2 = h_dim_table(LegendreCurve(lam2), SECOND_FACTOR)
    twist = volume_form_character() * W_CHARACTER.inverse()
    table = product_eigen_dims(h1, h2, twist)
    table[volume_form_character()] += 1
    return table
