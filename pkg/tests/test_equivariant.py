"""Character projections and eigenspace tables."""

from fractions import Fraction

import pytest

from knlab.curve import IDENTITY, LegendreCurve, NEGATION, TRANSLATION
from knlab.equivariant import (
    CHARACTERS,
    CHI_MM,
    CHI_MP,
    CHI_PM,
    CHI_PP,
    FIRST_FACTOR,
    SECOND_FACTOR,
    LinearizedSpace,
    action_matrix,
    canonical_eigen_table,
    degree_four_space,
    degree_two_space,
    eigen_dims,
    half_period_divisor,
    one_form_characters,
    product_eigen_dims,
    volume_form_character,
)
from knlab.exact.linalg import Matrix
from knlab.funcfield import FunctionFieldElement as FFE
from knlab.rrspace import Divisor, rr_space

LAMBDAS = (Fraction(2), Fraction(3), Fraction(5, 3), Fraction(-1))


def test_characters_form_the_dual_group():
    assert len(set(CHARACTERS)) == 4
    for chi in CHARACTERS:
        assert chi * chi == CHI_PP
        assert chi.inverse() == chi
    assert CHI_PM * CHI_MP == CHI_MM


def test_action_matrices_on_degree_two_basis():
    curve = LegendreCurve(2)
    basis = rr_space(curve, half_period_divisor(curve, 1))
    diag_minus = Matrix([[1, 0], [0, -1]])
    assert action_matrix(basis, NEGATION) == diag_minus
    assert action_matrix(basis, TRANSLATION) == diag_minus
    assert action_matrix(basis, IDENTITY).is_identity()


def test_action_matrix_rejects_non_invariant_divisor():
    curve = LegendreCurve(2)
    basis = rr_space(curve, Divisor.of(curve, {curve.T: 2}))
    with pytest.raises(ValueError):
        action_matrix(basis, TRANSLATION)  # T and O swap, 2[T] is not fixed


@pytest.mark.parametrize("lam", LAMBDAS)
def test_degree_two_tables(lam):
    curve = LegendreCurve(lam)
    for convention in (FIRST_FACTOR, SECOND_FACTOR):
        assert eigen_dims(degree_two_space(curve, convention)).table() == (1, 0, 0, 1)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_degree_four_tables(lam):
    curve = LegendreCurve(lam)
    assert eigen_dims(degree_four_space(curve, FIRST_FACTOR)).table() == (2, 0, 1, 1)
    assert eigen_dims(degree_four_space(curve, SECOND_FACTOR)).table() == (2, 1, 0, 1)


def test_eigenbasis_functions_are_genuine_eigenvectors():
    curve = LegendreCurve(3)
    space = degree_four_space(curve, FIRST_FACTOR)
    eig = eigen_dims(space)
    for chi in CHARACTERS:
        for f in eig.basis_functions(chi):
            assert f.pullback(TRANSLATION) == (f if chi.s1 == 1 else -f)
            assert f.pullback(NEGATION) == (f if chi.s2 == 1 else -f)


def test_projector_identities_exact():
    space = degree_four_space(LegendreCurve(2), FIRST_FACTOR)
    projs = {chi: space.projector(chi) for chi in CHARACTERS}
    for chi, p in projs.items():
        assert p * p == p
    for a in CHARACTERS:
        for b in CHARACTERS:
            if a != b:
                assert (projs[a] * projs[b]).is_zero()
    total = Matrix.zero(space.dimension, space.dimension)
    for p in projs.values():
        total = total + p
    assert total.is_identity()


def test_twist_permutes_the_table():
    curve = LegendreCurve(2)
    base = degree_two_space(curve, FIRST_FACTOR)
    twisted = LinearizedSpace(base.base, base.act1, base.act2, twist=CHI_PM)
    assert eigen_dims(twisted).table() == (0, 1, 1, 0)


def test_product_dimension_formula():
    v1 = {CHI_PP: 2, CHI_PM: 0, CHI_MP: 1, CHI_MM: 1}
    v2 = {CHI_PP: 2, CHI_PM: 1, CHI_MP: 0, CHI_MM: 1}
    prod = product_eigen_dims(v1, v2)
    assert prod[CHI_PP] == 2 * 2 + 1 * 1  # plus-plus pairs with itself
    assert prod[CHI_MM] == 2 + 2 + 1
    assert sum(prod.values()) == 4 * 4
    twisted = product_eigen_dims(v1, v2, CHI_MM)
    assert twisted[CHI_PP] == 2 + 2 + 1
    h = {CHI_PP: 1, CHI_PM: 0, CHI_MP: 0, CHI_MM: 1}
    assert product_eigen_dims(h, h)[CHI_PP] == 2


def test_product_totals_multiply():
    v1 = {CHI_PP: 2, CHI_PM: 0, CHI_MP: 1, CHI_MM: 1}
    v2 = {CHI_PP: 2, CHI_PM: 1, CHI_MP: 0, CHI_MM: 1}
    for twist in CHARACTERS:
        prod = product_eigen_dims(v1, v2, twist)
        assert sum(prod.values()) == sum(v1.values()) * sum(v2.values())


def test_one_form_characters_and_volume_form():
    c1, c2 = one_form_characters()
    assert (c1, c2) == (CHI_PM, CHI_MP)
    assert volume_form_character() == CHI_MM


@pytest.mark.parametrize("pair", [(2, 3), (Fraction(5, 3), -1), (3, 3)])
def test_canonical_eigen_table(pair):
    table = canonical_eigen_table(*pair)
    assert (table[CHI_MM], table[CHI_PM], table[CHI_MP], table[CHI_PP]) == (1, 2, 2, 0)
    assert sum(table.values()) == 5


def test_tables_independent_of_lambda():
    tables = {eigen_dims(degree_four_space(LegendreCurve(lam), FIRST_FACTOR)).table() for lam in LAMBDAS}
    assert len(tables) == 1
