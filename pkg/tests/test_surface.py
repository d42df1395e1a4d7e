"""Branch system assembly, free action, ledgers, and bicanonical relations."""

from fractions import Fraction

import pytest

from knlab.curve import LegendreCurve
from knlab.funcfield import FunctionFieldElement as FFE
from knlab.surface import (
    KNParams,
    SeparableSection,
    assemble_branch_section,
    bicanonical_basis,
    bicanonical_degree_ledger,
    branch_system,
    composite_fixed_points,
    ext1_bound_ledger,
    free_action_check,
    invariant_branch_basis,
    moduli_dimension_ledger,
    node_check,
    one_form_invariant_count,
    pullback_consistency_check,
    smoothness_scan,
    surface_invariant_ledger,
)


def test_params_validation():
    with pytest.raises(ValueError):
        KNParams(1, 2, (1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        KNParams(2, 3, (0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        KNParams(2, 3, (1, 0, 0, 0))
    p = KNParams("5/3", 2, ("1/2", 0, 0, 0, 1))
    assert p.lambda1 == Fraction(5, 3) and p.coeffs[0] == Fraction(1, 2)


def test_invariant_branch_basis_shape():
    sections = invariant_branch_basis(2, 3)
    assert len(sections) == 5
    for s in sections:
        assert s.is_invariant()


def test_branch_system_dimensions():
    system = branch_system(2, 3)
    assert system.invariant_dim == 5
    assert system.anti_invariant_dim == 5


def test_minus_times_minus_term_at_equal_lambdas():
    system = branch_system(2, 2)
    last = system.sections[-1]
    assert len(last.terms) == 1
    s1, s2, c = last.terms[0]
    y_over_x1 = FFE.y(system.curve1) / FFE.x(system.curve1)
    y_over_x2 = FFE.y(system.curve2) / FFE.x(system.curve2)
    assert s1 == y_over_x1 and s2 == y_over_x2 and c == 1


def test_sections_multiply_termwise():
    system = branch_system(2, 3)
    a, b = system.sections[0], system.sections[4]
    prod = a * b
    assert len(prod.terms) == 1
    assert not prod.is_zero()


def test_fixed_point_grid():
    pts = composite_fixed_points(2, 3)
    assert len(pts) == 16
    assert len({id(p) for p, _ in pts}) >= 4


def test_free_action_constant_section():
    result = free_action_check(KNParams(2, 2, (1, 0, 0, 0, 0)))
    assert abs(result.margin - 1.0) < 1e-9
    assert result.passed


@pytest.mark.parametrize("seed", [2, 7, 13])
def test_free_action_generic_sections(seed):
    params = KNParams.from_seed(2, 3, seed)
    result = free_action_check(params)
    assert result.margin > 0 and result.passed


def test_free_action_margin_scale_invariant():
    params = KNParams.from_seed(2, 3, 4)
    scaled = KNParams(2, 3, tuple(Fraction(7, 3) * c for c in params.coeffs))
    m1 = free_action_check(params).margin
    m2 = free_action_check(scaled).margin
    assert abs(m1 - m2) <= 1e-9 * max(m1, m2)


def test_free_action_detects_tuned_vanishing():
    # solve one linear condition at a fixed point numerically, round the
    # solution to high-precision rationals, and confirm the check fails
    system = branch_system(2, 3)
    p, q = composite_fixed_points(2, 3)[0]
    values = [s.evaluate(p, q) for s in system.sections]
    assert all(abs(v.imag) < 1e-9 for v in values)  # real at these points
    c0 = -(values[1] + values[2] + values[3] + values[4]).real / values[0].real
    coeffs = (Fraction(c0).limit_denominator(10**18), 1, 1, 1, 1)
    result = free_action_check(KNParams(2, 3, coeffs))
    assert not result.passed
    assert result.worst_point is not None


def test_surface_invariant_ledger():
    ledger = surface_invariant_ledger(KNParams(2, 3, (1, 0, 0, 0, 0)))
    assert (ledger.k2, ledger.chi, ledger.p_g, ledger.q) == (4, 1, 0, 0)
    assert (ledger.k2_cover, ledger.chi_cover) == (16, 4)
    assert ledger.noether_consistent()
    assert ledger.severi_equality()


def test_q_ledger_counterfactual_trivial_group():
    assert one_form_invariant_count() == 0
    assert one_form_invariant_count(()) == 2


def test_moduli_dimension_ledger():
    assert moduli_dimension_ledger() == 6
    assert moduli_dimension_ledger(invariant_dim=4) == 5
    assert moduli_dimension_ledger(branch_parameter_count=2, invariant_dim=5) == 6


def test_ext1_bound_ledger():
    ledger = ext1_bound_ledger(2, 3)
    assert ledger.components == (4, 2, 0)
    assert ledger.bound == 6
    assert ledger.h0_branch_invariant == 5


# --- bicanonical -------------------------------------------------------------


def test_bicanonical_identities_exact():
    for pair in ((2, 3), (3, Fraction(5, 3)), (Fraction(5, 3), 2)):
        basis = bicanonical_basis(*pair)
        assert basis.first_quadric_residual().is_zero()
        assert basis.second_quadric_residual().is_zero()


def test_square_expression_in_plus_basis():
    # psi^2 = (x + lam/x) - (1 + lam): at lam = 2 the coordinates are (-3, 1)
    basis = bicanonical_basis(2, 3)
    assert basis.square_coords[0] == (Fraction(-3), Fraction(1))
    assert basis.square_coords[1] == (Fraction(-4), Fraction(1))


def test_scaled_z4_breaks_second_quadric_only():
    basis = bicanonical_basis(2, 3).with_scaled_z4(2)
    assert basis.first_quadric_residual().is_zero()
    assert not basis.second_quadric_residual().is_zero()


def test_node_check():
    basis = bicanonical_basis(2, 3)
    nodes = node_check(basis)
    assert nodes == ((1, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, 1, 0, 0), (0, 1, 0, 0, 0))
    assert len(set(nodes)) == 4
    for z0, z1, z2, z3, z4 in nodes:
        assert z0 * z3 - z1 * z2 == 0
        assert z4 * z4 - z0 * z3 == 0


def test_node_check_rejects_broken_basis():
    bad = bicanonical_basis(2, 3).with_scaled_z4(3)
    with pytest.raises(ValueError):
        node_check(bad)


def test_degree_ledger():
    ledger = bicanonical_degree_ledger()
    assert ledger.total() == 4
    assert ledger.per_factor_quotient_degree() == 4
    assert ledger.image_to_grid == 2
    assert ledger.albanese_degree * ledger.product_to_grid == 32


def test_pullback_consistency():
    basis = bicanonical_basis(2, 3)
    report = pullback_consistency_check(basis, samples=100, precision=1e-9, seed=11)
    assert report.max_residual < 1e-9
    assert not report.vacuous


def test_pullback_consistency_detects_scaled_z4():
    basis = bicanonical_basis(2, 3).with_scaled_z4(2)
    report = pullback_consistency_check(basis, samples=10, precision=1e-9, seed=11)
    assert report.max_residual > 0.1


def test_pullback_consistency_zero_samples_is_vacuous():
    basis = bicanonical_basis(2, 3)
    report = pullback_consistency_check(basis, samples=0)
    assert report.max_residual == 0.0 and report.vacuous


# --- heuristic smoothness scan -----------------------------------------------


def test_smoothness_scan_clean_for_generic_section():
    assert smoothness_scan(KNParams.from_seed(2, 3, 1)) == []


def test_smoothness_scan_flags_singular_square():
    # coefficients (1, 0, 0, 0, t) make f = 1 + t psi1 psi2; tune nothing:
    # instead, force a visibly singular section: f = (w1 - w1(P)) * (w2 - w2(Q))
    # has a node where both pencil factors vanish.  Expand it in the basis:
    # w1 w2 - a w1 - b w2 + ab with a = w1 value, b = w2 value.
    system = branch_system(2, 3)
    a, b = Fraction(3), Fraction(4)  # generic rational target values
    coeffs = (a * b, -a, -b, 1, 0)
    section = assemble_branch_section(system, coeffs)
    assert section.is_invariant()
    hits = smoothness_scan(KNParams(2, 3, coeffs))
    assert hits, "a split section factors and must show singular points"
