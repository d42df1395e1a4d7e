"""Curve layer: symmetry group structure, translation/negation formulas,
doubling against the duplication identity, numeric halving."""

import cmath
from fractions import Fraction

import pytest

from knlab.curve import (
    CurvePoint,
    IDENTITY,
    LegendreCurve,
    NEGATION,
    NEG_TRANSLATION,
    O,
    SYMMETRIES,
    TRANSLATION,
    apply_symmetry,
    double_point,
    halve_to,
)


def test_singular_lambdas_rejected():
    for bad in (0, 1):
        with pytest.raises(ValueError):
            LegendreCurve(bad)


def test_symmetry_group_is_klein_four():
    for s in SYMMETRIES:
        assert s.compose(s).is_identity()
        assert s.inverse() == s
    for s in SYMMETRIES:
        for t in SYMMETRIES:
            assert s.compose(t) == t.compose(s)
    assert len({(s.sign, s.shift) for s in SYMMETRIES}) == 4


def test_negation_fixes_two_torsion():
    c = LegendreCurve(3)
    for p in c.two_torsion():
        assert apply_symmetry(c, NEGATION, p) == p


def test_translation_swaps():
    c = LegendreCurve(3)
    assert apply_symmetry(c, TRANSLATION, O) == c.T
    assert apply_symmetry(c, TRANSLATION, c.T) == O
    assert apply_symmetry(c, TRANSLATION, CurvePoint.exact(1, 0)) == CurvePoint.exact(3, 0)
    assert apply_symmetry(c, TRANSLATION, CurvePoint.exact(3, 0)) == CurvePoint.exact(1, 0)


def test_translation_is_involution_on_generic_point():
    c = LegendreCurve(7)
    p = CurvePoint.exact(9, 12)  # 9*8*2 = 144 = 12^2
    q = apply_symmetry(c, TRANSLATION, p)
    assert c.contains(q)
    assert apply_symmetry(c, TRANSLATION, q) == p


def test_symmetry_composition_pointwise():
    c = LegendreCurve(7)
    p = CurvePoint.exact(9, 12)
    via_both = apply_symmetry(c, NEG_TRANSLATION, p)
    step = apply_symmetry(c, TRANSLATION, apply_symmetry(c, NEGATION, p))
    step2 = apply_symmetry(c, NEGATION, apply_symmetry(c, TRANSLATION, p))
    assert via_both == step == step2


def test_doubling_two_torsion_and_infinity():
    c = LegendreCurve(3)
    assert double_point(c, c.T) == O
    assert double_point(c, O) == O
    assert double_point(c, CurvePoint.exact(1, 0)) == O


def test_doubling_exact_group_law_values():
    # independently derived by the chord-tangent computation on lambda = 7
    c = LegendreCurve(7)
    p = CurvePoint.exact(9, 12)
    q = double_point(c, p)
    assert q == CurvePoint.exact(Fraction(1369, 144), Fraction(-24605, 1728))
    assert c.contains(q)


def test_doubling_matches_duplication_identity():
    # x([2]P) = (x^2 - lambda)^2 / (4 y^2), the classical duplication formula
    c = LegendreCurve(7)
    p = CurvePoint.exact(9, 12)
    q = double_point(c, p)
    assert q.x == (p.x**2 - 7) ** 2 / (4 * p.y**2)
    for lam in (2, 3, Fraction(5, 3), -1):
        curve = LegendreCurve(lam)
        x = 0.83 + 0.41j
        y = cmath.sqrt(complex(curve.rhs()(x)))
        pt = CurvePoint.of_floats(x, y)
        doubled = double_point(curve, pt)
        expected = (x * x - complex(lam)) ** 2 / (4 * y * y)
        assert abs(doubled.x - expected) < 1e-9


def test_halving_count_and_roots():
    c = LegendreCurve(3)
    pts = halve_to(c, c.T, 1e-12)
    assert len(pts) == 4
    xs = sorted({round(p.x.real, 7) for p in pts})
    assert xs == [round(-(3**0.5), 7), round(3**0.5, 7)]
    keyed = {(round(p.x.real, 7), round(p.x.imag, 7), round(p.y.real, 7), round(p.y.imag, 7)) for p in pts}
    assert len(keyed) == 4


def test_halving_complex_parameter():
    c = LegendreCurve(-1)
    pts = halve_to(c, c.T, 1e-12)
    assert all(abs(p.x**2 + 1) < 1e-12 for p in pts)


def test_halving_doubles_back():
    precision = 1e-12
    for lam in (2, 3, Fraction(5, 3), -1):
        c = LegendreCurve(lam)
        for p in halve_to(c, c.T, precision):
            d = double_point(c, p)
            assert abs(d.x) < 10 * precision and abs(d.y) < 10 * precision


def test_halving_requires_the_half_period():
    c = LegendreCurve(2)
    with pytest.raises(ValueError):
        halve_to(c, CurvePoint.exact(1, 0))
    with pytest.raises(ValueError):
        halve_to(c, O)


def test_symmetries_preserve_curve_equation_exactly():
    c = LegendreCurve(7)
    p = CurvePoint.exact(9, 12)
    for s in SYMMETRIES:
        assert c.contains(apply_symmetry(c, s, p))


def test_off_curve_point_rejected():
    c = LegendreCurve(2)
    with pytest.raises(ValueError):
        apply_symmetry(c, IDENTITY, CurvePoint.exact(5, 5))
