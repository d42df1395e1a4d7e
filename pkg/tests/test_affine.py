"""Affine group arithmetic, presentations, abelianizations, homology map."""

import random

import pytest

from knlab.affine import (
    AffineElement,
    GAMMA_1,
    GAMMA_2,
    GroupPresentation,
    H1_IMAGES,
    PRESENTATIONS,
    T_E1,
    T_E1P,
    T_E2,
    T_E2P,
    abelianization,
    evaluate_word,
    h1_image_of_exponents,
    h1_isomorphism_check,
    in_gamma,
    in_gamma_1,
    in_gamma_2,
    linear_part_map,
    verify_relation,
)


def random_gamma_element(rng):
    signs = (rng.choice((1, -1)), rng.choice((1, -1)))
    parity = {(1, 1): (0, 0, 0, 0), (1, -1): (1, 0, 0, 0),
              (-1, 1): (0, 0, 1, 0), (-1, -1): (1, 0, 1, 0)}[signs]
    return AffineElement(signs, tuple(2 * rng.randint(-5, 5) + p for p in parity))


def test_generator_squares_are_lattice_translations():
    assert GAMMA_1 * GAMMA_1 == T_E1
    assert GAMMA_2 * GAMMA_2 == T_E2


def test_composite_is_an_involution():
    g = GAMMA_1 * GAMMA_2
    assert not g.is_identity()
    assert (g * g).is_identity()


def test_compose_invert_random():
    rng = random.Random(17)
    for _ in range(50):
        a, b, c = (random_gamma_element(rng) for _ in range(3))
        assert (a * a.inverse()).is_identity()
        assert (a * b) * c == a * (b * c)


def test_quoted_relations_hold():
    assert verify_relation("g1 e2", "e2^-1 g1")
    assert verify_relation("g1 e2'", "e2'^-1 g1")
    assert verify_relation("g1 e1'", "e1' g1")
    assert verify_relation("g2 e1", "e1^-1 g2")
    assert verify_relation("g2 g1", "e2 e1^-1 g1 g2")


def test_generators_do_not_commute():
    assert not verify_relation("g1 g2", "g2 g1")
    lhs = evaluate_word("g1 g2")
    rhs = evaluate_word("g2 g1")
    diff = lhs * rhs.inverse()
    assert diff.signs == (1, 1)
    assert diff.shift2 == (2, 0, -2, 0)  # they differ by e1 - e2


def test_word_parsing_errors():
    with pytest.raises(ValueError):
        evaluate_word("g1 bogus")
    with pytest.raises(ValueError):
        evaluate_word("g1^x")


def test_all_adopted_relators_sound():
    for pres in PRESENTATIONS.values():
        assert pres.unsound_relators() == []


def test_abelianizations():
    inv = abelianization(PRESENTATIONS["gamma"])
    assert (inv.free_rank, inv.factors) == (0, (2, 2, 2, 4))
    assert inv.cokernel_order() == 32
    for name in ("gamma1", "gamma2"):
        inv = abelianization(PRESENTATIONS[name])
        assert (inv.free_rank, inv.factors) == (2, (2, 2))


def test_abelianization_of_free_presentation():
    free = GroupPresentation("free", ("a", "b", "c"), ())
    inv = abelianization(free)
    assert (inv.free_rank, inv.factors) == (3, ())


def test_abelianization_refuses_unsound_relators():
    bogus = GroupPresentation("bogus", ("g1", "g2"), ("g1 g2 g1^-1 g2^-1",))
    with pytest.raises(ValueError):
        abelianization(bogus)


def test_linear_part_assignment_and_kernel():
    assert linear_part_map(GAMMA_1) == (1, 0)
    assert linear_part_map(GAMMA_2) == (0, 1)
    for t in (T_E1, T_E1P, T_E2, T_E2P):
        assert linear_part_map(t) == (0, 0)
        assert t.is_lattice_translation()
    word = GAMMA_1 * GAMMA_2 * GAMMA_1 * GAMMA_2
    assert linear_part_map(word) == (0, 0)
    assert word.is_lattice_translation()
    assert not GAMMA_1.is_lattice_translation()
    assert not GAMMA_2.is_lattice_translation()


def test_linear_part_is_a_homomorphism():
    rng = random.Random(23)
    for _ in range(100):
        a, b = random_gamma_element(rng), random_gamma_element(rng)
        la, lb = linear_part_map(a), linear_part_map(b)
        assert linear_part_map(a * b) == tuple((x + y) % 2 for x, y in zip(la, lb))


def test_index_two_subgroups():
    rng = random.Random(31)
    assert not in_gamma_1(GAMMA_2)
    assert not in_gamma_2(GAMMA_1)
    for _ in range(200):
        g = random_gamma_element(rng)
        assert in_gamma(g)
        # exactly one of g, gamma2*g lies in the first subgroup, and dually
        assert in_gamma_1(g) != in_gamma_1(GAMMA_2 * g)
        assert in_gamma_2(g) != in_gamma_2(GAMMA_1 * g)


def test_h1_isomorphism():
    assert h1_isomorphism_check()


def test_h1_images_of_specific_relators():
    gens = ("g1", "g2", "e1'", "e2'")
    # 4 * g2 maps to (4, 4, 0, 0) = 0
    assert h1_image_of_exponents((0, 4, 0, 0), gens) == (0, 0, 0, 0)
    # e1 - e2 = 2 g1 - 2 g2 maps to (0, -2, 0, 0) = 0
    assert h1_image_of_exponents((2, -2, 0, 0), gens) == (0, 0, 0, 0)


def test_h1_images_are_surjective_generators():
    seen = {(0, 0, 0, 0)}
    frontier = [(0, 0, 0, 0)]
    while frontier:
        cur = frontier.pop()
        for img in H1_IMAGES.values():
            nxt = tuple((a + b) % m for a, b, m in zip(cur, img, (4, 2, 2, 2)))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    assert len(seen) == 32
