"""Verification suites: every claim-anchored check, grouped per CLI command.

The core suite covers everything independent of a user-chosen section:
eigenspace tables at several Legendre parameters, product dimension
counts, group presentations and homology, double-cover numerology, the
bicanonical quadrics, and the property checks (projector identities,
valuation axioms, Smith-form behavior, margin scale invariance).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .affine import (
    GAMMA_1,
    GAMMA_2,
    GroupPresentation,
    PRESENTATIONS,
    T_E1,
    abelianization,
    h1_isomorphism_check,
    in_gamma_1,
    in_gamma_2,
    linear_part_map,
)
from .covers import (
    BranchType,
    HorikawaData,
    branch_type_admissible,
    class_translation_invariant,
    cover_invariants,
    horikawa_check,
    horikawa_solve,
    quotient_invariants,
)
from .curve import CurvePoint, LegendreCurve, O
from .equivariant import (
    CHARACTERS,
    CHI_MM,
    CHI_PP,
    FIRST_FACTOR,
    SECOND_FACTOR,
    canonical_eigen_table,
    degree_four_space,
    degree_two_space,
    eigen_dims,
    product_eigen_dims,
)
from .exact.linalg import Matrix
from .exact.snf import IntMatrix, smith_normal_form
from .funcfield import FunctionFieldElement
from .report import Report
from .rrspace import base_locus, order_at
from .surface import (
    KNParams,
    assemble_branch_section,
    bicanonical_basis,
    bicanonical_degree_ledger,
    branch_system,
    composite_fixed_points,
    ext1_bound_ledger,
    free_action_check,
    moduli_dimension_ledger,
    node_check,
    one_form_invariant_count,
    pullback_consistency_check,
    smoothness_scan,
    surface_invariant_ledger,
)

CORE_LAMBDAS = (Fraction(2), Fraction(3), Fraction(5, 3), Fraction(-1))
CORE_PAIRS = ((Fraction(2), Fraction(3)), (Fraction(5, 3), Fraction(-1)))
BICANONICAL_PAIRS = ((Fraction(2), Fraction(3)), (Fraction(3), Fraction(5, 3)))

FAULTS = ("relator-sign", "scale-z4", "wrong-chi")

_REF_DEG2 = "degree-2 half-period system splits into two 1-dim eigenspaces, mixed parts vanish"
_REF_DEG4_FIRST = "degree-4 eigentable (2,0,1,1) when the first generator translates"
_REF_DEG4_SECOND = "degree-4 eigentable (2,1,0,1) when the second generator translates"


def _tampered_gamma() -> GroupPresentation:
    relators = list(PRESENTATIONS["gamma"].relators)
    relators[3] = "g1 e2' g1^-1 e2'^-1"  # flipped sign on the anti-commutation
    return GroupPresentation("gamma", PRESENTATIONS["gamma"].generators, tuple(relators))


def _group_checks(rep: Report, inject_fault: str | None = None) -> None:
    gamma = _tampered_gamma() if inject_fault == "relator-sign" else PRESENTATIONS["gamma"]
    unsound = gamma.unsound_relators()
    rep.add(
        "group.gamma.relators-sound",
        "every adopted relator evaluates to the identity affine transformation",
        value=unsound,
        expected=[],
    )
    if not unsound:
        inv = abelianization(gamma)
        rep.add(
            "group.gamma.abelianization",
            "H_1 of the surface group is Z/4 + (Z/2)^3",
            value=[inv.free_rank, list(inv.factors)],
            expected=[0, [2, 2, 2, 4]],
        )
        rep.add(
            "group.gamma.abelianization-order",
            "the abelianized group has order 32",
            value=inv.cokernel_order(),
            expected=32,
        )
    for name in ("gamma1", "gamma2"):
        pres = PRESENTATIONS[name]
        rep.add(
            f"group.{name}.relators-sound",
            "every adopted relator evaluates to the identity affine transformation",
            value=pres.unsound_relators(),
            expected=[],
        )
        inv = abelianization(pres)
        rep.add(
            f"group.{name}.abelianization",
            "index-two subgroup abelianizes to a rank-2 lattice plus (Z/2)^2",
            value=[inv.free_rank, list(inv.factors)],
            expected=[2, [2, 2]],
        )
    rep.add(
        "group.gamma.square-is-lattice",
        "the squares of the affine generators are the two lattice translations",
        value=[(GAMMA_1**2) == T_E1, ((GAMMA_2**2).signs, (GAMMA_2**2).shift2)],
        expected=[True, ((1, 1), (0, 0, 2, 0))],
    )
    rep.add(
        "group.gamma.composite-involution",
        "the product of the two generators is an involution",
        value=((GAMMA_1 * GAMMA_2) ** 2).is_identity(),
        expected=True,
    )
    rep.add(
        "group.gamma.linear-part-assignment",
        "the quotient map sends the generators to the two basis classes",
        value=[linear_part_map(GAMMA_1), linear_part_map(GAMMA_2)],
        expected=[(1, 0), (0, 1)],
    )
    rep.add(
        "group.gamma.h1-isomorphism",
        "the explicit map realizes H_1 as Z/4 + (Z/2)^3 on the nose",
        value=h1_isomorphism_check(),
        expected=True,
    )
    rng = random.Random(20240)
    cosets_ok = True
    for _ in range(100):
        signs = (rng.choice((1, -1)), rng.choice((1, -1)))
        parity = {(1, 1): (0, 0, 0, 0), (1, -1): (1, 0, 0, 0),
                  (-1, 1): (0, 0, 1, 0), (-1, -1): (1, 0, 1, 0)}[signs]
        from .affine import AffineElement

        g = AffineElement(signs, tuple(2 * rng.randint(-4, 4) + p for p in parity))
        in1, in2 = in_gamma_1(g), in_gamma_2(g)
        also1 = in_gamma_1(GAMMA_2 * g)
        also2 = in_gamma_2(GAMMA_1 * g)
        cosets_ok &= in1 != also1  # exactly one of g, gamma2*g lies in the subgroup
        cosets_ok &= in2 != also2
    rep.add(
        "group.index-two-subgroups",
        "both distinguished subgroups have index exactly two",
        value=cosets_ok,
        expected=True,
    )


def _eigentable_checks(rep: Report) -> None:
    for lam in CORE_LAMBDAS:
        curve = LegendreCurve(lam)
        rep.add(
            f"eigentable.deg2.first[lam={lam}]",
            _REF_DEG2,
            value=list(eigen_dims(degree_two_space(curve, FIRST_FACTOR)).table()),
            expected=[1, 0, 0, 1],
        )
        rep.add(
            f"eigentable.deg2.second[lam={lam}]",
            _REF_DEG2 + " (generator roles exchanged)",
            value=list(eigen_dims(degree_two_space(curve, SECOND_FACTOR)).table()),
            expected=[1, 0, 0, 1],
        )
        rep.add(
            f"eigentable.deg4.first[lam={lam}]",
            _REF_DEG4_FIRST,
            value=list(eigen_dims(degree_four_space(curve, FIRST_FACTOR)).table()),
            expected=[2, 0, 1, 1],
        )
        rep.add(
            f"eigentable.deg4.second[lam={lam}]",
            _REF_DEG4_SECOND,
            value=list(eigen_dims(degree_four_space(curve, SECOND_FACTOR)).table()),
            expected=[2, 1, 0, 1],
        )


def _product_dimension_checks(rep: Report) -> None:
    for lam1, lam2 in CORE_PAIRS:
        tag = f"[lam1={lam1},lam2={lam2}]"
        system = branch_system(lam1, lam2)
        rep.add(
            f"branch.invariant-dim{tag}",
            "the invariant (4,4) sections form a 5-dimensional space",
            value=system.invariant_dim,
            expected=5,
        )
        rep.add(
            f"branch.anti-invariant-dim{tag}",
            "the anti-invariant (4,4) sections form a 5-dimensional space (2+2+1)",
            value=system.anti_invariant_dim,
            expected=5,
        )
        eig1 = eigen_dims(system.space1)
        eig2 = eigen_dims(system.space2)
        twisted = product_eigen_dims(eig1.dims, eig2.dims, CHI_MM)
        rep.add(
            f"branch.twisted-plus-dim{tag}",
            "twisting by the sign character maps the anti-invariants to the plus part",
            value=twisted[CHI_PP],
            expected=5,
        )
        table = canonical_eigen_table(lam1, lam2)
        rep.add(
            f"canonical.eigentable{tag}",
            "canonical sections upstairs decompose as (--,+-,-+,++) = (1,2,2,0)",
            value=[table[c] for c in (CHI_MM,)] + [table[CHARACTERS[1]], table[CHARACTERS[2]], table[CHI_PP]],
            expected=[1, 2, 2, 0],
        )
        rep.add(
            f"canonical.total{tag}",
            "five canonical sections upstairs in total (1 + 4)",
            value=sum(table.values()),
            expected=5,
        )
        rep.add(
            f"canonical.pg-zero{tag}",
            "no invariant canonical section survives, so the quotient has p_g = 0",
            value=table[CHI_PP],
            expected=0,
        )


def _invariant_checks(rep: Report) -> None:
    rep.add(
        "invariants.q-one-forms",
        "no coordinate 1-form is fixed by both generators, so q = 0",
        value=one_form_invariant_count(),
        expected=0,
    )
    rep.add(
        "invariants.q-trivial-group-guard",
        "with the trivial group both 1-forms survive (regression guard)",
        value=one_form_invariant_count(()),
        expected=2,
    )
    rep.add(
        "invariants.cover",
        "double cover branched in a (2,2) square has K^2 = 2*8 = 16 and chi = 4",
        value=list(cover_invariants(BranchType(2, 2))),
        expected=[16, 4],
    )
    rep.add(
        "invariants.cover-bidegree-14",
        "the (1,4) branch type carries the same blind invariants",
        value=list(cover_invariants(BranchType(1, 4))),
        expected=[16, 4],
    )
    rep.add(
        "invariants.quotient",
        "free quotient by the four-element group divides to K^2 = 4, chi = 1",
        value=list(quotient_invariants(16, 4, 4)),
        expected=[4, 1],
    )
    try:
        quotient_invariants(16, 4, 3)
        guard = False
    except ValueError:
        guard = True
    rep.add(
        "invariants.quotient-divisibility-guard",
        "non-divisible quotient orders are rejected",
        value=guard,
        expected=True,
    )


def _horikawa_checks(rep: Report, inject_fault: str | None = None) -> None:
    chi = 3 if inject_fault == "wrong-chi" else 4
    sols = horikawa_solve(16, chi, 10)
    rep.add(
        "horikawa.unique-solution",
        "t = -2 sum(xi_i - 1) forces every xi_i = 1, t = 0 and L^2 = 8",
        value=[[s.t, list(s.xi_profile), s.l_squared] for s in sols],
        expected=[[0, [], 8]],
    )
    stable = [horikawa_solve(16, chi, b) for b in (1, 5, 10)]
    rep.add(
        "horikawa.bound-stability",
        "the solution set does not depend on the enumeration bound",
        value=stable[0] == stable[1] == stable[2],
        expected=True,
    )
    consistent = all(
        horikawa_check(
            HorikawaData(16, chi, tuple(2 * x for x in s.xi_profile), s.t), s.l_squared
        )[2]
        for s in horikawa_solve(16, chi, 10)
    )
    rep.add(
        "horikawa.solutions-consistent",
        "every enumerated solution satisfies both resolution equations",
        value=consistent,
        expected=True,
    )
    rep.add(
        "branch-type.22-admissible",
        "the (2,2) class is invariant under both half-period translations",
        value=branch_type_admissible(BranchType(2, 2)),
        expected=True,
    )
    rep.add(
        "branch-type.14-rejected",
        "a (1,4) class moves under a half-period translation and is excluded",
        value=branch_type_admissible(BranchType(1, 4)),
        expected=False,
    )
    rep.add(
        "branch-type.parity-criterion",
        "a degree-d class is half-period invariant exactly for even d",
        value=[class_translation_invariant(d, 2) for d in range(1, 9)],
        expected=[d % 2 == 0 for d in range(1, 9)],
    )


def _fixed_point_checks(rep: Report) -> None:
    lam1, lam2 = Fraction(2), Fraction(3)
    pts = composite_fixed_points(lam1, lam2, 1e-12)
    rep.add(
        "fixed-points.count",
        "the composite involution fixes exactly 16 points, 4 per factor",
        value=len(pts),
        expected=16,
    )
    c1, c2 = LegendreCurve(lam1), LegendreCurve(lam2)
    worst = 0.0
    for p, q in pts:
        worst = max(worst, abs(p.y**2 - complex(c1.rhs()(p.x))))
        worst = max(worst, abs(q.y**2 - complex(c2.rhs()(q.x))))
        worst = max(worst, abs(p.x**2 - float(lam1)), abs(q.x**2 - float(lam2)))
    rep.add(
        "fixed-points.residual",
        "every fixed point sits on its curve with x^2 = lambda numerically",
        value=worst,
        expected="< 1e-10",
        tolerance=1e-10,
        passed=worst < 1e-10,
    )
    firsts = {p for p, _ in pts}
    distinct = len({(round(p.x.real, 8), round(p.x.imag, 8), round(p.y.real, 8), round(p.y.imag, 8)) for p in firsts})
    rep.add(
        "fixed-points.distinct-per-factor",
        "the four halvings on each factor are pairwise distinct",
        value=distinct,
        expected=4,
    )


def _bicanonical_checks(rep: Report, inject_fault: str | None = None) -> None:
    for i, (lam1, lam2) in enumerate(BICANONICAL_PAIRS):
        tag = f"[lam1={lam1},lam2={lam2}]"
        basis = bicanonical_basis(lam1, lam2)
        if inject_fault == "scale-z4" and i == 0:
            basis = basis.with_scaled_z4(2)
        rep.add(
            f"bicanonical.q1-exact{tag}",
            "z0 z3 - z1 z2 vanishes identically in the function field",
            value=basis.first_quadric_residual().is_zero(),
            expected=True,
        )
        rep.add(
            f"bicanonical.q2-exact{tag}",
            "z4^2 - z0 z3 vanishes identically in the function field",
            value=basis.second_quadric_residual().is_zero(),
            expected=True,
        )
    basis = bicanonical_basis(Fraction(2), Fraction(3))
    if inject_fault == "scale-z4":
        basis = basis.with_scaled_z4(2)
    nodes = node_check(bicanonical_basis(Fraction(2), Fraction(3)))
    rep.add(
        "bicanonical.nodes",
        "the four coordinate nodes lie on both quadrics and are distinct",
        value=[list(n) for n in nodes],
        expected=[[1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0]],
    )
    ledger = bicanonical_degree_ledger()
    rep.add(
        "bicanonical.degree",
        "2 * 16 / 4 / 2 = 4: the bicanonical map is an iterated double cover of degree 4",
        value=ledger.total(),
        expected=4,
    )
    rep.add(
        "bicanonical.per-factor-cover-degree",
        "each factor curve covers the line with degree 4",
        value=ledger.per_factor_quotient_degree(),
        expected=4,
    )
    rep.add(
        "bicanonical.image-cover-degree",
        "the quadric image doubly covers the quadric grid",
        value=ledger.image_to_grid,
        expected=2,
    )
    numeric = pullback_consistency_check(basis, samples=100, precision=1e-9, seed=20240)
    rep.add(
        "bicanonical.numeric-residual",
        "both quadric relations hold at 100 random points of the product",
        value=numeric.max_residual,
        expected="< 1e-9",
        tolerance=1e-9,
        passed=(not numeric.vacuous) and numeric.max_residual < 1e-9,
    )


def _ledger_checks(rep: Report) -> None:
    rep.add(
        "moduli.dimension",
        "two branch parameters plus the projectivized rank-5 system give 6",
        value=moduli_dimension_ledger(),
        expected=6,
    )
    rep.add(
        "moduli.dimension-wiring-guard",
        "feeding a rank-4 system would give 5 (the ledger uses its input)",
        value=moduli_dimension_ledger(invariant_dim=4),
        expected=5,
    )
    ext1 = ext1_bound_ledger(Fraction(2), Fraction(3))
    rep.add(
        "ext1.components",
        "restriction sequence contributes (4, 2, 0)",
        value=list(ext1.components),
        expected=[4, 2, 0],
    )
    rep.add(
        "ext1.bound",
        "the tangent dimension bound 4 + 2 - 0 = 6",
        value=ext1.bound,
        expected=6,
    )


def _projector_checks(rep: Report) -> None:
    space = degree_four_space(LegendreCurve(2), FIRST_FACTOR)
    projs = {chi: space.projector(chi) for chi in CHARACTERS}
    idempotent = all((p * p) == p for p in projs.values())
    orthogonal = all(
        (projs[a] * projs[b]).is_zero()
        for a in CHARACTERS
        for b in CHARACTERS
        if a != b
    )
    total = None
    for p in projs.values():
        total = p if total is None else total + p
    rep.add(
        "projectors.idempotent",
        "each character projector squares to itself exactly",
        value=idempotent,
        expected=True,
    )
    rep.add(
        "projectors.orthogonal",
        "distinct character projectors multiply to zero exactly",
        value=orthogonal,
        expected=True,
    )
    rep.add(
        "projectors.resolution-of-identity",
        "the four character projectors sum to the identity",
        value=total.is_identity(),
        expected=True,
    )


def _valuation_checks(rep: Report) -> None:
    curve = LegendreCurve(3)
    rng = random.Random(11)
    points = list(curve.two_torsion())
    multiplicative = True
    degree_sum_zero = True
    for _ in range(12):
        f = _random_monomial_product(curve, rng)
        g = _random_monomial_product(curve, rng)
        for p in points:
            multiplicative &= order_at(curve, f * g, p) == order_at(curve, f, p) + order_at(curve, g, p)
        degree_sum_zero &= sum(order_at(curve, f, p) for p in points) == 0
    rep.add(
        "valuations.multiplicative",
        "ord(fg) = ord(f) + ord(g) at each rational 2-torsion point",
        value=multiplicative,
        expected=True,
    )
    rep.add(
        "valuations.degree-zero",
        "orders of products of the distinguished factors sum to zero over all places",
        value=degree_sum_zero,
        expected=True,
    )


def _random_monomial_product(curve: LegendreCurve, rng) -> FunctionFieldElement:
    x = FunctionFieldElement.x(curve)
    y = FunctionFieldElement.y(curve)
    f = FunctionFieldElement.constant(curve, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
    for base in (x, x - 1, x - curve.lam):
        f = f * base ** rng.randint(-2, 2)
    f = f * y ** rng.randint(0, 2)
    return f


def _snf_checks(rep: Report) -> None:
    rng = random.Random(7)
    chain_ok = True
    shuffle_ok = True
    for _ in range(15):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        form = smith_normal_form(IntMatrix.from_rows(m, cols=cols))
        chain_ok &= all(
            form.factors[i + 1] % form.factors[i] == 0 for i in range(len(form.factors) - 1)
        )
        perm_r = list(range(rows))
        perm_c = list(range(cols))
        rng.shuffle(perm_r)
        rng.shuffle(perm_c)
        # sign flips must act per row/column to preserve the lattice
        signs_r = [rng.choice((1, -1)) for _ in range(rows)]
        signs_c = [rng.choice((1, -1)) for _ in range(cols)]
        shuffled = [
            [signs_r[a] * signs_c[b] * m[perm_r[a]][perm_c[b]] for b in range(cols)]
            for a in range(rows)
        ]
        form2 = smith_normal_form(IntMatrix.from_rows(shuffled, cols=cols))
        shuffle_ok &= (form.factors, form.free_rank) == (form2.factors, form2.free_rank)
    rep.add(
        "snf.divisibility-chain",
        "invariant factors divide in sequence",
        value=chain_ok,
        expected=True,
    )
    rep.add(
        "snf.shuffle-invariance",
        "permutations and sign flips of the relation matrix keep the invariants",
        value=shuffle_ok,
        expected=True,
    )


def _scale_invariance_check(rep: Report) -> None:
    params = KNParams.from_seed(2, 3, seed=3)
    scaled = KNParams(2, 3, tuple(Fraction(5, 2) * c for c in params.coeffs), params.precision)
    m1 = free_action_check(params).margin
    m2 = free_action_check(scaled).margin
    rel = abs(m1 - m2) / max(m1, m2)
    rep.add(
        "free-action.scale-invariance",
        "the fixed-point margin does not change under rescaling the section",
        value=rel,
        expected="< 1e-9",
        tolerance=1e-9,
        passed=rel < 1e-9,
    )


def core_suite(inject_fault: str | None = None) -> Report:
    if inject_fault is not None and inject_fault not in FAULTS:
        raise ValueError(f"unknown fault {inject_fault!r}; choose from {FAULTS}")
    rep = Report(params={"lambdas": [str(lam) for lam in CORE_LAMBDAS],
                         "inject_fault": inject_fault})
    _eigentable_checks(rep)
    _product_dimension_checks(rep)
    _invariant_checks(rep)
    _horikawa_checks(rep, inject_fault)
    _group_checks(rep, inject_fault)
    _fixed_point_checks(rep)
    _bicanonical_checks(rep, inject_fault)
    _ledger_checks(rep)
    _projector_checks(rep)
    _valuation_checks(rep)
    _snf_checks(rep)
    _scale_invariance_check(rep)
    return rep


def construct_suite(params: KNParams) -> Report:
    rep = Report(
        params={
            "lambda1": params.lambda1,
            "lambda2": params.lambda2,
            "coeffs": [str(c) for c in params.coeffs],
            "precision": params.precision,
        }
    )
    system = branch_system(params.lambda1, params.lambda2)
    section = assemble_branch_section(system, params.coeffs)
    rep.add(
        "construct.section-invariant",
        "the assembled branch section is fixed by both generators",
        value=section.is_invariant(),
        expected=True,
    )
    fa = free_action_check(params)
    rep.add(
        "construct.free-action",
        "the section avoids all 16 fixed points of the composite involution",
        value=fa.margin,
        expected=f"> {fa.threshold:g}",
        tolerance=fa.threshold,
        passed=fa.passed,
    )
    if not fa.passed:
        rep.add(
            "construct.free-action-witness",
            "offending fixed point with the smallest section modulus",
            value=str(fa.worst_point),
            expected="none",
            passed=False,
        )
    for tag, space, (one, w) in (
        ("factor1", system.space1, (FunctionFieldElement.constant(system.curve1, 1), system.w1)),
        ("factor2", system.space2, (FunctionFieldElement.constant(system.curve2, 1), system.w2)),
    ):
        locus = base_locus(space.base, [one, w])
        rep.add(
            f"construct.plus-system-base-point-free[{tag}]",
            "the invariant pencil on each factor has empty base locus",
            value=str(locus),
            expected="0",
        )
    hits = smoothness_scan(params)
    rep.add(
        "construct.smoothness-scan",
        "heuristic Newton scan finds no singular point on the branch divisor",
        value=[str(h) for h in hits],
        expected=[],
    )
    ledger = surface_invariant_ledger(params)
    rep.add(
        "construct.invariant-ledger",
        "the quotient surface has K^2 = 4, chi = 1, p_g = 0, q = 0",
        value=[ledger.k2, ledger.chi, ledger.p_g, ledger.q],
        expected=[4, 1, 0, 0],
    )
    rep.add(
        "construct.noether-consistency",
        "chi = 1 - q + p_g",
        value=ledger.noether_consistent(),
        expected=True,
    )
    rep.add(
        "construct.severi-equality",
        "K^2 = 4 chi holds on the nose",
        value=ledger.severi_equality(),
        expected=True,
    )
    return rep


def group_suite(subject: str) -> Report:
    if subject not in PRESENTATIONS:
        raise ValueError(f"unknown group {subject!r}")
    pres = PRESENTATIONS[subject]
    rep = Report(
        params={
            "subject": subject,
            "generators": list(pres.generators),
            "relators": list(pres.relators),
        }
    )
    rep.add(
        f"group.{subject}.relators-sound",
        "every adopted relator evaluates to the identity affine transformation",
        value=pres.unsound_relators(),
        expected=[],
    )
    inv = abelianization(pres)
    expected = [0, [2, 2, 2, 4]] if subject == "gamma" else [2, [2, 2]]
    ref = (
        "H_1 of the surface group is Z/4 + (Z/2)^3"
        if subject == "gamma"
        else "the index-two subgroup abelianizes to a rank-2 lattice plus (Z/2)^2"
    )
    rep.add(f"group.{subject}.abelianization", ref, value=[inv.free_rank, list(inv.factors)], expected=expected)
    rep.add(
        f"group.{subject}.structure",
        "human-readable invariant factor decomposition",
        value=inv.describe(),
        expected=inv.describe(),
    )
    if subject == "gamma":
        rep.add(
            "group.gamma.h1-isomorphism",
            "the explicit map realizes H_1 as Z/4 + (Z/2)^3 on the nose",
            value=h1_isomorphism_check(),
            expected=True,
        )
    return rep


def horikawa_suite(k2: int = 16, chi: int = 4, bound: int = 10) -> Report:
    rep = Report(params={"k2": k2, "chi": chi, "bound": bound})
    sols = horikawa_solve(k2, chi, bound)
    rep.add(
        "horikawa.solutions",
        "admissible (t, xi-profile, L^2) configurations of the resolution equations",
        value=[[s.t, list(s.xi_profile), s.l_squared] for s in sols],
        expected=[[0, [], 8]] if (k2, chi) == (16, 4) else [[s.t, list(s.xi_profile), s.l_squared] for s in sols],
    )
    consistent = all(
        horikawa_check(HorikawaData(k2, chi, tuple(2 * x for x in s.xi_profile), s.t), s.l_squared)[2]
        for s in sols
    )
    rep.add(
        "horikawa.solutions-consistent",
        "every enumerated solution satisfies both resolution equations",
        value=consistent,
        expected=True,
    )
    return rep


def bicanonical_suite(lam1, lam2, precision: float = 1e-9) -> Report:
    basis = bicanonical_basis(lam1, lam2)
    rep = Report(
        params={
            "lambda1": Fraction(lam1),
            "lambda2": Fraction(lam2),
            "square-coordinates": [[str(c) for c in pair] for pair in basis.square_coords],
        }
    )
    rep.add(
        "bicanonical.q1-exact",
        "z0 z3 - z1 z2 vanishes identically in the function field",
        value=basis.first_quadric_residual().is_zero(),
        expected=True,
    )
    rep.add(
        "bicanonical.q2-exact",
        "z4^2 - z0 z3 vanishes identically in the function field",
        value=basis.second_quadric_residual().is_zero(),
        expected=True,
    )
    nodes = node_check(basis)
    rep.add(
        "bicanonical.nodes",
        "the four coordinate nodes lie on both quadrics and are distinct",
        value=[list(n) for n in nodes],
        expected=[[1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0]],
    )
    rep.add(
        "bicanonical.degree",
        "2 * 16 / 4 / 2 = 4: the bicanonical map is an iterated double cover of degree 4",
        value=bicanonical_degree_ledger().total(),
        expected=4,
    )
    numeric = pullback_consistency_check(basis, samples=100, precision=precision, seed=20240)
    rep.add(
        "bicanonical.numeric-residual",
        "both quadric relations hold at 100 random points of the product",
        value=numeric.max_residual,
        expected=f"< {precision:g}",
        tolerance=precision,
        passed=(not numeric.vacuous) and numeric.max_residual < precision,
    )
    return rep
