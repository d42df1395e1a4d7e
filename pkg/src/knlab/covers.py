"""Double-cover numerology: Chern invariants, canonical-resolution arithmetic,
the forced-smoothness enumeration, and the branch-type invariance criterion.

All formulas are specialized to an abelian base surface (trivial canonical
class); other bases are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement


@dataclass(frozen=True)
class BranchType:
    """Bidegree (a, b) of a divisor class on a product of two elliptic curves."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("bidegree components must be nonnegative")

    def self_intersection(self) -> int:
        return 2 * self.a * self.b


@dataclass(frozen=True)
class HorikawaData:
    """Input to the canonical-resolution bookkeeping.

    multiplicities lists the branch-curve multiplicities m_i >= 2 (including
    infinitely near points); t counts the points blown up upstairs.
    """

    k2_upstairs: int
    chi_upstairs: int
    multiplicities: tuple[int, ...] = ()
    t: int = 0

    def __post_init__(self):
        if any(m < 2 for m in self.multiplicities):
            raise ValueError("branch multiplicities must be at least 2")
        if self.t < 0:
            raise ValueError("t counts blown-up points and cannot be negative")

    def xi(self) -> tuple[int, ...]:
        return tuple(m // 2 for m in self.multiplicities)


def _require_abelian_base(base: str) -> None:
    if base != "abelian":
        raise ValueError("only abelian base surfaces are supported (K_A = 0)")


def cover_invariants(branch: BranchType, base: str = "abelian") -> tuple[int, int]:
    """(K^2, chi) of the smooth double cover branched in twice the class."""
    _require_abelian_base(base)
    l2 = branch.self_intersection()
    return 2 * l2, l2 // 2


def quotient_invariants(k2: int, chi: int, order: int) -> tuple[int, int]:
    """Invariants after a free quotient; divisibility is enforced exactly."""
    if order <= 0:
        raise ValueError("group order must be positive")
    if k2 % order or chi % order:
        raise ValueError(f"({k2}, {chi}) not divisible by the group order {order}")
    return k2 // order, chi // order


def horikawa_check(data: HorikawaData, l_squared: int, base: str = "abelian") -> tuple[int, Fraction, bool]:
    """Evaluate both canonical-resolution equations with K_A = 0.

    Returns (K^2 of the resolution, chi, consistent).
    """
    _require_abelian_base(base)
    xi = data.xi()
    k2_resolution = data.k2_upstairs - data.t
    k2_rhs = 2 * l_squared - 2 * sum((x - 1) ** 2 for x in xi)
    chi_rhs = Fraction(l_squared, 2) - Fraction(sum(x * (x - 1) for x in xi), 2)
    consistent = (k2_resolution == k2_rhs) and (Fraction(data.chi_upstairs) == chi_rhs)
    return k2_resolution, chi_rhs, consistent


@dataclass(frozen=True)
class HorikawaSolution:
    """One admissible configuration: t, the profile of xi values exceeding 1
    (an empty profile means every xi equals 1), and the forced L^2."""

    t: int
    xi_profile: tuple[int, ...]
    l_squared: int

    def all_xi_one(self) -> bool:
        return not self.xi_profile


def horikawa_solve(k2: int = 16, chi: int = 4, bound: int = 10) -> list[HorikawaSolution]:
    """Exhaust t in [0, bound] and xi profiles with entries in [2, bound].

    Combining the two resolution equations eliminates K^2 of the resolution:
        t = k2 - 4 chi - 2 sum(xi_i - 1),
        L^2 = 2 chi + sum xi_i (xi_i - 1).
    Entries with xi = 1 contribute to neither sum, so profiles are normalized
    to their parts exceeding 1.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    solutions = []
    for size in range(bound + 1):
        for profile in combinations_with_replacement(range(2, bound + 1), size):
            s = sum(x - 1 for x in profile)
            t = k2 - 4 * chi - 2 * s
            if not 0 <= t <= bound:
                continue
            l2 = 2 * chi + sum(x * (x - 1) for x in profile)
            solutions.append(HorikawaSolution(t, profile, l2))
    solutions.sort(key=lambda sol: (sol.t, sol.xi_profile))
    return solutions


def class_translation_invariant(degree: int, torsion_order: int) -> bool:
    """A degree-d class is fixed by translation by a point of the given
    torsion order exactly when d times the point dies."""
    if degree <= 0:
        raise ValueError("degree must be positive")
    if torsion_order not in (1, 2):
        raise ValueError("only the trivial and half-period translations occur here")
    return degree % torsion_order == 0


def branch_type_admissible(branch: BranchType, torsion_order: int = 2) -> bool:
    """Both bidegree components must define translation-invariant classes."""
    return class_translation_invariant(branch.a, torsion_order) and class_translation_invariant(
        branch.b, torsion_order
    )
