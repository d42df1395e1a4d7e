"""The affine crystallographic group behind the surface fundamental group.

Elements act on C^2 with diagonal linear part (eps1, eps2) in {+-1}^2 and a
translation whose coordinates over the lattice basis (e1, e1', e2, e2') are
half-integers.  Shifts are stored doubled so all arithmetic stays integral.

The adopted finite presentations are validated against this affine model:
every relator must evaluate to the identity.  Abelianizations go through
Smith normal form of the relator exponent matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exact.snf import SmithForm, abelian_invariants


@dataclass(frozen=True)
class AffineElement:
    """(signs, shift) with shift doubled: shift2[i] is twice the coordinate."""

    signs: tuple[int, int]
    shift2: tuple[int, int, int, int]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("linear part must be a diagonal sign pair")

    @classmethod
    def identity(cls) -> "AffineElement":
        return cls((1, 1), (0, 0, 0, 0))

    @classmethod
    def translation(cls, shift2: Sequence[int]) -> "AffineElement":
        return cls((1, 1), tuple(int(v) for v in shift2))

    def _sign_vector(self) -> tuple[int, int, int, int]:
        s1, s2 = self.signs
        return (s1, s1, s2, s2)

    def compose(self, other: "AffineElement") -> "AffineElement":
        """self after other: (eps, v) * (eps', v') = (eps eps', v + eps.v')."""
        sv = self._sign_vector()
        shift = tuple(a + s * b for a, s, b in zip(self.shift2, sv, other.shift2))
        signs = (self.signs[0] * other.signs[0], self.signs[1] * other.signs[1])
        return AffineElement(signs, shift)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return self.compose(other)

    def inverse(self) -> "AffineElement":
        sv = self._sign_vector()
        return AffineElement(self.signs, tuple(-s * v for s, v in zip(sv, self.shift2)))

    def __pow__(self, n: int) -> "AffineElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = AffineElement.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return self.signs == (1, 1) and all(v == 0 for v in self.shift2)

    def is_lattice_translation(self) -> bool:
        """Trivial linear part with an integral (not just half-integral) shift."""
        return self.signs == (1, 1) and all(v % 2 == 0 for v in self.shift2)

    def __repr__(self) -> str:
        halves = "(" + ", ".join(f"{v}/2" if v % 2 else f"{v // 2}" for v in self.shift2) + ")"
        return f"[signs={self.signs}, shift={halves}]"


GAMMA_1 = AffineElement((1, -1), (1, 0, 0, 0))
GAMMA_2 = AffineElement((-1, 1), (0, 0, 1, 0))
T_E1 = AffineElement.translation((2, 0, 0, 0))
T_E1P = AffineElement.translation((0, 2, 0, 0))
T_E2 = AffineElement.translation((0, 0, 2, 0))
T_E2P = AffineElement.translation((0, 0, 0, 2))

STANDARD_ASSIGNMENT: dict[str, AffineElement] = {
    "g1": GAMMA_1,
    "g2": GAMMA_2,
    "e1": T_E1,
    "e1'": T_E1P,
    "e2": T_E2,
    "e2'": T_E2P,
}

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9']*)(?:\^(-?\d+))?$")


def parse_word(word: str) -> list[tuple[str, int]]:
    """Words are whitespace separated generator tokens, e.g. \"g1 e2'^-1 g1^2\"."""
    out = []
    for token in word.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad token {token!r} in word {word!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def evaluate_word(word: str, assignment: Mapping[str, AffineElement] | None = None) -> AffineElement:
    assignment = STANDARD_ASSIGNMENT if assignment is None else assignment
    result = AffineElement.identity()
    for name, exp in parse_word(word):
        if name not in assignment:
            raise ValueError(f"unknown generator {name!r}")
        result = result * assignment[name] ** exp
    return result


def verify_relation(lhs: str, rhs: str, assignment: Mapping[str, AffineElement] | None = None) -> bool:
    """Exact equality of two words in the affine model."""
    return evaluate_word(lhs, assignment) == evaluate_word(rhs, assignment)


def linear_part_map(a: AffineElement) -> tuple[int, int]:
    """The quotient map onto (Z/2Z)^2; the image (a, b) is the class of
    g1^a g2^b, and g1 is the generator that negates the second coordinate."""
    return ((1 - a.signs[1]) // 2, (1 - a.signs[0]) // 2)


@dataclass(frozen=True)
class GroupPresentation:
    name: str
    generators: tuple[str, ...]
    relators: tuple[str, ...]

    def relator_exponent_rows(self) -> list[list[int]]:
        index = {g: i for i, g in enumerate(self.generators)}
        rows = []
        for rel in self.relators:
            row = [0] * len(self.generators)
            for gen, exp in parse_word(rel):
                if gen not in index:
                    raise ValueError(f"relator uses {gen!r}, not a generator of {self.name}")
                row[index[gen]] += exp
            rows.append(row)
        return rows

    def unsound_relators(self, assignment: Mapping[str, AffineElement] | None = None) -> list[str]:
        """Relators that fail to evaluate to the identity in the affine model."""
        return [r for r in self.relators if not evaluate_word(r, assignment).is_identity()]


# Adopted presentations.  The last relator of the full group is the
# sign-corrected commutation of the two order-4 generators.
PRESENTATION_GAMMA = GroupPresentation(
    name="gamma",
    generators=("g1", "g2", "e1'", "e2'"),
    relators=(
        "g1 e1' g1^-1 e1'^-1",
        "g2 e2' g2^-1 e2'^-1",
        "e1' e2' e1'^-1 e2'^-1",
        "g1 e2' g1^-1 e2'",
        "g2 e1' g2^-1 e1'",
        "g1 g2^2 g1^-1 g2^2",
        "g2 g1^2 g2^-1 g1^2",
        "g1^-1 g2 g1^-1 g2",
    ),
)

PRESENTATION_GAMMA_1 = GroupPresentation(
    name="gamma1",
    generators=("g1", "e1'", "e2", "e2'"),
    relators=(
        "g1 e1' g1^-1 e1'^-1",
        "e1' e2 e1'^-1 e2^-1",
        "e1' e2' e1'^-1 e2'^-1",
        "e2 e2' e2^-1 e2'^-1",
        "g1 e2 g1^-1 e2",
        "g1 e2' g1^-1 e2'",
    ),
)

PRESENTATION_GAMMA_2 = GroupPresentation(
    name="gamma2",
    generators=("e1", "e1'", "g2", "e2'"),
    relators=(
        "g2 e2' g2^-1 e2'^-1",
        "e1 e1' e1^-1 e1'^-1",
        "e1 e2' e1^-1 e2'^-1",
        "e1' e2' e1'^-1 e2'^-1",
        "g2 e1 g2^-1 e1",
        "g2 e1' g2^-1 e1'",
    ),
)

PRESENTATIONS = {
    "gamma": PRESENTATION_GAMMA,
    "gamma1": PRESENTATION_GAMMA_1,
    "gamma2": PRESENTATION_GAMMA_2,
}


def abelianization(pres: GroupPresentation) -> SmithForm:
    """Invariant factors of the abelianized presentation via Smith form."""
    bad = pres.unsound_relators()
    if bad:
        raise ValueError(f"presentation {pres.name} has unsound relators: {bad}")
    return abelian_invariants(pres.relator_exponent_rows(), len(pres.generators))


def in_gamma(a: AffineElement) -> bool:
    """Membership in the affine group generated by g1, g2 and the lattice:
    the sign pattern forces the shift parity class."""
    parity = {
        (1, 1): (0, 0, 0, 0),
        (1, -1): (1, 0, 0, 0),
        (-1, 1): (0, 0, 1, 0),
        (-1, -1): (1, 0, 1, 0),
    }[a.signs]
    return all((v - p) % 2 == 0 for v, p in zip(a.shift2, parity))


def in_gamma_1(a: AffineElement) -> bool:
    return in_gamma(a) and a.signs[0] == 1


def in_gamma_2(a: AffineElement) -> bool:
    return in_gamma(a) and a.signs[1] == 1


# -- homology target: Z/4 + (Z/2)^3 ------------------------------------------

H1_MODULI = (4, 2, 2, 2)

H1_IMAGES: dict[str, tuple[int, int, int, int]] = {
    "g1": (1, 0, 0, 0),
    "g2": (1, 1, 0, 0),
    "e1'": (0, 0, 1, 0),
    "e2'": (0, 0, 0, 1),
}


def _h1_reduce(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(x % m for x, m in zip(v, H1_MODULI))


def h1_image_of_exponents(row: Sequence[int], generators: Sequence[str]) -> tuple[int, ...]:
    acc = [0, 0, 0, 0]
    for gen, exp in zip(generators, row):
        img = H1_IMAGES[gen]
        for i in range(4):
            acc[i] += exp * img[i]
    return _h1_reduce(acc)


def h1_isomorphism_check() -> bool:
    """The explicit map to Z/4 + (Z/2)^3 kills every abelianized relator and
    its generator images generate the whole target."""
    pres = PRESENTATION_GAMMA
    rows = pres.relator_exponent_rows()
    for row in rows:
        if any(h1_image_of_exponents(row, pres.generators)):
            return False
    generated = {(0, 0, 0, 0)}
    frontier = [(0, 0, 0, 0)]
    images = [H1_IMAGES[g] for g in pres.generators]
    while frontier:
        cur = frontier.pop()
        for img in images:
            nxt = _h1_reduce(a + b for a, b in zip(cur, img))
            if nxt not in generated:
                generated.add(nxt)
                frontier.append(nxt)
    if len(generated) != 4 * 2 * 2 * 2:
        return False
    factors = abelianization(pres)
    return factors.free_rank == 0 and factors.cokernel_order() == 32
