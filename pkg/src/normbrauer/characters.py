"""Characters ``G -> Q/Z`` of finite groups, restriction and corestriction.

Q/Z values are :class:`fractions.Fraction` instances reduced into ``[0, 1)``.
A character is stored by its coordinates against the basis pinned by the
abelianization: basis character ``j`` sends the ``j``-th canonical generator
of ``G^ab`` to ``1/d_j`` and the other generators to 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .abelian import (
    DEFAULT_ENUMERATION_BOUND,
    AbHom,
    FinAbGroup,
    SubgroupPresentation,
    enumerate_elements,
    hom_kernel,
)
from .exceptions import InvariantViolation
from .finite_group import (
    AbelianizationMap,
    FiniteGroup,
    Subgroup,
    abelianization,
    element_order,
    torsion_generated,
    transfer,
    whole_group,
)

__all__ = [
    "qz",
    "format_qz",
    "CharacterGroup",
    "Character",
    "AdmissibleSubgroup",
    "character_group",
    "evaluate",
    "restrict",
    "corestrict",
    "restriction_hom",
    "corestriction_hom",
    "admissible_subgroup",
]

ZERO = Fraction(0)


def qz(x) -> Fraction:
    """Canonical representative of ``x`` in Q/Z."""
    return Fraction(x) % 1


def format_qz(x: Fraction) -> str:
    x = qz(x)
    return "0" if x == 0 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    """``Hom(G, Q/Z)``, isomorphic to ``structure`` (the invariant factors of ``G^ab``)."""

    base: FiniteGroup
    structure: FinAbGroup
    projection: AbelianizationMap

    def __eq__(self, other):
        return isinstance(other, CharacterGroup) and self.base == other.base

    def __hash__(self):
        return hash(("characters", self.base))

    @property
    def order(self) -> int:
        return self.structure.order

    @cached_property
    def basis_values(self) -> tuple[tuple[Fraction, ...], ...]:
        """``basis_values[j][g]``: value of basis character ``j`` at ``g``."""
        return tuple(
            tuple(Fraction(self.projection(g)[j], d) for g in self.base)
            for j, d in enumerate(self.structure.moduli)
        )

    def __call__(self, coords: Sequence[int]) -> Character:
        return Character(self, self.structure.reduce(coords))

    def zero(self) -> Character:
        return Character(self, self.structure.zero())

    def basis(self) -> list[Character]:
        return [Character(self, v) for v in self.structure.basis()]

    def __iter__(self) -> Iterator[Character]:
        return (Character(self, v) for v in enumerate_elements(self.structure, DEFAULT_ENUMERATION_BOUND))

    def from_values(self, values: Sequence[Fraction]) -> Character:
        """The character with the given value table.

        Coordinates are read off at the generator lifts and the whole table
        is then checked; a mismatch means the values are not a homomorphism
        or the basis is inconsistent, and raises :class:`InvariantViolation`.
        """
        coords = []
        for g, d in zip(self.projection.generator_lifts, self.structure.moduli):
            c = qz(values[g]) * d
            if c.denominator != 1:
                raise InvariantViolation(f"value {values[g]} at a generator of order {d} is impossible")
            coords.append(int(c))
        chi = Character(self, self.structure.reduce(coords))
        if chi.values != tuple(qz(v) for v in values):
            raise InvariantViolation("value table is not a character of this group")
        return chi


@dataclass(frozen=True)
class Character:
    group: CharacterGroup
    coords: tuple[int, ...]

    def __call__(self, g: int) -> Fraction:
        return evaluate(self, g)

    @cached_property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(evaluate(self, g) for g in self.group.base)

    def __add__(self, other: Character) -> Character:
        if other.group != self.group:
            raise ValueError("characters of different groups")
        return Character(self.group, self.group.structure.add(self.coords, other.coords))

    def __neg__(self) -> Character:
        return Character(self.group, self.group.structure.neg(self.coords))

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def __rmul__(self, k: int) -> Character:
        return Character(self.group, self.group.structure.scale(k, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def order(self) -> int:
        return self.group.structure.element_order(self.coords)

    def __repr__(self):
        return f"Character({self.group.base!r}, {self.coords})"


@lru_cache(maxsize=512)
def character_group(G: FiniteGroup) -> CharacterGroup:
    amap = abelianization(G)
    return CharacterGroup(G, amap.target, amap)


def evaluate(chi: Character, g: int) -> Fraction:
    image = chi.group.projection(g)
    total = sum(
        (Fraction(c * a, d) for c, a, d in zip(chi.coords, image, chi.group.structure.moduli)),
        ZERO,
    )
    return total % 1


def _check_subgroup(chi: Character, H: Subgroup):
    if H.parent != chi.group.base:
        raise ValueError("subgroup does not belong to the character's group")


def restrict(chi: Character, H: Subgroup) -> Character:
    """Restriction to ``H``, as a character of ``H.as_group``."""
    _check_subgroup(chi, H)
    values = [chi(h) for h in H.members]
    return character_group(H.as_group).from_values(values)


def corestrict(chi: Character, H: Subgroup) -> Character:
    """Corestriction of a character of ``H`` to ``H.parent``: ``chi ∘ Ver``."""
    if chi.group.base != H.as_group:
        raise ValueError("character is not defined on this subgroup")
    G = H.parent
    moduli = chi.group.structure.moduli
    values = []
    for g in G:
        ver = transfer(G, H, g)
        values.append(sum((Fraction(c * a, d) for c, a, d in zip(chi.coords, ver, moduli)), ZERO))
    return character_group(G).from_values(values)


@lru_cache(maxsize=1024)
def restriction_hom(H: Subgroup) -> AbHom:
    """``Res: Hom(G, Q/Z) -> Hom(H, Q/Z)`` as an integer matrix."""
    source = character_group(H.parent)
    target = character_group(H.as_group)
    return AbHom.from_images(
        source.structure, target.structure, [restrict(psi, H).coords for psi in source.basis()]
    )


@lru_cache(maxsize=1024)
def corestriction_hom(H: Subgroup) -> AbHom:
    """``Cor: Hom(H, Q/Z) -> Hom(G, Q/Z)`` as an integer matrix."""
    source = character_group(H.as_group)
    target = character_group(H.parent)
    return AbHom.from_images(
        source.structure, target.structure, [corestrict(phi, H).coords for phi in source.basis()]
    )


@dataclass(frozen=True)
class AdmissibleSubgroup:
    """Characters of ``parent.base`` vanishing on every element of order dividing ``e_prime``."""

    parent: CharacterGroup
    e_prime: int
    presentation: SubgroupPresentation

    def __contains__(self, chi: Character) -> bool:
        return chi.group == self.parent and chi.coords in self.presentation

    @property
    def order(self) -> int:
        return self.presentation.order

    def characters(self) -> list[Character]:
        return [Character(self.parent, v) for v in enumerate_elements(self.presentation)]


def admissible_subgroup(chars: CharacterGroup, e_prime: int) -> AdmissibleSubgroup:
    """Kernel of evaluation at generators of the ``e_prime``-torsion-generated subgroup."""
    if e_prime < 1:
        raise ValueError("e_prime must be a positive integer")
    G = chars.base
    T = torsion_generated(whole_group(G), e_prime)
    points = T.generators()
    orders = [element_order(G, t) for t in points]
    # chi(t) lies in (1/ord t)Z/Z, identified with Z/ord(t)
    images = []
    for j in range(chars.structure.rank):
        images.append([int(chars.basis_values[j][t] * o) for t, o in zip(points, orders)])
    ev = AbHom.from_images(chars.structure, FinAbGroup(tuple(orders)), images)
    return AdmissibleSubgroup(chars, e_prime, hom_kernel(ev))
