"""Vertical Brauer group of a Galois normic bundle ``N_{K/k}(z) = P(x)``.

Input is finite data: ``G = Gal(K/k)`` and, for each irreducible factor
``P_i`` of ``P``, the subgroup ``G_i = Gal(K/L_i')``, the degree ``d_i`` and
the multiplicity ``e_i``.  With ``l_i = d_i / [G:G_i]`` and
``e_i' = gcd(e_i, n)`` the group is the quotient

    {(chi_i) in (+)_i Ĝ_i' : sum_i l_i Cor_i(chi_i) = 0}
    / {(e_i Res_i(chi))_i : chi in Ĝ}

where ``Ĝ_i'`` is the group of characters of ``G_i`` that vanish on every
element of order dividing ``e_i'``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

from .abelian import (
    AbHom,
    FinAbGroup,
    Quotient,
    enumerate_elements,
    hom_image,
    hom_kernel,
    subgroup_quotient,
)
from .characters import (
    AdmissibleSubgroup,
    Character,
    CharacterGroup,
    admissible_subgroup,
    character_group,
    corestriction_hom,
    restrict,
)
from .exceptions import ContainmentError, InvariantViolation, NormalizationError, ScenarioError
from .finite_group import FiniteGroup, Subgroup, whole_group

__all__ = [
    "INFINITY_LABEL",
    "FactorSpec",
    "Scenario",
    "BrauerResult",
    "normalize_scenario",
    "normalize_with_log",
    "build_constraint_map",
    "build_coboundary_map",
    "compute_vertical_brauer",
    "format_symbols",
]

INFINITY_LABEL = "x_∞"


@dataclass(frozen=True)
class FactorSpec:
    """Splitting data of one irreducible factor ``P_i`` of multiplicity ``e_i``.

    Use :meth:`make` to supply ``l_i`` instead of (or together with) the
    degree.
    """

    subgroup: Subgroup
    degree: int
    multiplicity: int
    label: str = ""

    def __post_init__(self):
        name = self.label or "factor"
        for attr in ("degree", "multiplicity"):
            v = getattr(self, attr)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ScenarioError(f"{name}: {attr} must be a positive integer, got {v!r}")
        idx = self.subgroup.index
        if self.degree % idx:
            raise ScenarioError(
                f"{name}: [G:G_i] = {idx} does not divide degree {self.degree}"
            )

    @classmethod
    def make(
        cls,
        subgroup: Subgroup,
        multiplicity: int,
        degree: int | None = None,
        l: int | None = None,
        label: str = "",
    ) -> FactorSpec:
        name = label or "factor"
        if degree is None and l is None:
            raise ScenarioError(f"{name}: give the degree or l")
        if l is not None:
            if not isinstance(l, int) or isinstance(l, bool) or l < 1:
                raise ScenarioError(f"{name}: l must be a positive integer, got {l!r}")
            implied = l * subgroup.index
            if degree is not None and degree != implied:
                raise ScenarioError(
                    f"{name}: degree {degree} is inconsistent with l = {l} "
                    f"and [G:G_i] = {subgroup.index} (expected degree {implied})"
                )
            degree = implied
        return cls(subgroup, degree, multiplicity, label)

    @property
    def l(self) -> int:
        """``[L_i : L_i']``."""
        return self.degree // self.subgroup.index

    @property
    def e_prime(self) -> int:
        return math.gcd(self.multiplicity, self.subgroup.parent.order)


@dataclass(frozen=True)
class Scenario:
    group: FiniteGroup
    factors: tuple[FactorSpec, ...] = ()
    auto_normalize: bool = True
    leading_coefficient: str | None = None

    def __post_init__(self):
        factors = []
        for i, f in enumerate(self.factors):
            if f.subgroup.parent != self.group:
                raise ScenarioError(f"factor {i + 1}: subgroup does not belong to the scenario group")
            factors.append(f if f.label else replace(f, label=f"P_{i + 1}"))
        object.__setattr__(self, "factors", tuple(factors))

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def m(self) -> int:
        """Total degree ``sum e_i d_i``."""
        return sum(f.multiplicity * f.degree for f in self.factors)

    def is_normalized(self) -> bool:
        return self.m % self.n == 0 and all(f.multiplicity < self.n for f in self.factors)


def normalize_with_log(s: Scenario) -> tuple[Scenario, list[str]]:
    """Normalize and report every change made.

    Multiplicities are reduced mod ``n`` (factors that reach 0 are dropped);
    if then ``n`` does not divide ``m``, the substitution ``x' = 1/x``,
    ``z' = z / x^ceil(m/n)`` adds the factor ``x'`` of degree 1, subgroup
    ``G`` and multiplicity ``(-m) mod n``.
    """
    n = s.n
    log = []
    if s.leading_coefficient not in (None, ""):
        log.append(
            f"leading coefficient c = {s.leading_coefficient} ignored (it does not affect the result)"
        )
    kept = []
    for f in s.factors:
        e = f.multiplicity % n
        if e == 0:
            log.append(f"{f.label}: multiplicity {f.multiplicity} ≡ 0 (mod {n}); factor dropped")
            continue
        if e != f.multiplicity:
            log.append(f"{f.label}: multiplicity {f.multiplicity} reduced mod {n} to {e}")
            f = replace(f, multiplicity=e)
        kept.append(f)
    m = sum(f.multiplicity * f.degree for f in kept)
    if m % n:
        e_inf = (-m) % n
        log.append(
            f"m = {m} is not divisible by n = {n}: substituted x' = 1/x, "
            f"z' = z/x^{-(-m // n)}; appended factor {INFINITY_LABEL} "
            f"(degree 1, subgroup G, multiplicity {e_inf})"
        )
        kept.append(FactorSpec(whole_group(s.group), 1, e_inf, INFINITY_LABEL))
    return replace(s, factors=tuple(kept)), log


def normalize_scenario(s: Scenario) -> Scenario:
    return normalize_with_log(s)[0]


@dataclass(frozen=True)
class _Blocks:
    """Coordinates of ``(+)_i Ĝ_i'``: one canonical block per factor."""

    group_chars: CharacterGroup
    factor_chars: tuple[CharacterGroup, ...]
    admissible: tuple[AdmissibleSubgroup, ...]
    structures: tuple[Quotient, ...]
    source: FinAbGroup
    offsets: tuple[int, ...]

    def split(self, x: Sequence[int]) -> list[tuple[int, ...]]:
        return [
            tuple(x[o:o + q.group.rank]) for o, q in zip(self.offsets, self.structures)
        ]

    def to_characters(self, x: Sequence[int]) -> tuple[Character, ...]:
        """Element of the direct sum -> tuple of characters of the ``G_i``."""
        out = []
        for block, X, q in zip(self.split(x), self.factor_chars, self.structures):
            coords = [0] * X.structure.rank
            for c, lift in zip(block, q.lifts):
                for k, a in enumerate(lift):
                    coords[k] += c * a
            out.append(X(coords))
        return tuple(out)


@lru_cache(maxsize=256)
def _blocks(s: Scenario) -> _Blocks:
    factor_chars = tuple(character_group(f.subgroup.as_group) for f in s.factors)
    admissible = tuple(admissible_subgroup(X, f.e_prime) for X, f in zip(factor_chars, s.factors))
    structures = tuple(a.presentation.structure for a in admissible)
    offsets, o = [], 0
    for q in structures:
        offsets.append(o)
        o += q.group.rank
    source = FinAbGroup.direct_sum(*(q.group for q in structures))
    return _Blocks(character_group(s.group), factor_chars, admissible, structures, source, tuple(offsets))


def _require_normalized(s: Scenario):
    if not s.is_normalized():
        raise NormalizationError(
            f"scenario is not normalized (m = {s.m}, n = {s.n}, multiplicities "
            f"{[f.multiplicity for f in s.factors]})"
        )


def build_constraint_map(s: Scenario) -> AbHom:
    """``(chi_i) -> sum_i l_i Cor_i(chi_i)`` from ``(+)_i Ĝ_i'`` to ``Ĝ``."""
    _require_normalized(s)
    return _constraint_map(s)


def _constraint_map(s: Scenario) -> AbHom:
    b = _blocks(s)
    target = b.group_chars.structure
    images = []
    for f, q in zip(s.factors, b.structures):
        cor = corestriction_hom(f.subgroup)
        for lift in q.lifts:
            images.append(target.scale(f.l, cor(lift)))
    return AbHom.from_images(b.source, target, images)


def build_coboundary_map(s: Scenario) -> AbHom:
    """``chi -> (e_i Res_i(chi))_i`` from ``Ĝ`` to ``(+)_i Ĝ_i'``."""
    _require_normalized(s)
    return _coboundary_map(s)


def _coboundary_map(s: Scenario) -> AbHom:
    b = _blocks(s)
    images = []
    for psi in b.group_chars.basis():
        column: list[int] = []
        for i, (f, q) in enumerate(zip(s.factors, b.structures)):
            res = f.multiplicity * restrict(psi, f.subgroup)
            try:
                column.extend(q.coordinates(res.coords))
            except ContainmentError as exc:
                raise InvariantViolation(
                    f"{f.label}: e_i * Res_i(chi) is not in the admissible subgroup"
                ) from exc
        images.append(column)
    return AbHom.from_images(b.group_chars.structure, b.source, images)


@dataclass(frozen=True)
class BrauerResult:
    """Invariant factors of ``Br_vert(X)/Br(k)`` with generator representatives.

    ``generators[k][i]`` is the ``i``-th component of a lift of the
    ``k``-th canonical generator; ``witnesses[k][i]`` is a character of ``G``
    restricting to it, when one exists.
    """

    scenario: Scenario
    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Character, ...], ...]
    witnesses: tuple[tuple[Character | None, ...], ...]
    symbols: tuple[str, ...]
    normalization_log: tuple[str, ...] = ()
    numerator_order: int = 1
    denominator_order: int = 1

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)


def compute_vertical_brauer(s: Scenario) -> BrauerResult:
    """Normalize ``s`` (unless ``auto_normalize`` is off) and evaluate the quotient."""
    if s.auto_normalize:
        s, log = normalize_with_log(s)
    else:
        _require_normalized(s)
        log = []
    return _compute_normalized(s, log)


def _compute_normalized(s: Scenario, log: Sequence[str] = ()) -> BrauerResult:
    # no normalization check here: the containment test below is the guard
    b = _blocks(s)
    N = hom_kernel(_constraint_map(s))
    D = hom_image(_coboundary_map(s))
    try:
        q = subgroup_quotient(N, D)
    except ContainmentError as exc:
        raise InvariantViolation(
            f"coboundary image is not contained in the constraint kernel ({exc}); "
            f"this happens when n = {s.n} does not divide m = {s.m}"
        ) from exc
    boundaries = enumerate_elements(D)
    generators = tuple(b.to_characters(_tidy_lift(b, lift, boundaries)) for lift in q.lifts)
    witnesses = tuple(
        tuple(_find_witness(chi, f.subgroup) for chi, f in zip(gen, s.factors))
        for gen in generators
    )
    result = BrauerResult(
        scenario=s,
        invariant_factors=q.group.moduli,
        generators=generators,
        witnesses=witnesses,
        symbols=(),
        normalization_log=tuple(log),
        numerator_order=N.order,
        denominator_order=D.order,
    )
    return replace(result, symbols=tuple(format_symbols(result, s)))


def _tidy_lift(b: _Blocks, lift: Sequence[int], boundaries) -> tuple[int, ...]:
    """Representative of ``lift + D`` with the fewest, earliest nonzero components."""
    def key(v):
        support = [i for i, block in enumerate(b.split(v)) if any(block)]
        return len(support), support, v

    return min((b.source.add(lift, d) for d in boundaries), key=key)


def _find_witness(chi: Character, H: Subgroup) -> Character | None:
    if chi.is_zero():
        return None
    for psi in character_group(H.parent):
        if restrict(psi, H) == chi:
            return psi
    return None


def format_symbols(r: BrauerResult, s: Scenario) -> list[str]:
    """Cup-product expressions for the generators.

    Each nonzero component contributes ``Cor_{L_i(x)/k(x)}((x − ε_i) ⌣ χ_i)``;
    when ``χ_i`` is a restriction of some ``χ`` on ``G`` the summand is also
    written as ``P_i(x) ⌣ χ``.  The trivial group gives ``["0"]``.
    """
    if not r.generators:
        return ["0"]
    out = []
    for k, gen in enumerate(r.generators):
        terms = []
        for i, (chi, f) in enumerate(zip(gen, s.factors), start=1):
            if chi.is_zero():
                continue
            term = f"Cor_{{L_{i}(x)/k(x)}}((x − ε_{i}) ⌣ χ_{i})"
            witness = r.witnesses[k][i - 1] if r.witnesses else _find_witness(chi, f.subgroup)
            if witness is not None:
                poly = "(1/x)" if f.label == INFINITY_LABEL else f"{f.label}(x)"
                term += f" = {poly} ⌣ χ"
            terms.append(term)
        out.append(" + ".join(terms) if terms else "0")
    return out
