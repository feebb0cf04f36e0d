"""Random scenarios over the built-in groups, for property tests and sweeps."""
from __future__ import annotations

import math
import random

from .brauer import FactorSpec, Scenario, normalize_scenario
from .characters import admissible_subgroup, character_group
from .finite_group import FiniteGroup, all_subgroups, builtin_groups

__all__ = ["random_factor", "random_scenario", "oracle_size"]


def random_factor(rng: random.Random, G: FiniteGroup, max_l: int = 3, max_e: int | None = None) -> FactorSpec:
    H = rng.choice(all_subgroups(G))
    l = rng.randint(1, max_l)
    e = rng.randint(1, max_e or 2 * G.order)
    return FactorSpec(H, l * H.index, e)


def oracle_size(s: Scenario) -> int:
    """Number of character tuples the oracle enumerates for ``s``."""
    s = normalize_scenario(s)
    return math.prod(
        admissible_subgroup(character_group(f.subgroup.as_group), f.e_prime).order for f in s.factors
    )


def random_scenario(
    rng: random.Random,
    groups: list[FiniteGroup] | None = None,
    max_factors: int = 4,
    max_tuples: int | None = 4096,
) -> Scenario:
    """A random scenario, not necessarily normalized.

    With ``max_tuples`` set, draws are repeated until the oracle's
    enumeration size is at most that many tuples.
    """
    groups = groups or builtin_groups(24)
    while True:
        G = rng.choice(groups)
        k = rng.randint(0, max_factors)
        s = Scenario(G, tuple(random_factor(rng, G) for _ in range(k)))
        if max_tuples is None or oracle_size(s) <= max_tuples:
            return s
