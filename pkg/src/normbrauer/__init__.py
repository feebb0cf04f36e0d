"""Vertical unramified Brauer groups of Galois normic bundles.

>>> from normbrauer import cyclic, whole_group, FactorSpec, Scenario, compute_vertical_brauer
>>> C2 = cyclic(2)
>>> P = FactorSpec(whole_group(C2), degree=2, multiplicity=1)
>>> compute_vertical_brauer(Scenario(C2, (P, P))).invariant_factors
(2,)
"""
from .abelian import (
    AbHom,
    FinAbGroup,
    IntMatrix,
    SubgroupPresentation,
    enumerate_elements,
    finab_from_relations,
    hom_kernel,
    smith_normal_form,
    subgroup_quotient,
)
from .brauer import (
    BrauerResult,
    FactorSpec,
    Scenario,
    build_coboundary_map,
    build_constraint_map,
    compute_vertical_brauer,
    format_symbols,
    normalize_scenario,
)
from .characters import (
    Character,
    CharacterGroup,
    admissible_subgroup,
    character_group,
    corestrict,
    evaluate,
    restrict,
)
from .estimator import VerticalBrauerGroup
from .exceptions import (
    CapacityError,
    ContainmentError,
    GroupTableError,
    InvariantViolation,
    NormalizationError,
    NormBrauerError,
    ScenarioError,
    ScenarioParseError,
)
from .finite_group import (
    FiniteGroup,
    Subgroup,
    abelianization,
    all_subgroups,
    alternating,
    builtin_groups,
    conjugate_subgroup,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    double_cosets,
    element_order,
    from_permutations,
    from_table,
    generated_subgroup,
    left_cosets,
    make_group,
    quaternion8,
    symmetric,
    torsion_generated,
    transfer,
    trivial_subgroup,
    whole_group,
)
from .oracle import oracle_characters, oracle_corestrict, oracle_vertical_brauer
from .scenario_file import dump_scenario, dumps_scenario, parse_scenario

__version__ = "0.1.0"

__all__ = [
    "AbHom",
    "FinAbGroup",
    "IntMatrix",
    "SubgroupPresentation",
    "enumerate_elements",
    "finab_from_relations",
    "hom_kernel",
    "smith_normal_form",
    "subgroup_quotient",
    "BrauerResult",
    "FactorSpec",
    "Scenario",
    "build_coboundary_map",
    "build_constraint_map",
    "compute_vertical_brauer",
    "format_symbols",
    "normalize_scenario",
    "Character",
    "CharacterGroup",
    "admissible_subgroup",
    "character_group",
    "corestrict",
    "evaluate",
    "restrict",
    "CapacityError",
    "ContainmentError",
    "GroupTableError",
    "InvariantViolation",
    "NormalizationError",
    "NormBrauerError",
    "ScenarioError",
    "ScenarioParseError",
    "FiniteGroup",
    "Subgroup",
    "abelianization",
    "all_subgroups",
    "alternating",
    "builtin_groups",
    "conjugate_subgroup",
    "cyclic",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "double_cosets",
    "element_order",
    "from_permutations",
    "from_table",
    "generated_subgroup",
    "left_cosets",
    "make_group",
    "quaternion8",
    "symmetric",
    "torsion_generated",
    "transfer",
    "trivial_subgroup",
    "whole_group",
    "VerticalBrauerGroup",
    "oracle_characters",
    "oracle_corestrict",
    "oracle_vertical_brauer",
    "dump_scenario",
    "dumps_scenario",
    "parse_scenario",
]
