"""Input coercion and validation helpers.

Each ``check_*`` function accepts the loose forms a user might pass (a
description mapping, a list of generators, JSON text, a path) and returns
the validated object, raising :class:`ScenarioError` with a message naming
the offending item otherwise.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from .brauer import FactorSpec, Scenario
from .exceptions import GroupTableError, ScenarioError, ScenarioParseError
from .finite_group import FiniteGroup, Subgroup, generated_subgroup, make_group, parse_permutation

__all__ = [
    "check_positive_int",
    "check_group",
    "check_element",
    "check_subgroup",
    "check_factor",
    "check_scenario",
    "load_document",
]


def check_positive_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ScenarioError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_group(obj: Any) -> FiniteGroup:
    if isinstance(obj, FiniteGroup):
        return obj
    if not isinstance(obj, dict):
        raise ScenarioError(f"group must be a description object, got {type(obj).__name__}")
    try:
        return make_group(obj)
    except GroupTableError as exc:
        raise ScenarioError(f"invalid group table: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"invalid group description: {exc}") from exc


def check_element(G: FiniteGroup, obj: Any, where: str = "") -> int:
    """Element index from an integer, an element label or a permutation word."""
    prefix = f"{where}: " if where else ""
    if isinstance(obj, bool):
        raise ScenarioError(f"{prefix}bad element {obj!r}")
    if isinstance(obj, int):
        if not 0 <= obj < G.order:
            raise ScenarioError(
                f"{prefix}element index {obj} out of range for group of order {G.order}"
            )
        return obj
    if isinstance(obj, str):
        if obj in G.labels:
            return G.labels.index(obj)
        if G.permutations is not None:
            degree = len(G.permutations[0])
            try:
                perm = parse_permutation(obj, degree)
            except ValueError as exc:
                raise ScenarioError(f"{prefix}{exc}") from exc
            try:
                return G.permutations.index(perm)
            except ValueError:
                raise ScenarioError(f"{prefix}permutation {obj!r} is not in the group") from None
        raise ScenarioError(f"{prefix}unknown element {obj!r}")
    raise ScenarioError(f"{prefix}bad element {obj!r}")


def check_subgroup(G: FiniteGroup, obj: Any, where: str = "") -> Subgroup:
    """Subgroup from ``"whole"``/``"G"``, ``"trivial"``, a generator list, or
    ``{"generators": [...]}`` / ``{"members": [...]}``."""
    prefix = f"{where}: " if where else ""
    if isinstance(obj, Subgroup):
        if obj.parent != G:
            raise ScenarioError(f"{prefix}subgroup belongs to another group")
        return obj
    if obj in ("whole", "G"):
        return Subgroup(G, tuple(range(G.order)))
    if obj == "trivial":
        return Subgroup(G, (0,))
    if isinstance(obj, list):
        obj = {"generators": obj}
    if isinstance(obj, dict) and "generators" in obj:
        gens = [check_element(G, g, where) for g in obj["generators"]]
        return generated_subgroup(G, gens)
    if isinstance(obj, dict) and "members" in obj:
        members = [check_element(G, g, where) for g in obj["members"]]
        try:
            return Subgroup.from_members(G, members)
        except ValueError as exc:
            raise ScenarioError(f"{prefix}{exc}") from exc
    raise ScenarioError(f"{prefix}cannot read subgroup {obj!r}")


def check_factor(G: FiniteGroup, obj: Any, position: int) -> FactorSpec:
    """One entry of a scenario's factor list (``position`` is 1-based)."""
    if isinstance(obj, FactorSpec):
        return obj
    if not isinstance(obj, dict):
        raise ScenarioError(f"factor {position}: expected an object")
    label = obj.get("label") or f"P_{position}"
    where = f"factor {position} ({label})"
    unknown = set(obj) - {"label", "subgroup", "degree", "l", "multiplicity"}
    if unknown:
        raise ScenarioError(f"{where}: unknown field(s) {sorted(unknown)}")
    if "multiplicity" not in obj:
        raise ScenarioError(f"{where}: missing multiplicity")
    H = check_subgroup(G, obj.get("subgroup", "whole"), where)
    e = check_positive_int(obj["multiplicity"], f"{where}: multiplicity")
    degree = obj.get("degree")
    l = obj.get("l")
    if degree is None and l is None:
        raise ScenarioError(f"{where}: give the degree or l")
    if degree is not None:
        degree = check_positive_int(degree, f"{where}: degree")
        if degree % H.index:
            raise ScenarioError(
                f"{where}: [G:G_{position}] = {H.index} does not divide degree {degree}"
            )
    if l is not None:
        l = check_positive_int(l, f"{where}: l")
        if degree is not None and degree != l * H.index:
            raise ScenarioError(
                f"{where}: degree {degree} is inconsistent with l = {l} "
                f"(expected l * [G:G_{position}] = {l * H.index})"
            )
    return FactorSpec.make(H, e, degree=degree, l=l, label=label)


def load_document(obj: Any) -> dict:
    if isinstance(obj, str) and not obj.lstrip().startswith(("{", "[")) and Path(obj).is_file():
        obj = Path(obj)
    if isinstance(obj, os.PathLike):
        obj = Path(obj).read_text(encoding="utf-8")
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ScenarioParseError(
                f"JSON syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    if not isinstance(obj, dict):
        raise ScenarioParseError("scenario document must be a JSON object")
    return obj


def check_scenario(obj: Any, normalize: bool | None = None) -> Scenario:
    """Coerce ``obj`` (Scenario, mapping, JSON text or path) into a Scenario.

    ``normalize`` overrides the document's ``auto_normalize`` option when
    given.
    """
    if isinstance(obj, Scenario):
        s = obj
    else:
        doc = load_document(obj)
        schema = doc.get("schema", 1)
        if schema != 1:
            raise ScenarioParseError(f"unsupported schema version {schema!r}")
        if "group" not in doc:
            raise ScenarioParseError("missing 'group'")
        G = check_group(doc["group"])
        factors = doc.get("factors", [])
        if not isinstance(factors, list):
            raise ScenarioParseError("'factors' must be a list")
        options = doc.get("options", {}) or {}
        if not isinstance(options, dict):
            raise ScenarioParseError("'options' must be an object")
        if not isinstance(options.get("auto_normalize", True), bool):
            raise ScenarioParseError("options.auto_normalize must be true or false")
        coefficient = doc.get("leading_coefficient")
        s = Scenario(
            G,
            tuple(check_factor(G, f, i) for i, f in enumerate(factors, start=1)),
            options.get("auto_normalize", True),
            None if coefficient is None else str(coefficient),
        )
    if normalize is not None and normalize != s.auto_normalize:
        s = Scenario(s.group, s.factors, normalize, s.leading_coefficient)
    return s
