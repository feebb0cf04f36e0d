"""JSON scenario files (schema version 1).

A scenario document looks like::

    {
      "schema": 1,
      "name": "chatelet",
      "group": {"kind": "cyclic", "n": 2},
      "factors": [
        {"label": "P_1", "subgroup": "whole", "degree": 2, "multiplicity": 1},
        {"label": "P_2", "subgroup": "whole", "degree": 2, "multiplicity": 1}
      ],
      "leading_coefficient": "-1",
      "options": {"auto_normalize": true, "bound": 1000000, "format": "human"},
      "expected": {"invariant_factors": [2]}
    }

``subgroup`` is ``"whole"``, ``"trivial"``, or ``{"generators": [...]}``
where generators are element indices, element labels or (for permutation
groups) cycle-notation words.  ``expected`` is only read by the test suite.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .brauer import Scenario
from .exceptions import ScenarioParseError
from .validation import load_document, check_scenario

__all__ = [
    "SCHEMA_VERSION",
    "ScenarioFile",
    "read_scenario_file",
    "parse_scenario",
    "dump_scenario",
    "dumps_scenario",
    "golden_corpus",
]

SCHEMA_VERSION = 1
_OPTION_KEYS = {"auto_normalize", "bound", "format"}


@dataclass(frozen=True)
class ScenarioFile:
    scenario: Scenario
    options: dict = field(default_factory=dict)
    name: str = ""
    expected: dict | None = None


def read_scenario_file(text: Any) -> ScenarioFile:
    """Parse a scenario document (JSON text, mapping or path) with its options."""
    doc = load_document(text)
    unknown = set(doc) - {"schema", "name", "group", "factors", "leading_coefficient", "options", "expected"}
    if unknown:
        raise ScenarioParseError(f"unknown top-level field(s) {sorted(unknown)}")
    options = doc.get("options") or {}
    if not isinstance(options, dict) or set(options) - _OPTION_KEYS:
        raise ScenarioParseError(f"'options' may only contain {sorted(_OPTION_KEYS)}")
    if options.get("format", "human") not in ("human", "json"):
        raise ScenarioParseError("options.format must be 'human' or 'json'")
    return ScenarioFile(check_scenario(doc), dict(options), doc.get("name", ""), doc.get("expected"))


def parse_scenario(text: Any) -> Scenario:
    return read_scenario_file(text).scenario


def _subgroup_entry(H) -> Any:
    if H.order == H.parent.order:
        return "whole"
    if H.is_trivial():
        return "trivial"
    labels = H.parent.labels
    if len(set(labels)) == len(labels):
        return {"generators": [labels[g] for g in H.generators()]}
    return {"generators": H.generators()}


def dump_scenario(s: Scenario, name: str = "", options: dict | None = None) -> dict:
    """Scenario as a JSON-ready mapping; :func:`parse_scenario` inverts it."""
    doc: dict[str, Any] = {"schema": SCHEMA_VERSION}
    if name:
        doc["name"] = name
    doc["group"] = s.group.description
    doc["factors"] = [
        {
            "label": f.label,
            "subgroup": _subgroup_entry(f.subgroup),
            "degree": f.degree,
            "l": f.l,
            "multiplicity": f.multiplicity,
        }
        for f in s.factors
    ]
    if s.leading_coefficient is not None:
        doc["leading_coefficient"] = s.leading_coefficient
    opts = {"auto_normalize": s.auto_normalize}
    opts.update(options or {})
    doc["options"] = opts
    return doc


def dumps_scenario(s: Scenario, **kwargs) -> str:
    return json.dumps(dump_scenario(s, **kwargs), indent=2, ensure_ascii=False)


def golden_corpus() -> list[tuple[str, ScenarioFile]]:
    """The bundled golden scenarios, sorted by file name."""
    root = resources.files("normbrauer") / "golden"
    out = []
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            out.append((Path(entry.name).stem, read_scenario_file(entry.read_text(encoding="utf-8"))))
    return out
