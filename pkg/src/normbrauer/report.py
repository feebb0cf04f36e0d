"""Reports for the command line: one mapping rendered either as JSON or text.

Both renderings are produced from the same mapping so they always carry the
same data.  JSON output is deterministic (no timestamps; timing only when
explicitly requested).
"""
from __future__ import annotations

import json
from math import lcm
from typing import Any

from .abelian import format_invariant_factors
from .brauer import BrauerResult, Scenario
from .characters import Character, format_qz
from .scenario_file import dump_scenario

__all__ = [
    "REPORT_SCHEMA",
    "character_entry",
    "compute_report",
    "normalize_report",
    "compare_report",
    "check_report",
    "render_json",
    "render_human",
]

REPORT_SCHEMA = 1


def _structure(factors) -> str:
    return "trivial" if not factors else format_invariant_factors(factors)


def character_entry(chi: Character) -> dict:
    G = chi.group.base
    return {
        "coords": list(chi.coords),
        "values": {G.labels[g]: format_qz(v) for g, v in enumerate(chi.values)},
    }


def compute_report(result: BrauerResult) -> dict:
    s = result.scenario
    generators = []
    for k, (gen, wit) in enumerate(zip(result.generators, result.witnesses), start=1):
        comps = []
        for f, chi, w in zip(s.factors, gen, wit):
            entry = {"factor": f.label, **character_entry(chi)}
            entry["witness"] = None if w is None else character_entry(w)
            comps.append(entry)
        generators.append({"index": k, "order": _tuple_order(gen), "components": comps})
    return {
        "schema": REPORT_SCHEMA,
        "command": "compute",
        "scenario": dump_scenario(s),
        "group_order": s.n,
        "invariant_factors": list(result.invariant_factors),
        "order": result.order,
        "structure": _structure(result.invariant_factors),
        "numerator_order": result.numerator_order,
        "denominator_order": result.denominator_order,
        "generators": generators,
        "symbols": list(result.symbols),
        "normalization_log": list(result.normalization_log),
    }


def _tuple_order(gen) -> int:
    return lcm(1, *(chi.order for chi in gen))


def normalize_report(original: Scenario, normalized: Scenario, log) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": "normalize",
        "group_order": original.n,
        "m_before": original.m,
        "m_after": normalized.m,
        "input": dump_scenario(original),
        "scenario": dump_scenario(normalized),
        "normalization_log": list(log),
    }


def compare_report(scenario: Scenario, pipeline, oracle) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": "compare",
        "scenario": dump_scenario(scenario),
        "pipeline": list(pipeline),
        "oracle": list(oracle),
        "status": "MATCH" if tuple(pipeline) == tuple(oracle) else "MISMATCH",
    }


def check_report(scenario: Scenario, checks: list[dict]) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": "check",
        "scenario": dump_scenario(scenario),
        "checks": checks,
        "status": "PASS" if all(c["passed"] for c in checks) else "FAIL",
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _scenario_lines(doc: dict, indent: str = "  ") -> list[str]:
    lines = [f"{indent}group: {json.dumps(doc['group'], ensure_ascii=False)}"]
    for f in doc["factors"]:
        lines.append(
            f"{indent}{f['label']}: subgroup={json.dumps(f['subgroup'], ensure_ascii=False)} "
            f"degree={f['degree']} l={f['l']} multiplicity={f['multiplicity']}"
        )
    if not doc["factors"]:
        lines.append(f"{indent}(no factors)")
    if "leading_coefficient" in doc:
        lines.append(f"{indent}leading coefficient: {doc['leading_coefficient']}")
    lines.append(f"{indent}options: {json.dumps(doc['options'])}")
    return lines


def _value(v: Any) -> str:
    if isinstance(v, list):
        return "trivial" if not v else json.dumps(v)
    return str(v)


def render_human(report: dict) -> str:
    lines = [f"[{report['command']}]"]
    for key, value in report.items():
        if key in ("command", "schema"):
            continue
        if key in ("scenario", "input"):
            lines.append(f"{key}:")
            lines.extend(_scenario_lines(value))
        elif key == "generators":
            lines.append("generators:" if value else "generators: none")
            for gen in value:
                lines.append(f"  #{gen['index']} (order {gen['order']})")
                for c in gen["components"]:
                    vals = ", ".join(f"{g}: {v}" for g, v in c["values"].items())
                    lines.append(f"    {c['factor']}: coords={c['coords']}  [{vals}]")
                    if c["witness"] is not None:
                        wv = ", ".join(f"{g}: {v}" for g, v in c["witness"]["values"].items())
                        lines.append(f"      restriction of χ = {c['witness']['coords']} [{wv}]")
        elif key in ("symbols", "normalization_log"):
            lines.append(f"{key}:" if value else f"{key}: none")
            lines.extend(f"  {item}" for item in value)
        elif key == "checks":
            lines.append("checks:")
            for c in value:
                lines.append(f"  {'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}")
        elif key == "invariant_factors":
            lines.append(f"invariant factors: {_value(value)}")
        elif key in ("pipeline", "oracle"):
            lines.append(f"{key}: {_value(value)}")
        elif key == "timing":
            lines.append(f"timing: {value['seconds']:.6f} s")
        else:
            lines.append(f"{key.replace('_', ' ')}: {_value(value)}")
    return "\n".join(lines) + "\n"
