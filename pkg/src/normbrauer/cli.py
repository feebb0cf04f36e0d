"""Command line interface: ``normbrauer {compute,check,compare,normalize}``.

Exit statuses: 0 success, 3 parse error, 4 validation error, 5 capacity
error, 6 oracle mismatch, 7 failed check, 70 internal invariant violation.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import replace

from .brauer import (
    Scenario,
    _compute_normalized,
    compute_vertical_brauer,
    normalize_with_log,
)
from .characters import character_group, corestrict, restrict
from .exceptions import (
    CapacityError,
    InvariantViolation,
    NormalizationError,
    ScenarioError,
    ScenarioParseError,
)
from .finite_group import conjugate_subgroup
from .oracle import DEFAULT_BOUND, oracle_vertical_brauer
from .report import (
    check_report,
    compare_report,
    compute_report,
    normalize_report,
    render_human,
    render_json,
)
from .scenario_file import read_scenario_file

__all__ = ["EXIT", "run", "run_checks", "main"]

EXIT = {
    "ok": 0,
    "parse": 3,
    "validation": 4,
    "capacity": 5,
    "mismatch": 6,
    "check_failed": 7,
    "internal": 70,
}

COMMANDS = ("compute", "check", "compare", "normalize")


def run_checks(s: Scenario, seed: int = 0) -> list[dict]:
    """Invariant checks on one scenario; each entry has name, passed and detail."""
    rng = random.Random(seed)
    checks = []
    normalized, _ = normalize_with_log(s) if s.auto_normalize else (s, [])

    try:
        base = _compute_normalized(normalized)
        checks.append({
            "name": "containment",
            "passed": True,
            "detail": f"D (order {base.denominator_order}) lies in N (order {base.numerator_order})",
        })
    except InvariantViolation as exc:
        checks.append({"name": "containment", "passed": False, "detail": str(exc)})
        return checks

    X = character_group(s.group)
    for f in normalized.factors:
        H = f.subgroup
        bad = [psi.coords for psi in X.basis() if corestrict(restrict(psi, H), H) != H.index * psi]
        checks.append({
            "name": f"cor_res[{f.label}]",
            "passed": not bad,
            "detail": f"Cor∘Res = {H.index}·id" if not bad else f"fails on basis characters {bad}",
        })

    conj = []
    for f in normalized.factors:
        x = rng.randrange(s.n)
        conj.append(replace(f, subgroup=conjugate_subgroup(s.group, f.subgroup, x)))
    moved = _compute_normalized(replace(normalized, factors=tuple(conj)))
    checks.append({
        "name": "conjugation",
        "passed": moved.invariant_factors == base.invariant_factors,
        "detail": f"{list(moved.invariant_factors)} after conjugating every G_i (seed {seed})",
    })

    order = list(normalized.factors)
    rng.shuffle(order)
    permuted = _compute_normalized(replace(normalized, factors=tuple(order)))
    checks.append({
        "name": "permutation",
        "passed": permuted.invariant_factors == base.invariant_factors,
        "detail": f"{list(permuted.invariant_factors)} after shuffling the factors",
    })
    return checks


def run(command: str, scenario: Scenario, *, bound: int = DEFAULT_BOUND, seed: int = 0,
        timing: bool = False) -> tuple[dict, int]:
    """Execute one subcommand; returns the report and the exit status."""
    start = time.perf_counter()
    status = EXIT["ok"]
    if command == "compute":
        report = compute_report(compute_vertical_brauer(scenario))
    elif command == "normalize":
        if scenario.auto_normalize:
            normalized, log = normalize_with_log(scenario)
        elif scenario.is_normalized():
            normalized, log = scenario, []
        else:
            raise NormalizationError("scenario is not normalized and normalization is disabled")
        report = normalize_report(scenario, normalized, log)
    elif command == "compare":
        pipeline = compute_vertical_brauer(scenario)
        oracle = oracle_vertical_brauer(scenario, bound=bound)
        report = compare_report(pipeline.scenario, pipeline.invariant_factors, oracle)
        if report["status"] != "MATCH":
            status = EXIT["mismatch"]
    elif command == "check":
        if not scenario.auto_normalize and not scenario.is_normalized():
            raise NormalizationError("scenario is not normalized and normalization is disabled")
        report = check_report(scenario, run_checks(scenario, seed))
        if report["status"] != "PASS":
            status = EXIT["check_failed"]
    else:
        raise ValueError(f"unknown command {command!r}")
    if timing:
        report["timing"] = {"seconds": time.perf_counter() - start}
    return report, status


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="normbrauer",
        description="Vertical Brauer group of a Galois normic bundle from finite splitting data.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="scenario JSON file, or - for stdin")
    p.add_argument("--format", choices=("human", "json"), default=None)
    p.add_argument("--bound", type=int, default=None, help="oracle enumeration bound")
    p.add_argument("--no-normalize", action="store_true",
                   help="reject non-normalized input instead of normalizing it")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    return p


def main(argv=None) -> int:
    args = _parser().parse_intermixed_args(argv)
    err = sys.stderr
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=err)
        return EXIT["parse"]
    try:
        doc = read_scenario_file(text)
    except ScenarioParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT["parse"]
    except ScenarioError as exc:
        print(f"validation error: {exc}", file=err)
        return EXIT["validation"]

    scenario = doc.scenario
    if args.no_normalize:
        scenario = replace(scenario, auto_normalize=False)
    fmt = args.format or doc.options.get("format", "human")
    bound = args.bound if args.bound is not None else doc.options.get("bound", DEFAULT_BOUND)
    try:
        report, status = run(args.command, scenario, bound=bound, seed=args.seed, timing=args.timing)
    except ScenarioError as exc:
        print(f"validation error: {exc}", file=err)
        return EXIT["validation"]
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=err)
        return EXIT["capacity"]
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=err)
        return EXIT["internal"]
    sys.stdout.write(render_json(report) if fmt == "json" else render_human(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
