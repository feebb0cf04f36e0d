"""Write the e_i sweep scenarios of the golden corpus.

Expected values come from the brute-force oracle; a file is only written
when the structured pipeline agrees with it.

    python tools/make_golden_sweeps.py
"""
import json
from pathlib import Path

from normbrauer import (
    compute_vertical_brauer,
    oracle_vertical_brauer,
    parse_scenario,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "normbrauer" / "golden"


def cyclic_sweep(n, e):
    p = min(q for q in range(2, n + 1) if n % q == 0)
    return {
        "group": {"kind": "cyclic", "n": n},
        "factors": [
            {"label": "P_1", "subgroup": "whole", "degree": 1, "multiplicity": e},
            {"label": "P_2", "subgroup": {"generators": [p % n]}, "degree": p, "multiplicity": 1},
            {"label": "P_3", "subgroup": "whole", "degree": 2, "multiplicity": e},
        ],
    }


def dihedral_sweep(n, e):
    return {
        "group": {"kind": "dihedral", "n": n},
        "factors": [
            {"label": "P_1", "subgroup": {"generators": ["r"]}, "degree": 2, "multiplicity": e},
            {"label": "P_2", "subgroup": {"generators": ["s"]}, "degree": n, "multiplicity": 1},
            {"label": "P_3", "subgroup": "whole", "degree": 1, "multiplicity": e},
        ],
    }


def write(name, doc):
    doc = {"schema": 1, "name": name, **doc}
    s = parse_scenario(doc)
    expected = oracle_vertical_brauer(s)
    got = compute_vertical_brauer(s).invariant_factors
    if got != expected:
        raise SystemExit(f"{name}: pipeline {got} != oracle {expected}")
    doc["expected"] = {"invariant_factors": list(expected)}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    print(f"{name}: {list(expected)}")


def main():
    for n in (2, 3, 4, 6, 8, 9):
        for e in range(1, n):
            write(f"sweep_cyclic{n}_e{e}", cyclic_sweep(n, e))
    for n in (3, 4, 5, 6):
        for e in range(1, 2 * n):
            write(f"sweep_dihedral{n}_e{e}", dihedral_sweep(n, e))


if __name__ == "__main__":
    main()
