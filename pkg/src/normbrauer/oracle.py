"""Brute-force recomputation of the vertical Brauer group.

Nothing here calls into :mod:`abelian`, :mod:`characters`, :mod:`brauer` or
the algorithms of :mod:`finite_group`; only the raw multiplication tables
and subgroup member lists are read.  Characters are found by searching value
assignments, corestriction uses its own coset representatives (the largest
element of each coset), and the quotient's structure is read off by counting
elements killed by prime powers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exceptions import CapacityError, InvariantViolation

__all__ = [
    "DEFAULT_BOUND",
    "ExplicitCharacter",
    "oracle_characters",
    "oracle_corestrict",
    "oracle_vertical_brauer",
    "invariant_factors_from_counts",
]

DEFAULT_BOUND = 10**6


@dataclass(frozen=True)
class ExplicitCharacter:
    """A character given by its full value table (entries in ``[0, 1)``)."""

    group: object
    values: tuple[Fraction, ...]

    def __post_init__(self):
        table = self.group.table
        v = self.values
        if v[0] != 0:
            raise InvariantViolation("character is nonzero at the identity")
        n = len(table)
        for x in range(n):
            for y in range(n):
                if v[table[x][y]] != (v[x] + v[y]) % 1:
                    raise InvariantViolation(f"not a homomorphism at ({x}, {y})")


def _closure(table, gens) -> set[int]:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _order(table, g) -> int:
    k, x = 1, g
    while x != 0:
        x = table[x][g]
        k += 1
    return k


def _characters_on(table, members: Sequence[int], bound: int) -> list[dict[int, Fraction]]:
    """All homomorphisms from the subgroup ``members`` to Q/Z, as dicts."""
    gens: list[int] = []
    span = {0}
    for h in members:
        if h not in span:
            gens.append(h)
            span = _closure(table, gens)
    exp = math.lcm(1, *(_order(table, h) for h in members))
    if exp ** len(gens) > bound:
        raise CapacityError(
            f"character search needs {exp ** len(gens)} assignments, above bound {bound}"
        )
    found = []
    for assignment in itertools.product(range(exp), repeat=len(gens)):
        gen_vals = [Fraction(a, exp) for a in assignment]
        vals = {0: Fraction(0)}
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for g, a in zip(gens, gen_vals):
                y = table[x][g]
                v = (vals[x] + a) % 1
                if y not in vals:
                    vals[y] = v
                    stack.append(y)
                elif vals[y] != v:
                    ok = False
                    break
        if ok:
            found.append(vals)
    return found


def oracle_characters(H, bound: int = DEFAULT_BOUND) -> list[ExplicitCharacter]:
    """Every character of the finite group ``H`` by exhaustive search."""
    n = len(H.table)
    if n > bound:
        raise CapacityError(f"group of order {n} above bound {bound}")
    chars = _characters_on(H.table, range(n), bound)
    return [ExplicitCharacter(H, tuple(c[g] for g in range(n))) for c in chars]


def _largest_rep_cosets(table, members: Sequence[int]) -> tuple[list[int], dict[int, int]]:
    """Left cosets ``gH`` represented by their largest element."""
    n = len(table)
    rep_of: dict[int, int] = {}
    reps = []
    for g in range(n - 1, -1, -1):
        if g in rep_of:
            continue
        reps.append(g)
        for h in members:
            rep_of[table[g][h]] = g
    return reps, rep_of


def _inverse(table, g) -> int:
    for x, y in enumerate(table[g]):
        if y == 0:
            return x
    raise InvariantViolation("element without inverse")


def _corestrict_values(table, members, chi: dict[int, Fraction]) -> tuple[Fraction, ...]:
    reps, rep_of = _largest_rep_cosets(table, members)
    out = []
    for g in range(len(table)):
        total = Fraction(0)
        for t in reps:
            gt = table[g][t]
            h = table[_inverse(table, rep_of[gt])][gt]
            total += chi[h]
        out.append(total % 1)
    return tuple(out)


def oracle_corestrict(G, H, chi: ExplicitCharacter) -> ExplicitCharacter:
    """Corestriction of ``chi`` (indexed like ``H.members``) to ``G``."""
    members = tuple(H.members)
    if len(chi.values) != len(members):
        raise ValueError("character values do not match the subgroup")
    on_parent = dict(zip(members, chi.values))
    return ExplicitCharacter(G, _corestrict_values(G.table, members, on_parent))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def invariant_factors_from_counts(order: int, killed: Callable[[int], int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group of the given order.

    ``killed(m)`` must return the number of elements ``x`` with ``m x = 0``.
    For each prime ``p``, the successive ratios ``killed(p^k)/killed(p^(k-1))``
    are ``p^r_k`` where ``r_k`` counts the cyclic ``p``-parts of exponent at
    least ``k``.
    """
    elementary: dict[int, list[int]] = {}
    for p in _prime_factors(order):
        full = 1
        while order % (full * p) == 0:
            full *= p
        ranks: list[int] = []
        prev, pk = 1, 1
        while prev < full:
            pk *= p
            cur = killed(pk)
            ratio, rem = divmod(cur, prev)
            r = 0
            while ratio > 1 and ratio % p == 0:
                ratio //= p
                r += 1
            if rem or ratio != 1 or r == 0:
                raise InvariantViolation("element counts are not those of an abelian group")
            ranks.append(r)
            prev = cur
        # part j has exponent #{k : r_k > j}
        exps = [sum(1 for r in ranks if r > j) for j in range(ranks[0])] if ranks else []
        elementary[p] = sorted((p ** e for e in exps), reverse=True)
    width = max((len(v) for v in elementary.values()), default=0)
    factors = []
    for j in range(width):
        factors.append(math.prod(v[j] for v in elementary.values() if j < len(v)))
    return tuple(sorted(factors))


def _normalized_factors(s) -> list[tuple[tuple[int, ...], int, int]]:
    """(members, degree, multiplicity) after reduction mod n and the infinity fix."""
    n = len(s.group.table)
    out = []
    for f in s.factors:
        e = f.multiplicity % n
        if e:
            out.append((tuple(f.subgroup.members), f.degree, e))
    if getattr(s, "auto_normalize", True):
        m = sum(d * e for _, d, e in out)
        if m % n:
            out.append((tuple(range(n)), 1, (-m) % n))
    return out


def oracle_vertical_brauer(s, bound: int = DEFAULT_BOUND) -> tuple[int, ...]:
    """Invariant factors of the quotient, by enumerating every tuple of characters."""
    table = s.group.table
    n = len(table)
    factors = _normalized_factors(s)

    def scaled(values, k):
        # Q/Z values with denominator dividing n, stored as integers mod n
        return tuple(int(v * n * k) % n for v in values)

    G_chars = _characters_on(table, range(n), bound)
    admissible, cor_rows, lookup = [], [], []
    for members, degree, e in factors:
        e_prime = math.gcd(e, n)
        chars = _characters_on(table, members, bound)
        torsion = [h for h in members if e_prime % _order(table, h) == 0]
        adm = [c for c in chars if all(c[h] == 0 for h in torsion)]
        l = degree * len(members) // n
        admissible.append(adm)
        cor_rows.append([scaled(_corestrict_values(table, members, c), l) for c in adm])
        lookup.append({tuple(c[h] for h in members): k for k, c in enumerate(adm)})

    size = math.prod(len(a) for a in admissible)
    if size > bound:
        raise CapacityError(f"{size} character tuples exceed enumeration bound {bound}")

    numerator = []
    for combo in itertools.product(*(range(len(a)) for a in admissible)):
        total = [0] * n
        for i, k in enumerate(combo):
            for g, v in enumerate(cor_rows[i][k]):
                total[g] += v
        if all(t % n == 0 for t in total):
            numerator.append(combo)
    numerator_set = set(numerator)

    denominator = set()
    for chi in G_chars:
        combo = []
        for (members, _, e), look in zip(factors, lookup):
            key = tuple((e * chi[h]) % 1 for h in members)
            if key not in look:
                raise InvariantViolation("e_i Res_i(chi) is not admissible")
            combo.append(look[key])
        denominator.add(tuple(combo))
    if not denominator <= numerator_set:
        raise InvariantViolation("denominator is not contained in the numerator")

    # multiples of a tuple, via value tables
    multiples: list[list[list[int]]] = []
    for (members, _, _), adm, look in zip(factors, admissible, lookup):
        rows = []
        for c in adm:
            rows.append([look[tuple((k * c[h]) % 1 for h in members)] for k in range(n)])
        multiples.append(rows)

    def times(combo, k):
        return tuple(multiples[i][c][k % n] for i, c in enumerate(combo))

    order = len(numerator) // len(denominator)
    if order * len(denominator) != len(numerator):
        raise InvariantViolation("numerator order is not a multiple of the denominator order")

    def killed(k):
        hits = sum(1 for x in numerator if times(x, k) in denominator)
        return hits // len(denominator)

    return invariant_factors_from_counts(order, killed)
