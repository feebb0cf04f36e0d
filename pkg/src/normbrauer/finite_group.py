"""Finite groups given by explicit multiplication tables.

Elements are the integers ``0 .. n-1`` with ``0`` the identity, and
``table[i][j]`` is the index of the product ``i * j``.  Subgroups are sorted
member tuples.  Constructors for the usual small families are provided, along
with cosets, double cosets, the abelianization and the transfer map.
"""
from __future__ import annotations

import itertools
import random
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Iterable, Sequence

from .abelian import FinAbGroup, IntMatrix, finab_from_relations
from .exceptions import GroupTableError, InvariantViolation

__all__ = [
    "EXHAUSTIVE_ASSOCIATIVITY_BOUND",
    "FiniteGroup",
    "Subgroup",
    "CosetPartition",
    "AbelianizationMap",
    "from_table",
    "from_permutations",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "direct_product",
    "make_group",
    "builtin_groups",
    "parse_permutation",
    "element_order",
    "generated_subgroup",
    "whole_group",
    "trivial_subgroup",
    "all_subgroups",
    "left_cosets",
    "double_cosets",
    "derived_subgroup",
    "abelianization",
    "torsion_generated",
    "transfer",
    "conjugate_subgroup",
]

EXHAUSTIVE_ASSOCIATIVITY_BOUND = 128


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated Cayley table.

    Build instances through the constructor functions (:func:`from_table`,
    :func:`cyclic`, ...) rather than directly; they run the axiom checks.
    ``description`` records how the group was made so scenario files can be
    written back out, and ``permutations`` holds a faithful permutation
    representation when one is known.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    name: str = ""
    description: Any = field(default=None, repr=False)
    permutations: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __iter__(self):
        return iter(range(len(self.table)))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or (self.table == other.table and self.labels == other.labels)

    @cached_property
    def _hash(self):
        return hash((self.table, self.labels))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 0
        while k:
            if k & 1:
                result = self.table[result][a]
            a = self.table[a][a]
            k >>= 1
        return result

    def product(self, elements: Iterable[int]) -> int:
        result = 0
        for g in elements:
            result = self.table[result][g]
        return result

    def conjugate(self, x: int, h: int) -> int:
        """``x h x^-1``."""
        return self.table[self.table[x][h]][self.inv(x)]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self.name or 'group'}") from None

    def check_element(self, g: int) -> int:
        if not isinstance(g, int) or not 0 <= g < self.order:
            raise IndexError(f"element index {g!r} out of range for group of order {self.order}")
        return g


def _validate_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n == 0:
        raise GroupTableError("a group needs at least one element")
    full = set(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {i} has length {len(row)}, expected {n}")
        if set(row) != full:
            raise GroupTableError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupTableError(f"column {j} is not a permutation of 0..{n - 1}")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise GroupTableError(f"element 0 is not a two-sided identity (fails at {i})")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_BOUND:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(10 * n * n))
    for i, j, k in triples:
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise GroupTableError(f"associativity fails for the triple ({i}, {j}, {k})")


def from_table(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "",
    description: Any = None,
    *,
    check: bool = True,
    permutations=None,
) -> FiniteGroup:
    """Build a group from an explicit Cayley table with identity at index 0."""
    table = tuple(tuple(int(x) for x in row) for row in table)
    if check:
        _validate_table(table)
    if labels is None:
        labels = ["e"] + [f"g{i}" for i in range(1, len(table))]
    if len(labels) != len(table):
        raise GroupTableError(f"{len(labels)} labels given for {len(table)} elements")
    if description is None:
        description = {"kind": "table", "table": [list(r) for r in table], "labels": list(labels)}
    return FiniteGroup(table, tuple(labels), name, description, permutations)


def _cycle_string(perm: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(cycles) or "e"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(word: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation on points ``1..degree``, e.g. ``"(1 2)(3 4)"``.

    A product of cycles is composed right to left, as functions: in
    ``"(1 2)(2 3)"`` the cycle ``(2 3)`` acts first.  ``"e"`` and ``"()"``
    denote the identity.
    """
    text = word.strip()
    perm = list(range(degree))
    if text in ("e", "()", ""):
        return tuple(perm)
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"malformed permutation word {word!r}")
    for body in reversed(_CYCLE.findall(text)):
        pts = [int(p) - 1 for p in re.split(r"[\s,]+", body.strip()) if p]
        if len(set(pts)) != len(pts) or any(not 0 <= p < degree for p in pts):
            raise ValueError(f"bad cycle ({body}) on {degree} points")
        cyc = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
        perm = [cyc.get(x, x) for x in perm]
    return tuple(perm)


def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    # (a∘b)(x) = a(b(x))
    return tuple(a[x] for x in b)


def _group_from_perm_list(perms, name, description) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_compose(a, b)] for b in perms] for a in perms]
    return from_table(
        table, [_cycle_string(p) for p in perms], name, description,
        check=False, permutations=tuple(perms),
    )


def from_permutations(generators: Sequence[Sequence[int] | str], degree: int, name: str = "") -> FiniteGroup:
    """Group generated by permutations of ``degree`` points.

    Generators may be image tuples (0-based) or cycle-notation words.
    Elements are numbered in breadth-first order from the identity.
    """
    gens = [parse_permutation(g, degree) if isinstance(g, str) else tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupTableError(f"{g} is not a permutation of {degree} points")
    ident = tuple(range(degree))
    perms = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = _compose(p, g)
            if q not in seen:
                seen.add(q)
                perms.append(q)
                queue.append(q)
    desc = {"kind": "permutations", "degree": degree, "generators": [_cycle_string(g) for g in gens]}
    return _group_from_perm_list(perms, name or f"<{', '.join(_cycle_string(g) for g in gens)}>", desc)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupTableError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    return from_table(table, labels, f"C{n}", {"kind": "cyclic", "n": n}, check=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n``; element ``j*n + i`` is ``r^i s^j``."""
    if n < 1:
        raise GroupTableError("dihedral parameter must be positive")

    def mul(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        return ((i + (-k if j else k)) % n) + n * ((j + l) % 2)

    size = 2 * n
    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    labels = []
    for a in range(size):
        i, j = a % n, a // n
        rot = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        labels.append(("s" + rot) if j else (rot or "e"))
    return from_table(table, labels, f"D{n}", {"kind": "dihedral", "n": n}, check=False)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on ``n <= 5`` points, elements in lexicographic order."""
    if not 1 <= n <= 5:
        raise GroupTableError("symmetric groups are supported for 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    return _group_from_perm_list(perms, f"S{n}", {"kind": "symmetric", "n": n})


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupTableError("alternating groups are supported for 1 <= n <= 5")

    def even(p):
        return sum(1 for i in range(n) for j in range(i) if p[j] > p[i]) % 2 == 0

    perms = [p for p in itertools.permutations(range(n)) if even(p)]
    return _group_from_perm_list(perms, f"A{n}", {"kind": "alternating", "n": n})


def quaternion8() -> FiniteGroup:
    """Quaternion group ``{±1, ±i, ±j, ±k}``."""
    units = ["1", "i", "j", "k"]
    # unit products: (sign, unit) for basis quaternions
    prod = {
        ("1", u): (1, u) for u in units
    } | {(u, "1"): (1, u) for u in units} | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    index = {e: k for k, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = prod[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return from_table(table, labels, "Q8", {"kind": "quaternion"}, check=False)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; element ``(a, b, ...)`` is numbered lexicographically."""
    if not groups:
        return cyclic(1)
    elems = list(itertools.product(*(range(G.order) for G in groups)))
    index = {e: k for k, e in enumerate(elems)}
    table = [
        [index[tuple(G.table[x][y] for G, x, y in zip(groups, a, b))] for b in elems]
        for a in elems
    ]
    labels = ["(" + ",".join(G.labels[x] for G, x in zip(groups, a)) + ")" for a in elems]
    desc = {"kind": "product", "factors": [G.description for G in groups]}
    name = " x ".join(G.name or f"G{G.order}" for G in groups)
    return from_table(table, labels, name, desc, check=False)


def make_group(spec: dict) -> FiniteGroup:
    """Build a group from a description mapping such as ``{"kind": "cyclic", "n": 4}``.

    Supported kinds: cyclic, dihedral, symmetric, alternating, quaternion,
    product (``factors``: list of descriptions), table (``table`` and
    optional ``labels``), permutations (``degree`` and ``generators``).
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError("group description must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind in ("cyclic", "dihedral", "symmetric", "alternating"):
        n = spec.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"group kind {kind!r} needs an integer parameter 'n'")
        return {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric,
                "alternating": alternating}[kind](n)
    if kind in ("quaternion", "quaternion8", "Q8"):
        return quaternion8()
    if kind == "product":
        return direct_product(*(make_group(f) for f in spec.get("factors", [])))
    if kind == "table":
        return from_table(spec["table"], spec.get("labels"), spec.get("name", ""))
    if kind == "permutations":
        return from_permutations(spec["generators"], int(spec["degree"]), spec.get("name", ""))
    raise ValueError(f"unknown group kind {kind!r}")


def builtin_groups(max_order: int = 24) -> list[FiniteGroup]:
    """The catalogue of small groups used by the property tests."""
    C, D, S = cyclic, dihedral, symmetric
    candidates = (
        [C(n) for n in range(1, 25)]
        + [D(n) for n in range(2, 13)]
        + [S(n) for n in range(3, 5)]
        + [alternating(4), quaternion8()]
        + [
            direct_product(C(2), C(2), C(2)),
            direct_product(C(2), C(4)),
            direct_product(C(3), C(3)),
            direct_product(C(2), C(6)),
            direct_product(C(4), C(4)),
            direct_product(C(2), C(8)),
            direct_product(C(2), C(2), C(4)),
            direct_product(C(2), S(3)),
            direct_product(C(3), S(3)),
            direct_product(C(4), S(3)),
            direct_product(C(2), quaternion8()),
            direct_product(C(3), quaternion8()),
            direct_product(C(2), D(4)),
            direct_product(C(2), alternating(4)),
            direct_product(C(2), C(2), C(2), C(3)),
        ]
    )
    return [G for G in candidates if G.order <= max_order]


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``parent`` stored as a sorted tuple of member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    @classmethod
    def from_members(cls, parent: FiniteGroup, members: Iterable[int]) -> Subgroup:
        """Validate closure and return the subgroup."""
        ms = tuple(sorted(set(members)))
        mset = set(ms)
        if 0 not in mset:
            raise ValueError("subgroup must contain the identity")
        for a in ms:
            parent.check_element(a)
            if parent.inv(a) not in mset or any(parent.mul(a, b) not in mset for b in ms):
                raise ValueError(f"member set is not closed (fails at element {a})")
        return cls(parent, ms)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def __contains__(self, g) -> bool:
        return g in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def local_index(self) -> dict[int, int]:
        """Parent element -> index in :meth:`as_group`."""
        return {g: k for k, g in enumerate(self.members)}

    @cached_property
    def as_group(self) -> FiniteGroup:
        """This subgroup as a standalone group; local index k is ``members[k]``."""
        loc = self.local_index
        t = self.parent.table
        table = [[loc[t[a][b]] for b in self.members] for a in self.members]
        labels = [self.parent.labels[g] for g in self.members]
        perms = None
        if self.parent.permutations is not None:
            perms = tuple(self.parent.permutations[g] for g in self.members)
        return from_table(table, labels, f"subgroup of order {self.order}", check=False, permutations=perms)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conjugate(x, h) in self for x in G for h in self.members)

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by increasing index."""
        gens: list[int] = []
        current = {0}
        for g in self.members:
            if g not in current:
                gens.append(g)
                current = set(generated_subgroup(self.parent, gens).members)
        return gens


@dataclass(frozen=True)
class CosetPartition:
    """Partition of a group into (double) cosets.

    ``representatives[k]`` is the least element of ``blocks[k]``.
    """

    parent: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    blocks: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def __len__(self):
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        where = [0] * self.parent.order
        for k, block in enumerate(self.blocks):
            for g in block:
                where[g] = k
        return tuple(where)


@dataclass(frozen=True)
class AbelianizationMap:
    """The projection ``G -> G^ab`` onto a canonical finite abelian group.

    ``generator_lifts[j]`` is an element of ``G`` mapping to the ``j``-th
    canonical generator of ``target``.
    """

    source: FiniteGroup
    target: FinAbGroup
    image_of: tuple[tuple[int, ...], ...]
    generator_lifts: tuple[int, ...]

    def __call__(self, g: int) -> tuple[int, ...]:
        return self.image_of[g]


def element_order(G: FiniteGroup, g: int) -> int:
    G.check_element(g)
    t, x = 1, g
    while x != 0:
        x = G.table[x][g]
        t += 1
    return t


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = [G.check_element(g) for g in gens]
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.table[a][g]
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


@lru_cache(maxsize=256)
def all_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    """Every subgroup of ``G``, sorted by order then members.

    Each subgroup is a join of cyclic subgroups, so joins with cyclic
    subgroups are iterated until nothing new appears.
    """
    cyclics = {generated_subgroup(G, [g]).members for g in G}
    found = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new = set()
        for A in frontier:
            for c in cyclics:
                if set(c) <= set(A):
                    continue
                J = generated_subgroup(G, set(A) | set(c)).members
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    return tuple(Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m)))


@lru_cache(maxsize=1024)
def left_cosets(G: FiniteGroup, H: Subgroup) -> CosetPartition:
    """Left cosets ``gH`` in order of their least element."""
    assigned = [False] * G.order
    blocks, reps = [], []
    for g in G:
        if assigned[g]:
            continue
        block = tuple(sorted(G.table[g][h] for h in H.members))
        for x in block:
            assigned[x] = True
        blocks.append(block)
        reps.append(g)
    return CosetPartition(G, (H,), tuple(blocks), tuple(reps))


def double_cosets(G: FiniteGroup, H: Subgroup, N: Subgroup) -> CosetPartition:
    """Double cosets ``HgN`` in order of their least element."""
    assigned = [False] * G.order
    blocks, reps = [], []
    t = G.table
    for g in G:
        if assigned[g]:
            continue
        block = tuple(sorted({t[t[h][g]][k] for h in H.members for k in N.members}))
        for x in block:
            assigned[x] = True
        blocks.append(block)
        reps.append(g)
    return CosetPartition(G, (H, N), tuple(blocks), tuple(reps))


@lru_cache(maxsize=256)
def derived_subgroup(G: FiniteGroup) -> Subgroup:
    commutators = {G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))) for x in G for y in G}
    return generated_subgroup(G, sorted(commutators))


@lru_cache(maxsize=256)
def abelianization(G: FiniteGroup) -> AbelianizationMap:
    """Projection onto ``G/[G,G]`` in invariant-factor coordinates.

    The quotient is explored breadth-first along a greedy generating set;
    every non-tree edge of that Cayley graph gives a relation, and these
    relations present the quotient.
    """
    D = derived_subgroup(G)
    cosets = left_cosets(G, D)
    where = cosets.block_of

    gens: list[int] = []
    span = set(D.members)
    for g in G:
        if g not in span:
            gens.append(g)
            span = set(generated_subgroup(G, gens + list(D.members)).members)
    r = len(gens)

    vec: dict[int, tuple[int, ...]] = {where[0]: (0,) * r}
    rep_of = {where[0]: 0}
    queue = deque([where[0]])
    relations = set()
    while queue:
        c = queue.popleft()
        v = vec[c]
        for j, g in enumerate(gens):
            w = tuple(a + (i == j) for i, a in enumerate(v))
            c2 = where[G.mul(rep_of[c], g)]
            if c2 not in vec:
                vec[c2] = w
                rep_of[c2] = G.mul(rep_of[c], g)
                queue.append(c2)
            else:
                rel = tuple(a - b for a, b in zip(w, vec[c2]))
                if any(rel):
                    relations.add(rel)
    if len(vec) != len(cosets):
        raise InvariantViolation("abelianization generators do not generate the quotient")

    rel_matrix = IntMatrix.from_columns(sorted(relations), r)
    target, change = finab_from_relations(r, rel_matrix)
    if target.free_rank:
        raise InvariantViolation("abelianization of a finite group came out infinite")
    image_of = tuple(change.to_canonical(vec[where[g]]) for g in G)

    lifts = []
    for j in range(target.rank):
        x = change.generator(j)
        lifts.append(G.product(G.power(g, e) for g, e in zip(gens, x)))
    amap = AbelianizationMap(G, target, image_of, tuple(lifts))
    for j, g in enumerate(amap.generator_lifts):
        if amap(g) != tuple(int(i == j) for i in range(target.rank)):
            raise InvariantViolation("generator lift does not map to its canonical generator")
    return amap


def torsion_generated(H: Subgroup, e: int) -> Subgroup:
    """Subgroup of ``H`` generated by the elements ``h`` with ``h^e = 1``."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    G = H.parent
    return generated_subgroup(G, [h for h in H.members if G.power(h, e) == 0])


def transfer(
    G: FiniteGroup, H: Subgroup, g: int, representatives: Sequence[int] | None = None
) -> tuple[int, ...]:
    """Transfer ``Ver(g)`` as an element of ``H^ab`` (coordinates of ``abelianization(H.as_group)``).

    With left-coset representatives ``t_j`` write ``g t_j = t_{σ(j)} h_j``;
    the transfer is the image of ``∏ h_j`` in ``H^ab``.  By default the least
    element of each coset is used; any other complete set of representatives
    may be passed and yields the same value.
    """
    cosets = left_cosets(G, H)
    if representatives is None:
        reps = list(cosets.representatives)
    else:
        reps = [None] * len(cosets)
        for t in representatives:
            k = cosets.block_of[G.check_element(t)]
            if reps[k] is not None:
                raise ValueError(f"{reps[k]} and {t} represent the same coset")
            reps[k] = t
        if any(t is None for t in reps):
            raise ValueError("representatives must contain one element of every left coset")
    amap = abelianization(H.as_group)
    loc = H.local_index
    target = amap.target
    total = [0] * target.rank
    for t in reps:
        gt = G.mul(g, t)
        t2 = reps[cosets.block_of[gt]]
        h = G.mul(G.inv(t2), gt)
        for i, a in enumerate(amap(loc[h])):
            total[i] += a
    return target.reduce(total)


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, x: int) -> Subgroup:
    """``x H x^-1``."""
    return Subgroup(G, tuple(sorted(G.conjugate(x, h) for h in H.members)))
