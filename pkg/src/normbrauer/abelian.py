"""Exact integer linear algebra and finite abelian groups.

Everything here works with Python integers, so intermediate blow-up in the
Smith normal form never loses precision.  A finite abelian group is stored as
a direct sum of cyclic groups ``Z/m_1 + ... + Z/m_k`` and its elements are
coordinate tuples reduced to ``0 <= x_j < m_j``.  Groups produced by the
structure routines (:func:`finab_from_relations`, :func:`subgroup_quotient`)
always have moduli forming an invariant-factor chain ``d_1 | d_2 | ...``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .exceptions import CapacityError, ContainmentError, InvariantViolation

__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "IntMatrix",
    "smith_normal_form",
    "FinAbGroup",
    "AbHom",
    "SubgroupPresentation",
    "BasisChange",
    "Quotient",
    "finab_from_relations",
    "hom_kernel",
    "hom_image",
    "subgroup_quotient",
    "enumerate_elements",
    "format_invariant_factors",
]

DEFAULT_ENUMERATION_BOUND = 10**6

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major.

    Dimensions are kept explicitly so that ``3 x 0`` and ``0 x 3`` matrices
    remain distinguishable.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"entries do not match declared shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(a) for a in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        data = tuple(tuple(int(c[i]) for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns(self.entries, self.cols) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ocols) for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, data)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def is_diagonal(self) -> bool:
        return all(a == 0 for i, r in enumerate(self.entries) for j, a in enumerate(r) if i != j)

    def diagonal_entries(self) -> list[int]:
        return [self.entries[k][k] for k in range(min(self.rows, self.cols))]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


class _SmithWork:
    """Mutable state for one Smith normal form run.

    Row operations on ``A`` are mirrored on ``U`` and, inverted, on ``U_inv``;
    column operations likewise on ``V`` and ``V_inv``.
    """

    def __init__(self, m: IntMatrix):
        self.m, self.n = m.rows, m.cols
        self.A = m.tolist()
        self.U = IntMatrix.identity(self.m).tolist()
        self.U_inv = IntMatrix.identity(self.m).tolist()
        self.V = IntMatrix.identity(self.n).tolist()
        self.V_inv = IntMatrix.identity(self.n).tolist()

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.A, self.U):
            M[i], M[j] = M[j], M[i]
        for r in self.U_inv:
            r[i], r[j] = r[j], r[i]

    def add_row(self, dst, src, q):
        # row dst += q * row src
        if q == 0:
            return
        for M in (self.A, self.U):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
        for r in self.U_inv:
            r[src] -= q * r[dst]

    def negate_row(self, i):
        for M in (self.A, self.U):
            M[i] = [-a for a in M[i]]
        for r in self.U_inv:
            r[i] = -r[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.A, self.V):
            for r in M:
                r[i], r[j] = r[j], r[i]
        self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]

    def add_col(self, dst, src, q):
        # column dst += q * column src
        if q == 0:
            return
        for M in (self.A, self.V):
            for r in M:
                r[dst] += q * r[src]
        self.V_inv[src] = [a - q * b for a, b in zip(self.V_inv[src], self.V_inv[dst])]

    def move_to(self, i, j, t):
        self.swap_rows(t, i)
        self.swap_cols(t, j)

    def run(self):
        A = self.A
        for t in range(min(self.m, self.n)):
            pivot = min(
                ((abs(A[i][j]), i, j) for i in range(t, self.m) for j in range(t, self.n) if A[i][j]),
                default=None,
            )
            if pivot is None:
                break
            self.move_to(pivot[1], pivot[2], t)
            while True:
                for i in range(t + 1, self.m):
                    self.add_row(i, t, -(A[i][t] // A[t][t]))
                for j in range(t + 1, self.n):
                    self.add_col(j, t, -(A[t][j] // A[t][t]))
                cross = [(abs(A[i][t]), i, t) for i in range(t + 1, self.m) if A[i][t]]
                cross += [(abs(A[t][j]), t, j) for j in range(t + 1, self.n) if A[t][j]]
                if cross:
                    _, i, j = min(cross)
                    self.move_to(i, j, t)
                    continue
                p = A[t][t]
                bad = next(
                    (i for i in range(t + 1, self.m) for j in range(t + 1, self.n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if A[t][t] < 0:
                self.negate_row(t)

    def result(self):
        def mat(rows, r, c):
            return IntMatrix(r, c, tuple(tuple(x) for x in rows))

        return (
            mat(self.U, self.m, self.m),
            mat(self.A, self.m, self.n),
            mat(self.V, self.n, self.n),
            mat(self.U_inv, self.m, self.m),
            mat(self.V_inv, self.n, self.n),
        )


def _smith_full(M: IntMatrix):
    work = _SmithWork(M)
    work.run()
    return work.result()


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries forming a divisibility chain (zeros last).  The pivot is always
    the entry of smallest absolute value, ties broken by (row, column), so the
    output is reproducible.
    """
    U, D, V, _, _ = _smith_full(M)
    return U, D, V


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum ``Z/m_1 + ... + Z/m_k`` (plus ``free_rank`` copies of Z).

    Canonical groups have ``moduli`` equal to their invariant factors; direct
    sums built with :meth:`direct_sum` keep the summands' moduli so that the
    coordinate blocks stay readable.
    """

    moduli: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 1 for m in self.moduli):
            raise ValueError(f"moduli must be positive, got {self.moduli}")
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative")

    @classmethod
    def cyclic(cls, n: int) -> FinAbGroup:
        return cls((n,)) if n > 1 else cls(())

    @classmethod
    def direct_sum(cls, *groups: FinAbGroup) -> FinAbGroup:
        if any(g.free_rank for g in groups):
            raise ValueError("direct sums are only supported for finite groups")
        return cls(tuple(m for g in groups for m in g.moduli))

    @property
    def rank(self) -> int:
        """Number of torsion coordinates."""
        return len(self.moduli)

    @property
    def order(self) -> int:
        if self.free_rank:
            raise ValueError("group is infinite")
        return math.prod(self.moduli)

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        if all(a > 1 and b % a == 0 for a, b in zip(self.moduli, self.moduli[1:])) and all(
            m > 1 for m in self.moduli
        ):
            return self.moduli
        _, D, _ = smith_normal_form(IntMatrix.diagonal(self.moduli))
        return tuple(d for d in D.diagonal_entries() if d > 1)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli) if self.moduli else 1

    def is_trivial(self) -> bool:
        return not self.free_rank and all(m == 1 for m in self.moduli)

    def zero(self) -> Vector:
        return (0,) * (self.rank + self.free_rank)

    def reduce(self, x: Sequence[int]) -> Vector:
        if len(x) != self.rank + self.free_rank:
            raise ValueError(f"element {tuple(x)} has wrong length for {self}")
        torsion = tuple(int(a) % m for a, m in zip(x, self.moduli))
        return torsion + tuple(int(a) for a in x[self.rank:])

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return self.reduce([a + b for a, b in zip(x, y)])

    def neg(self, x: Sequence[int]) -> Vector:
        return self.reduce([-a for a in x])

    def scale(self, k: int, x: Sequence[int]) -> Vector:
        return self.reduce([k * a for a in x])

    def element_order(self, x: Sequence[int]) -> int:
        if self.free_rank and any(x[self.rank:]):
            raise ValueError("element of infinite order")
        return math.lcm(1, *(m // math.gcd(m, a) for a, m in zip(x, self.moduli)))

    def basis(self) -> list[Vector]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def __iter__(self) -> Iterator[Vector]:
        return itertools.product(*(range(m) for m in self.moduli))

    def __str__(self):
        return format_invariant_factors(self.invariant_factors, self.free_rank)


def format_invariant_factors(factors: Sequence[int], free_rank: int = 0) -> str:
    """Human-readable name such as ``Z/2 + Z/4``; the trivial group is ``0``."""
    parts = ["Z"] * free_rank + [f"Z/{d}" for d in factors]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AbHom:
    """Homomorphism between finite abelian groups given by an integer matrix.

    Column ``j`` of ``matrix`` is the image of the ``j``-th source generator.
    """

    source: FinAbGroup
    target: FinAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not fit "
                f"{self.source.rank} -> {self.target.rank} coordinates"
            )
        for j, d in enumerate(self.source.moduli):
            col = self.matrix.column(j)
            if any(d * a % m for a, m in zip(col, self.target.moduli)):
                raise ValueError(
                    f"not well defined: generator {j} has order {d} but "
                    f"{d} * {col} is nonzero in the target"
                )

    @classmethod
    def from_images(cls, source: FinAbGroup, target: FinAbGroup, images: Sequence[Sequence[int]]) -> AbHom:
        images = [target.reduce(v) for v in images]
        return cls(source, target, IntMatrix.from_columns(images, target.rank))

    def __call__(self, x: Sequence[int]) -> Vector:
        return self.target.reduce(self.matrix.apply(x))


@dataclass(frozen=True)
class SubgroupPresentation:
    """Subgroup of ``ambient`` generated by ``generators``."""

    ambient: FinAbGroup
    generators: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "generators", tuple(self.ambient.reduce(g) for g in self.generators)
        )

    @classmethod
    def whole(cls, ambient: FinAbGroup) -> SubgroupPresentation:
        return cls(ambient, tuple(ambient.basis()))

    @classmethod
    def trivial(cls, ambient: FinAbGroup) -> SubgroupPresentation:
        return cls(ambient, ())

    @cached_property
    def structure(self) -> Quotient:
        """This subgroup as a canonical group, with lifts of its generators."""
        return subgroup_quotient(self, SubgroupPresentation.trivial(self.ambient))

    @property
    def order(self) -> int:
        return self.structure.group.order

    def __contains__(self, x) -> bool:
        return self.structure.lattice.solve(self.ambient.reduce(x)) is not None

    def coordinates(self, x: Sequence[int]) -> Vector:
        """Coordinates of ``x`` against the canonical generators of the subgroup."""
        return self.structure.coordinates(x)

    def __iter__(self) -> Iterator[Vector]:
        return iter(enumerate_elements(self))


class _Lattice:
    """Full-rank lattice in Z^r spanned by some generators plus ``m_k e_k``.

    Subgroups of a finite ambient group correspond to such lattices, and
    membership reduces to one Smith normal form: with ``U B V = [S | 0]`` the
    first ``r`` columns of ``B V`` form a basis ``W`` satisfying
    ``U W = diag(s)``.
    """

    def __init__(self, ambient: FinAbGroup, generators: Sequence[Vector]):
        r = ambient.rank
        cols = list(generators) + [
            tuple(m if i == k else 0 for i in range(r)) for k, m in enumerate(ambient.moduli)
        ]
        B = IntMatrix.from_columns(cols, r)
        U, S, V = smith_normal_form(B)
        self.rank = r
        self.U = U
        self.diag = S.diagonal_entries()[:r]
        if any(s == 0 for s in self.diag):
            raise InvariantViolation("lattice of a finite group must have full rank")
        self.basis = (B @ V).transpose().entries[:r]

    def solve(self, x: Sequence[int]) -> Vector | None:
        """Integer ``c`` with ``W c = x``, or None when ``x`` is not in the lattice."""
        y = self.U.apply(x)
        if any(a % s for a, s in zip(y, self.diag)):
            return None
        return tuple(a // s for a, s in zip(y, self.diag))

    def point(self, c: Sequence[int]) -> Vector:
        return tuple(sum(ck * w[i] for ck, w in zip(c, self.basis)) for i in range(self.rank))


@dataclass(frozen=True)
class Quotient:
    """Result of :func:`subgroup_quotient`.

    ``group`` is the canonical quotient ``N/D`` and ``lifts[j]`` an ambient
    element of ``N`` mapping to its ``j``-th generator.
    """

    group: FinAbGroup
    lifts: tuple[Vector, ...]
    lattice: _Lattice = field(repr=False, compare=False)
    _change: IntMatrix = field(repr=False, compare=False)
    _kept: tuple[int, ...] = field(repr=False, compare=False)

    def coordinates(self, x: Sequence[int]) -> Vector:
        """Class of the ambient element ``x`` (which must lie in N) in the quotient."""
        c = self.lattice.solve(x)
        if c is None:
            raise ContainmentError(f"element {tuple(x)} does not lie in the numerator subgroup", x)
        y = self._change.apply(c)
        return tuple(y[k] % m for k, m in zip(self._kept, self.group.moduli))


def subgroup_quotient(N: SubgroupPresentation, D: SubgroupPresentation) -> Quotient:
    """Structure of ``N/D`` for subgroups ``D <= N`` of one ambient group.

    Raises :class:`ContainmentError` naming the first generator of ``D`` that
    does not lie in ``N``.
    """
    if N.ambient != D.ambient:
        raise ValueError("subgroups live in different ambient groups")
    ambient = N.ambient
    r = ambient.rank
    lattice = _Lattice(ambient, N.generators)
    relations = []
    for idx, d in enumerate(D.generators):
        c = lattice.solve(d)
        if c is None:
            raise ContainmentError(
                f"generator {idx} = {d} of the denominator is not in the numerator", d, idx
            )
        relations.append(c)
    for k, m in enumerate(ambient.moduli):
        relations.append(lattice.solve(tuple(m if i == k else 0 for i in range(r))))
    C = IntMatrix.from_columns(relations, r)
    U, S, _, U_inv, _ = _smith_full(C)
    diag = S.diagonal_entries()[:r]
    kept = tuple(k for k, s in enumerate(diag) if s != 1)
    group = FinAbGroup(tuple(diag[k] for k in kept))
    lifts = tuple(ambient.reduce(lattice.point(U_inv.column(k))) for k in kept)
    return Quotient(group, lifts, lattice, U, kept)


@dataclass(frozen=True)
class BasisChange:
    """Maps old coordinates of ``Z^rank`` to canonical coordinates of the quotient."""

    group: FinAbGroup
    U: IntMatrix
    U_inv: IntMatrix
    kept: tuple[int, ...]

    def to_canonical(self, x: Sequence[int]) -> Vector:
        y = self.U.apply(x)
        return self.group.reduce([y[k] for k in self.kept])

    def generator(self, j: int) -> Vector:
        """Old coordinates of the ``j``-th canonical generator."""
        return self.U_inv.column(self.kept[j])


def finab_from_relations(ambient_rank: int, relations: IntMatrix) -> tuple[FinAbGroup, BasisChange]:
    """Invariant factors of ``Z^ambient_rank`` modulo the column span of ``relations``."""
    if relations.rows != ambient_rank:
        raise ValueError(f"relations must have {ambient_rank} rows, got {relations.rows}")
    U, S, _, U_inv, _ = _smith_full(relations)
    diag = S.diagonal_entries() + [0] * (ambient_rank - min(relations.shape))
    torsion = [k for k in range(ambient_rank) if diag[k] > 1]
    free = [k for k in range(ambient_rank) if diag[k] == 0]
    group = FinAbGroup(tuple(diag[k] for k in torsion), len(free))
    return group, BasisChange(group, U, U_inv, tuple(torsion + free))


def hom_kernel(f: AbHom) -> SubgroupPresentation:
    """Generators of ``ker f``.

    Solves ``M x = diag(target moduli) y`` over the integers; the kernel of
    ``[M | -diag(b)]`` is read off the trailing columns of ``V``.
    """
    r, t = f.source.rank, f.target.rank
    if t == 0:
        return SubgroupPresentation.whole(f.source)
    K = IntMatrix.from_rows(
        [
            list(f.matrix.entries[i]) + [-f.target.moduli[i] if j == i else 0 for j in range(t)]
            for i in range(t)
        ],
        r + t,
    )
    _, D, V = smith_normal_form(K)
    rank = sum(1 for d in D.diagonal_entries() if d)
    gens = [V.column(j)[:r] for j in range(rank, r + t)]
    return SubgroupPresentation(f.source, tuple(g for g in gens if any(
        a % m for a, m in zip(g, f.source.moduli))))


def hom_image(f: AbHom) -> SubgroupPresentation:
    return SubgroupPresentation(f.target, tuple(f.matrix.columns()))


def enumerate_elements(
    A: FinAbGroup | SubgroupPresentation, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Vector]:
    """All elements of a finite abelian group or subgroup, each exactly once."""
    if isinstance(A, FinAbGroup):
        if A.free_rank:
            raise CapacityError("cannot enumerate an infinite group")
        if A.order > bound:
            raise CapacityError(f"group of order {A.order} exceeds enumeration bound {bound}")
        return list(A)
    q = A.structure
    if q.group.order > bound:
        raise CapacityError(f"subgroup of order {q.group.order} exceeds enumeration bound {bound}")
    amb = A.ambient
    out = []
    for coeffs in q.group:
        v = [0] * amb.rank
        for c, lift in zip(coeffs, q.lifts):
            for i, a in enumerate(lift):
                v[i] += c * a
        out.append(amb.reduce(v))
    return out
