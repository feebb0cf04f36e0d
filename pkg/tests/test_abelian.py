import itertools
import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from normbrauer.abelian import (
    AbHom,
    FinAbGroup,
    IntMatrix,
    SubgroupPresentation,
    enumerate_elements,
    finab_from_relations,
    hom_image,
    hom_kernel,
    smith_normal_form,
    subgroup_quotient,
)
from normbrauer.exceptions import CapacityError, ContainmentError
from normbrauer.oracle import invariant_factors_from_counts


def det(M: IntMatrix) -> int:
    return int(sympy.Matrix(M.tolist()).det()) if M.rows else 1


def assert_smith(M):
    U, D, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    assert D.is_diagonal()
    diag = D.diagonal_entries()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0
    return D


class TestSmithNormalForm:
    def test_coprime_diagonal(self):
        D = assert_smith(IntMatrix.diagonal([2, 3]))
        assert D.diagonal_entries() == [1, 6]

    def test_two_by_two(self):
        D = assert_smith(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert D.diagonal_entries() == [2, 4]

    def test_zero_matrix(self):
        U, D, V = smith_normal_form(IntMatrix.zeros(2, 2))
        assert D == IntMatrix.zeros(2, 2)
        assert U == IntMatrix.identity(2) and V == IntMatrix.identity(2)

    @pytest.mark.parametrize("shape", [(0, 0), (0, 3), (3, 0)])
    def test_empty(self, shape):
        M = IntMatrix.zeros(*shape)
        U, D, V = smith_normal_form(M)
        assert U.shape == (shape[0], shape[0]) and V.shape == (shape[1], shape[1])
        assert D == M

    def test_deterministic(self):
        M = IntMatrix.from_rows([[3, -7, 2], [5, 1, 9], [0, 4, 4]])
        assert smith_normal_form(M) == smith_normal_form(M)

    def test_determinant_preserved(self):
        M = IntMatrix.from_rows([[3, -7, 2], [5, 1, 9], [0, 4, 4]])
        D = assert_smith(M)
        assert math.prod(D.diagonal_entries()) == abs(det(M))

    @settings(max_examples=200, deadline=None)
    @given(
        st.integers(1, 7).flatmap(
            lambda r: st.integers(1, 7).flatmap(
                lambda c: st.lists(
                    st.lists(st.integers(-50, 50), min_size=c, max_size=c), min_size=r, max_size=r
                )
            )
        )
    )
    def test_postconditions(self, rows):
        assert_smith(IntMatrix.from_rows(rows))


class TestFinAbFromRelations:
    def test_coprime(self):
        G, _ = finab_from_relations(2, IntMatrix.diagonal([2, 3]))
        assert G.invariant_factors == (6,)

    def test_cyclic_four(self):
        G, change = finab_from_relations(1, IntMatrix.from_rows([[4]]))
        assert G.invariant_factors == (4,)
        assert change.to_canonical((5,)) == (1,)

    def test_free(self):
        G, _ = finab_from_relations(1, IntMatrix(1, 0, ((),)))
        assert G.free_rank == 1 and G.invariant_factors == ()

    def test_generators_map_to_basis(self):
        G, change = finab_from_relations(3, IntMatrix.from_rows([[2, 0, 4], [0, 6, 6], [0, 0, 0]]))
        assert G.free_rank == 1
        width = len(G.zero())
        for j in range(width):
            assert change.to_canonical(change.generator(j)) == tuple(int(i == j) for i in range(width))


def brute_force_quotient(moduli, extra):
    """Order counts of (+)Z/m_i modulo the subgroup generated by ``extra``."""
    A = FinAbGroup(moduli)
    R = {A.zero()}
    frontier = [A.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for r in extra:
                y = A.add(x, r)
                if y not in R:
                    R.add(y)
                    nxt.append(y)
        frontier = nxt
    elements = list(A)

    def killed(m):
        return sum(1 for x in elements if A.scale(m, x) in R) // len(R)

    return len(elements) // len(R), killed


@pytest.mark.parametrize("seed", range(40))
def test_relations_agree_with_order_counting(seed):
    rng = random.Random(seed)
    r = rng.randint(1, 4)
    while True:
        moduli = [rng.randint(1, 12) for _ in range(r)]
        if math.prod(moduli) <= 10**4:
            break
    extra = [tuple(rng.randint(0, m - 1) for m in moduli) for _ in range(rng.randint(0, 2))]
    order, killed = brute_force_quotient(moduli, extra)
    cols = [tuple(m if i == k else 0 for i in range(r)) for k, m in enumerate(moduli)] + extra
    G, _ = finab_from_relations(r, IntMatrix.from_columns(cols, r))
    assert G.order == order
    assert G.invariant_factors == invariant_factors_from_counts(order, killed)


class TestKernelAndQuotient:
    def test_sum_map_kernel_is_diagonal(self):
        f = AbHom.from_images(FinAbGroup((2, 2)), FinAbGroup((2,)), [(1,), (1,)])
        assert sorted(enumerate_elements(hom_kernel(f))) == [(0, 0), (1, 1)]

    def test_zero_map_kernel_is_everything(self):
        A = FinAbGroup((2, 4))
        f = AbHom.from_images(A, FinAbGroup((3,)), [(0,), (0,)])
        assert hom_kernel(f).order == 8

    def test_doubling_on_z4(self):
        Z4 = FinAbGroup((4,))
        f = AbHom.from_images(Z4, Z4, [(2,)])
        assert sorted(enumerate_elements(hom_kernel(f))) == [(0,), (2,)]

    def test_not_well_defined(self):
        with pytest.raises(ValueError, match="not well defined"):
            AbHom.from_images(FinAbGroup((2,)), FinAbGroup((3,)), [(1,)])

    def test_quotient_by_diagonal(self):
        A = FinAbGroup((2, 2))
        q = subgroup_quotient(SubgroupPresentation.whole(A), SubgroupPresentation(A, ((1, 1),)))
        assert q.group.invariant_factors == (2,)
        assert q.lifts[0] not in SubgroupPresentation(A, ((1, 1),))

    def test_quotient_by_itself(self):
        A = FinAbGroup((2, 6))
        N = SubgroupPresentation(A, ((1, 3), (0, 2)))
        assert subgroup_quotient(N, N).group.is_trivial()

    def test_quotient_by_zero_is_structure(self):
        A = FinAbGroup((4, 4))
        N = SubgroupPresentation(A, ((2, 2), (0, 1)))
        q = subgroup_quotient(N, SubgroupPresentation.trivial(A))
        assert q.group.invariant_factors == (2, 4)
        assert q.group.order == len(enumerate_elements(N))

    def test_cyclic_quotient(self):
        Z4 = FinAbGroup((4,))
        q = subgroup_quotient(SubgroupPresentation.whole(Z4), SubgroupPresentation(Z4, ((2,),)))
        assert q.group.invariant_factors == (2,)
        assert q.coordinates((3,)) == (1,)

    def test_containment_violation(self):
        A = FinAbGroup((4,))
        with pytest.raises(ContainmentError) as info:
            subgroup_quotient(SubgroupPresentation(A, ((2,),)), SubgroupPresentation(A, ((0,), (1,))))
        assert info.value.index == 1

    def test_enumerate(self):
        assert len(enumerate_elements(FinAbGroup((2, 2)))) == 4
        assert enumerate_elements(FinAbGroup(())) == [()]
        S = SubgroupPresentation(FinAbGroup((4, 4)), ((2, 2),))
        assert sorted(enumerate_elements(S)) == [(0, 0), (2, 2)]

    def test_enumeration_bound(self):
        with pytest.raises(CapacityError):
            enumerate_elements(FinAbGroup((100, 100)), bound=1000)


@st.composite
def homomorphisms(draw):
    src = FinAbGroup(tuple(draw(st.lists(st.integers(2, 12), min_size=1, max_size=3))))
    tgt = FinAbGroup(tuple(draw(st.lists(st.integers(2, 12), min_size=1, max_size=3))))
    images = []
    for d in src.moduli:
        # an image of order dividing d in each target coordinate
        images.append(tuple(
            (m // math.gcd(m, d)) * draw(st.integers(0, m)) for m in tgt.moduli
        ))
    return AbHom.from_images(src, tgt, images)


@settings(max_examples=150, deadline=None)
@given(homomorphisms())
def test_kernel_times_image_is_source(f):
    K = hom_kernel(f)
    I = hom_image(f)
    assert K.order * I.order == f.source.order
    assert all(f(x) == f.target.zero() for x in enumerate_elements(K))
    brute_image = {f(x) for x in f.source}
    assert len(brute_image) == I.order


@settings(max_examples=100, deadline=None)
@given(homomorphisms())
def test_quotient_by_kernel_is_image(f):
    K = hom_kernel(f)
    q = subgroup_quotient(SubgroupPresentation.whole(f.source), K)
    assert q.group.invariant_factors == hom_image(f).structure.group.invariant_factors


def test_invariant_factors_of_direct_sum():
    A = FinAbGroup.direct_sum(FinAbGroup((2,)), FinAbGroup((3,)), FinAbGroup((4,)))
    assert A.moduli == (2, 3, 4)
    assert A.invariant_factors == (2, 12)
    assert str(FinAbGroup(())) == "0"
    assert str(A) == "Z/2 + Z/12"
    assert list(itertools.islice(A, 2)) == [(0, 0, 0), (0, 0, 1)]
