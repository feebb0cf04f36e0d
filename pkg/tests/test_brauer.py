import random
from dataclasses import replace

import pytest

from normbrauer.abelian import enumerate_elements, hom_image, hom_kernel
from normbrauer.brauer import (
    INFINITY_LABEL,
    FactorSpec,
    Scenario,
    _blocks,
    _compute_normalized,
    build_coboundary_map,
    build_constraint_map,
    compute_vertical_brauer,
    format_symbols,
    normalize_scenario,
    normalize_with_log,
)
from normbrauer.characters import character_group, corestrict, restrict
from normbrauer.exceptions import InvariantViolation, NormalizationError, ScenarioError
from normbrauer.finite_group import (
    conjugate_subgroup,
    cyclic,
    trivial_subgroup,
    whole_group,
)
from normbrauer.sampling import random_scenario


def chatelet():
    C2 = cyclic(2)
    P = FactorSpec(whole_group(C2), 2, 1)
    return Scenario(C2, (P, P), leading_coefficient="-1")


def random_set(n, seed):
    rng = random.Random(seed)
    return [random_scenario(rng, max_tuples=2048) for _ in range(n)]


class TestFactorSpec:
    def test_l_and_e_prime(self, S3, A3):
        f = FactorSpec(A3, 6, 4)
        assert f.l == 3 and f.e_prime == 2

    def test_index_must_divide_degree(self, A3):
        with pytest.raises(ScenarioError, match=r"\[G:G_i\] = 2 does not divide degree 3"):
            FactorSpec(A3, 3, 1, "P_1")

    def test_make_from_l(self, A3):
        assert FactorSpec.make(A3, 1, l=2).degree == 4
        with pytest.raises(ScenarioError, match="inconsistent"):
            FactorSpec.make(A3, 1, degree=6, l=2)
        with pytest.raises(ScenarioError):
            FactorSpec.make(A3, 1)

    @pytest.mark.parametrize("bad", [0, -1, True, 1.5])
    def test_positive_ints(self, A3, bad):
        with pytest.raises(ScenarioError):
            FactorSpec(A3, 2, bad)

    def test_foreign_subgroup(self, S3, C4_half):
        with pytest.raises(ScenarioError, match="does not belong"):
            Scenario(S3, (FactorSpec(C4_half, 2, 1),))

    def test_default_labels(self):
        s = chatelet()
        assert [f.label for f in s.factors] == ["P_1", "P_2"]


class TestNormalize:
    def test_already_normalized(self):
        s = chatelet()
        assert s.is_normalized()
        out, log = normalize_with_log(s)
        assert out.factors == s.factors
        assert len(log) == 1 and "leading coefficient" in log[0]

    def test_appends_infinity_factor(self):
        C2 = cyclic(2)
        s = Scenario(C2, (FactorSpec(whole_group(C2), 1, 1),))
        out, log = normalize_with_log(s)
        inf = out.factors[-1]
        assert inf.label == INFINITY_LABEL
        assert (inf.degree, inf.multiplicity, inf.subgroup) == (1, 1, whole_group(C2))
        assert out.m % out.n == 0
        assert any("1/x" in line for line in log)

    def test_reduces_and_drops(self, S3, A3):
        s = Scenario(S3, (FactorSpec(A3, 2, 7), FactorSpec(A3, 2, 12)))
        out, log = normalize_with_log(s)
        assert [f.multiplicity for f in out.factors] == [1, 4]
        assert [f.label for f in out.factors] == ["P_1", INFINITY_LABEL]
        assert any("dropped" in line for line in log)

    def test_idempotent(self):
        for s in random_set(60, 1):
            once = normalize_scenario(s)
            assert once.is_normalized()
            assert normalize_scenario(once) == once

    def test_refused_without_auto_normalize(self):
        C2 = cyclic(2)
        s = Scenario(C2, (FactorSpec(whole_group(C2), 1, 1),), auto_normalize=False)
        with pytest.raises(NormalizationError):
            compute_vertical_brauer(s)
        with pytest.raises(NormalizationError):
            build_constraint_map(s)


class TestMaps:
    def test_chatelet_constraint(self):
        f = build_constraint_map(chatelet())
        # l_i = 2 kills every Cor term
        assert f.source.order == 4 and f.target.order == 2
        assert hom_kernel(f).order == 4

    def test_chatelet_coboundary(self):
        f = build_coboundary_map(chatelet())
        assert sorted(enumerate_elements(hom_image(f))) == [(0, 0), (1, 1)]

    def test_s3_maps(self, S3, A3):
        s = Scenario(S3, (FactorSpec(A3, 6, 1),))
        # Cor on characters of A3 is zero since the sign is trivial on Ver(S3)
        assert hom_kernel(build_constraint_map(s)).order == 3
        assert hom_image(build_coboundary_map(s)).order == 1

    def test_coboundary_matches_restriction(self):
        for s in random_set(30, 2):
            s = normalize_scenario(s)
            f = build_coboundary_map(s)
            b = _blocks(s)
            for psi in b.group_chars.basis():
                chars = b.to_characters(f(psi.coords))
                for chi, fac in zip(chars, s.factors):
                    assert chi == fac.multiplicity * restrict(psi, fac.subgroup)


class TestCompute:
    def test_chatelet(self):
        r = compute_vertical_brauer(chatelet())
        assert r.invariant_factors == (2,)
        # (chi, 0) and (0, chi) agree modulo D; the earlier support is reported
        (gen,) = r.generators
        assert not gen[0].is_zero() and gen[1].is_zero()
        assert r.order == 2 and str(r.group) == "Z/2"

    def test_s3(self, S3, A3):
        r = compute_vertical_brauer(Scenario(S3, (FactorSpec(A3, 6, 1),)))
        assert r.invariant_factors == (3,)

    def test_c4_four_linear_factors(self, C4):
        f = FactorSpec(whole_group(C4), 1, 2)
        r = compute_vertical_brauer(Scenario(C4, (f, f, f, f)))
        assert r.invariant_factors == (2, 2)

    def test_degenerate(self):
        C2 = cyclic(2)
        cases = [
            Scenario(C2, (FactorSpec(trivial_subgroup(C2), 2, 1),)),
            Scenario(C2, ()),
            Scenario(C2, (FactorSpec(whole_group(C2), 4, 1),)),
        ]
        for s in cases:
            r = compute_vertical_brauer(s)
            assert r.invariant_factors == ()
            assert format_symbols(r, r.scenario) == ["0"]

    def test_generators_lie_in_kernel(self):
        for s in random_set(40, 3):
            r = compute_vertical_brauer(s)
            t = r.scenario
            for gen in r.generators:
                total = character_group(t.group).zero()
                for chi, f in zip(gen, t.factors):
                    total = total + f.l * corestrict(chi, f.subgroup)
                assert total.is_zero()

    def test_exponent_divides_n(self):
        for s in random_set(80, 4):
            r = compute_vertical_brauer(s)
            assert all(s.n % d == 0 for d in r.invariant_factors)

    def test_orders_multiply(self):
        for s in random_set(40, 5):
            r = compute_vertical_brauer(s)
            assert r.order * r.denominator_order == r.numerator_order


class TestSymbols:
    def test_chatelet_symbol(self):
        r = compute_vertical_brauer(chatelet())
        (sym,) = r.symbols
        assert "⌣ χ" in sym and sym.startswith("Cor_{L_")
        assert "(x)" in sym

    def test_infinity_symbol(self):
        C2 = cyclic(2)
        f = FactorSpec(whole_group(C2), 1, 1)
        r = compute_vertical_brauer(Scenario(C2, (f, f, f)))
        assert r.scenario.factors[-1].label == INFINITY_LABEL
        # sum of four characters of C2 vanishing, modulo the diagonal
        assert r.invariant_factors == (2, 2)
        assert any("(1/x) ⌣ χ" in sym for sym in r.symbols)

    def test_s3_symbol_without_witness(self, S3, A3):
        r = compute_vertical_brauer(Scenario(S3, (FactorSpec(A3, 6, 1),)))
        assert r.symbols == ("Cor_{L_1(x)/k(x)}((x − ε_1) ⌣ χ_1)",)


class TestInvariances:
    def test_conjugating_a_factor(self):
        rng = random.Random(6)
        for s in random_set(50, 6):
            if not s.factors:
                continue
            i = rng.randrange(len(s.factors))
            x = rng.randrange(s.n)
            f = s.factors[i]
            g = replace(f, subgroup=conjugate_subgroup(s.group, f.subgroup, x))
            t = replace(s, factors=s.factors[:i] + (g,) + s.factors[i + 1:])
            assert compute_vertical_brauer(t).invariant_factors == compute_vertical_brauer(s).invariant_factors

    def test_permuting_factors(self):
        rng = random.Random(7)
        for s in random_set(50, 7):
            fs = list(s.factors)
            rng.shuffle(fs)
            t = replace(s, factors=tuple(fs))
            assert compute_vertical_brauer(t).invariant_factors == compute_vertical_brauer(s).invariant_factors

    def test_appending_trivial_multiplicity(self):
        rng = random.Random(8)
        for s in random_set(50, 8):
            H = rng.choice([whole_group(s.group), trivial_subgroup(s.group)])
            extra = FactorSpec(H, H.index * rng.randint(1, 3), s.n * rng.randint(1, 2))
            t = replace(s, factors=s.factors + (extra,))
            assert compute_vertical_brauer(t).invariant_factors == compute_vertical_brauer(s).invariant_factors

    def test_renormalizing(self):
        for s in random_set(50, 9):
            once = compute_vertical_brauer(s)
            twice = compute_vertical_brauer(once.scenario)
            assert once.invariant_factors == twice.invariant_factors


class TestGuard:
    def test_d_in_n_for_normalized(self):
        for s in random_set(60, 10):
            s = normalize_scenario(s)
            N = hom_kernel(build_constraint_map(s))
            for x in enumerate_elements(hom_image(build_coboundary_map(s))):
                assert x in N

    def test_skipped_infinity_factor_is_detected(self):
        C2 = cyclic(2)
        s = Scenario(C2, (FactorSpec(whole_group(C2), 1, 1),), auto_normalize=False)
        with pytest.raises(InvariantViolation, match="not contained"):
            _compute_normalized(s)

    def test_corrupted_random_scenarios(self):
        # drop the infinity factor after normalization
        hits = 0
        for s in random_set(80, 11):
            t = normalize_scenario(s)
            if t.factors and t.factors[-1].label == INFINITY_LABEL:
                bad = replace(t, factors=t.factors[:-1])
                try:
                    _compute_normalized(bad)
                except InvariantViolation:
                    hits += 1
        assert hits > 0
