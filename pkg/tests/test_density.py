import io
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from chebdens import (
    DEFAULT_S_GRID,
    InconsistencyError,
    abelian_model,
    chebotarev_reference,
    dirichlet_density_estimate,
    lift_density,
    member_mask,
    natural_density_estimate,
    partial_zeta,
    splitting_field_model,
    upper_density_estimate,
)
from chebdens.density import (
    dirichlet_convergence_rows,
    natural_convergence_rows,
    riemann_zeta,
    write_convergence_csv,
)
from oracles import slow_fraction_zeta

MOD4 = abelian_model(4, [1])
ALL_PRIMES = abelian_model(1, [1])
X3M2 = splitting_field_model((-2, 0, 0, 1), 6)


class TestPartialZeta:
    def test_exact_examples(self):
        value = partial_zeta(ALL_PRIMES, 2, 10).value
        assert value == Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 25) + Fraction(1, 49)
        assert value == Fraction(18589, 44100)
        assert abs(float(value) - 0.4215193) < 1e-6

    def test_residue_class_example(self):
        # primes 5, 13, 17 are the members below 20
        value = partial_zeta(MOD4, 2, 20).value
        assert value == Fraction(1, 25) + Fraction(1, 169) + Fraction(1, 289)
        assert value == Fraction(60291, 1221025)

    def test_empty_set(self):
        assert partial_zeta([], 2, 100).value == 0
        assert partial_zeta([], 1.5, 100).value == 0.0

    def test_exact_matches_slow_oracle(self, primes_1e4):
        members = [int(p) for p in primes_1e4.tolist() if p % 4 == 1][:200]
        got = partial_zeta(members, 3, 10**4).value
        assert got == slow_fraction_zeta(members, 3)

    def test_float_mode_matches_fsum(self, primes_1e4):
        got = partial_zeta(MOD4, 1.5, 10**4).value
        expected = math.fsum(p**-1.5 for p in primes_1e4.tolist() if p % 4 == 1)
        assert got == pytest.approx(expected, rel=1e-12)

    def test_s_domain(self):
        with pytest.raises(ValueError):
            partial_zeta(ALL_PRIMES, 1.0, 100)
        with pytest.raises(ValueError):
            partial_zeta(ALL_PRIMES, 0.5, 100)

    def test_fraction_exponents_choose_the_right_mode(self):
        exact = partial_zeta(ALL_PRIMES, Fraction(2), 10).value
        assert isinstance(exact, Fraction) and exact == Fraction(18589, 44100)
        approx = partial_zeta(ALL_PRIMES, Fraction(3, 2), 10).value
        assert isinstance(approx, float)

    def test_subadditivity_exact(self, primes_1e4):
        a = [int(p) for p in primes_1e4.tolist() if p % 4 == 1][:120]
        b = [int(p) for p in primes_1e4.tolist() if p % 3 == 1][:120]
        union = sorted(set(a) | set(b))
        for s in (2, 3):
            lhs = partial_zeta(union, s, 10**4).value
            rhs = partial_zeta(a, s, 10**4).value + partial_zeta(b, s, 10**4).value
            assert lhs <= rhs

    def test_monotone_in_membership(self, primes_1e4):
        small = [int(p) for p in primes_1e4[:50].tolist()]
        large = [int(p) for p in primes_1e4[:100].tolist()]
        assert partial_zeta(small, 2, 10**4).value <= partial_zeta(large, 2, 10**4).value

    def test_monotone_in_cutoff(self):
        assert partial_zeta(ALL_PRIMES, 2, 100).value <= partial_zeta(ALL_PRIMES, 2, 1000).value


class TestMemberMask:
    def test_accepts_models_masks_callables_and_sets(self, primes_1e4):
        from_model = member_mask(MOD4, primes_1e4)
        from_callable = member_mask(lambda p: p % 4 == 1, primes_1e4)
        from_set = member_mask(
            [int(p) for p in primes_1e4.tolist() if p % 4 == 1], primes_1e4
        )
        assert (from_model == from_callable).all()
        assert (from_model == from_set).all()
        assert (member_mask(from_model, primes_1e4) == from_model).all()

    def test_shape_mismatch_rejected(self, primes_1e4):
        with pytest.raises(ValueError):
            member_mask(np.zeros(3, dtype=bool), primes_1e4)


class TestRiemannZeta:
    def test_against_mpmath(self):
        for s in (1.01, 1.05, 1.2, 1.5, 2.0, 3.0):
            assert riemann_zeta(s) == pytest.approx(float(mpmath.zeta(s)), rel=1e-11)

    def test_euler_value(self):
        assert riemann_zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)


class TestNaturalDensity:
    def test_residue_class_example(self):
        est = natural_density_estimate(MOD4, 101)
        assert (est.members, est.primes) == (11, 25)
        assert est.value == pytest.approx(0.44)
        assert est.exact == Fraction(11, 25)

    def test_all_primes_is_one(self):
        for cutoff in (3, 100, 10**4):
            assert natural_density_estimate(ALL_PRIMES, cutoff).value == 1.0

    def test_cubic_splitting_near_one_sixth(self):
        est = natural_density_estimate(X3M2, 10**6)
        assert abs(est.value - 1 / 6) < 0.01

    def test_undefined_below_first_prime(self):
        with pytest.raises(ValueError):
            natural_density_estimate(ALL_PRIMES, 2)

    def test_complement_sums_to_one_exactly(self, primes_1e4):
        inside = natural_density_estimate(MOD4, 10**4)
        mask = member_mask(MOD4, primes_1e4)
        outside = natural_density_estimate(~mask, 10**4)
        assert inside.exact + outside.exact == 1

    def test_monotone_in_membership(self, primes_1e4):
        sub = natural_density_estimate(MOD4, 10**4)
        odd = natural_density_estimate(lambda p: p % 2 == 1, 10**4)
        assert sub.value <= odd.value

    def test_gap_to_reference_shrinks_with_cutoff(self):
        gaps = [
            abs(natural_density_estimate(MOD4, 10**k).value - 0.5) for k in (4, 5, 6)
        ]
        assert gaps[-1] < gaps[0]
        assert gaps[-1] < 0.005


class TestDirichletEstimates:
    def test_ratios_match_independent_computation(self, primes_1e5):
        est = dirichlet_density_estimate(MOD4, cutoff=10**5)
        members = [p for p in primes_1e5.tolist() if p % 4 == 1]
        for s, ratio in zip(est.s_grid, est.ratios):
            xi = math.fsum(p**-s for p in members)
            assert ratio == pytest.approx(xi / math.log(1 / (s - 1)), rel=1e-9)
        assert est.value == est.ratios[-1]
        assert est.s_grid == tuple(sorted(DEFAULT_S_GRID, reverse=True))

    def test_empty_set_is_zero_at_every_s(self):
        est = dirichlet_density_estimate([], cutoff=10**4)
        assert est.value == 0.0
        assert all(r == 0.0 for r in est.ratios)

    def test_truncation_pushes_ratios_below_the_limit(self):
        # at desk-scale cutoffs the raw ratio at s near 1 undershoots 1/2;
        # the coverage diagnostic makes the truncation loss visible
        est = dirichlet_density_estimate(MOD4, s_grid=(1.1, 1.05, 1.01), cutoff=10**6)
        assert 0.0 < est.value < 0.5
        assert est.coverage[0] > est.coverage[-1]
        assert all(0 < c < 1 for c in est.coverage)

    def test_ratio_grows_toward_limit_with_cutoff(self):
        grid = (1.2,)
        small = dirichlet_density_estimate(ALL_PRIMES, s_grid=grid, cutoff=10**4)
        big = dirichlet_density_estimate(ALL_PRIMES, s_grid=grid, cutoff=10**6)
        assert small.value < big.value
        assert small.coverage[0] < big.coverage[0]

    def test_all_primes_near_one_at_moderate_s(self):
        est = dirichlet_density_estimate(ALL_PRIMES, s_grid=(1.2,), cutoff=10**6)
        assert abs(est.raw_value - 1.0) < 0.1

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            dirichlet_density_estimate(MOD4, s_grid=(), cutoff=10**4)

    def test_value_clamped_but_raw_preserved(self):
        est = dirichlet_density_estimate(ALL_PRIMES, s_grid=(1.5,), cutoff=10**6)
        assert est.raw_value > 1.0  # small-prime mass dominates at s far from 1
        assert est.value == 1.0


class TestUpperDensity:
    def test_upper_agrees_within_tail_spread(self):
        upper = upper_density_estimate(MOD4, cutoff=10**5)
        plain = dirichlet_density_estimate(MOD4, cutoff=10**5)
        tail = plain.ratios[-((len(plain.ratios) + 1) // 2):]
        spread = max(tail) - min(tail)
        assert abs(upper.value - plain.value) <= spread + 1e-15
        assert upper.value == max(tail)

    def test_empty_set(self):
        assert upper_density_estimate([], cutoff=10**4).value == 0.0

    def test_union_of_residue_classes_exceeds_each(self, primes_1e5):
        odd = upper_density_estimate(lambda p: p % 2 == 1, cutoff=10**5)
        ones = upper_density_estimate(MOD4, cutoff=10**5)
        assert odd.value > ones.value

    def test_union_of_classes_climbs_toward_one_with_cutoff(self):
        # union of both odd residue classes mod 4 = all odd primes, density 1;
        # larger cutoffs capture more of it
        from chebdens import residue_class_predicate

        pred = residue_class_predicate(MOD4, [1, 3])
        small = upper_density_estimate(pred, cutoff=10**4)
        large = upper_density_estimate(pred, cutoff=10**6)
        assert small.value < large.value < 1.0


class TestChebotarevReference:
    def test_examples(self):
        assert chebotarev_reference(MOD4) == Fraction(1, 2)
        assert chebotarev_reference(X3M2) == Fraction(1, 6)
        assert chebotarev_reference(ALL_PRIMES) == 1
        assert chebotarev_reference(abelian_model(8, [1, 3])) == Fraction(1, 2)


class TestLiftDensity:
    def test_examples(self):
        assert lift_density(Fraction(1, 10), 3) == Fraction(3, 10)
        assert lift_density(Fraction(1, 3), 1) == Fraction(1, 3)
        with pytest.raises(InconsistencyError):
            lift_density(Fraction(1, 2), 3)

    def test_domain(self):
        with pytest.raises(ValueError):
            lift_density(Fraction(3, 2), 1)
        with pytest.raises(ValueError):
            lift_density(Fraction(1, 2), 0)


class TestConvergenceTables:
    def test_natural_rows_trend_to_reference(self):
        rows = natural_convergence_rows(MOD4, [10**4, 10**5, 10**6], reference=Fraction(1, 2))
        assert [row["cutoff"] for row in rows] == [10**4, 10**5, 10**6]
        gaps = [abs(row["estimate"] - row["reference"]) for row in rows]
        assert gaps[-1] < gaps[0]

    def test_dirichlet_rows_and_csv(self):
        rows = dirichlet_convergence_rows(MOD4, [10**4], s_grid=(1.2, 1.1))
        assert [row["s"] for row in rows] == [1.2, 1.1]
        buffer = io.StringIO()
        write_convergence_csv(rows, buffer)
        lines = buffer.getvalue().strip().splitlines()
        assert lines[0] == "cutoff,s,xi,ratio"
        assert len(lines) == 3
