"""Filter algebra: normalization, binomial elevation/reduction, high-pass
derivation, multiplicity and symmetry bookkeeping."""

import numpy as np
import pytest

import wavetool as wt
from wavetool import (
    Filter,
    FilterBank,
    binomial_elevate_primal,
    binomial_reduce_dual,
    derive_highpass,
    elevate,
    elevate_orthonormal,
    normalize,
    root_multiplicity,
    support,
    symmetry_type,
)


def assert_filter(f, offset, coeffs, tol=0.0):
    assert f.offset == offset
    np.testing.assert_allclose(f.coeffs, coeffs, rtol=0, atol=tol)


class TestFilterType:
    def test_trims_exact_zeros(self):
        f = Filter(-1, [0.0, 0.5, 0.5, 0.0])
        assert f.offset == 0
        np.testing.assert_array_equal(f.coeffs, [0.5, 0.5])

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            Filter(0, [0.0, 0.0])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Filter(0, [])

    def test_immutable(self):
        f = Filter(0, [0.5, 0.5])
        with pytest.raises(ValueError):
            f.coeffs[0] = 1.0

    def test_equality_and_shift(self):
        f = Filter(0, [0.5, 0.5])
        assert f == Filter(0, [0.5, 0.5])
        assert f.shifted(2) == Filter(2, [0.5, 0.5])
        assert f != f.shifted(1)


class TestNormalize:
    def test_scales_by_sum(self):
        assert_filter(normalize(Filter(0, [1.0, 1.0])), 0, [0.5, 0.5])

    def test_already_normalized(self):
        f = Filter(0, [0.5, 0.5])
        assert normalize(f) == f

    def test_zero_sum_rejected(self):
        with pytest.raises(wt.ZeroMass):
            normalize(Filter(0, [1.0, -1.0]))


class TestElevatePrimal:
    def test_haar_once(self):
        out = binomial_elevate_primal(Filter(0, [0.5, 0.5]), 1)
        assert_filter(out, 0, [0.25, 0.5, 0.25])

    def test_order_zero_is_identity(self):
        f = wt.daubechies(3).primal
        assert binomial_elevate_primal(f, 0) == f

    def test_delta_twice_gives_pascal_row(self):
        out = binomial_elevate_primal(Filter(0, [1.0]), 2)
        assert_filter(out, 0, [0.25, 0.5, 0.25])

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            binomial_elevate_primal(Filter(0, [0.5, 0.5]), -1)


class TestReduceDual:
    def test_hat_back_to_haar(self):
        out = binomial_reduce_dual(Filter(0, [0.25, 0.5, 0.25]), 1)
        assert_filter(out, 0, [0.5, 0.5], tol=1e-15)

    def test_spline_dual_hand_division(self):
        hd = Filter(-2, [-0.125, 0.25, 0.75, 0.25, -0.125])
        out = binomial_reduce_dual(hd, 1)
        assert_filter(out, -2, [-0.25, 0.75, 0.75, -0.25], tol=1e-15)

    def test_constant_not_divisible(self):
        with pytest.raises(wt.NotDivisible):
            binomial_reduce_dual(Filter(0, [1.0]), 1)

    def test_insufficient_multiplicity(self):
        with pytest.raises(wt.NotDivisible):
            binomial_reduce_dual(Filter(0, [0.5, 0.5]), 2)


class TestElevateBank:
    def test_cdf22_once(self):
        out = elevate(wt.cdf_spline(2, 2), 1)
        np.testing.assert_allclose(out.primal.coeffs, [0.125, 0.375, 0.375, 0.125])
        np.testing.assert_allclose(out.dual.coeffs, [-0.25, 0.75, 0.75, -0.25])

    def test_order_zero_identity(self):
        bank = wt.cdf_spline(2, 2)
        assert elevate(bank, 0) is bank

    def test_haar_degenerates(self):
        with pytest.warns(wt.DegenerateDualWarning):
            out = elevate(wt.haar(), 1)
        np.testing.assert_allclose(out.primal.coeffs, [0.25, 0.5, 0.25])
        np.testing.assert_array_equal(out.dual.coeffs, [1.0])
        assert wt.pr_residual(out) < 1e-9

    def test_inadmissible_order(self):
        with pytest.raises(wt.NotDivisible, match="multiplicity 1"):
            elevate(wt.haar(), 5)


class TestElevateOrthonormal:
    def test_haar(self):
        with pytest.warns(wt.DegenerateDualWarning):
            out = elevate_orthonormal(wt.haar().primal, 1)
        np.testing.assert_allclose(out.primal.coeffs, [0.25, 0.5, 0.25])
        np.testing.assert_array_equal(out.dual.coeffs, [1.0])

    def test_daubechies4(self):
        out = elevate_orthonormal(wt.daubechies(4).primal, 1)
        assert len(out.primal) == 9
        assert len(out.dual) == 7
        assert wt.pr_residual(out) < 1e-9

    def test_order_zero(self):
        h = wt.daubechies(2).primal
        out = elevate_orthonormal(h, 0)
        assert out.primal == h and out.dual == h

    def test_rejects_non_orthonormal_start(self):
        with pytest.raises(wt.InvalidBank):
            elevate_orthonormal(Filter(0, [0.25, 0.5, 0.25]), 1)


class TestHighpass:
    def test_haar_values(self):
        g, gd = derive_highpass(wt.haar())
        assert_filter(g, 0, [0.5, -0.5])
        assert_filter(gd, 0, [0.5, -0.5])

    @pytest.mark.parametrize("bank_name", ["haar", "cdf:2,2", "cdf:4,4", "db:4"])
    def test_zero_mean(self, bank_name):
        g, gd = derive_highpass(wt.from_spec(bank_name))
        assert abs(g.mass) < 1e-12
        assert abs(gd.mass) < 1e-12

    def test_length_matches_flipped_side(self):
        bank = wt.cdf_spline(2, 2)
        g, gd = derive_highpass(bank)
        assert len(g) == len(bank.dual)
        assert len(gd) == len(bank.primal)


class TestRootMultiplicity:
    def test_haar(self):
        assert root_multiplicity(Filter(0, [0.5, 0.5]), -1) == 1

    def test_delta(self):
        assert root_multiplicity(Filter(0, [1.0]), -1) == 0

    def test_daubechies4(self):
        assert root_multiplicity(wt.daubechies(4).primal, -1) == 4

    def test_highpass_vanishing_moments_at_plus_one(self):
        # zeros of the high-pass at z=+1 count the vanishing moments,
        # inherited from the flipped filter's zeros at z=-1
        bank = wt.cdf_spline(4, 4)
        g, gd = derive_highpass(bank)
        assert root_multiplicity(g, 1) == 4
        assert root_multiplicity(gd, 1) == 4

    def test_input_unmodified(self):
        f = wt.cdf_spline(2, 2).dual
        before = f.coeffs.copy()
        root_multiplicity(f, -1)
        np.testing.assert_array_equal(f.coeffs, before)


class TestSupport:
    def test_haar(self):
        assert support(Filter(0, [0.5, 0.5])) == (0, 1)

    def test_elevated_four_tap(self):
        f = Filter(0, [0.125, 0.375, 0.375, 0.125])
        assert support(binomial_elevate_primal(f, 2)) == (0, 5)

    def test_negative_offset(self):
        assert support(Filter(-2, [-0.125, 0.25, 0.75, 0.25, -0.125])) == (-2, 2)


class TestSymmetry:
    def test_odd_symmetric(self):
        kind, center = symmetry_type(Filter(0, [0.25, 0.5, 0.25]))
        assert (kind, center) == ("symmetric", 1.0)

    def test_even_symmetric(self):
        kind, center = symmetry_type(Filter(0, [0.125, 0.375, 0.375, 0.125]))
        assert (kind, center) == ("symmetric", 1.5)

    def test_antisymmetric(self):
        kind, center = symmetry_type(Filter(0, [0.5, -0.5]))
        assert (kind, center) == ("antisymmetric", 0.5)

    def test_daubechies_is_asymmetric(self):
        assert symmetry_type(wt.daubechies(4).primal).kind == "none"


class TestAlgebraicInvariants:
    """Round trip, mass conservation, multiplicity/length/parity arithmetic."""

    def all_filters(self):
        for bank in wt.builtin_banks():
            yield bank.primal
            yield bank.dual

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_round_trip(self, s):
        for f in self.all_filters():
            back = binomial_reduce_dual(binomial_elevate_primal(f, s), s)
            assert back.offset == f.offset
            np.testing.assert_allclose(back.coeffs, f.coeffs, rtol=0, atol=1e-10)

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_mass_conserved(self, s):
        for f in self.all_filters():
            up = binomial_elevate_primal(f, s)
            assert abs(up.mass - f.mass) <= 1e-12
            assert abs(binomial_reduce_dual(up, s).mass - f.mass) <= 1e-12

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_multiplicity_arithmetic(self, s):
        for f in self.all_filters():
            m = root_multiplicity(f, -1)
            assert root_multiplicity(binomial_elevate_primal(f, s), -1) == m + s
            if m >= s:
                assert root_multiplicity(binomial_reduce_dual(f, s), -1) == m - s

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_length_arithmetic(self, s):
        for f in self.all_filters():
            assert len(binomial_elevate_primal(f, s)) == len(f) + s
            m = root_multiplicity(f, -1)
            if m >= s and len(f) > s:
                assert len(binomial_reduce_dual(f, s)) == len(f) - s

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_parity_center_shift(self, s):
        for f in self.all_filters():
            kind, center = symmetry_type(f)
            if kind == "none":
                continue
            up_kind, up_center = symmetry_type(binomial_elevate_primal(f, s))
            assert up_kind == kind
            assert up_center == pytest.approx(center + s / 2.0, abs=1e-12)

    def test_composition(self):
        import warnings

        for bank in (wt.cdf_spline(4, 4), wt.daubechies(4)):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", wt.DegenerateDualWarning)
                once_twice = elevate(elevate(bank, 1), 2)
                direct = elevate(bank, 3)
            assert once_twice.primal.offset == direct.primal.offset
            assert once_twice.dual.offset == direct.dual.offset
            np.testing.assert_allclose(
                once_twice.primal.coeffs, direct.primal.coeffs, rtol=0, atol=1e-12
            )
            np.testing.assert_allclose(
                once_twice.dual.coeffs, direct.dual.coeffs, rtol=0, atol=1e-12
            )

    def test_round_trip_random_filters(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            n = rng.integers(2, 20)
            c = rng.standard_normal(n)
            if abs(c.sum()) < 1e-3:
                c[0] += 1.0
            f = normalize(Filter(int(rng.integers(-5, 5)), c))
            s = int(rng.integers(1, 5))
            back = binomial_reduce_dual(binomial_elevate_primal(f, s), s)
            assert back.offset == f.offset
            np.testing.assert_allclose(back.coeffs, f.coeffs, rtol=0, atol=1e-10)


class TestBankValidation:
    def test_mismatched_pair_rejected(self):
        c22 = wt.cdf_spline(2, 2)
        with pytest.raises(wt.InvalidBank, match="residual"):
            FilterBank("broken", c22.primal, c22.primal).validate()

    def test_unnormalized_rejected(self):
        with pytest.raises(wt.InvalidBank, match="sum"):
            FilterBank("broken", Filter(0, [1.0, 1.0]), Filter(0, [0.5, 0.5])).validate()
