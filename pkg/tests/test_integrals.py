import math

import numpy as np
import pytest

from hhortho.core import INF, DimensionMismatchError, InnerProduct, Lp, \
    Tolerance, WeightedLp
from hhortho.integrals import (HHValues, hh_batch, hh_closed_form_ip,
                               hh_minus, hh_plus, hh_values)

from conftest import simpson_hh, spec_zoo


class TestKnownValues:
    """Frozen example values; every derived one is re-confirmed against the
    independent Simpson oracle."""

    def test_lp2_orthonormal(self):
        # integrand (1-t)^2 + t^2, integral 1/3 + 1/3
        assert hh_plus(Lp(2.0), [1, 0], [0, 1]) == pytest.approx(2 / 3, abs=1e-11)
        assert hh_minus(Lp(2.0), [1, 0], [0, 1]) == pytest.approx(2 / 3, abs=1e-11)

    def test_lp1_orthonormal(self):
        # integrand ((1-t) + t)^2 = 1
        assert hh_plus(Lp(1.0), [1, 0], [0, 1]) == pytest.approx(1.0, abs=1e-11)

    def test_sup_norm_split_integral(self):
        # integrand max(1-t, t)^2 integrates to 7/24 + 7/24 = 7/12
        v = hh_plus(Lp(INF), [1, 0], [0, 1])
        assert v == pytest.approx(7 / 12, abs=1e-11)
        assert v == pytest.approx(simpson_hh(Lp(INF), [1, 0], [0, 1]), abs=1e-9)

    def test_ip_minus_hand_value(self):
        # (5 + 10 - 1)/3 = 14/3
        spec = InnerProduct(np.eye(2))
        v = hh_minus(spec, [1, 2], [3, -1])
        assert v == pytest.approx(14 / 3, rel=1e-14)
        assert v == pytest.approx(simpson_hh(spec, [1, 2], [3, -1], sign=-1.0),
                                  rel=1e-9)

    def test_zero_second_vector(self, rng):
        for spec in spec_zoo(3, rng):
            x = rng.normal(size=3)
            from hhortho.core import norm
            expected = norm(spec, x) ** 2 / 3.0
            assert hh_minus(spec, x, np.zeros(3)) == pytest.approx(
                expected, rel=1e-9)

    def test_both_zero(self):
        v = hh_values(Lp(1.5), [0.0, 0.0], [0.0, 0.0])
        assert v.i_plus == 0.0 and v.i_minus == 0.0


class TestClosedForm:
    def test_hand_values(self):
        v = hh_closed_form_ip(np.eye(2), [1, 2], [3, -1])
        assert v.i_plus == pytest.approx(16 / 3, rel=1e-14)
        assert v.i_minus == pytest.approx(14 / 3, rel=1e-14)
        assert v.method == "closed-form"
        assert v.est_abs_error == 0.0

    def test_equal_vectors(self):
        # (1+1+1)/3 and (1+1-1)/3; directly int 1 dt and int (1-2t)^2 dt
        v = hh_closed_form_ip(np.eye(2), [1, 0], [1, 0])
        assert v.i_plus == pytest.approx(1.0, rel=1e-14)
        assert v.i_minus == pytest.approx(1 / 3, rel=1e-14)

    def test_orthogonal_pair_zero_gap(self):
        v = hh_closed_form_ip(np.eye(2), [1, 0], [0, 1])
        assert v.gap == 0.0
        assert v.i_plus == pytest.approx(2 / 3, rel=1e-14)

    def test_gap_and_total_identities(self, rng):
        a = rng.normal(size=(3, 3))
        g = a.T @ a + 3 * np.eye(3)
        x, y = rng.normal(size=3), rng.normal(size=3)
        v = hh_closed_form_ip(g, x, y)
        assert v.gap == v.i_plus - v.i_minus  # exact float identity
        assert v.total == v.i_plus + v.i_minus
        assert v.gap == pytest.approx((2 / 3) * (x @ g @ y), rel=1e-12)


class TestDispatch:
    def test_auto_uses_closed_form_for_ip(self):
        v = hh_values(InnerProduct(np.eye(2)), [1, 2], [3, -1])
        assert v.method == "closed-form"

    def test_auto_uses_quadrature_for_lp(self):
        v = hh_values(Lp(2.0), [1, 2], [3, -1])
        assert v.method == "quadrature"

    def test_forced_quadrature_on_ip(self):
        v = hh_values(InnerProduct(np.eye(2)), [1, 2], [3, -1],
                      method="quadrature")
        assert v.method == "quadrature"
        assert v.i_plus == pytest.approx(16 / 3, rel=1e-12)

    def test_closed_rejected_for_general_lp(self):
        from hhortho.core import InvalidSpecError
        with pytest.raises(InvalidSpecError):
            hh_values(Lp(1.0), [1, 0], [0, 1], method="closed")

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            hh_plus(Lp(2.0), [1, 0], [0, 1, 2])

    def test_values_round_trip(self):
        v = hh_values(Lp(2.0), [1, 2], [3, -1])
        assert HHValues.from_dict(v.to_dict()) == v


class TestQuadratureAgainstOracles:
    def test_oracle_equivalence_ip(self, rng):
        for dim in (2, 4, 6):
            a = rng.normal(size=(dim, dim))
            g = a.T @ a + dim * np.eye(dim)
            for _ in range(20):
                x, y = rng.normal(size=dim), rng.normal(size=dim)
                quad = hh_values(InnerProduct(g), x, y, method="quadrature")
                closed = hh_closed_form_ip(g, x, y)
                assert quad.i_plus == pytest.approx(closed.i_plus, rel=1e-9)
                assert quad.i_minus == pytest.approx(closed.i_minus, rel=1e-9)

    def test_simpson_cross_check_all_specs(self, rng):
        for spec in spec_zoo(3, rng):
            x = rng.normal(size=3) * 3.0
            y = rng.normal(size=3)
            v = hh_values(spec, x, y, method="quadrature")
            ref = simpson_hh(spec, x, y)
            assert v.i_plus == pytest.approx(ref, rel=5e-9, abs=1e-10)

    def test_error_estimate_is_honest(self, rng):
        for spec in (Lp(1.5), Lp(3.0), Lp(INF)):
            for _ in range(20):
                x, y = rng.normal(size=3), rng.normal(size=3)
                v = hh_values(spec, x, y, method="quadrature")
                ref = simpson_hh(spec, x, y)
                assert abs(v.i_plus - ref) <= max(5e-9 * abs(ref),
                                                  v.est_abs_error + 1e-9)


class TestInvariants:
    def test_symmetry_under_argument_swap(self, rng):
        for spec in spec_zoo(3, rng):
            x, y = rng.normal(size=3), rng.normal(size=3)
            assert hh_plus(spec, x, y) == pytest.approx(
                hh_plus(spec, y, x), rel=1e-9)
            assert hh_minus(spec, x, y) == pytest.approx(
                hh_minus(spec, y, x), rel=1e-9)

    def test_sign_flip(self, rng):
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            assert hh_plus(spec, x, -y) == pytest.approx(
                hh_minus(spec, x, y), rel=1e-9)

    def test_joint_scaling(self, rng):
        for spec in spec_zoo(3, rng):
            x, y = rng.normal(size=3), rng.normal(size=3)
            lam = rng.uniform(-10, 10)
            assert hh_plus(spec, lam * x, lam * y) == pytest.approx(
                lam * lam * hh_plus(spec, x, y), rel=1e-9)

    def test_triangle_bound(self, rng):
        from hhortho.core import norm
        for spec in spec_zoo(3, rng):
            x, y = rng.normal(size=3), rng.normal(size=3)
            nx, ny = norm(spec, x), norm(spec, y)
            bound = (nx * nx + ny * ny + nx * ny) / 3.0
            assert hh_plus(spec, x, y) <= bound * (1 + 1e-9) + 1e-12

    def test_nonnegativity_and_gap_bound(self, rng):
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            v = hh_values(spec, x, y)
            assert v.i_plus >= 0.0 and v.i_minus >= 0.0
            assert abs(v.gap) <= v.total + 1e-12


class TestBatch:
    def test_batch_matches_scalar(self, rng):
        for spec in spec_zoo(2, rng):
            X = rng.normal(size=(16, 2))
            Y = rng.normal(size=(16, 2))
            ip_, im, err = hh_batch(spec, X, Y)
            for i in range(16):
                v = hh_values(spec, X[i], Y[i],
                              method="auto" if isinstance(spec, InnerProduct)
                              else "quadrature")
                assert ip_[i] == pytest.approx(v.i_plus, rel=1e-10)
                assert im[i] == pytest.approx(v.i_minus, rel=1e-10)

    def test_tight_tolerance_respected(self, rng):
        tol = Tolerance(1e-13, 1e-12)
        x, y = rng.normal(size=3), rng.normal(size=3)
        v = hh_values(Lp(1.5), x, y, tol=tol, method="quadrature")
        ref = simpson_hh(Lp(1.5), x, y, n=400_000)
        assert v.i_plus == pytest.approx(ref, rel=1e-10)
