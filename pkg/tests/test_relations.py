import math

import numpy as np
import pytest

from hhortho.core import INF, InnerProduct, InvalidSpecError, Lp, WeightedLp
from hhortho.relations import (EPS_RELATIONS, RELATION_IDS, OrthoVerdict,
                               birkhoff, chmielinski_birkhoff, classic,
                               dragomir_birkhoff, eps_inner, evaluate,
                               hh_absolute, hh_exact, hh_relative,
                               iso_additive, iso_multiplicative, isosceles)

from conftest import spec_zoo

I2 = np.eye(2)
# boundary pair: <x, y> = 0.9 = 0.45 * ||x|| * ||y|| with ||x|| = 2, ||y|| = 1
X_BND = np.array([2.0, 0.0])
Y_BND = np.array([0.45, math.sqrt(0.7975)])


class TestClassic:
    def test_standard_basis(self):
        assert classic(I2, [1, 0], [0, 1]).holds

    def test_zero_dot(self):
        assert classic(I2, [1, 1], [1, -1]).holds

    def test_hand_dot_product_fails(self):
        v = classic(I2, [1, 2], [3, -1])
        assert not v.holds
        assert v.details["inner"] == pytest.approx(1.0)


class TestBirkhoff:
    def test_sup_norm_holds(self):
        assert birkhoff(Lp(INF), [1, 1], [0, 1]).holds

    def test_euclidean_fails_with_minimizer(self):
        # minimize 2a^2 + 2a + 1 by hand: a = -1/2, min norm 1/sqrt(2)
        v = birkhoff(Lp(2.0), [1, 0], [1, 1])
        assert not v.holds
        assert v.details["min_value"] == pytest.approx(1 / math.sqrt(2), rel=1e-9)
        assert v.details["t_star"] == pytest.approx(-0.5, abs=1e-6)

    def test_ip_matches_classic(self):
        v = birkhoff(InnerProduct(I2), [1, 0], [0, 1])
        assert v.holds
        assert abs(v.details["t_star"]) < 1e-6


class TestIsosceles:
    def test_lp1_unit_pair(self):
        assert isosceles(Lp(1.0), [1, 0], [0, 1]).holds

    def test_euclidean_fails(self):
        # sqrt(5) vs 1
        assert not isosceles(Lp(2.0), [1, 0], [1, 1]).holds

    def test_zero_vector_degenerate(self):
        v = isosceles(Lp(2.0), [1, 0], [0, 0])
        assert v.holds and v.details["degenerate"]


class TestEpsInner:
    def test_orthogonal_any_eps(self):
        assert eps_inner(I2, [1, 0], [0, 1], 0.0).holds

    def test_unit_diagonal_fails_at_half(self):
        y = np.array([1.0, 1.0]) / math.sqrt(2)
        v = eps_inner(I2, [1, 0], y, 0.5)
        assert not v.holds  # |<x,y>| = 0.707 > 0.5

    def test_boundary_pair(self):
        v = eps_inner(I2, X_BND, Y_BND, 0.45)
        assert v.holds
        assert v.margin == pytest.approx(0.0, abs=1e-12)

    def test_eps_range_enforced(self):
        with pytest.raises(InvalidSpecError):
            eps_inner(I2, [1, 0], [0, 1], 1.0)


class TestDragomir:
    def test_near_one_limit(self, rng):
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            v = dragomir_birkhoff(spec, x, y, 0.999999)
            from hhortho.solvers import minimize_norm_on_line
            from hhortho.core import norm
            _, mn = minimize_norm_on_line(spec, x, y)
            if mn > 1e-6 * norm(spec, x):
                assert v.holds

    def test_threshold_cases(self):
        assert dragomir_birkhoff(Lp(2.0), [1, 0], [1, 1], 0.3).holds
        assert not dragomir_birkhoff(Lp(2.0), [1, 0], [1, 1], 0.2).holds


class TestChmielinski:
    def test_eps_one_always_holds(self, rng):
        # algebraic identity: ||x+ty||^2 + 2||x|| ||ty|| >= ||x||^2
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            assert chmielinski_birkhoff(spec, x, y, 1.0).holds

    def test_ip_reduction_to_eps_inner(self):
        # in inner-product spaces the relation is |<x,y>| <= eps ||x|| ||y||
        y = np.array([1.0, 1.0]) / math.sqrt(2)
        assert not chmielinski_birkhoff(InnerProduct(I2), [1, 0], y, 0.70).holds
        assert chmielinski_birkhoff(InnerProduct(I2), [1, 0], y, 0.71).holds

    def test_ip_reduction_fine_grid_oracle(self, rng):
        # brute-force the infimum over t on a fine grid and compare verdicts
        a = rng.normal(size=(2, 2))
        g = a.T @ a + 2 * I2
        spec = InnerProduct(g)
        for _ in range(25):
            x, y = rng.normal(size=2), rng.normal(size=2)
            eps = rng.uniform(0.05, 0.9)
            nx = math.sqrt(x @ g @ x)
            ny = math.sqrt(y @ g @ y)
            ts = np.linspace(-4 * nx / ny, 4 * nx / ny, 40001)
            vt = x[None, :] + ts[:, None] * y[None, :]
            q = np.einsum("ti,ij,tj->t", vt, g, vt) + 2 * eps * nx * ny * np.abs(ts)
            grid_holds = q.min() >= nx * nx * (1 - 1e-7)
            verdict = chmielinski_birkhoff(spec, x, y, eps)
            ip_holds = abs(x @ g @ y) <= eps * nx * ny
            if abs(abs(x @ g @ y) - eps * nx * ny) > 1e-6 * nx * ny:
                assert verdict.holds == ip_holds == grid_holds

    def test_zero_y_degenerate(self):
        v = chmielinski_birkhoff(Lp(2.0), [1, 0], [0, 0], 0.5)
        assert v.holds and v.details["degenerate"]


class TestIsoApprox:
    def test_exact_pair_both_hold(self):
        for eps in (0.0, 0.3, 0.9):
            assert iso_additive(Lp(2.0), [1, 0], [0, 1], eps).holds
            if eps > 0.0:
                assert iso_multiplicative(Lp(2.0), [1, 0], [0, 1], eps).holds

    def test_additive_threshold(self):
        # ||x+y||^2 - ||x-y||^2 = 4 <x,y> = 3.6; holds iff 3.6 <= 8 eps
        assert iso_additive(InnerProduct(I2), X_BND, Y_BND, 0.45).holds
        assert not iso_additive(InnerProduct(I2), X_BND, Y_BND, 0.4499).holds

    def test_multiplicative_degenerate_rhs(self):
        v = iso_multiplicative(Lp(2.0), [1.0, 0.0], [1.0, 0.0], 0.5)
        assert not v.holds
        assert v.details["degenerate_rhs"]


class TestHHExact:
    def test_lp1_pair(self):
        assert hh_exact(Lp(1.0), [1, 0], [0, 1]).holds

    def test_ip_orthogonal(self, rng):
        a = rng.normal(size=(3, 3))
        g = a.T @ a + 3 * np.eye(3)
        x = rng.normal(size=3)
        y = rng.normal(size=3)
        y = y - (x @ g @ y) / (x @ g @ x) * x
        assert hh_exact(InnerProduct(g), x, y).holds

    def test_ip_fails_with_gap(self):
        v = hh_exact(InnerProduct(I2), [1, 2], [3, -1])
        assert not v.holds
        assert v.details["gap"] == pytest.approx(2 / 3, rel=1e-12)


class TestHHRelative:
    def test_boundary_pair_holds_at_02(self):
        v = hh_relative(InnerProduct(I2), X_BND, Y_BND, 0.2)
        assert v.holds
        assert v.margin == pytest.approx(2 / 30, rel=1e-9)  # 0.2*10/3 - 0.6

    def test_boundary_pair_fails_at_015(self):
        v = hh_relative(InnerProduct(I2), X_BND, Y_BND, 0.15)
        assert not v.holds
        assert v.margin == pytest.approx(-0.1, rel=1e-9)

    def test_eps_zero_matches_exact(self, rng):
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            assert hh_relative(spec, x, y, 0.0).holds == \
                hh_exact(spec, x, y).holds

    def test_ratio_sandwich_in_details(self):
        v = hh_relative(Lp(2.0), X_BND, Y_BND, 0.2)
        assert v.details["ratio_lo"] == pytest.approx(0.8 / 1.2)
        assert v.details["ratio_hi"] == pytest.approx(1.2 / 0.8)
        assert v.details["ratio"] == pytest.approx(
            v.details["i_plus"] / v.details["i_minus"])


class TestHHAbsolute:
    def test_threshold_at_045(self):
        # gap 0.6 vs (2/3) eps ||x|| ||y|| = (4/3) eps
        assert hh_absolute(InnerProduct(I2), X_BND, Y_BND, 0.45).holds
        assert not hh_absolute(InnerProduct(I2), X_BND, Y_BND, 0.4499).holds

    def test_orthogonal_pair_eps_zero(self):
        assert hh_absolute(InnerProduct(I2), [1, 0], [0, 1], 0.0).holds

    def test_stricter_than_relative_on_boundary_pair(self):
        # absolute needs eps >= 0.45 here, relative only eps >= 0.18
        assert hh_relative(InnerProduct(I2), X_BND, Y_BND, 0.2).holds
        assert not hh_absolute(InnerProduct(I2), X_BND, Y_BND, 0.2).holds


class TestCrossRelationProperties:
    def test_symmetry_of_approximate_relations(self, rng):
        for spec in spec_zoo(2, rng):
            for _ in range(10):
                x, y = rng.normal(size=2), rng.normal(size=2)
                eps = rng.uniform(0.01, 0.9)
                assert hh_relative(spec, x, y, eps).holds == \
                    hh_relative(spec, y, x, eps).holds
                assert hh_absolute(spec, x, y, eps).holds == \
                    hh_absolute(spec, y, x, eps).holds

    def test_negation_invariance(self, rng):
        for spec in spec_zoo(2, rng):
            x, y = rng.normal(size=2), rng.normal(size=2)
            eps = 0.3
            base = (hh_exact(spec, x, y).holds,
                    hh_relative(spec, x, y, eps).holds,
                    hh_absolute(spec, x, y, eps).holds)
            assert base == (hh_exact(spec, x, -y).holds,
                            hh_relative(spec, x, -y, eps).holds,
                            hh_absolute(spec, x, -y, eps).holds)
            assert base == (hh_exact(spec, -x, -y).holds,
                            hh_relative(spec, -x, -y, eps).holds,
                            hh_absolute(spec, -x, -y, eps).holds)

    def test_eps_monotone_margins(self, rng):
        gram = np.eye(3)
        spec = InnerProduct(gram)
        for _ in range(10):
            x, y = rng.normal(size=3), rng.normal(size=3)
            e1, e2 = sorted(rng.uniform(0.01, 0.95, 2))
            for rel in ("eps_inner", "hh_relative", "hh_absolute",
                        "dragomir_birkhoff", "chmielinski_birkhoff"):
                m1 = evaluate(rel, spec, x, y, e1).margin
                m2 = evaluate(rel, spec, x, y, e2).margin
                assert m1 <= m2 + 1e-12

    def test_absolute_implies_relative(self, rng):
        for spec in spec_zoo(2, rng):
            for _ in range(30):
                x, y = rng.normal(size=2), rng.normal(size=2)
                eps = rng.uniform(0.01, 0.9)
                if hh_absolute(spec, x, y, eps).holds:
                    assert hh_relative(spec, x, y, eps).holds

    def test_pro3_absolute_iff_eps_inner(self, rng):
        a = rng.normal(size=(2, 2))
        g = a.T @ a + 2 * I2
        spec = InnerProduct(g)
        for _ in range(200):
            x, y = rng.normal(size=2), rng.normal(size=2)
            eps = rng.uniform(0.01, 0.9)
            va = hh_absolute(spec, x, y, eps)
            vi = eps_inner(g, x, y, eps)
            if abs(vi.margin) > 1e-9 * (1 + abs(vi.margin)):
                assert va.holds == vi.holds

    def test_pro3_relative_energy_threshold(self, rng):
        a = rng.normal(size=(2, 2))
        g = a.T @ a + 2 * I2
        spec = InnerProduct(g)
        for _ in range(200):
            x, y = rng.normal(size=2), rng.normal(size=2)
            eps = rng.uniform(0.01, 0.9)
            vr = hh_relative(spec, x, y, eps)
            nx2, ny2 = x @ g @ x, y @ g @ y
            thr = eps * (nx2 + ny2) - abs(x @ g @ y)
            if abs(thr) > 1e-9 * (nx2 + ny2):
                assert vr.holds == (thr >= 0)

    def test_double_eps_inner_implies_relative(self, rng):
        g = np.eye(3)
        spec = InnerProduct(g)
        for _ in range(200):
            x, y = rng.normal(size=3), rng.normal(size=3)
            eps = rng.uniform(0.01, 0.45)
            if eps_inner(g, x, y, 2 * eps).holds:
                assert hh_relative(spec, x, y, eps).holds

    def test_absolute_homogeneity_in_ip(self, rng):
        spec = InnerProduct(I2)
        for _ in range(100):
            x, y = rng.normal(size=2), rng.normal(size=2)
            eps = rng.uniform(0.05, 0.9)
            a, b = rng.uniform(0.1, 10, 2) * rng.choice([-1, 1], 2)
            va = hh_absolute(spec, x, y, eps)
            vb = hh_absolute(spec, a * x, b * y, eps)
            if abs(va.margin) > 1e-9:
                assert va.holds == vb.holds


class TestDegenerateAndDispatch:
    def test_zero_inputs_hold_everywhere(self):
        zero = [0.0, 0.0]
        x = [1.0, 2.0]
        for rel in RELATION_IDS:
            eps = 0.5 if rel in EPS_RELATIONS else None
            v = evaluate(rel, Lp(2.0), x, zero, eps)
            assert v.holds and v.details["degenerate"]
            v = evaluate(rel, Lp(2.0), zero, x, eps)
            assert v.holds and v.details["degenerate"]

    def test_unknown_relation(self):
        with pytest.raises(InvalidSpecError):
            evaluate("roberts", Lp(2.0), [1, 0], [0, 1])

    def test_eps_argument_policing(self):
        with pytest.raises(InvalidSpecError):
            evaluate("hh_relative", Lp(2.0), [1, 0], [0, 1])  # missing eps
        with pytest.raises(InvalidSpecError):
            evaluate("hh_exact", Lp(2.0), [1, 0], [0, 1], eps=0.1)

    def test_ip_relations_need_ip_like_norm(self):
        with pytest.raises(InvalidSpecError):
            evaluate("classic", Lp(1.0), [1, 0], [0, 1])
        # lp:2 and wlp:2 imply Gram matrices
        assert evaluate("classic", Lp(2.0), [1, 0], [0, 1]).holds
        assert evaluate("classic", WeightedLp(2.0, [1.0, 2.0]),
                        [1, 0], [0, 1]).holds

    def test_verdict_round_trip(self):
        v = evaluate("hh_relative", Lp(2.0), X_BND, Y_BND, 0.2)
        assert OrthoVerdict.from_dict(v.to_dict()) == v
