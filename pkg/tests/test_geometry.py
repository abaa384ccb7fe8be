"""Fundamental forms, Gauss map, Laplacian, curvatures on known charts."""

import numpy as np
import pytest

from surfrev import catalog
from surfrev.errors import ExcludedPoint
from surfrev.geometry import (
    FundamentalForms,
    delta_gauss_map,
    fundamental_forms,
    gauss_map,
    gaussian_curvature_ext,
    gaussian_curvature_intrinsic,
    laplace_beltrami,
    mean_curvature,
    pointwise_k,
    second_gaussian_curvature,
    sweep,
)

SQRT8 = np.sqrt(8.0)
SQRT3 = np.sqrt(3.0)


class TestFundamentalForms:
    def test_rev1_at_t0(self):
        ff = fundamental_forms(catalog.build("rev1"), 0.7, 0.0)
        assert abs(ff.E - 8.0) < 1e-12
        assert abs(ff.F) < 1e-12
        assert abs(ff.G - 1.0) < 1e-12

    def test_rev2s_at_t1(self):
        ff = fundamental_forms(catalog.build("rev2s"), 0.4, 1.0)
        assert abs(ff.E - 3.0) < 1e-12
        assert abs(ff.F) < 1e-12
        assert abs(ff.G - 1.0) < 1e-12

    def test_rev3_at_t1(self):
        ff = fundamental_forms(catalog.build("rev3"), 0.4, 1.0)
        assert abs(ff.E - 2.0) < 1e-12
        assert abs(ff.F) < 1e-12
        assert abs(ff.G + 1.0) < 1e-12

    def test_inverse_metric(self):
        ff = fundamental_forms(catalog.build("rev1"), 0.7, 0.5)
        g11, g12, g22 = ff.ginv
        assert abs(g11 * ff.E + g12 * ff.F - 1.0) < 1e-12
        assert abs(g12 * ff.E + g22 * ff.F) < 1e-12
        assert abs(g12 * ff.F + g22 * ff.G - 1.0) < 1e-12

    def test_excluded_point_raises(self):
        with pytest.raises(ExcludedPoint):
            fundamental_forms(catalog.build("enneper_conj2"), 0.1, 0.0)


class TestGaussMap:
    def test_rev1_reference(self):
        gm = gauss_map(catalog.build("rev1"), 0.0, 0.0)
        want = np.array([-1.0, 0.0, -3.0]) / SQRT8
        got = np.array([complex(c) for c in gm.N.components()])
        assert np.max(np.abs(got - want)) < 1e-12
        assert gm.epsilon == -1
        assert gm.target == "H2(-1)"

    def test_rev2s_honest_orientation(self):
        # the chart's actual normal at (0,1) for b=+2; the classical printed
        # formula corresponds to the b<0 convention (see the b=-2 test)
        gm = gauss_map(catalog.build("rev2s"), 0.0, 1.0)
        want = np.array([0.0, 1.0, 2.0]) / SQRT3
        got = np.array([complex(c) for c in gm.N.components()])
        assert np.max(np.abs(got - want)) < 1e-12
        assert gm.epsilon == -1

    def test_rev2s_negative_b_matches_printed_formula(self):
        # with b < 0 the raw chart normal IS (-b sinh s, t+a, -b cosh s)/phi
        b = -2.0
        gm = gauss_map(catalog.build("rev2s", {"a": 0.0, "b": b}), 0.7, 1.2)
        phi = np.sqrt(b * b - 1.2 ** 2)
        want = np.array([-b * np.sinh(0.7), 1.2, -b * np.cosh(0.7)]) / phi
        got = np.array([complex(c) for c in gm.N.components()])
        assert np.max(np.abs(got - want)) < 1e-12

    def test_rev3_complex_bilinear(self):
        gm = gauss_map(catalog.build("rev3"), 0.0, 1.0)
        want = np.array([-1.0, 0.0, -1.0j]) / np.sqrt(2.0)
        got = np.array([complex(c) for c in gm.N.components()])
        assert np.max(np.abs(got - want)) < 1e-12
        assert gm.epsilon == 1
        assert gm.target == "S2_1(1)"

    @pytest.mark.parametrize("sid", catalog.ENTRY_IDS)
    def test_unit_norm_and_tangency(self, sid):
        entry = catalog.get_entry(sid)
        patch = catalog.build(sid)
        (slo, shi), (tlo, thi) = entry.oracle_ranges(entry.default_params)
        rng = np.random.default_rng(2)
        s = rng.uniform(slo, shi, 50)
        t = rng.uniform(tlo, thi, 50)
        gm = gauss_map(patch, s, t)
        x = patch.jets(s, t, 1)
        xs = x.map(lambda j: j.deriv(1, 0))
        xt = x.map(lambda j: j.deriv(0, 1))
        nn = gm.N.dot(gm.N)
        assert np.max(np.abs(nn - np.asarray(gm.epsilon))) < 1e-10
        scale_s = 1 + max(np.max(np.abs(c)) for c in xs.components())
        scale_t = 1 + max(np.max(np.abs(c)) for c in xt.components())
        assert np.max(np.abs(gm.N.dot(xs))) < 1e-10 * scale_s
        assert np.max(np.abs(gm.N.dot(xt))) < 1e-10 * scale_t


class TestLaplaceBeltrami:
    def test_flat_s_squared(self, flat_patch):
        v = laplace_beltrami(flat_patch, lambda S, T: S * S, 0.3, -0.2)
        assert abs(v + 2.0) < 1e-12

    def test_flat_constant(self, flat_patch):
        from surfrev.jets import const
        v = laplace_beltrami(flat_patch, lambda S, T: S * 0.0 + 5.0, 0.3, -0.2)
        assert abs(v) < 1e-12

    def test_leading_minus_sign(self, flat_patch):
        # on the flat patch the operator reduces to -(d_ss + d_tt)
        v = laplace_beltrami(flat_patch, lambda S, T: S * S + T * T, 1.0, 2.0)
        assert abs(v + 4.0) < 1e-12

    def test_rev1_normal_component(self):
        patch = catalog.build("rev1")

        def n1_field(S, T):
            from surfrev import jets as J
            a, b = 3.0, 1.0
            u = T + a
            phi = J.sqrt_principal(u * u - b * b)
            return (-b) * J.cos(S) / phi  # first component of the oriented N

        v = laplace_beltrami(patch, n1_field, 0.0, 0.0)
        want = 2.0 * 8.0 ** (-2.5)
        assert abs(v - want) < 1e-12
        assert abs(complex(want) - 0.0110485) < 1e-7


class TestDeltaGaussMap:
    def test_rev1(self):
        dn = delta_gauss_map(catalog.build("rev1"), 0.0, 0.0)
        got = np.array([complex(c) for c in dn.components()])
        want = 2.0 * 8.0 ** (-2.5) * np.array([1.0, 0.0, 3.0])
        assert np.max(np.abs(got - want)) < 1e-12

    def test_rev2s(self):
        # DN = -2 b^2 (b^2-(t+a)^2)^(-5/2) times the unnormalized normal
        # direction; component signs follow the chart's honest orientation
        dn = delta_gauss_map(catalog.build("rev2s"), 0.0, 1.0)
        got = np.array([complex(c) for c in dn.components()])
        mag = 2.0 * 4.0 * 3.0 ** (-2.5)
        want = -mag * np.array([0.0, 1.0, 2.0])
        assert np.max(np.abs(got - want)) < 1e-12
        assert abs(got[1] - (-0.51320024)) < 1e-7

    def test_torus_fixture_from_fd_pipeline(self):
        # frozen from the finite-difference oracle run
        dn = delta_gauss_map(catalog.build("torus_control"), 0.5, 0.5)
        got = np.array([complex(c) for c in dn.components()])
        want = np.array([62.62003242459496, 34.209479627565266, -91.36544237870562])
        assert np.max(np.abs(got - want)) < 2e-6


class TestPointwiseK:
    def test_rev1(self):
        k, res = pointwise_k(catalog.build("rev1"), 0.0, 0.0)
        assert abs(k - (-1.0 / 32.0)) < 1e-12
        assert float(np.max(np.abs(res))) < 1e-10

    def test_rev3(self):
        k, res = pointwise_k(catalog.build("rev3"), 0.0, 1.0)
        assert abs(k - (-0.5)) < 1e-12
        assert float(np.max(np.abs(res))) < 1e-10

    def test_torus_not_one_type(self):
        k, res = pointwise_k(catalog.build("torus_control"), 0.5, 0.5)
        assert float(np.max(np.abs(res))) > 0.01
        # fixture from the oracle run
        assert abs(float(np.real(k)) - 25.599673) < 1e-4


class TestCurvatures:
    def test_mean_curvature_rev1_grid(self):
        patch = catalog.build("rev1")
        s = np.linspace(0.0, 6.2, 16)
        t = np.linspace(0.6, 2.9, 16)
        S, T = np.meshgrid(s, t)
        sw = sweep(patch, S, T)
        assert np.max(np.abs(sw["H"])) < 1e-10

    def test_mean_curvature_unit_forms(self):
        ff = FundamentalForms(E=1.0, F=0.0, G=1.0, e=1.0, f=0.0, g=1.0,
                              detg=1.0, ginv=(1.0, 0.0, 1.0))
        assert mean_curvature(ff) == 1.0
        assert gaussian_curvature_ext(ff) == 1.0

    def test_mean_curvature_torus_nonzero(self):
        ff = fundamental_forms(catalog.build("torus_control"), 0.0, 0.0)
        assert abs(mean_curvature(ff)) > 0.1

    def test_gaussian_ext_plane(self, flat_patch):
        ff = fundamental_forms(flat_patch, 0.1, 0.2)
        assert abs(gaussian_curvature_ext(ff)) < 1e-14

    def test_gaussian_ext_rev1(self):
        ff = fundamental_forms(catalog.build("rev1"), 0.7, 0.0)
        # e = b, g = -b/((t+a)^2-b^2), so eg - f^2 = -1/8 and K = -1/64
        assert abs(ff.e - 1.0) < 1e-12
        assert abs(ff.g + 1.0 / 8.0) < 1e-12
        assert abs(gaussian_curvature_ext(ff) + 1.0 / 64.0) < 1e-12

    def test_intrinsic_plane(self, flat_patch):
        assert abs(gaussian_curvature_intrinsic(flat_patch, 0.1, 0.2)) < 1e-14

    def test_intrinsic_matches_ext_rev1(self):
        patch = catalog.build("rev1")
        ki = gaussian_curvature_intrinsic(patch, 0.7, 0.0)
        ff = fundamental_forms(patch, 0.7, 0.0)
        assert abs(ki - gaussian_curvature_ext(ff)) < 1e-10

    def test_intrinsic_matches_ext_timelike(self):
        patch = catalog.build("rev3")
        ki = gaussian_curvature_intrinsic(patch, 0.4, 1.0)
        ff = fundamental_forms(patch, 0.4, 1.0)
        assert abs(ki - gaussian_curvature_ext(ff)) < 1e-10

    def test_theorema_egregium_pair(self):
        # helicoid and revolution surface share E(t), so K_int agrees at
        # matched t levels
        k_h = gaussian_curvature_intrinsic(catalog.build("hel1"), 1.3, 0.8)
        k_r = gaussian_curvature_intrinsic(catalog.build("rev1"), 0.2, 0.8)
        assert abs(k_h - k_r) < 1e-10

    def test_second_gaussian_zero_row_structure(self):
        # on the 1st-kind surfaces e is constant, f vanishes and g depends
        # on t alone, so the first rows of both determinants vanish and
        # K_II = 0; fixture cross-checked against the fd pipeline
        v_rev = second_gaussian_curvature(catalog.build("rev1"), 0.3, 0.5)
        v_hel = second_gaussian_curvature(catalog.build("hel1"), 0.3, 0.5)
        assert abs(v_rev) < 1e-12
        assert abs(v_hel) < 1e-12

    def test_second_gaussian_conventions_differ(self):
        # the prefactors (|eg|-f^2)^2 and (eg-f^2)^2 only differ when f != 0
        # and eg < 0; a saddle graph z = s^2 - t^2 + 0.3 s t has both
        from surfrev.geometry import SurfacePatch
        from surfrev.lorentz import NormMode

        saddle = SurfacePatch(
            label="saddle",
            chart=lambda S, T: (S, T, S * S - T * T + 0.3 * S * T),
            domain=(-1.0, 1.0, -1.0, 1.0), norm_mode=NormMode.ABSOLUTE)
        ff = fundamental_forms(saddle, 0.15, 0.1)
        assert abs(ff.f) > 1e-3 and (ff.e * ff.g).real < 0
        printed = second_gaussian_curvature(saddle, 0.15, 0.1, convention="printed")
        signed = second_gaussian_curvature(saddle, 0.15, 0.1, convention="signed")
        assert abs(printed - signed) > 1e-6


class TestNegativeControlGrid:
    def test_torus_fails_both(self):
        patch, S, T = _torus_grid()
        sw = sweep(patch, S, T)
        assert np.max(np.abs(sw["H"])) > 0.1
        assert np.max(sw["residual"]) > 0.01


def _torus_grid():
    entry = catalog.get_entry("torus_control")
    patch = catalog.build("torus_control")
    s0, s1, t0, t1 = entry.grid_domain(entry.default_params)
    s = np.linspace(s0, s1, 32, endpoint=False)
    t = np.linspace(t0 + 0.02 * (t1 - t0), t1 - 0.02 * (t1 - t0), 32)
    S, T = np.meshgrid(s, t)
    return patch, S, T
