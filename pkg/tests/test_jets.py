"""Truncated Taylor arithmetic and the finite-difference oracle."""

import numpy as np
import pytest

from surfrev import catalog
from surfrev import jets as J
from surfrev.errors import DivisionByZeroValue, DomainError, StencilOutsideDomain
from surfrev.jets import Jet2, const, fd_oracle, jet_arith, jet_func, seed


def rand_jet(rng, order=3, shape=()):
    d = rng.normal(size=(order + 1, order + 1) + shape) \
        + 1j * rng.normal(size=(order + 1, order + 1) + shape)
    for i in range(order + 1):
        for j in range(order + 1):
            if i + j > order:
                d[i, j] = 0.0
    return Jet2(order, d.astype(np.complex128))


class TestArithmetic:
    def test_product_of_variables(self):
        S, T = seed(2.0, 3.0, 2)
        p = S * T
        assert p.value == 6
        assert p.deriv(1, 0) == 3
        assert p.deriv(0, 1) == 2
        assert p.deriv(1, 1) == 1
        assert p.deriv(2, 0) == 0
        assert p.deriv(0, 2) == 0

    def test_add_neg_cancels(self):
        S, T = seed(1.3, -0.4, 3)
        f = J.sin(S) * T + J.exp(T)
        z = jet_arith("add", f, jet_arith("neg", f))
        assert np.max(np.abs(z.d)) == 0

    def test_div_self_is_one(self):
        S, _ = seed(5.0, 0.0, 2)
        q = jet_arith("div", S, S)
        assert q.value == 1
        assert abs(q.deriv(1, 0)) < 1e-15
        assert abs(q.deriv(2, 0)) < 1e-15

    def test_div_by_zero_value(self):
        Z = const(0.0, 2)
        with pytest.raises(DivisionByZeroValue):
            jet_arith("div", const(1.0, 2), Z)

    def test_mismatched_orders_rejected(self):
        with pytest.raises(ValueError):
            jet_arith("add", const(1.0, 2), const(1.0, 3))

    def test_add_mul_commute_and_associate(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            f, g, h = (rand_jet(rng) for _ in range(3))
            ab = (f + g).d - (g + f).d
            assert np.max(np.abs(ab)) < 1e-12
            mm = (f * g).d - (g * f).d
            assert np.max(np.abs(mm)) < 1e-12 * (1 + np.max(np.abs((f * g).d)))
            assoc = ((f * g) * h).d - (f * (g * h)).d
            assert np.max(np.abs(assoc)) < 1e-12 * (1 + np.max(np.abs(((f * g) * h).d)))


class TestElementaryFunctions:
    def test_sin_jets_at_zero(self):
        S, _ = seed(0.0, 0.0, 3)
        f = jet_func("sin", S)
        assert f.value == 0
        assert f.deriv(1, 0) == 1
        assert f.deriv(2, 0) == 0
        assert f.deriv(3, 0) == -1

    def test_hyperbolic_identity_constant(self):
        S, _ = seed(0.7, 0.0, 4)
        one = J.cosh(S) * J.cosh(S) - J.sinh(S) * J.sinh(S)
        assert abs(one.value - 1) < 1e-12
        rest = one.d.copy()
        rest[0, 0] = 0
        assert np.max(np.abs(rest)) < 1e-12

    def test_sqrt_principal_negative_constant(self):
        f = jet_func("sqrt_principal", const(-4.0, 2))
        assert f.value == 2j

    def test_sqrt_abs_negative_branch(self):
        S, _ = seed(-2.5, 0.0, 2)
        f = J.sqrt_abs(S)
        assert abs(f.value - np.sqrt(2.5)) < 1e-15
        assert abs(f.deriv(1, 0) + 0.5 / np.sqrt(2.5)) < 1e-15

    def test_sqrt_abs_rejects_complex(self):
        with pytest.raises(DomainError):
            J.sqrt_abs(const(1j, 2))

    def test_asin_domain(self):
        with pytest.raises(DomainError):
            J.asin(const(1.5, 2))

    def test_acosh_domain(self):
        with pytest.raises(DomainError):
            J.acosh(const(0.5, 2))

    def test_powi(self):
        S, _ = seed(2.0, 0.0, 3)
        f = jet_func("powi", S, n=3)
        assert f.value == 8
        assert f.deriv(1, 0) == 12
        assert f.deriv(2, 0) == 12
        assert f.deriv(3, 0) == 6
        g = jet_func("powi", S, n=-1)
        assert abs(g.deriv(1, 0) + 0.25) < 1e-15

    @pytest.mark.parametrize("fn,point", [
        ("sin", 0.4), ("cos", 0.4), ("sinh", 0.4), ("cosh", 0.4), ("exp", 0.4),
        ("sqrt_principal", 1.7), ("recip", 1.7), ("asin", 0.3), ("acosh", 1.8),
    ])
    def test_derivative_sequences_against_fd(self, fn, point):
        scalar = {
            "sin": np.sin, "cos": np.cos, "sinh": np.sinh, "cosh": np.cosh,
            "exp": np.exp, "sqrt_principal": np.sqrt, "recip": lambda v: 1 / v,
            "asin": np.arcsin, "acosh": np.arccosh,
        }[fn]
        S, _ = seed(point, 0.0, 4)
        jet = jet_func(fn, S)
        for order, h, tol in [(1, 1e-3, 1e-9), (2, 1e-3, 1e-7),
                              (3, 1e-2, 1e-6), (4, 2e-2, 1e-4)]:
            ref = fd_oracle(lambda s, t: scalar(s), (point, 0.0), (order, 0), h)
            assert abs(jet.deriv(order, 0) - ref) < tol * (1 + abs(ref))


class TestAntiderivative:
    def test_t_only_integrand(self):
        # F(t) = int sqrt(t) dt with supplied value; derivatives follow the
        # integrand jet, s-derivatives vanish
        _, T = seed(0.0, 4.0, 3)
        F = J.antiderivative_t(T, lambda tj: J.sqrt_principal(tj),
                               lambda t: (2.0 / 3.0) * t ** 1.5)
        assert abs(F.value - (2.0 / 3.0) * 8.0) < 1e-14
        assert abs(F.deriv(0, 1) - 2.0) < 1e-14
        assert abs(F.deriv(0, 2) - 0.25) < 1e-14
        assert F.deriv(1, 0) == 0


class TestFdOracle:
    def test_polynomial_exactness(self):
        v = fd_oracle(lambda s, t: s * s * t, (1.0, 1.0), (2, 1), h=1e-2)
        assert abs(v - 2.0) < 1e-6

    def test_sin_first_derivative(self):
        v = fd_oracle(lambda s, t: np.sin(s), (0.0, 0.0), (1, 0), h=1e-3)
        assert abs(v - 1.0) < 1e-9

    def test_rev1_metric_derivative_matches_closed_form(self):
        # dE/dt = 2(t+a) for the 1st-kind revolution surface
        patch = catalog.build("rev1")

        def e_field(s, t):
            from surfrev.geometry import sweep
            return sweep(patch, np.atleast_1d(s), np.atleast_1d(t))["E"]

        v = fd_oracle(e_field, (0.3, 0.5), (0, 1), h=1e-2)
        assert abs(complex(np.asarray(v).ravel()[0]) - 7.0) < 1e-6

    def test_stencil_domain_guard(self):
        with pytest.raises(StencilOutsideDomain):
            fd_oracle(lambda s, t: s, (0.0, 0.0), (0, 1), h=1e-2,
                      bounds=((-1.0, 1.0), (0.0, 1.0), False))

    def test_order_cap(self):
        with pytest.raises(ValueError):
            fd_oracle(lambda s, t: s, (0.0, 0.0), (3, 2), h=1e-2)


class TestImmersionJetsAgainstOracle:
    @pytest.mark.parametrize("sid", catalog.ENTRY_IDS)
    def test_partials_to_order_three(self, sid):
        # jet partials of the chart match the fd oracle at 100 seeded points
        entry = catalog.get_entry(sid)
        patch = catalog.build(sid)
        (slo, shi), (tlo, thi) = entry.oracle_ranges(entry.default_params)
        rng = np.random.default_rng(123)
        s = rng.uniform(slo, shi, 100)
        t = rng.uniform(tlo, thi, 100)
        x = patch.jets(s, t, 3)
        bounds = ((patch.domain[0], patch.domain[1]),
                  (patch.domain[2], patch.domain[3]), patch.periodic_s)
        fields = [lambda ss, tt, c=c: patch.point(ss, tt).components()[c]
                  for c in range(3)]
        h_for = {0: 1e-3, 1: 1e-3, 2: 2e-3, 3: 6e-3}
        for i in range(4):
            for j in range(4 - i):
                for c in range(3):
                    jet_val = x.components()[c].deriv(i, j)
                    ora = fd_oracle(fields[c], (s, t), (i, j),
                                    h=h_for[i + j], bounds=bounds)
                    diff = np.max(np.abs(jet_val - ora)
                                  / (1 + np.maximum(np.abs(jet_val), np.abs(ora))))
                    assert diff < 1e-6, (sid, i, j, c, diff)
