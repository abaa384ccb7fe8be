"""Index-1 vector algebra: products, causal classification, normalization."""

import numpy as np
import pytest

from surfrev.errors import NonRealVector, NullVector
from surfrev.lorentz import (
    CausalCharacter,
    LVec3,
    NormMode,
    causal_character,
    is_zero,
    lorentz_cross,
    lorentz_dot,
    lorentz_normalize,
)


def vec(a, b, c):
    return LVec3(complex(a), complex(b), complex(c))


class TestDot:
    def test_spacelike_basis(self):
        assert lorentz_dot(vec(1, 0, 0), vec(1, 0, 0)) == 1

    def test_timelike_axis(self):
        assert lorentz_dot(vec(0, 0, 1), vec(0, 0, 1)) == -1

    def test_bilinear_complex_extension(self):
        # bilinear, not conjugate-linear: <(0,i,0),(0,i,0)> = i^2 = -1
        assert lorentz_dot(vec(0, 1j, 0), vec(0, 1j, 0)) == -1

    def test_bilinearity_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a, b = rng.normal(size=2)
            x, y, z = (vec(*rng.normal(size=3)) for _ in range(3))
            lhs = lorentz_dot(LVec3(a * x.x1 + b * y.x1,
                                    a * x.x2 + b * y.x2,
                                    a * x.x3 + b * y.x3), z)
            rhs = a * lorentz_dot(x, z) + b * lorentz_dot(y, z)
            assert abs(lhs - rhs) < 1e-12 * (1 + abs(rhs))


class TestCross:
    def test_basis(self):
        w = lorentz_cross(vec(1, 0, 0), vec(0, 1, 0))
        assert (w.x1, w.x2, w.x3) == (0, 0, -1)

    def test_antisymmetric_self(self):
        x = vec(2.0, -3.0, 5.0)
        w = lorentz_cross(x, x)
        assert is_zero(w)

    def test_orthogonality_fixed(self):
        x, y = vec(1, 2, 3), vec(4, 5, 6)
        w = lorentz_cross(x, y)
        assert lorentz_dot(w, x) == 0
        assert lorentz_dot(w, y) == 0

    def test_orthogonality_random(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            x, y = (vec(*rng.normal(size=3)) for _ in range(2))
            w = lorentz_cross(x, y)
            scale = 1 + abs(lorentz_dot(w, w))
            assert abs(lorentz_dot(w, x)) < 1e-12 * scale
            assert abs(lorentz_dot(w, y)) < 1e-12 * scale


class TestCausalCharacter:
    def test_timelike(self):
        assert causal_character(vec(0, 0, 1)) is CausalCharacter.TIME_LIKE

    def test_lightlike(self):
        assert causal_character(vec(1, 0, 1)) is CausalCharacter.LIGHT_LIKE

    def test_zero_vector_is_spacelike(self):
        # convention: <X,X> > 0 or X = 0 counts as space-like
        assert causal_character(vec(0, 0, 0)) is CausalCharacter.SPACE_LIKE
        assert is_zero(vec(0, 0, 0))

    def test_complex_rejected(self):
        with pytest.raises(NonRealVector):
            causal_character(vec(1j, 0, 0))

    def test_no_causal_vector_orthogonal_to_timelike(self):
        # over 10^4 random draws, <T, C> never vanishes for time-like T and
        # causal (time-like or light-like) C
        rng = np.random.default_rng(42)
        count = 0
        while count < 10_000:
            x, y, z = rng.normal(size=3)
            t_vec = vec(x, y, np.sqrt(x * x + y * y + abs(z) + 0.1))
            if count % 2:
                u, v = rng.normal(size=2)
                r = np.hypot(u, v)
                c_vec = vec(u, v, np.copysign(r, rng.normal()))  # light-like
            else:
                u, v, w = rng.normal(size=3)
                c_vec = vec(u, v, np.sqrt(u * u + v * v + abs(w) + 0.05))
            assert abs(lorentz_dot(t_vec, c_vec)) > 0
            count += 1


class TestNormalize:
    def test_absolute_timelike(self):
        n, eps = lorentz_normalize(vec(0, 0, 2), NormMode.ABSOLUTE)
        assert eps == -1
        assert (n.x1, n.x2, n.x3) == (0, 0, 1)

    def test_absolute_spacelike(self):
        n, eps = lorentz_normalize(vec(2, 0, 0), NormMode.ABSOLUTE)
        assert eps == 1
        assert (n.x1, n.x2, n.x3) == (1, 0, 0)

    def test_bilinear_imaginary(self):
        # <(0,2i,0),(0,2i,0)> = (2i)^2 = -4, principal root 2i, so
        # N = (0,2i,0)/(2i) = (0,1,0) and <N,N> = +1 as required
        n, eps = lorentz_normalize(vec(0, 2j, 0), NormMode.BILINEAR)
        assert eps == 1
        assert abs(n.x2 - 1) < 1e-15
        assert abs(lorentz_dot(n, n) - 1) < 1e-15

    def test_null_rejected(self):
        with pytest.raises(NullVector):
            lorentz_normalize(vec(1, 0, 1), NormMode.ABSOLUTE)

    def test_absolute_requires_real(self):
        with pytest.raises(NonRealVector):
            lorentz_normalize(vec(2j, 0, 0), NormMode.ABSOLUTE)

    def test_norm_squared_equals_epsilon_random(self):
        rng = np.random.default_rng(3)
        done = 0
        while done < 300:
            x = vec(*rng.normal(size=3))
            q = complex(lorentz_dot(x, x)).real
            if abs(q) < 1e-3:
                continue
            n, eps = lorentz_normalize(x, NormMode.ABSOLUTE)
            assert abs(lorentz_dot(n, n) - eps) < 1e-12
            done += 1
