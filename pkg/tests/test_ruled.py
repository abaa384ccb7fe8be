"""Ruled-surface taxonomy and the along-ruling constancy predicate."""

import numpy as np
import pytest

from surfrev import catalog
from surfrev import jets as J
from surfrev.errors import InconsistentCharacter
from surfrev.lorentz import LVec3, NormMode
from surfrev.ruled import RuledSurface, RuledType, classify_ruled, constancy_along_rulings

S_SAMPLES = np.linspace(-0.8, 0.8, 7)


class TestClassification:
    def test_hel1_default(self):
        r = catalog.ruled_decomposition("hel1")
        assert classify_ruled(r, S_SAMPLES) is RuledType.M1_PLUS

    def test_hel2s_default(self):
        r = catalog.ruled_decomposition("hel2s")
        assert classify_ruled(r, S_SAMPLES) is RuledType.M1_PLUS

    def test_hel2t_default(self):
        # base velocity has <a',a'> = b^2 - a^2 < 0: the minus family
        r = catalog.ruled_decomposition("hel2t", {"a": 3.0, "b": -1.0})
        assert classify_ruled(r, S_SAMPLES) is RuledType.M1_MINUS

    def test_hel3_wide_director(self):
        # time-like director (0, sinh s, cosh s) forces the superscript-3 type
        r = catalog.ruled_decomposition("hel3", {"a": 0.0, "b": 2.0})
        assert classify_ruled(r, S_SAMPLES) is RuledType.M3_PLUS

    def test_invariant_under_director_rescaling(self):
        base = catalog.ruled_decomposition("hel1")
        scaled = RuledSurface(
            label="scaled", alpha=base.alpha,
            beta=lambda s_jet: base.beta(s_jet).map(lambda c: 2.5 * c),
            domain=base.domain, norm_mode=base.norm_mode)
        assert classify_ruled(scaled, S_SAMPLES) is classify_ruled(base, S_SAMPLES)

    def test_null_scroll(self):
        # alpha'(s) = (1, 0, 1) light-like, beta = (cosh s, 0, cosh s)
        # light-like as well (beta' may vanish at s = 0; it is irrelevant)
        r = RuledSurface(
            label="scroll",
            alpha=lambda s: LVec3(s, 0.0 * s, s),
            beta=lambda s: LVec3(J.cosh(s), 0.0 * s, J.cosh(s)),
            domain=(-1.0, 1.0, -1.0, 1.0))
        assert classify_ruled(r, S_SAMPLES) is RuledType.NULL_SCROLL

    def test_m2_plus_lightlike_director_derivative(self):
        # alpha' space-like, beta space-like, beta' light-like
        r = RuledSurface(
            label="m2",
            alpha=lambda s: LVec3(s, 0.0 * s, 0.0 * s),
            beta=lambda s: LVec3(1.0 + 0.0 * s, s, s),
            domain=(-1.0, 1.0, -1.0, 1.0))
        assert classify_ruled(r, S_SAMPLES) is RuledType.M2_PLUS

    def test_inconsistent_character_raises(self):
        # <a', a'> = s^4 - 1 changes sign across |s| = 1
        r = RuledSurface(
            label="mixed",
            alpha=lambda s: LVec3(J.powi(s, 3) * (1.0 / 3.0), 0.0 * s, s),
            beta=lambda s: LVec3(0.0 * s, 1.0 + 0.0 * s, 0.0 * s),
            domain=(-2.0, 2.0, -1.0, 1.0))
        with pytest.raises(InconsistentCharacter):
            classify_ruled(r, np.linspace(0.5, 1.5, 5))


@pytest.fixture(scope="module")
def hel1_ruled():
    return catalog.ruled_decomposition("hel1")


class TestConstancyAlongRulings:
    T_SAMPLES = np.linspace(0.6, 2.9, 24)
    S_FIXED = np.linspace(0.2, 6.0, 9)

    def test_pure_h_holds(self, hel1_ruled):
        rc = constancy_along_rulings(hel1_ruled, (0.0, 1.0, 0.0),
                                     self.T_SAMPLES, self.S_FIXED, tol=1e-10)
        assert rc.holds
        assert rc.max_deviation <= 1e-10
        assert rc.side_condition_ok

    def test_pure_k_fails_with_fixture_deviation(self, hel1_ruled):
        rc = constancy_along_rulings(hel1_ruled, (0.0, 0.0, 1.0),
                                     self.T_SAMPLES, self.S_FIXED, tol=1e-8)
        assert not rc.holds
        # frozen from the oracle run: K spreads by ~6.1e-3 along a ruling
        assert abs(rc.max_deviation - 6.116171474481234e-03) < 1e-9

    def test_kii_h_combo_side_condition(self, hel1_ruled):
        rc = constancy_along_rulings(hel1_ruled, (1.0, 2.0, 0.0),
                                     self.T_SAMPLES[:8], self.S_FIXED[:3], tol=1e-8)
        assert not rc.side_condition_ok  # 2a - b = 0 violated
        rc2 = constancy_along_rulings(hel1_ruled, (1.0, 1.0, 0.0),
                                      self.T_SAMPLES[:8], self.S_FIXED[:3], tol=1e-8)
        assert rc2.side_condition_ok

    def test_torus_has_no_ruling(self):
        from surfrev.errors import NotRuled
        with pytest.raises(NotRuled):
            catalog.ruled_decomposition("torus_control")
