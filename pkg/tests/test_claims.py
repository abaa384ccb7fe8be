"""Claim mechanics: verdict logic, pair handling, registry wiring.

Full-tolerance 64x64 runs of every registered claim live in the acceptance
module; here smaller grids exercise the machinery.
"""

import numpy as np
import pytest

from surfrev import claims
from surfrev.claims import (
    bour_match,
    run_claims,
    verify_isometry_same_coords,
    verify_minimality,
    verify_pointwise_one_type,
    verify_prop18_suite,
    verify_same_gauss_map,
)

GRID = (24, 24)


class TestOneType:
    def test_rev1_passes(self):
        r = verify_pointwise_one_type("rev1", grid=GRID)
        assert r.verdict == "PASS"
        assert r.max_residual <= 1e-8
        assert r.engine_agreement <= 1e-6
        assert r.details["k_rel_deviation"] <= 1e-8

    def test_rev2t_flagged_k_formula(self):
        # the verbatim arcosh chart is 1-type but its extracted k has the
        # opposite sign of the printed closed form
        r = verify_pointwise_one_type("rev2t", grid=GRID)
        assert r.verdict == "FLAGGED"
        assert r.max_residual <= 1e-8
        assert r.details["k_rel_deviation"] > 1.0
        assert r.engine_agreement <= 1e-6

    def test_torus_fails(self):
        r = verify_pointwise_one_type("torus_control", grid=GRID)
        assert r.verdict == "FAIL"
        assert r.max_residual > 0.01

    def test_enneper_conj2_passes(self):
        r = verify_pointwise_one_type("enneper_conj2", grid=GRID)
        assert r.verdict == "PASS"

    def test_constraint_violation_becomes_fail(self):
        r = verify_pointwise_one_type("hel1", params={"a": 1.0, "b": 1.0},
                                      grid=GRID)
        assert r.verdict == "FAIL"
        assert "|a|>|b|>0" in r.notes


class TestMinimality:
    def test_rev1(self):
        r = verify_minimality("rev1", grid=GRID, tol=1e-10)
        assert r.verdict == "PASS"

    def test_rev3(self):
        r = verify_minimality("rev3", grid=GRID, tol=1e-10)
        assert r.verdict == "PASS"

    def test_torus(self):
        r = verify_minimality("torus_control", grid=GRID, tol=1e-10)
        assert r.verdict == "FAIL"
        assert r.details["max_H"] > 0.1


class TestIsometry:
    def test_hel1_rev1(self):
        r = verify_isometry_same_coords(("hel1", "rev1"), grid=GRID, tol=1e-10)
        assert r.verdict == "PASS"

    def test_hel2t_rev2t_flagged(self):
        r = verify_isometry_same_coords(("hel2t", "rev2t"), grid=GRID, tol=1e-10)
        assert r.verdict == "FLAGGED"
        # direct G of the arcosh chart is (t+a)^2/((t+a)^2 - 2b^2) != 1
        assert r.details["dG"] > 0.1
        assert r.details["dE"] < 1e-10
        assert r.engine_agreement <= 1e-6

    def test_unrelated_pair_fails(self):
        r = verify_isometry_same_coords(("rev1", "rev2t"), grid=GRID, tol=1e-10)
        assert r.verdict == "FAIL"


class TestBour:
    def test_hel1_rev1_identity(self):
        r = bour_match(("hel1", "rev1"), n_t=32)
        assert r.verdict == "PASS"
        assert r.details["phi_identity_deviation"] <= 1e-8

    def test_hel3_rev3_identity(self):
        r = bour_match(("hel3", "rev3"), n_t=32)
        assert r.verdict == "PASS"
        assert r.details["phi_identity_deviation"] <= 1e-8

    def test_hel2t_rev2t_flagged(self):
        r = bour_match(("hel2t", "rev2t"), n_t=32)
        assert r.verdict == "FLAGGED"
        assert r.details["G_factor_deviation"] > 0.1


class TestGaussMapPairs:
    def test_self_comparison_passes(self):
        r = verify_same_gauss_map(("rev1", "rev1"), grid=GRID)
        assert r.verdict == "PASS"
        assert r.max_residual <= 1e-12

    def test_enneper_pair_flagged(self):
        r = verify_same_gauss_map(("enneper_conj2", "enneper_rev2"), grid=GRID)
        assert r.verdict == "FLAGGED"
        assert r.engine_agreement <= 1e-6

    def test_distinct_revolution_normals_fail(self):
        r = verify_same_gauss_map(("rev1", "rev2s"), grid=GRID)
        assert r.verdict == "FAIL"
        assert r.max_residual > 0.1


class TestEquivalenceSuite:
    def test_all_equivalences_hold(self):
        results = verify_prop18_suite(grid=GRID)
        assert len(results) == len(claims.REVOLUTION_IDS)
        for r in results:
            assert r.verdict == "PASS", r.claim_id
        torus = next(r for r in results if "torus" in r.claim_id)
        assert torus.details["one_type_max_residual"] > 0.01
        assert torus.details["minimal_max_H"] > 0.1


class TestRegistry:
    def test_registry_ids_unique_and_bundled(self):
        ids = claims.claim_ids()
        assert len(ids) == len(set(ids))
        assert set(claims.BUNDLES["all"]) == set(ids)
        for bundle, members in claims.BUNDLES.items():
            for m in members:
                assert m in claims.REGISTRY, (bundle, m)

    def test_run_claims_records_expected(self):
        res = run_claims(["helicoids.ruled_types"], grid=GRID)
        assert res[0].details["expected"] == "PASS"
        assert res[0].verdict == "PASS"

    def test_ruled_type_claim(self):
        res = run_claims(["helicoids.ruled_types"])[0]
        assert res.details["hel1"] == "M1+"
        assert res.details["hel2s"] == "M1+"
        assert res.details["hel2t"] == "M1-"
        assert res.details["hel3"] == "M3+"
