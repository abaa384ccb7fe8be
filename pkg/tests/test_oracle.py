"""Dual-engine agreement: jets vs the finite-difference reference engine."""

import numpy as np
import pytest

from surfrev import catalog, oracle
from surfrev.geometry import sweep

QUANTITIES = ("E", "F", "G", "e", "f", "g", "H", "K", "K_int", "k", "K_II")


def norm_diff(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b) / (1.0 + np.maximum(np.abs(a), np.abs(b)))))


@pytest.mark.parametrize("sid", catalog.ENTRY_IDS)
def test_all_quantities_agree(sid):
    entry = catalog.get_entry(sid)
    patch = catalog.build(sid)
    (slo, shi), (tlo, thi) = entry.oracle_ranges(entry.default_params)
    rng = np.random.default_rng(42)
    s = rng.uniform(slo, shi, 25)
    t = rng.uniform(tlo, thi, 25)
    jq = sweep(patch, s, t, with_kii=True)
    fq = oracle.all_quantities_fd(patch, s, t, with_kii=True)
    for q in QUANTITIES:
        assert norm_diff(jq[q], fq[q]) < 1e-6, q
    for name in ("N", "dN"):
        for c in range(3):
            d = norm_diff(jq[name].components()[c], fq[name].components()[c])
            assert d < 1e-6, (name, c)


def test_first_forms_fd_standalone():
    patch = catalog.build("rev1")
    ff = oracle.first_forms_fd(patch, 0.7, 1.0)
    assert abs(complex(ff["E"]) - ((1.0 + 3.0) ** 2 - 1.0)) < 1e-8
    assert abs(complex(ff["F"])) < 1e-8
    assert abs(complex(ff["G"]) - 1.0) < 1e-8


def test_normal_fd_matches_reference(sid="rev3"):
    entry = catalog.get_entry(sid)
    patch = catalog.build(sid)
    (bs, bt), want = entry.reference_sign(entry.default_params)
    n = oracle.normal_fd(patch, bs, bt)
    got = np.array([complex(np.asarray(c).ravel()[0]) for c in n.components()])
    assert np.max(np.abs(got - np.array([complex(w) for w in want]))) < 1e-8
