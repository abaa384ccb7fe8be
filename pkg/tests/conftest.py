import numpy as np
import pytest

from surfrev.geometry import SurfacePatch
from surfrev.lorentz import NormMode


@pytest.fixture(scope="session")
def flat_patch():
    """The plane x(s,t) = (s, t, 0); metric is the identity."""
    return SurfacePatch(
        label="flat",
        chart=lambda S, T: (S, T, 0.0 * S),
        domain=(-10.0, 10.0, -10.0, 10.0),
        norm_mode=NormMode.ABSOLUTE,
    )


def grid_for(entry_id, params=None, n=64, shrink=0.02):
    """Default claim-style grid mesh for a catalog surface."""
    from surfrev import catalog

    entry = catalog.get_entry(entry_id)
    p = dict(entry.default_params)
    if params:
        p.update(params)
    patch = catalog.build(entry_id, p)
    s0, s1, t0, t1 = entry.grid_domain(p)
    if patch.periodic_s:
        s = np.linspace(s0, s1, n, endpoint=False)
    else:
        ms = shrink * (s1 - s0)
        s = np.linspace(s0 + ms, s1 - ms, n)
    mt = shrink * (t1 - t0)
    t = np.linspace(t0 + mt, t1 - mt, n)
    S, T = np.meshgrid(s, t)
    return patch, S, T
