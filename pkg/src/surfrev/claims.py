"""Executable claims with PASS / FAIL / FLAGGED verdicts.

Each claim sweeps a grid with the jet engine, cross-checks a seeded sample
of points against the finite-difference oracle, and reduces to a verdict:

* PASS    - the claimed identity holds at tolerance and both engines agree;
* FLAGGED - the claimed identity fails, the two engines agree with each
  other, and the claim is one the source catalog marks as asserted: the
  printed statement and direct computation genuinely disagree;
* FAIL    - the identity fails on a surface with no such assertion (the
  negative control), or the engines disagree, or evaluation errored.

The registry at the bottom pins every claim's grid, tolerance and expected
verdict; negative-control claims are expected to FAIL, which the CLI exit
code logic accounts for.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import catalog, oracle
from .errors import GeometryError
from .geometry import sweep
from .ruled import classify_ruled, constancy_along_rulings, RuledType

__all__ = [
    "ClaimResult",
    "ClaimSpec",
    "REGISTRY",
    "BUNDLES",
    "default_tolerance",
    "run_claims",
    "claim_ids",
    "verify_pointwise_one_type",
    "verify_minimality",
    "verify_isometry_same_coords",
    "bour_match",
    "verify_same_gauss_map",
    "verify_prop18_suite",
]

ORACLE_TOL = 1e-6
ENV_TOL = "SURFREV_DEFAULT_TOL"

# pairs the source catalog asserts to be related; disagreement on these is
# FLAGGED (printed statement vs computation), not FAIL
PAPER_ISO_PAIRS = {("hel1", "rev1"), ("hel2s", "rev2s"), ("hel2t", "rev2t"),
                   ("hel3", "rev3")}
PAPER_GAUSS_PAIRS = {("enneper_conj2", "enneper_rev2"),
                     ("enneper_conj2", "enneper_rev3")}


def default_tolerance() -> float:
    raw = os.environ.get(ENV_TOL)
    if raw is None:
        return 1e-8
    return float(raw)


@dataclass
class ClaimResult:
    claim_id: str
    surfaces: tuple
    params: dict
    grid: str
    tolerance: float
    max_residual: float
    engine_agreement: float
    verdict: str
    notes: str = ""
    details: dict = field(default_factory=dict)


def _grid_mesh(entry, params, n_s, n_t, shrink=0.02):
    s0, s1, t0, t1 = entry.grid_domain(params)
    if catalog.build(entry.id, params).periodic_s:
        s = np.linspace(s0, s1, n_s, endpoint=False)
    else:
        ms = shrink * (s1 - s0)
        s = np.linspace(s0 + ms, s1 - ms, n_s)
    mt = shrink * (t1 - t0)
    t = np.linspace(t0 + mt, t1 - mt, n_t)
    S, T = np.meshgrid(s, t)
    return S, T, f"{n_s}x{n_t}@[{s0:g},{s1:g}]x[{t0:g},{t1:g}]"


def _norm_diff(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b) / (1.0 + np.maximum(np.abs(a), np.abs(b)))))


def _oracle_points(entry, params, seed, n):
    (slo, shi), (tlo, thi) = entry.oracle_ranges(params)
    rng = np.random.default_rng(seed)
    return rng.uniform(slo, shi, n), rng.uniform(tlo, thi, n)


def _agreement(patch, entry, params, quantities, seed, n_check=8) -> float:
    """Max normalized jet-vs-fd difference over the named quantities."""
    s, t = _oracle_points(entry, params, seed, n_check)
    jq = sweep(patch, s, t, with_kii="K_II" in quantities)
    fq = oracle.all_quantities_fd(patch, s, t, with_kii="K_II" in quantities)
    worst = 0.0
    for q in quantities:
        if q in ("N", "dN"):
            for c in range(3):
                worst = max(worst, _norm_diff(jq[q].components()[c],
                                              fq[q].components()[c]))
        else:
            worst = max(worst, _norm_diff(jq[q], fq[q]))
    return worst


def _merged(entry, params):
    p = dict(entry.default_params)
    if params:
        p.update({k: float(v) for k, v in params.items()})
    return p


def _merged_known(entry, params):
    """Merge only the keys this entry declares (pair claims may carry a
    combined parameter set for two differently parametrized surfaces)."""
    if params:
        params = {k: v for k, v in params.items() if k in entry.param_names}
    return _merged(entry, params)


# ---------------------------------------------------------------------------
# claim runners
# ---------------------------------------------------------------------------


def verify_pointwise_one_type(surface_id: str, params: dict | None = None,
                              grid: tuple = (64, 64), tol: float | None = None,
                              seed: int = 42) -> ClaimResult:
    """Max residual of D N = k N over the grid; k checked against the
    catalog's closed form where one is declared."""
    tol = default_tolerance() if tol is None else tol
    entry = catalog.get_entry(surface_id)
    p = _merged(entry, params)
    cid = f"{surface_id}.one_type"
    try:
        patch = catalog.build(surface_id, p)
        S, T, gdesc = _grid_mesh(entry, p, *grid)
        sw = sweep(patch, S, T)
        max_res = float(np.max(sw["residual"]))
        details = {"max_residual": max_res}
        k_ok = True
        if entry.k_formula is not None:
            kf = entry.k_formula(p)(T)
            k_rel = float(np.max(np.abs(sw["k"] - kf) / np.abs(kf)))
            details["k_rel_deviation"] = k_rel
            k_ok = k_rel <= tol
        agree = _agreement(patch, entry, p, ("dN", "N", "k", "residual"), seed)
        ok = max_res <= tol and k_ok
        if ok and agree <= ORACLE_TOL:
            verdict, notes = "PASS", ""
        elif agree <= ORACLE_TOL and entry.one_type_claimed:
            verdict = "FLAGGED"
            notes = ("claimed pointwise 1-type identity deviates from direct "
                     "computation; both engines agree on the computed values")
        else:
            verdict = "FAIL"
            notes = "" if agree <= ORACLE_TOL else "jet and fd engines disagree"
        return ClaimResult(cid, (surface_id,), p, gdesc, tol, max_res, agree,
                           verdict, notes, details)
    except GeometryError as exc:
        return ClaimResult(cid, (surface_id,), p, "n/a", tol, float("inf"),
                           float("inf"), "FAIL", f"{type(exc).__name__}: {exc}")


def verify_minimality(surface_id: str, params: dict | None = None,
                      grid: tuple = (64, 64), tol: float | None = None,
                      seed: int = 42) -> ClaimResult:
    """max |H| over the grid against the stated tolerance."""
    tol = default_tolerance() if tol is None else tol
    entry = catalog.get_entry(surface_id)
    p = _merged(entry, params)
    cid = f"{surface_id}.minimal"
    try:
        patch = catalog.build(surface_id, p)
        S, T, gdesc = _grid_mesh(entry, p, *grid)
        sw = sweep(patch, S, T)
        max_h = float(np.max(np.abs(sw["H"])))
        agree = _agreement(patch, entry, p, ("H", "e", "f", "g"), seed)
        if max_h <= tol and agree <= ORACLE_TOL:
            verdict, notes = "PASS", ""
        elif agree <= ORACLE_TOL and entry.minimal_claimed:
            verdict, notes = "FLAGGED", "claimed vanishing mean curvature fails"
        else:
            verdict = "FAIL"
            notes = "" if agree <= ORACLE_TOL else "jet and fd engines disagree"
        return ClaimResult(cid, (surface_id,), p, gdesc, tol, max_h, agree,
                           verdict, notes, {"max_H": max_h})
    except GeometryError as exc:
        return ClaimResult(cid, (surface_id,), p, "n/a", tol, float("inf"),
                           float("inf"), "FAIL", f"{type(exc).__name__}: {exc}")


def _shared_mesh(entry_a, entry_b, pa, pb, n_s, n_t, shrink=0.02):
    ga, gb = entry_a.grid_domain(pa), entry_b.grid_domain(pb)
    s0, s1 = max(ga[0], gb[0]), min(ga[1], gb[1])
    t0, t1 = max(ga[2], gb[2]), min(ga[3], gb[3])
    if s0 >= s1 or t0 >= t1:
        raise GeometryError(
            f"{entry_a.id}/{entry_b.id}: default grid domains do not overlap")
    ms, mt = shrink * (s1 - s0), shrink * (t1 - t0)
    s = np.linspace(s0 + ms, s1 - ms, n_s)
    t = np.linspace(t0 + mt, t1 - mt, n_t)
    S, T = np.meshgrid(s, t)
    return S, T, (t0 + mt, t1 - mt), f"{n_s}x{n_t}@[{s0:g},{s1:g}]x[{t0:g},{t1:g}]"


def verify_isometry_same_coords(pair: tuple, params: dict | None = None,
                                grid: tuple = (64, 64), tol: float | None = None,
                                seed: int = 42) -> ClaimResult:
    """Componentwise E, F, G agreement at identity-matched coordinates."""
    tol = default_tolerance() if tol is None else tol
    id_a, id_b = pair
    ea, eb = catalog.get_entry(id_a), catalog.get_entry(id_b)
    pa, pb = _merged_known(ea, params), _merged_known(eb, params)
    cid = f"{id_a}_{id_b}.isometry"
    try:
        patch_a, patch_b = catalog.build(id_a, pa), catalog.build(id_b, pb)
        S, T, _, gdesc = _shared_mesh(ea, eb, pa, pb, *grid)
        swa, swb = sweep(patch_a, S, T), sweep(patch_b, S, T)
        devs = {f"d{q}": float(np.max(np.abs(swa[q] - swb[q]))) for q in "EFG"}
        max_res = max(devs.values())
        agree = max(_agreement(patch_a, ea, pa, ("E", "F", "G"), seed),
                    _agreement(patch_b, eb, pb, ("E", "F", "G"), seed))
        if max_res <= tol and agree <= ORACLE_TOL:
            verdict, notes = "PASS", ""
        elif agree <= ORACLE_TOL and (id_a, id_b) in PAPER_ISO_PAIRS:
            verdict = "FLAGGED"
            notes = ("claimed identity-coordinate isometry fails; both engines "
                     "agree on the computed first fundamental forms")
        else:
            verdict = "FAIL"
            notes = "" if agree <= ORACLE_TOL else "jet and fd engines disagree"
        return ClaimResult(cid, pair, pa, gdesc, tol, max_res, agree,
                           verdict, notes, devs)
    except GeometryError as exc:
        return ClaimResult(cid, pair, pa, "n/a", tol, float("inf"),
                           float("inf"), "FAIL", f"{type(exc).__name__}: {exc}")


def bour_match(pair: tuple, params: dict | None = None,
               t_grid: np.ndarray | None = None, tol: float | None = None,
               seed: int = 42, n_t: int = 64) -> ClaimResult:
    """Bour correspondence: solve E_rev(phi(t)) = E_hel(t), then check the
    theorema-egregium condition and the G*phi'^2 factor.

    Requires diagonal metrics with E depending on t only on both sides and a
    strictly monotone E_rev over the probed range.
    """
    from .errors import BisectionFailure, NonMonotoneE

    tol = default_tolerance() if tol is None else tol
    id_hel, id_rev = pair
    eh, er = catalog.get_entry(id_hel), catalog.get_entry(id_rev)
    ph, pr = _merged_known(eh, params), _merged_known(er, params)
    cid = f"{id_hel}_{id_rev}.bour"
    try:
        patch_h, patch_r = catalog.build(id_hel, ph), catalog.build(id_rev, pr)
        S, T, (t_lo, t_hi), gdesc = _shared_mesh(eh, er, ph, pr, 16, n_t)
        if t_grid is None:
            t_grid = np.linspace(t_lo, t_hi, n_t)
        t_grid = np.asarray(t_grid, dtype=float)
        s_mid = float(S[0, S.shape[1] // 2])

        # preconditions: F = 0 and E, G functions of t alone
        for tag, patch in (("hel", patch_h), ("rev", patch_r)):
            sw = sweep(patch, S, T)
            scale = 1.0 + np.abs(sw["E"]) + np.abs(sw["G"])
            if np.max(np.abs(sw["F"]) / scale) > 1e-9:
                return ClaimResult(cid, pair, ph, gdesc, tol, float("inf"), 0.0,
                                   "FAIL", f"{tag} metric not diagonal (F != 0)")
            for q in ("E", "G"):
                spread = np.max(np.abs(sw[q] - sw[q][:, :1]) / scale)
                if spread > 1e-9:
                    return ClaimResult(cid, pair, ph, gdesc, tol, float("inf"),
                                       0.0, "FAIL", f"{tag} {q} depends on s")

        s_fix = np.full_like(t_grid, s_mid)
        hel = sweep(patch_h, s_fix, t_grid)
        e_hel = hel["E"].real

        # monotone E on the revolution side over the probed window
        probe_t = np.linspace(t_lo, t_hi, 257)
        e_probe = sweep(patch_r, np.full_like(probe_t, s_mid), probe_t)["E"].real
        diffs = np.diff(e_probe)
        if not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise NonMonotoneE(f"{id_rev}: E(t) not strictly monotone on "
                               f"[{t_lo:g}, {t_hi:g}]")
        increasing = bool(diffs[0] > 0)

        def e_rev_at(tv):
            return sweep(patch_r, np.full_like(np.atleast_1d(tv), s_mid),
                         np.atleast_1d(tv))["E"].real

        lo_val, hi_val = e_probe[0], e_probe[-1]
        emin, emax = min(lo_val, hi_val), max(lo_val, hi_val)
        span = emax - emin
        if np.any(e_hel < emin - 1e-9 * span) or np.any(e_hel > emax + 1e-9 * span):
            raise BisectionFailure(
                f"target E outside [{emin:g}, {emax:g}] on the {id_rev} side")

        lo = np.full_like(t_grid, t_lo)
        hi = np.full_like(t_grid, t_hi)
        for _ in range(64):
            mid = 0.5 * (lo + hi)
            below = e_rev_at(mid) < e_hel if increasing else e_rev_at(mid) > e_hel
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        phi = 0.5 * (lo + hi)

        rev = sweep(patch_r, np.full_like(phi, s_mid), phi)
        k_dev = float(np.max(np.abs(rev["K_int"] - hel["K_int"])))
        dphi = np.gradient(phi, t_grid)
        g_dev = float(np.max(np.abs(hel["G"] - rev["G"] * dphi * dphi)[1:-1]))
        phi_dev = float(np.max(np.abs(phi - t_grid)))
        max_res = max(k_dev, g_dev)
        agree = max(_agreement(patch_h, eh, ph, ("K_int", "E", "G"), seed),
                    _agreement(patch_r, er, pr, ("K_int", "E", "G"), seed))
        details = {"K_int_deviation": k_dev, "G_factor_deviation": g_dev,
                   "phi_identity_deviation": phi_dev}
        if max_res <= tol and agree <= ORACLE_TOL:
            verdict, notes = "PASS", ""
        elif agree <= ORACLE_TOL and (id_hel, id_rev) in PAPER_ISO_PAIRS:
            verdict = "FLAGGED"
            notes = ("claimed Bour correspondence fails the intrinsic-curvature "
                     "or metric-factor check; engines agree")
        else:
            verdict = "FAIL"
            notes = "" if agree <= ORACLE_TOL else "jet and fd engines disagree"
        return ClaimResult(cid, pair, ph, gdesc, tol, max_res, agree,
                           verdict, notes, details)
    except GeometryError as exc:
        return ClaimResult(cid, pair, ph, "n/a", tol, float("inf"),
                           float("inf"), "FAIL", f"{type(exc).__name__}: {exc}")


def verify_same_gauss_map(pair: tuple, params: dict | None = None,
                          grid: tuple = (64, 64), tol: float | None = None,
                          seed: int = 42) -> ClaimResult:
    """Compare Gauss maps at identity-matched coordinates up to global sign."""
    tol = default_tolerance() if tol is None else tol
    id_a, id_b = pair
    ea, eb = catalog.get_entry(id_a), catalog.get_entry(id_b)
    pa, pb = _merged_known(ea, params), _merged_known(eb, params)
    cid = f"{id_a}_{id_b}.gauss_map"
    try:
        patch_a, patch_b = catalog.build(id_a, pa), catalog.build(id_b, pb)
        S, T, _, gdesc = _shared_mesh(ea, eb, pa, pb, *grid)
        na = sweep(patch_a, S, T)["N"]
        nb = sweep(patch_b, S, T)["N"]
        d_plus = max(float(np.max(np.abs(na.components()[c] - nb.components()[c])))
                     for c in range(3))
        d_minus = max(float(np.max(np.abs(na.components()[c] + nb.components()[c])))
                      for c in range(3))
        max_res = min(d_plus, d_minus)
        agree = max(_agreement(patch_a, ea, pa, ("N",), seed),
                    _agreement(patch_b, eb, pb, ("N",), seed))
        if max_res <= tol and agree <= ORACLE_TOL:
            verdict, notes = "PASS", ""
        elif agree <= ORACLE_TOL and (id_a, id_b) in PAPER_GAUSS_PAIRS:
            verdict = "FLAGGED"
            notes = ("claimed shared Gauss map fails at identity-matched "
                     "coordinates (no correspondence is printed); engines agree")
        else:
            verdict = "FAIL"
            notes = "" if agree <= ORACLE_TOL else "jet and fd engines disagree"
        return ClaimResult(cid, pair, pa, gdesc, tol, max_res, agree,
                           verdict, notes,
                           {"diff_same_sign": d_plus, "diff_flipped": d_minus})
    except GeometryError as exc:
        return ClaimResult(cid, pair, pa, "n/a", tol, float("inf"),
                           float("inf"), "FAIL", f"{type(exc).__name__}: {exc}")


REVOLUTION_IDS = ("rev1", "rev2s", "rev2t", "rev3", "enneper_rev2",
                  "enneper_rev3", "torus_control")

_MINIMAL_TOL = {"rev1": 1e-10, "rev2s": 1e-10, "rev2t": 1e-10, "rev3": 1e-10,
                "enneper_rev2": 1e-8, "enneper_rev3": 1e-8,
                "enneper_conj2": 1e-8, "torus_control": 1e-10}


_MEMO: dict = {}


def _memo_run(fn, sid, grid, tol, seed):
    key = (fn.__name__, sid, grid, tol, seed)
    if key not in _MEMO:
        _MEMO[key] = fn(sid, grid=grid, tol=tol, seed=seed)
    return _MEMO[key]


def _equivalence_for(sid: str, grid: tuple, tol: float, seed: int) -> ClaimResult:
    one = _memo_run(verify_pointwise_one_type, sid, grid, tol, seed)
    mini = _memo_run(verify_minimality, sid, grid, _MINIMAL_TOL[sid], seed)
    one_holds = one.details.get("max_residual", float("inf")) <= tol
    mini_holds = mini.verdict == "PASS"
    ok = one_holds == mini_holds
    agree = max(one.engine_agreement, mini.engine_agreement)
    return ClaimResult(
        claim_id=f"one_type_iff_minimal.{sid}",
        surfaces=(sid,), params=one.params, grid=one.grid, tolerance=tol,
        max_residual=0.0 if ok else 1.0,
        engine_agreement=agree,
        verdict="PASS" if (ok and agree <= ORACLE_TOL) else "FAIL",
        notes=(f"1-type residual {'holds' if one_holds else 'fails'}, "
               f"minimality {'holds' if mini_holds else 'fails'}"),
        details={"one_type_max_residual": one.details.get("max_residual"),
                 "minimal_max_H": mini.details.get("max_H")},
    )


def verify_prop18_suite(grid: tuple = (64, 64), tol: float | None = None,
                        seed: int = 42) -> list[ClaimResult]:
    """Pointwise 1-type holds iff the surface is minimal/maximal.

    One result per catalog revolution surface (negative control included).
    The 1-type predicate is the residual of D N = k N alone; a verbatim
    chart whose extracted k disagrees with a printed formula still counts
    as 1-type, which is what the equivalence is about.
    """
    tol = default_tolerance() if tol is None else tol
    return [_equivalence_for(sid, grid, tol, seed) for sid in REVOLUTION_IDS]


_RULED_EXPECTED = {"hel1": RuledType.M1_PLUS, "hel2s": RuledType.M1_PLUS,
                   "hel2t": RuledType.M1_MINUS, "hel3": RuledType.M3_PLUS}


def verify_ruled_types(tol: float | None = None, seed: int = 42) -> ClaimResult:
    """Classification of the four helicoids against the six-type taxonomy."""
    tol = default_tolerance() if tol is None else tol
    got = {}
    ok = True
    for hid, want in _RULED_EXPECTED.items():
        r = catalog.ruled_decomposition(hid)
        typ = classify_ruled(r, np.linspace(-0.8, 0.8, 7))
        got[hid] = typ.value
        ok = ok and typ is want
    return ClaimResult(
        claim_id="helicoids.ruled_types", surfaces=tuple(_RULED_EXPECTED),
        params={}, grid="7 s-samples", tolerance=tol,
        max_residual=0.0 if ok else 1.0, engine_agreement=0.0,
        verdict="PASS" if ok else "FAIL",
        notes="; ".join(f"{k}->{v}" for k, v in got.items()), details=got)


def verify_h_constancy(tol: float = 1e-10, seed: int = 42) -> ClaimResult:
    """Pure-H combo is constant along each ruling of the 1st-kind helicoid."""
    entry = catalog.get_entry("hel1")
    p = dict(entry.default_params)
    r = catalog.ruled_decomposition("hel1", p)
    rc = constancy_along_rulings(r, (0.0, 1.0, 0.0),
                                 np.linspace(0.6, 2.9, 24),
                                 np.linspace(0.2, 6.0, 9), tol=tol)
    patch = catalog.build("hel1", p)
    agree = _agreement(patch, entry, p, ("H",), seed)
    ok = rc.holds and agree <= ORACLE_TOL
    return ClaimResult(
        claim_id="hel1.h_constant_along_rulings", surfaces=("hel1",), params=p,
        grid="24 t x 9 s", tolerance=tol, max_residual=rc.max_deviation,
        engine_agreement=agree, verdict="PASS" if ok else "FAIL",
        notes=rc.note, details={"max_deviation": rc.max_deviation})


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    expected: str
    runner: object  # (params, grid, tol, seed) -> ClaimResult | list[ClaimResult]
    tol: float | None = None


def _one_type_runner(sid):
    def run(params, grid, tol, seed):
        if params:
            return verify_pointwise_one_type(sid, params, grid, tol, seed)
        eff = default_tolerance() if tol is None else tol
        return _memo_run(verify_pointwise_one_type, sid, grid, eff, seed)
    return run


def _minimal_runner(sid):
    def run(params, grid, tol, seed):
        if params:
            return verify_minimality(sid, params, grid, tol, seed)
        eff = default_tolerance() if tol is None else tol
        return _memo_run(verify_minimality, sid, grid, eff, seed)
    return run


def _iso_runner(pair):
    return lambda params, grid, tol, seed: verify_isometry_same_coords(
        pair, params, grid, tol, seed)


def _bour_runner(pair):
    return lambda params, grid, tol, seed: bour_match(
        pair, params, tol=tol, seed=seed)


def _gauss_runner(pair):
    return lambda params, grid, tol, seed: verify_same_gauss_map(
        pair, params, grid, tol, seed)


_SPECS = [
    ClaimSpec("rev1.one_type", "PASS", _one_type_runner("rev1")),
    ClaimSpec("rev1.minimal", "PASS", _minimal_runner("rev1"), 1e-10),
    ClaimSpec("rev2s.one_type", "PASS", _one_type_runner("rev2s")),
    ClaimSpec("rev2s.minimal", "PASS", _minimal_runner("rev2s"), 1e-10),
    ClaimSpec("rev2t.one_type", "FLAGGED", _one_type_runner("rev2t")),
    ClaimSpec("rev2t.minimal", "PASS", _minimal_runner("rev2t"), 1e-10),
    ClaimSpec("rev3.one_type", "PASS", _one_type_runner("rev3")),
    ClaimSpec("rev3.minimal", "PASS", _minimal_runner("rev3"), 1e-10),
    ClaimSpec("enneper_conj2.one_type", "PASS", _one_type_runner("enneper_conj2")),
    ClaimSpec("enneper_conj2.minimal", "PASS", _minimal_runner("enneper_conj2"), 1e-8),
    ClaimSpec("enneper_rev2.one_type", "PASS", _one_type_runner("enneper_rev2")),
    ClaimSpec("enneper_rev2.minimal", "PASS", _minimal_runner("enneper_rev2"), 1e-8),
    ClaimSpec("enneper_rev3.one_type", "PASS", _one_type_runner("enneper_rev3")),
    ClaimSpec("enneper_rev3.minimal", "PASS", _minimal_runner("enneper_rev3"), 1e-8),
    ClaimSpec("torus_control.one_type", "FAIL", _one_type_runner("torus_control")),
    ClaimSpec("torus_control.minimal", "FAIL", _minimal_runner("torus_control"), 1e-10),
    ClaimSpec("hel1_rev1.isometry", "PASS", _iso_runner(("hel1", "rev1")), 1e-10),
    ClaimSpec("hel2s_rev2s.isometry", "PASS", _iso_runner(("hel2s", "rev2s")), 1e-10),
    ClaimSpec("hel2t_rev2t.isometry", "FLAGGED", _iso_runner(("hel2t", "rev2t")), 1e-10),
    ClaimSpec("hel3_rev3.isometry", "PASS", _iso_runner(("hel3", "rev3")), 1e-10),
    ClaimSpec("hel1_rev1.bour", "PASS", _bour_runner(("hel1", "rev1"))),
    ClaimSpec("hel2s_rev2s.bour", "PASS", _bour_runner(("hel2s", "rev2s"))),
    ClaimSpec("hel2t_rev2t.bour", "FLAGGED", _bour_runner(("hel2t", "rev2t"))),
    ClaimSpec("hel3_rev3.bour", "PASS", _bour_runner(("hel3", "rev3"))),
    ClaimSpec("enneper_conj2_enneper_rev2.gauss_map", "FLAGGED",
              _gauss_runner(("enneper_conj2", "enneper_rev2"))),
    ClaimSpec("enneper_conj2_enneper_rev3.gauss_map", "FLAGGED",
              _gauss_runner(("enneper_conj2", "enneper_rev3"))),
    ClaimSpec("helicoids.ruled_types", "PASS",
              lambda params, grid, tol, seed: verify_ruled_types(tol, seed)),
    ClaimSpec("hel1.h_constant_along_rulings", "PASS",
              lambda params, grid, tol, seed: verify_h_constancy(1e-10, seed)),
]

for _sid in REVOLUTION_IDS:
    def _equiv_runner(sid):
        def run(params, grid, tol, seed):
            return _equivalence_for(sid, grid,
                                    default_tolerance() if tol is None else tol,
                                    seed)
        return run
    _SPECS.append(ClaimSpec(f"one_type_iff_minimal.{_sid}", "PASS",
                            _equiv_runner(_sid)))

REGISTRY = {spec.claim_id: spec for spec in _SPECS}

BUNDLES = {
    "rev1": ["rev1.one_type", "rev1.minimal", "hel1_rev1.isometry", "hel1_rev1.bour"],
    "rev2s": ["rev2s.one_type", "rev2s.minimal", "hel2s_rev2s.isometry",
              "hel2s_rev2s.bour"],
    "rev2t": ["rev2t.one_type", "rev2t.minimal", "hel2t_rev2t.isometry",
              "hel2t_rev2t.bour"],
    "rev3": ["rev3.one_type", "rev3.minimal", "hel3_rev3.isometry", "hel3_rev3.bour"],
    "enneper": ["enneper_conj2.one_type", "enneper_conj2.minimal",
                "enneper_rev2.one_type", "enneper_rev2.minimal",
                "enneper_rev3.one_type", "enneper_rev3.minimal",
                "enneper_conj2_enneper_rev2.gauss_map",
                "enneper_conj2_enneper_rev3.gauss_map"],
    "controls": ["torus_control.one_type", "torus_control.minimal"],
    "ruled": ["helicoids.ruled_types", "hel1.h_constant_along_rulings"],
    "equivalence": [f"one_type_iff_minimal.{sid}" for sid in REVOLUTION_IDS],
}
BUNDLES["all"] = list(REGISTRY)


def claim_ids() -> list[str]:
    return list(REGISTRY)


def run_claims(ids, params: dict | None = None, grid: tuple = (64, 64),
               tol: float | None = None, seed: int = 42) -> list[ClaimResult]:
    """Run claims by id (registry order is preserved for reproducibility)."""
    results = []
    for cid in ids:
        spec = REGISTRY[cid]
        eff_tol = tol if tol is not None else spec.tol
        res = spec.runner(params, grid, eff_tol, seed)
        res.notes = res.notes or ""
        res.details["expected"] = spec.expected
        results.append(res)
    return results
