"""Closed-form constructors for the catalog surfaces.

Twelve entries: four revolution surfaces (1st kind space-like, 2nd kind
space-like, 2nd kind time-like, 3rd kind Lorentzian), the four matching
generalized helicoids, the conjugate Enneper surface of the 2nd kind, the
two revolution Enneper surfaces (2nd and 3rd kind), and a Euclidean-style
torus band used as a deliberately non-minimal negative control.

Parameter constraints are validated with the inequality text quoted in the
error.  Each entry documents its sign conventions:

* rev1 and rev3 carry an orientation flip (sign = -1) pinning the normal to
  the reference components declared at the base point.
* rev2s keeps the raw cross-product orientation.  Its classical printed
  normal (-b sinh s, t+a, -b cosh s)/sqrt(b^2-(t+a)^2) equals the chart's
  actual normal only where (t+a) and -b share a sign; with the default b > 0
  and t+a > 0 the honest normal is (+b sinh s, t+a, +b cosh s)/sqrt(...).
  Tests pin both facts.
* rev2t encodes the arcosh chart verbatim.  Feasibility forces b < 0 and
  (t+a)^2 >= 2 b^2; direct differentiation disagrees with the classical
  G = 1 metric, which is exactly what the claim layer flags.
* rev3 is complexified as printed: the axial integrand is the principal
  root of a negative quantity, so the first component is imaginary and the
  Gauss map lives on S^2_1(1) after bilinear normalization.  A real_variant
  flag (nonzero value in params) switches to the real integrand, whose
  metric G = (b^2-(t+a)^2)/(b^2+(t+a)^2) is kept for comparison.

The patch rectangle stored on each SurfacePatch is the feasibility window
for the given parameters (with a numerical guard); the tighter default grid
rectangle used by claims and the CLI lives on the entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import jets as J
from .errors import ConstraintViolation, InfeasibleDomain, NotRuled
from .geometry import SurfacePatch
from .jets import antiderivative_t, asin, acosh, cos, cosh, powi, recip, sin, sinh, sqrt_principal
from .lorentz import LVec3, NormMode
from .ruled import RuledSurface

__all__ = ["CatalogEntry", "build", "get_entry", "list_entries", "ruled_decomposition", "ENTRY_IDS"]

TWO_PI = 2.0 * math.pi
_GUARD = 1e-3


@dataclass(frozen=True)
class CatalogEntry:
    """Catalog metadata: constraints, defaults, orientation and claims."""

    id: str
    source: str
    param_names: tuple
    default_params: dict
    constraint_text: tuple
    norm_mode: NormMode
    sign: int
    periodic_s: bool
    grid_domain: Callable  # params -> (s0, s1, t0, t1)
    reference_sign: Callable  # params -> ((s, t), (N1, N2, N3))
    k_formula: Callable | None
    one_type_claimed: bool
    minimal_claimed: bool
    oracle_ranges: Callable  # params -> ((s_lo, s_hi), (t_lo, t_hi))
    has_ruling: bool


def _merge_params(entry_id: str, names: tuple, defaults: dict, params) -> dict:
    p = dict(defaults)
    if params:
        for key, val in params.items():
            if key not in names:
                raise ConstraintViolation(
                    f"unknown parameter {key!r} for {entry_id}",
                    f"expected one of {', '.join(names)}")
            p[key] = float(val)
    return p


def _window(a: float, b: float) -> tuple[float, float]:
    return min(-a - b, -a + b), max(-a - b, -a + b)


def _require_outside_window(tag: str, text: str, a: float, b: float,
                            t0: float, t1: float) -> None:
    lo, hi = _window(a, b)
    if not (t1 < lo or t0 > hi):
        raise ConstraintViolation(text, f"{tag}: grid t in [{t0}, {t1}] meets ({lo}, {hi})")


def _require_inside_window(tag: str, text: str, a: float, b: float,
                           t0: float, t1: float) -> None:
    lo, hi = _window(a, b)
    if not (lo < t0 and t1 < hi):
        raise ConstraintViolation(text, f"{tag}: grid t in [{t0}, {t1}] not inside ({lo}, {hi})")


def _label(entry_id: str, p: dict) -> str:
    inner = ",".join(f"{k}={p[k]:g}" for k in sorted(p))
    return f"{entry_id}({inner})"


# ---------------------------------------------------------------------------
# chart builders
# ---------------------------------------------------------------------------


def _build_rev1(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    t0, t1 = _GRIDS["rev1"](p)[2:]
    lo_needed = -a + abs(b) + _GUARD * (1.0 + abs(b))
    if t0 < lo_needed - 1e-12:
        raise ConstraintViolation("b^2 < (t+a)^2", f"needs t > {lo_needed - _GUARD:g}")
    rect = (0.0, TWO_PI, lo_needed, t1 + 5.0)

    def psi_value(t):
        if b == 0.0:
            return np.zeros_like(np.asarray(t, dtype=float))
        u = np.asarray(t, dtype=float) + a
        return abs(b) * np.log(np.abs(u + np.sqrt(u * u - b * b)))

    def chart(S, T):
        u = T + a
        phi = sqrt_principal(u * u - b * b)
        if b == 0.0:
            x3 = antiderivative_t(T, lambda tj: tj * 0.0, psi_value)
        else:
            x3 = antiderivative_t(
                T, lambda tj: sqrt_principal((b * b) * recip((tj + a) * (tj + a) - b * b)),
                psi_value)
        return phi * cos(S), phi * sin(S), x3

    return SurfacePatch(
        label=_label("rev1", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=-1, periodic_s=True,
        excluded=lambda s, t: (t + a) ** 2 - b * b <= 1e-9 * (1.0 + b * b),
    )


def _build_rev2s(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if b == 0.0:
        raise InfeasibleDomain("(t+a)^2 < b^2 is empty for b = 0")
    t0, t1 = _GRIDS["rev2s"](p)[2:]
    delta = _GUARD * (1.0 + abs(b))
    lo, hi = -a - abs(b) + delta, -a + abs(b) - delta
    if not (lo <= t0 and t1 <= hi):
        raise ConstraintViolation("(t+a)^2 < b^2", f"needs t in [{lo:g}, {hi:g}]")
    rect = (-5.0, 5.0, lo, hi)

    def chart(S, T):
        u = T + a
        phi = sqrt_principal(b * b - u * u)
        x2 = (-b) * asin(phi * (1.0 / (-b)))
        return phi * sinh(S), x2, phi * cosh(S)

    return SurfacePatch(
        label=_label("rev2s", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: (np.abs(t + a) <= 1e-7)
        | (b * b - (t + a) ** 2 <= 1e-9 * (1.0 + b * b)),
    )


def _build_rev2t(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not b < 0.0:
        raise InfeasibleDomain(
            "cosh^-1 argument sqrt((t+a)^2-b^2)/(-b) >= 1 forces b < 0")
    t0, t1 = _GRIDS["rev2t"](p)[2:]
    lo_needed = -a + math.sqrt(2.0) * abs(b) * (1.0 + _GUARD)
    if t0 < lo_needed - 1e-12:
        raise InfeasibleDomain(
            f"cosh^-1 argument >= 1 forces (t+a)^2 >= 2 b^2, i.e. t >= {lo_needed:g}")
    rect = (-5.0, 5.0, lo_needed, t1 + 5.0)

    def chart(S, T):
        u = T + a
        phi = sqrt_principal(u * u - b * b)
        x2 = (-b) * acosh(phi * (1.0 / (-b)))
        return phi * cosh(S), x2, phi * sinh(S)

    return SurfacePatch(
        label=_label("rev2t", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: (t + a) ** 2 - 2.0 * b * b <= 1e-9 * (1.0 + b * b),
    )


def _build_rev3(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    real_variant = p.get("real_variant", 0.0) != 0.0
    t0, t1 = _GRIDS["rev3"](p)[2:]
    rect = (-5.0, 5.0, t0 - 5.0, t1 + 5.0)

    def psi_value_cplx(t):
        u = np.asarray(t, dtype=float) + a
        if b == 0.0:
            return np.zeros_like(u) + 0j
        return 1j * abs(b) * np.arcsinh(u / abs(b))

    def psi_value_real(t):
        u = np.asarray(t, dtype=float) + a
        if b == 0.0:
            return np.zeros_like(u)
        return abs(b) * np.arcsinh(u / abs(b))

    def chart(S, T):
        u = T + a
        phi = sqrt_principal(b * b + u * u)
        if b == 0.0:
            x1 = antiderivative_t(T, lambda tj: tj * 0.0,
                                  psi_value_real if real_variant else psi_value_cplx)
        elif real_variant:
            x1 = antiderivative_t(
                T, lambda tj: sqrt_principal((b * b) * recip(b * b + (tj + a) * (tj + a))),
                psi_value_real)
        else:
            x1 = antiderivative_t(
                T, lambda tj: sqrt_principal((-b * b) * recip(b * b + (tj + a) * (tj + a))),
                psi_value_cplx)
        return x1, phi * sinh(S), phi * cosh(S)

    if real_variant:
        return SurfacePatch(
            label=_label("rev3", p), chart=chart, domain=rect, params=p,
            norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
            excluded=lambda s, t: np.abs((t + a) ** 2 - b * b) <= 1e-6 * (1.0 + b * b),
        )
    return SurfacePatch(
        label=_label("rev3", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.BILINEAR, sign=-1, periodic_s=False,
        excluded=None,
    )


def _build_hel1(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not (abs(a) > abs(b) > 0.0):
        raise ConstraintViolation("|a|>|b|>0", f"got a={a:g}, b={b:g}")
    t0, t1 = _GRIDS["hel1"](p)[2:]
    _require_outside_window("hel1", "t<min(-a-b,-a+b) or t>max(-a-b,-a+b)", a, b, t0, t1)
    lo, hi = _window(a, b)
    rect = (0.0, TWO_PI, hi + _GUARD, t1 + 5.0) if t0 > hi else (0.0, TWO_PI, t0 - 5.0, lo - _GUARD)

    def chart(S, T):
        u = T + a
        return u * cos(S), u * sin(S), (-b) * S

    return SurfacePatch(
        label=_label("hel1", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=True,
        excluded=lambda s, t: (t + a) ** 2 - b * b <= 1e-9 * (1.0 + b * b),
    )


def _hel2_chart(a: float, b: float):
    def chart(S, T):
        u = T + a
        return u * cosh(S), (-b) * S, u * sinh(S)
    return chart


def _build_hel2s(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not abs(b) > abs(a):
        raise ConstraintViolation("|b|>|a|", f"got a={a:g}, b={b:g}")
    t0, t1 = _GRIDS["hel2s"](p)[2:]
    _require_inside_window("hel2s", "min(-a-b,-a+b)<t<max(-a-b,-a+b)", a, b, t0, t1)
    lo, hi = _window(a, b)
    rect = (-5.0, 5.0, lo + _GUARD, hi - _GUARD)
    return SurfacePatch(
        label=_label("hel2s", p), chart=_hel2_chart(a, b), domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: b * b - (t + a) ** 2 <= 1e-9 * (1.0 + b * b),
    )


def _build_hel2t(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not (abs(a) > abs(b) > 0.0):
        raise ConstraintViolation("|a|>|b|>0", f"got a={a:g}, b={b:g}")
    t0, t1 = _GRIDS["hel2t"](p)[2:]
    _require_outside_window("hel2t", "t<min(-a-b,-a+b) or t>max(-a-b,-a+b)", a, b, t0, t1)
    lo, hi = _window(a, b)
    rect = (-5.0, 5.0, hi + _GUARD, t1 + 5.0) if t0 > hi else (-5.0, 5.0, t0 - 5.0, lo - _GUARD)
    return SurfacePatch(
        label=_label("hel2t", p), chart=_hel2_chart(a, b), domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: (t + a) ** 2 - b * b <= 1e-9 * (1.0 + b * b),
    )


def _build_hel3(p: dict) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not abs(a) < abs(b):
        raise ConstraintViolation("|a|<|b|", f"got a={a:g}, b={b:g}")
    t0, t1 = _GRIDS["hel3"](p)[2:]
    _require_inside_window("hel3", "min(-a-b,-a+b)<t<max(-a-b,-a+b)", a, b, t0, t1)
    lo, hi = _window(a, b)
    rect = (-5.0, 5.0, lo, hi)

    def chart(S, T):
        u = T + a
        return b * S, u * sinh(S), u * cosh(S)

    return SurfacePatch(
        label=_label("hel3", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=None,
    )


def _build_enneper_conj2(p: dict) -> SurfacePatch:
    h = p["h"]
    if h == 0.0:
        raise ConstraintViolation("h != 0")
    rect = (-5.0, 5.0, -5.0, 5.0)

    def chart(S, T):
        s3 = powi(S, 3) * (1.0 / 3.0)
        return (h * powi(S, 2) + T,
                h * (s3 - S) + T * S,
                h * (s3 + S) + T * S)

    return SurfacePatch(
        label=_label("enneper_conj2", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: np.abs(t) <= 1e-3,
    )


def _enneper_rev_chart(a: float, b: float, flip: float):
    def chart(S, T):
        t3 = powi(T, 3) * (flip * a)
        s2t = powi(S, 2) * T
        return t3 + T - s2t + b, -2.0 * S * T, t3 - T - s2t + b
    return chart


def _build_enneper_rev(p: dict, which: str) -> SurfacePatch:
    a, b = p["a"], p["b"]
    if not a > 0.0:
        raise ConstraintViolation("a>0", f"got a={a:g}")
    rect = (-5.0, 5.0, -5.0, 5.0)
    flip = 1.0 if which == "enneper_rev2" else -1.0
    return SurfacePatch(
        label=_label(which, p), chart=_enneper_rev_chart(a, b, flip), domain=rect,
        params=p, norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
        excluded=lambda s, t: np.abs(t) <= 1.2e-2,
    )


def _build_torus(p: dict) -> SurfacePatch:
    R, r = p["R"], p["r"]
    if not R > r > 0.0:
        raise ConstraintViolation("R>r>0", f"got R={R:g}, r={r:g}")
    rect = (0.0, TWO_PI, -0.7, 0.7)

    def chart(S, T):
        ring = R + r * cos(T)
        return ring * cos(S), ring * sin(S), r * sin(T)

    return SurfacePatch(
        label=_label("torus_control", p), chart=chart, domain=rect, params=p,
        norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=True,
        excluded=lambda s, t: np.abs(np.cos(2.0 * t)) <= 0.05,
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_GRIDS = {
    "rev1": lambda p: (0.0, TWO_PI, 0.5, 3.0),
    "rev2s": lambda p: (-1.0, 1.0, 0.1, 1.9),
    "rev2t": lambda p: (-1.0, 1.0, 0.5, 3.0),
    "rev3": lambda p: (-1.0, 1.0, 0.1, 1.5),
    "hel1": lambda p: (0.0, TWO_PI, 0.5, 3.0),
    "hel2s": lambda p: (-1.0, 1.0, 0.1, 1.9),
    "hel2t": lambda p: (-1.0, 1.0, 0.5, 3.0),
    "hel3": lambda p: (-1.0, 1.0, -0.9, 0.9),
    "enneper_conj2": lambda p: (-1.0, 1.0, 0.1, 1.0),
    "enneper_rev2": lambda p: (-1.0, 1.0, 0.1, 1.0),
    "enneper_rev3": lambda p: (-1.0, 1.0, 0.1, 1.0),
    "torus_control": lambda p: (0.0, TWO_PI, -0.6, 0.6),
}

_BUILDERS = {
    "rev1": _build_rev1,
    "rev2s": _build_rev2s,
    "rev2t": _build_rev2t,
    "rev3": _build_rev3,
    "hel1": _build_hel1,
    "hel2s": _build_hel2s,
    "hel2t": _build_hel2t,
    "hel3": _build_hel3,
    "enneper_conj2": _build_enneper_conj2,
    "enneper_rev2": lambda p: _build_enneper_rev(p, "enneper_rev2"),
    "enneper_rev3": lambda p: _build_enneper_rev(p, "enneper_rev3"),
    "torus_control": _build_torus,
}


def _ref_rev1(p):
    a, b = p["a"], p["b"]
    phi = math.sqrt((0.0 + a) ** 2 - b * b)
    return ((0.0, 0.0), (-b / phi, 0.0, -(0.0 + a) / phi))


def _ref_rev2s(p):
    a, b = p["a"], p["b"]
    tb = 1.0 if (-a - abs(b) < 1.0 < -a + abs(b)) else (-a + abs(b) / 2.0)
    u = tb + a
    phi = math.sqrt(b * b - u * u)
    return ((0.0, tb), (0.0, u / phi, abs(b) * math.copysign(1.0, u) / phi))


def _ref_rev2t(p):
    a, b = p["a"], p["b"]
    tb = 1.0
    u = tb + a
    w1 = -u * abs(b) / math.sqrt(u * u - 2.0 * b * b)
    nrm = math.sqrt(abs(w1 * w1 + u * u))
    return ((0.0, tb), (w1 / nrm, u / nrm, 0.0))


def _ref_rev3(p):
    a, b = p["a"], p["b"]
    tb = 1.0
    u = tb + a
    phi = math.sqrt(u * u + b * b)
    return ((0.0, tb), (-u / phi, 0.0, -1j * abs(b) / phi))


def _ref_hel1(p):
    a, b = p["a"], p["b"]
    tb = 1.0
    u = tb + a
    phi = math.sqrt(u * u - b * b)
    return ((0.0, tb), (0.0, -b / phi, u / phi))


def _ref_hel2(p):
    a, b = p["a"], p["b"]
    tb = 1.0
    u = tb + a
    nrm = math.sqrt(abs(u * u - b * b))
    return ((0.0, tb), (0.0, u / nrm, -b / nrm))


def _ref_hel3(p):
    a, b = p["a"], p["b"]
    tb = 0.5
    u = tb + a
    nrm = math.sqrt(u * u + b * b)
    return ((0.0, tb), (u / nrm, -b / nrm, 0.0))


def _ref_enneper_conj2(p):
    h = p["h"]
    tb = 0.5
    nrm = math.sqrt(abs(4.0 * h * tb))
    return ((0.0, tb), (0.0, (h + tb) / nrm, (tb - h) / nrm))


def _ref_enneper_rev(p, flip):
    a, b = p["a"], p["b"]
    tb = 0.5
    # x_s at s=0 is (0, -2t, 0); x_t at s=0 is (3*flip*a*t^2 + 1, 0, 3*flip*a*t^2 - 1)
    y1 = 3.0 * flip * a * tb * tb + 1.0
    y3 = 3.0 * flip * a * tb * tb - 1.0
    W = (-2.0 * tb * y3, 0.0, -2.0 * tb * y1)
    ww = W[0] ** 2 + W[1] ** 2 - W[2] ** 2
    nrm = math.sqrt(abs(ww))
    return ((0.0, tb), (W[0] / nrm, 0.0, W[2] / nrm))


def _ref_torus(p):
    return ((0.0, 0.0), (1.0, 0.0, 0.0))


def _k_rev1(p):
    a, b = p["a"], p["b"]
    return lambda t: -2.0 * b * b * ((t + a) ** 2 - b * b) ** (-2.0)


def _k_rev2s(p):
    a, b = p["a"], p["b"]
    return lambda t: -2.0 * b * b * (b * b - (t + a) ** 2) ** (-2.0)


def _k_rev3(p):
    a, b = p["a"], p["b"]
    return lambda t: -2.0 * b * b * ((t + a) ** 2 + b * b) ** (-2.0)


_ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _ENTRIES[entry.id] = entry


_register(CatalogEntry(
    id="rev1",
    source="revolution surface of the 1st kind, space-like",
    param_names=("a", "b"), default_params={"a": 3.0, "b": 1.0},
    constraint_text=("b^2 < (t+a)^2",),
    norm_mode=NormMode.ABSOLUTE, sign=-1, periodic_s=True,
    grid_domain=_GRIDS["rev1"], reference_sign=_ref_rev1, k_formula=_k_rev1,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((0.3, 6.0), (0.7, 2.8)), has_ruling=False,
))
_register(CatalogEntry(
    id="rev2s",
    source="revolution surface of the 2nd kind, space-like",
    param_names=("a", "b"), default_params={"a": 0.0, "b": 2.0},
    constraint_text=("(t+a)^2 < b^2",),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["rev2s"], reference_sign=_ref_rev2s, k_formula=_k_rev2s,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.25, 1.75)), has_ruling=False,
))
_register(CatalogEntry(
    id="rev2t",
    source="revolution surface of the 2nd kind, time-like (arcosh chart, encoded verbatim)",
    param_names=("a", "b"), default_params={"a": 3.0, "b": -1.0},
    constraint_text=("b^2 < (t+a)^2", "cosh^-1 feasibility: b < 0 and (t+a)^2 >= 2 b^2"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["rev2t"], reference_sign=_ref_rev2t, k_formula=_k_rev1,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.7, 2.8)), has_ruling=False,
))
_register(CatalogEntry(
    id="rev3",
    source="revolution surface of the 3rd kind, Lorentzian (complexified axial component)",
    param_names=("a", "b", "real_variant"), default_params={"a": 0.0, "b": 1.0},
    constraint_text=(),
    norm_mode=NormMode.BILINEAR, sign=-1, periodic_s=False,
    grid_domain=_GRIDS["rev3"], reference_sign=_ref_rev3, k_formula=_k_rev3,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.25, 1.35)), has_ruling=False,
))
_register(CatalogEntry(
    id="hel1",
    source="helicoid of the 1st kind, space-like",
    param_names=("a", "b"), default_params={"a": 3.0, "b": 1.0},
    constraint_text=("|a|>|b|>0", "t<min(-a-b,-a+b) or t>max(-a-b,-a+b)"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=True,
    grid_domain=_GRIDS["hel1"], reference_sign=_ref_hel1, k_formula=None,
    one_type_claimed=False, minimal_claimed=True,
    oracle_ranges=lambda p: ((0.3, 6.0), (0.7, 2.8)), has_ruling=True,
))
_register(CatalogEntry(
    id="hel2s",
    source="helicoid of the 2nd kind, space-like",
    param_names=("a", "b"), default_params={"a": 0.0, "b": 2.0},
    constraint_text=("|b|>|a|", "min(-a-b,-a+b)<t<max(-a-b,-a+b)"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["hel2s"], reference_sign=_ref_hel2, k_formula=None,
    one_type_claimed=False, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.25, 1.75)), has_ruling=True,
))
_register(CatalogEntry(
    id="hel2t",
    source="helicoid of the 2nd kind, time-like",
    param_names=("a", "b"), default_params={"a": 3.0, "b": -1.0},
    constraint_text=("|a|>|b|>0", "t<min(-a-b,-a+b) or t>max(-a-b,-a+b)"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["hel2t"], reference_sign=_ref_hel2, k_formula=None,
    one_type_claimed=False, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.7, 2.8)), has_ruling=True,
))
_register(CatalogEntry(
    id="hel3",
    source="helicoid of the 3rd kind, Lorentzian",
    param_names=("a", "b"), default_params={"a": 0.0, "b": 1.0},
    constraint_text=("|a|<|b|", "min(-a-b,-a+b)<t<max(-a-b,-a+b)"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["hel3"], reference_sign=_ref_hel3, k_formula=None,
    one_type_claimed=False, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (-0.7, 0.7)), has_ruling=True,
))
_register(CatalogEntry(
    id="enneper_conj2",
    source="conjugate Enneper surface of the 2nd kind",
    param_names=("h",), default_params={"h": 1.0},
    constraint_text=("h != 0", "t != 0"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["enneper_conj2"], reference_sign=_ref_enneper_conj2, k_formula=None,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.35, 0.95)), has_ruling=False,
))
_register(CatalogEntry(
    id="enneper_rev2",
    source="revolution Enneper surface of the 2nd kind (space-like)",
    param_names=("a", "b"), default_params={"a": 1.0, "b": 0.0},
    constraint_text=("a>0", "t != 0"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["enneper_rev2"],
    reference_sign=lambda p: _ref_enneper_rev(p, 1.0), k_formula=None,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.35, 0.95)), has_ruling=False,
))
_register(CatalogEntry(
    id="enneper_rev3",
    source="revolution Enneper surface of the 3rd kind (time-like)",
    param_names=("a", "b"), default_params={"a": 1.0, "b": 0.0},
    constraint_text=("a>0", "t != 0"),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=False,
    grid_domain=_GRIDS["enneper_rev3"],
    reference_sign=lambda p: _ref_enneper_rev(p, -1.0), k_formula=None,
    one_type_claimed=True, minimal_claimed=True,
    oracle_ranges=lambda p: ((-0.8, 0.8), (0.35, 0.95)), has_ruling=False,
))
_register(CatalogEntry(
    id="torus_control",
    source="Euclidean torus band (negative control: neither minimal nor 1-type)",
    param_names=("R", "r"), default_params={"R": 2.0, "r": 0.5},
    constraint_text=("R>r>0",),
    norm_mode=NormMode.ABSOLUTE, sign=1, periodic_s=True,
    grid_domain=_GRIDS["torus_control"], reference_sign=_ref_torus, k_formula=None,
    one_type_claimed=False, minimal_claimed=False,
    oracle_ranges=lambda p: ((0.3, 6.0), (-0.45, 0.45)), has_ruling=False,
))

ENTRY_IDS = tuple(_ENTRIES)


def get_entry(entry_id: str) -> CatalogEntry:
    if entry_id not in _ENTRIES:
        raise KeyError(f"unknown surface id {entry_id!r}; known: {', '.join(ENTRY_IDS)}")
    return _ENTRIES[entry_id]


def build(entry_id: str, params: dict | None = None) -> SurfacePatch:
    """Construct a catalog surface, validating the printed constraints."""
    entry = get_entry(entry_id)
    p = _merge_params(entry_id, entry.param_names, entry.default_params, params)
    return _BUILDERS[entry_id](p)


def list_entries() -> list[CatalogEntry]:
    """Catalog summaries in a stable, documented order."""
    return [_ENTRIES[i] for i in ENTRY_IDS]


def ruled_decomposition(entry_id: str, params: dict | None = None) -> RuledSurface:
    """x = alpha(s) + t*beta(s) decomposition for the helicoid entries."""
    entry = get_entry(entry_id)
    if not entry.has_ruling:
        raise NotRuled(f"{entry_id} is not of the form alpha(s) + t*beta(s)")
    p = _merge_params(entry_id, entry.param_names, entry.default_params, params)
    a, b = p["a"], p["b"]
    patch = _BUILDERS[entry_id](p)
    if entry_id == "hel1":
        alpha = lambda S: LVec3(a * J.cos(S), a * J.sin(S), (-b) * S)
        beta = lambda S: LVec3(J.cos(S), J.sin(S), S * 0.0)
    elif entry_id in ("hel2s", "hel2t"):
        alpha = lambda S: LVec3(a * J.cosh(S), (-b) * S, a * J.sinh(S))
        beta = lambda S: LVec3(J.cosh(S), S * 0.0, J.sinh(S))
    else:  # hel3
        alpha = lambda S: LVec3(b * S, a * J.sinh(S), a * J.cosh(S))
        beta = lambda S: LVec3(S * 0.0, J.sinh(S), J.cosh(S))
    return RuledSurface(
        label=patch.label, alpha=alpha, beta=beta, domain=patch.domain,
        norm_mode=patch.norm_mode, sign=patch.sign,
    )
