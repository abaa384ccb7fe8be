"""Chart-level geometry: fundamental forms, Gauss map, curvatures, Laplacian.

Everything here is computed from jets of the immersion x(s, t).  A `_Frame`
bundles the jets one evaluation needs (tangents, normal, metric, inverse
metric) so the public operations stay cheap to compose; all of them accept
scalar or array-valued (s, t) and broadcast.

Conventions fixed here, used everywhere else:

* The raw Gauss map is normalize(x_s cross x_t) in the patch's norm mode,
  multiplied by the patch's declared orientation sign.  Catalog entries pin
  the sign with a reference normal at a base point.
* The Laplace-Beltrami operator keeps its leading minus sign:
  D f = -(1/sqrt|G|) sum_ij d_i(sqrt|G| g^ij d_j f),  G = det(g_ij).
* |EG - F^2| means the absolute value of the real part of the determinant;
  complexified charts in this package have a real metric determinant.
* K_ext = (eg - f^2)/(EG - F^2).  The intrinsic Gaussian curvature applies
  the Brioschi determinant formula to (E, F, G) and multiplies by
  -sign(det g); with that signature factor the two routes agree on both
  space-like and time-like patches, which is what dual-engine checks assume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import jets as J
from .errors import DegenerateMetric, DegenerateSecondForm, ExcludedPoint, NullNormal
from .lorentz import LVec3, NormMode, lorentz_cross, lorentz_dot

__all__ = [
    "SurfacePatch",
    "FundamentalForms",
    "GaussMapSample",
    "CurvatureSample",
    "fundamental_forms",
    "gauss_map",
    "laplace_beltrami",
    "delta_gauss_map",
    "pointwise_k",
    "mean_curvature",
    "gaussian_curvature_ext",
    "gaussian_curvature_intrinsic",
    "second_gaussian_curvature",
    "sweep",
]

METRIC_TOL = 1e-9
NULL_TOL = 1e-12


@dataclass(frozen=True)
class SurfacePatch:
    """A parametric chart (s, t) -> R^3_1 with jet evaluation.

    `chart` receives seeded jets of s and t and returns the three component
    jets.  `domain` is (s0, s1, t0, t1); `excluded` marks singular parameter
    values inside it.  `sign` is the documented orientation flip applied on
    top of the raw normalized cross product.
    """

    label: str
    chart: Callable
    domain: tuple[float, float, float, float]
    params: dict = field(default_factory=dict)
    norm_mode: NormMode = NormMode.ABSOLUTE
    sign: int = 1
    excluded: Callable = None
    periodic_s: bool = False

    def jets(self, s, t, order: int) -> LVec3:
        js, jt = J.seed(s, t, order)
        x1, x2, x3 = self.chart(js, jt)
        return LVec3(x1, x2, x3)

    def point(self, s, t) -> LVec3:
        return self.jets(s, t, 0).map(lambda j: j.value)

    def is_excluded(self, s, t):
        if self.excluded is None:
            return np.zeros(np.broadcast_shapes(np.shape(s), np.shape(t)), dtype=bool)
        return np.asarray(self.excluded(np.asarray(s, dtype=float), np.asarray(t, dtype=float)))

    def check_domain(self, s, t) -> None:
        s0, s1, t0, t1 = self.domain
        s_arr = np.asarray(s, dtype=float)
        t_arr = np.asarray(t, dtype=float)
        slack_s = 1e-9 * (abs(s1 - s0) + 1.0)
        slack_t = 1e-9 * (abs(t1 - t0) + 1.0)
        if not self.periodic_s and (np.any(s_arr < s0 - slack_s) or np.any(s_arr > s1 + slack_s)):
            raise ExcludedPoint(f"{self.label}: s outside [{s0}, {s1}]")
        if np.any(t_arr < t0 - slack_t) or np.any(t_arr > t1 + slack_t):
            raise ExcludedPoint(f"{self.label}: t outside [{t0}, {t1}]")
        bad = self.is_excluded(s, t)
        if np.any(bad):
            raise ExcludedPoint(f"{self.label}: singular parameter value requested")


@dataclass
class FundamentalForms:
    E: object
    F: object
    G: object
    e: object
    f: object
    g: object
    detg: object
    ginv: tuple


@dataclass
class GaussMapSample:
    N: LVec3
    epsilon: object
    target: str


@dataclass
class CurvatureSample:
    H: object
    K_ext: object
    K_int: object
    K_II: object
    point: tuple


def _real_abs(z):
    return np.abs(np.asarray(z).real)


class _Frame:
    """Jets shared by the geometric quantities at one batch of points."""

    def __init__(self, patch: SurfacePatch, s, t, order: int):
        self.patch = patch
        self.order = order
        self.x = patch.jets(s, t, order)
        self.xs = self.x.map(lambda j: j.dshift(1, 0))
        self.xt = self.x.map(lambda j: j.dshift(0, 1))
        self.W = lorentz_cross(self.xs, self.xt)
        self.ww = lorentz_dot(self.W, self.W)
        wscale = 1.0 + sum(np.abs(c.value) ** 2 for c in self.W.components())
        if np.any(np.abs(self.ww.value) <= NULL_TOL * wscale):
            raise NullNormal(f"{patch.label}: light-like tangent plane in the batch")
        if patch.norm_mode is NormMode.ABSOLUTE:
            self.nrm = J.sqrt_abs(self.ww)
            eps = np.where(self.ww.value.real > 0, 1, -1)
            self.eps = int(eps) if eps.shape == () else eps
        else:
            self.nrm = J.sqrt_principal(self.ww)
            one = np.ones_like(self.ww.value.real, dtype=int)
            self.eps = 1 if one.shape == () else one
        inv = J.recip(self.nrm) * float(patch.sign)
        self.N = self.W.map(lambda j: j * inv)
        self.E = lorentz_dot(self.xs, self.xs)
        self.F = lorentz_dot(self.xs, self.xt)
        self.G = lorentz_dot(self.xt, self.xt)
        self.detg = self.E * self.G - self.F * self.F
        mscale = 1.0 + (np.abs(self.E.value) ** 2 + np.abs(self.F.value) ** 2
                        + np.abs(self.G.value) ** 2)
        if np.any(_real_abs(self.detg.value) < METRIC_TOL * mscale):
            raise DegenerateMetric(f"{patch.label}: |EG - F^2| below tolerance")
        dg_inv = J.recip(self.detg)
        self.g11 = self.G * dg_inv
        self.g12 = -self.F * dg_inv
        self.g22 = self.E * dg_inv
        self.sqrt_detg = J.sqrt_abs(self.detg)

    def second_form_jets(self) -> tuple:
        xss = self.x.map(lambda j: j.dshift(2, 0))
        xst = self.x.map(lambda j: j.dshift(1, 1))
        xtt = self.x.map(lambda j: j.dshift(0, 2))
        e = lorentz_dot(xss, self.N)
        f = lorentz_dot(xst, self.N)
        g = lorentz_dot(xtt, self.N)
        return e, f, g

    def laplacian_of(self, phi: J.Jet2):
        """Value of the Laplace-Beltrami operator applied to the jet phi."""
        ps = phi.dshift(1, 0)
        pt = phi.dshift(0, 1)
        p1 = self.sqrt_detg * (self.g11 * ps + self.g12 * pt)
        p2 = self.sqrt_detg * (self.g12 * ps + self.g22 * pt)
        div = p1.dshift(1, 0).value + p2.dshift(0, 1).value
        return -div / self.sqrt_detg.value


def fundamental_forms(patch: SurfacePatch, s, t) -> FundamentalForms:
    """E, F, G, e, f, g plus metric determinant and inverse at (s, t)."""
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 2)
    e, f, g = fr.second_form_jets()
    return FundamentalForms(
        E=fr.E.value, F=fr.F.value, G=fr.G.value,
        e=e.value, f=f.value, g=g.value,
        detg=fr.detg.value,
        ginv=(fr.g11.value, fr.g12.value, fr.g22.value),
    )


def gauss_map(patch: SurfacePatch, s, t) -> GaussMapSample:
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 1)
    n_vals = fr.N.map(lambda j: j.value)
    eps = fr.eps
    target = "S2_1(1)" if np.all(np.asarray(eps) == 1) else "H2(-1)"
    return GaussMapSample(N=n_vals, epsilon=eps, target=target)


def laplace_beltrami(patch: SurfacePatch, field_fn: Callable, s, t):
    """Apply the induced-metric Laplacian (leading minus sign) to a field.

    `field_fn` receives seeded jets of (s, t) and must return a Jet2.
    """
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 3)
    js, jt = J.seed(s, t, 2)
    phi = field_fn(js, jt)
    return fr.laplacian_of(phi)


def delta_gauss_map(patch: SurfacePatch, s, t) -> LVec3:
    """Componentwise Laplace-Beltrami of the Gauss map."""
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 3)
    return LVec3(*(fr.laplacian_of(c) for c in fr.N.components()))


def pointwise_k(patch: SurfacePatch, s, t) -> tuple:
    """Extract k with D N = k N and the certification residual.

    k = <DN, N>/<N, N> (bilinear), residual = max_c |DN_c - k N_c| in
    componentwise complex magnitude (the Lorentzian norm would hide
    light-like residuals).
    """
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 3)
    dn = LVec3(*(fr.laplacian_of(c) for c in fr.N.components()))
    n_vals = fr.N.map(lambda j: j.value)
    nn = lorentz_dot(n_vals, n_vals)
    k = lorentz_dot(dn, n_vals) / nn
    residual = np.maximum(
        np.abs(dn.x1 - k * n_vals.x1),
        np.maximum(np.abs(dn.x2 - k * n_vals.x2), np.abs(dn.x3 - k * n_vals.x3)),
    )
    return k, residual


def mean_curvature(ff: FundamentalForms):
    """H = (Eg - 2Ff + Ge) / (2|EG - F^2|)."""
    denom = 2.0 * _real_abs(ff.detg)
    return (ff.E * ff.g - 2.0 * ff.F * ff.f + ff.G * ff.e) / denom


def gaussian_curvature_ext(ff: FundamentalForms):
    """K = (eg - f^2)/(EG - F^2)."""
    return (ff.e * ff.g - ff.f * ff.f) / ff.detg


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def gaussian_curvature_intrinsic(patch: SurfacePatch, s, t):
    """Gaussian curvature from E, F, G alone (Brioschi determinants).

    The -sign(det g) factor makes the result coincide with
    gaussian_curvature_ext on non-degenerate patches of either causal type.
    """
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 3)
    E, F, G = fr.E, fr.F, fr.G
    Ev, Fv, Gv = E.value, F.value, G.value
    Es, Et, Ett = E.deriv(1, 0), E.deriv(0, 1), E.deriv(0, 2)
    Fs, Ft, Fst = F.deriv(1, 0), F.deriv(0, 1), F.deriv(1, 1)
    Gs, Gt, Gss = G.deriv(1, 0), G.deriv(0, 1), G.deriv(2, 0)
    m1 = [
        [-0.5 * Ett + Fst - 0.5 * Gss, 0.5 * Es, Fs - 0.5 * Et],
        [Ft - 0.5 * Gs, Ev, Fv],
        [0.5 * Gt, Fv, Gv],
    ]
    m2 = [
        [np.zeros_like(Ev), 0.5 * Et, 0.5 * Gs],
        [0.5 * Et, Ev, Fv],
        [0.5 * Gs, Fv, Gv],
    ]
    dg = fr.detg.value
    brioschi = (_det3(m1) - _det3(m2)) / (dg * dg)
    return -np.sign(dg.real) * brioschi


def second_gaussian_curvature(patch: SurfacePatch, s, t, convention: str = "printed"):
    """Curvature of the second fundamental form, from fourth-order jets.

    `convention` picks the prefactor: "printed" uses 1/(|eg| - f^2)^2,
    "signed" the variant 1/(eg - f^2)^2 for sensitivity checks.
    """
    patch.check_domain(s, t)
    fr = _Frame(patch, s, t, 4)
    e, f, g = fr.second_form_jets()
    ev, fv, gv = e.value, f.value, g.value
    base = np.abs(ev * gv) - fv * fv if convention == "printed" else ev * gv - fv * fv
    scale = 1.0 + np.abs(ev) ** 2 + np.abs(fv) ** 2 + np.abs(gv) ** 2
    if np.any(np.abs(base) < METRIC_TOL * scale):
        raise DegenerateSecondForm(f"{patch.label}: ||eg| - f^2| below tolerance")
    e_s, e_t, e_tt = e.deriv(1, 0), e.deriv(0, 1), e.deriv(0, 2)
    f_s, f_t, f_st = f.deriv(1, 0), f.deriv(0, 1), f.deriv(1, 1)
    g_s, g_t, g_ss = g.deriv(1, 0), g.deriv(0, 1), g.deriv(2, 0)
    m1 = [
        [-0.5 * e_tt + f_st - 0.5 * g_ss, 0.5 * e_s, f_s - 0.5 * e_t],
        [f_t - 0.5 * g_s, ev, fv],
        [0.5 * g_t, fv, gv],
    ]
    m2 = [
        [np.zeros_like(ev), 0.5 * e_t, 0.5 * g_s],
        [0.5 * e_t, ev, fv],
        [0.5 * g_s, fv, gv],
    ]
    return (_det3(m1) - _det3(m2)) / (base * base)


def sweep(patch: SurfacePatch, s, t, with_kii: bool = False) -> dict:
    """All pointwise quantities on a batch of points, computed in one pass."""
    patch.check_domain(s, t)
    order = 4 if with_kii else 3
    fr = _Frame(patch, s, t, order)
    e, f, g = fr.second_form_jets()
    ev, fv, gv = e.value, f.value, g.value
    Ev, Fv, Gv = fr.E.value, fr.F.value, fr.G.value
    dg = fr.detg.value
    out = {
        "E": Ev, "F": Fv, "G": Gv, "e": ev, "f": fv, "g": gv, "detg": dg,
        "H": (Ev * gv - 2.0 * Fv * fv + Gv * ev) / (2.0 * _real_abs(dg)),
        "K": (ev * gv - fv * fv) / dg,
        "eps": fr.eps,
        "N": fr.N.map(lambda jj: jj.value),
    }
    dn = LVec3(*(fr.laplacian_of(c) for c in fr.N.components()))
    n_vals = out["N"]
    nn = lorentz_dot(n_vals, n_vals)
    k = lorentz_dot(dn, n_vals) / nn
    out["dN"] = dn
    out["k"] = k
    out["residual"] = np.maximum(
        np.abs(dn.x1 - k * n_vals.x1),
        np.maximum(np.abs(dn.x2 - k * n_vals.x2), np.abs(dn.x3 - k * n_vals.x3)),
    )
    if with_kii:
        base = np.abs(ev * gv) - fv * fv
        with np.errstate(divide="ignore", invalid="ignore"):
            e_s, e_t, e_tt = e.deriv(1, 0), e.deriv(0, 1), e.deriv(0, 2)
            f_s, f_t, f_st = f.deriv(1, 0), f.deriv(0, 1), f.deriv(1, 1)
            g_s, g_t, g_ss = g.deriv(1, 0), g.deriv(0, 1), g.deriv(2, 0)
            m1 = [
                [-0.5 * e_tt + f_st - 0.5 * g_ss, 0.5 * e_s, f_s - 0.5 * e_t],
                [f_t - 0.5 * g_s, ev, fv],
                [0.5 * g_t, fv, gv],
            ]
            m2 = [
                [np.zeros_like(ev), 0.5 * e_t, 0.5 * g_s],
                [0.5 * e_t, ev, fv],
                [0.5 * g_s, fv, gv],
            ]
            kii = (_det3(m1) - _det3(m2)) / (base * base)
        out["K_II"] = np.where(np.abs(base) < 1e-12 * (1.0 + np.abs(ev * gv)),
                               np.nan + 0j, kii)
    # intrinsic curvature from first-form jets only
    E, F, G = fr.E, fr.F, fr.G
    m1 = [
        [-0.5 * E.deriv(0, 2) + F.deriv(1, 1) - 0.5 * G.deriv(2, 0),
         0.5 * E.deriv(1, 0), F.deriv(1, 0) - 0.5 * E.deriv(0, 1)],
        [F.deriv(0, 1) - 0.5 * G.deriv(1, 0), Ev, Fv],
        [0.5 * G.deriv(0, 1), Fv, Gv],
    ]
    m2 = [
        [np.zeros_like(Ev), 0.5 * E.deriv(0, 1), 0.5 * G.deriv(1, 0)],
        [0.5 * E.deriv(0, 1), Ev, Fv],
        [0.5 * G.deriv(1, 0), Fv, Gv],
    ]
    out["K_int"] = -np.sign(dg.real) * (_det3(m1) - _det3(m2)) / (dg * dg)
    return out
