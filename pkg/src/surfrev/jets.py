"""Truncated bivariate Taylor arithmetic in the chart variables (s, t).

A `Jet2` of order M holds the raw mixed partial derivatives

    d[i, j] = d^(i+j) f / ds^i dt^j        for all i + j <= M,

NOT factorial-scaled Taylor coefficients.  This convention is used
consistently everywhere: `deriv(i, j)` returns the partial derivative value
itself, so invariants can be read off directly against textbook formulas.
Conversion by 1/(i! j!) happens only inside composition, where truncated
polynomial algebra is more convenient.

Coefficients are numpy complex128 arrays: a jet may carry a single point
(shape ()) or a whole batch of evaluation points (trailing array shape), and
all arithmetic broadcasts, which is what makes grid sweeps cheap.

Orders up to 4 are supported; that is what fourth-derivative quantities of a
chart (second derivatives of the second fundamental form) require.

`fd_oracle` lives here as well: the independent central finite-difference
engine (one Richardson extrapolation step, h and h/2) used to cross-check
every jet-computed quantity.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import (
    DivisionByZeroValue,
    DomainError,
    StencilOutsideDomain,
)

__all__ = [
    "Jet2",
    "MAX_ORDER",
    "seed",
    "const",
    "jet_arith",
    "jet_func",
    "antiderivative_t",
    "fd_oracle",
    "sin",
    "cos",
    "sinh",
    "cosh",
    "exp",
    "sqrt_principal",
    "sqrt_abs",
    "recip",
    "asin",
    "acosh",
    "powi",
]

MAX_ORDER = 4

_FACT = [1.0, 1.0, 2.0, 6.0, 24.0]
_BINOM = np.array(
    [[math.comb(i, p) if p <= i else 0 for p in range(MAX_ORDER + 1)]
     for i in range(MAX_ORDER + 1)],
    dtype=float,
)

_ZERO_TOL = 1e-300


def _as_cplx(x) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128)


def _pad_pdims(d: np.ndarray, pdims: int) -> np.ndarray:
    """Insert unit point axes after the two coefficient axes so trailing
    point shapes broadcast (numpy aligns shapes from the right)."""
    have = d.ndim - 2
    if have >= pdims:
        return d
    return d.reshape(d.shape[:2] + (1,) * (pdims - have) + d.shape[2:])


class Jet2:
    """Truncated Taylor expansion of a scalar field of (s, t)."""

    __slots__ = ("order", "d")

    def __init__(self, order: int, d: np.ndarray):
        self.order = order
        self.d = d

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(order: int, pshape: tuple = ()) -> "Jet2":
        return Jet2(order, np.zeros((order + 1, order + 1) + pshape, dtype=np.complex128))

    @staticmethod
    def constant(value, order: int) -> "Jet2":
        v = _as_cplx(value)
        out = Jet2.zeros(order, v.shape)
        out.d[0, 0] = v
        return out

    # -- accessors ----------------------------------------------------

    @property
    def value(self) -> np.ndarray:
        return self.d[0, 0]

    @property
    def pshape(self) -> tuple:
        return self.d.shape[2:]

    def deriv(self, i: int, j: int) -> np.ndarray:
        """Raw mixed partial d^(i+j) f / ds^i dt^j."""
        if i + j > self.order:
            raise ValueError(f"partial ({i},{j}) beyond jet order {self.order}")
        return self.d[i, j]

    def truncated(self, order: int) -> "Jet2":
        if order == self.order:
            return self
        if order > self.order:
            raise ValueError("cannot extend a jet to a higher order")
        return Jet2(order, self.d[: order + 1, : order + 1].copy())

    def dshift(self, ds: int, dt: int) -> "Jet2":
        """Jet of the partial derivative d^(ds+dt)/ds^ds dt^dt, order reduced."""
        m = self.order - ds - dt
        if m < 0:
            raise ValueError("dshift would need more orders than the jet carries")
        out = Jet2.zeros(m, self.pshape)
        for i in range(m + 1):
            for j in range(m + 1 - i):
                out.d[i, j] = self.d[i + ds, j + dt]
        return out

    def __repr__(self) -> str:
        return f"Jet2(order={self.order}, value={self.value!r})"

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other, self.order)

    def __add__(self, other) -> "Jet2":
        g = self._coerce(other)
        m = min(self.order, g.order)
        pdims = max(self.d.ndim, g.d.ndim) - 2
        da = _pad_pdims(self.d[: m + 1, : m + 1], pdims)
        db = _pad_pdims(g.d[: m + 1, : m + 1], pdims)
        return Jet2(m, da + db)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2(self.order, -self.d)

    def __sub__(self, other) -> "Jet2":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Jet2":
        return (-self) + other

    def __mul__(self, other) -> "Jet2":
        if not isinstance(other, Jet2):
            c = _as_cplx(other)
            pdims = max(self.d.ndim - 2, c.ndim)
            return Jet2(self.order, _pad_pdims(self.d, pdims) * c)
        m = min(self.order, other.order)
        pshape = np.broadcast_shapes(self.pshape, other.pshape)
        pdims = len(pshape)
        da = _pad_pdims(self.d, pdims)
        db = _pad_pdims(other.d, pdims)
        out = Jet2.zeros(m, pshape)
        for i in range(m + 1):
            for j in range(m + 1 - i):
                acc = 0.0
                for p in range(i + 1):
                    for q in range(j + 1):
                        acc = acc + (_BINOM[i, p] * _BINOM[j, q]) * (
                            da[p, q] * db[i - p, j - q]
                        )
                out.d[i, j] = acc
        return out

    def __rmul__(self, other) -> "Jet2":
        return self.__mul__(other)

    def __truediv__(self, other) -> "Jet2":
        if not isinstance(other, Jet2):
            c = _as_cplx(other)
            pdims = max(self.d.ndim - 2, c.ndim)
            return Jet2(self.order, _pad_pdims(self.d, pdims) / c)
        return self * recip(other)

    def __rtruediv__(self, other) -> "Jet2":
        return recip(self) * other

    def __pow__(self, n: int) -> "Jet2":
        return powi(self, n)


def seed(s, t, order: int) -> tuple[Jet2, Jet2]:
    """Jets of the chart variables themselves at the point(s) (s, t)."""
    sv, tv = _as_cplx(s), _as_cplx(t)
    pshape = np.broadcast_shapes(sv.shape, tv.shape)
    js = Jet2.zeros(order, pshape)
    jt = Jet2.zeros(order, pshape)
    js.d[0, 0] = np.broadcast_to(sv, pshape)
    jt.d[0, 0] = np.broadcast_to(tv, pshape)
    if order >= 1:
        js.d[1, 0] = 1.0
        jt.d[0, 1] = 1.0
    return js, jt


def const(value, order: int) -> Jet2:
    return Jet2.constant(value, order)


# ---------------------------------------------------------------------------
# univariate composition
# ---------------------------------------------------------------------------


def _compose(f: Jet2, derivs: list[np.ndarray]) -> Jet2:
    """g(f) from the derivative values g^(n)(f.value), n = 0..order."""
    m = f.order
    delta = Jet2(m, f.d.copy())
    delta.d[0, 0] = np.zeros_like(delta.d[0, 0])
    out = Jet2.constant(derivs[m] / _FACT[m], m)
    for n in range(m - 1, -1, -1):
        out = out * delta + Jet2.constant(derivs[n] / _FACT[n], m)
    return out


def _check_nonzero(v: np.ndarray, who: str, exc=DivisionByZeroValue):
    if np.any(np.abs(v) < _ZERO_TOL):
        bad = np.asarray(v).ravel()
        first = bad[np.argmin(np.abs(bad))]
        if exc is DomainError:
            raise DomainError(who, complex(first))
        raise exc(f"{who}: value {complex(first)!r} is zero")


def _is_real(v: np.ndarray) -> bool:
    return bool(np.all(v.imag == 0.0))


def _scalar_or_jet(fn_jet, fn_scalar):
    def wrapped(f, *args):
        if isinstance(f, Jet2):
            return fn_jet(f, *args)
        return fn_scalar(_as_cplx(f), *args)
    return wrapped


def _sin_jet(f: Jet2) -> Jet2:
    v = f.value
    s_, c_ = np.sin(v), np.cos(v)
    return _compose(f, [s_, c_, -s_, -c_, s_][: f.order + 1])


def _cos_jet(f: Jet2) -> Jet2:
    v = f.value
    s_, c_ = np.sin(v), np.cos(v)
    return _compose(f, [c_, -s_, -c_, s_, c_][: f.order + 1])


def _sinh_jet(f: Jet2) -> Jet2:
    v = f.value
    sh, ch = np.sinh(v), np.cosh(v)
    return _compose(f, [sh, ch, sh, ch, sh][: f.order + 1])


def _cosh_jet(f: Jet2) -> Jet2:
    v = f.value
    sh, ch = np.sinh(v), np.cosh(v)
    return _compose(f, [ch, sh, ch, sh, ch][: f.order + 1])


def _exp_jet(f: Jet2) -> Jet2:
    e = np.exp(f.value)
    return _compose(f, [e] * (f.order + 1))


def _sqrt_seq(v: np.ndarray, m: int) -> list[np.ndarray]:
    w = np.sqrt(v)
    seq = [w]
    if m >= 1:
        seq.append(0.5 / w)
    if m >= 2:
        seq.append(-0.25 / (w * v))
    if m >= 3:
        seq.append(0.375 / (w * v * v))
    if m >= 4:
        seq.append(-0.9375 / (w * v * v * v))
    return seq


def _sqrt_jet(f: Jet2) -> Jet2:
    _check_nonzero(f.value, "sqrt_principal", DomainError)
    return _compose(f, _sqrt_seq(f.value, f.order))


def _sqrt_abs_jet(f: Jet2) -> Jet2:
    v = f.value
    if not _is_real(v):
        raise DomainError("sqrt_abs", complex(np.asarray(v).ravel()[0]))
    _check_nonzero(v, "sqrt_abs", DomainError)
    sigma = np.where(v.real >= 0.0, 1.0, -1.0).astype(np.complex128)
    base = _sqrt_seq(sigma * v, f.order)
    derivs = [base[n] * sigma**n for n in range(f.order + 1)]
    return _compose(f, derivs)


def _recip_jet(f: Jet2) -> Jet2:
    v = f.value
    _check_nonzero(v, "recip")
    r = 1.0 / v
    seq = [r]
    for n in range(1, f.order + 1):
        seq.append(seq[-1] * (-n) * r)
    return _compose(f, seq)


def _asin_jet(f: Jet2) -> Jet2:
    v = f.value
    if _is_real(v) and np.any(np.abs(v.real) >= 1.0):
        bad = v.real[np.abs(v.real) >= 1.0] if v.shape else v.real
        raise DomainError("asin", float(np.asarray(bad).ravel()[0]))
    one_m = 1.0 - v * v
    _check_nonzero(one_m, "asin", DomainError)
    r = 1.0 / np.sqrt(one_m)
    r2 = r * r
    seq = [np.arcsin(v), r, v * r * r2, (1.0 + 2.0 * v * v) * r * r2 * r2,
           (9.0 * v + 6.0 * v**3) * r * r2**3]
    return _compose(f, seq[: f.order + 1])


def _acosh_jet(f: Jet2) -> Jet2:
    v = f.value
    if _is_real(v) and np.any(v.real <= 1.0):
        bad = v.real[v.real <= 1.0] if v.shape else v.real
        raise DomainError("acosh", float(np.asarray(bad).ravel()[0]))
    vm = v * v - 1.0
    _check_nonzero(vm, "acosh", DomainError)
    q = 1.0 / np.sqrt(vm)
    q2 = q * q
    seq = [np.arccosh(v), q, -v * q * q2, (2.0 * v * v + 1.0) * q * q2 * q2,
           -(6.0 * v**3 + 9.0 * v) * q * q2**3]
    return _compose(f, seq[: f.order + 1])


def _powi_jet(f: Jet2, n: int) -> Jet2:
    if not isinstance(n, (int, np.integer)):
        raise TypeError("powi exponent must be an integer")
    if n < 0:
        return recip(_powi_jet(f, -n))
    out = Jet2.constant(np.ones(f.pshape), f.order)
    base = f
    k = n
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


sin = _scalar_or_jet(_sin_jet, lambda v: np.sin(v))
cos = _scalar_or_jet(_cos_jet, lambda v: np.cos(v))
sinh = _scalar_or_jet(_sinh_jet, lambda v: np.sinh(v))
cosh = _scalar_or_jet(_cosh_jet, lambda v: np.cosh(v))
exp = _scalar_or_jet(_exp_jet, lambda v: np.exp(v))
sqrt_principal = _scalar_or_jet(_sqrt_jet, lambda v: np.sqrt(v))


def _sqrt_abs_scalar(v: np.ndarray) -> np.ndarray:
    if not _is_real(v):
        raise DomainError("sqrt_abs", complex(np.asarray(v).ravel()[0]))
    return np.sqrt(np.abs(v.real)).astype(np.complex128)


sqrt_abs = _scalar_or_jet(_sqrt_abs_jet, _sqrt_abs_scalar)
recip = _scalar_or_jet(_recip_jet, lambda v: 1.0 / v)
asin = _scalar_or_jet(_asin_jet, lambda v: np.arcsin(v))
acosh = _scalar_or_jet(_acosh_jet, lambda v: np.arccosh(v))
powi = _scalar_or_jet(_powi_jet, lambda v, n: v**n)


_ARITH = {
    "add": lambda f, g: f + g,
    "sub": lambda f, g: f - g,
    "mul": lambda f, g: f * g,
    "div": lambda f, g: f / g,
    "neg": lambda f, g: -f,
}

_FUNCS = {
    "sin": sin,
    "cos": cos,
    "sinh": sinh,
    "cosh": cosh,
    "exp": exp,
    "sqrt_principal": sqrt_principal,
    "sqrt_abs": sqrt_abs,
    "recip": recip,
    "asin": asin,
    "acosh": acosh,
    "powi": powi,
}


def jet_arith(op: str, f: Jet2, g: Jet2 | None = None) -> Jet2:
    """Named-dispatch jet arithmetic; binary ops require matching orders."""
    if op not in _ARITH:
        raise ValueError(f"unknown jet operation {op!r}")
    if op != "neg" and g is not None and isinstance(g, Jet2) and g.order != f.order:
        raise ValueError("jet_arith requires matching orders")
    return _ARITH[op](f, g)


def jet_func(fn: str, f: Jet2, n: int | None = None) -> Jet2:
    """Named-dispatch elementary function on a jet (powi takes the exponent n)."""
    if fn not in _FUNCS:
        raise ValueError(f"unknown jet function {fn!r}")
    if fn == "powi":
        if n is None:
            raise ValueError("powi requires the integer exponent n")
        return powi(f, n)
    return _FUNCS[fn](f)


def antiderivative_t(t_jet: Jet2, integrand: Callable[[Jet2], Jet2], value) -> Jet2:
    """Jet of F(t) = integral of a t-only integrand, with F's value supplied.

    The derivative coefficients come from the integrand's own jet; the value
    only fixes the rigid translation of the chart, so the caller may supply a
    closed-form antiderivative or a quadrature result.
    """
    m = t_jet.order
    vals = _as_cplx(value(np.real(t_jet.value)))
    out = Jet2.zeros(m, np.broadcast_shapes(t_jet.pshape, vals.shape))
    out.d[0, 0] = vals
    if m >= 1:
        g = integrand(t_jet.truncated(m - 1))
        for j in range(1, m + 1):
            out.d[0, j] = g.d[0, j - 1]
    return out


# ---------------------------------------------------------------------------
# finite-difference oracle
# ---------------------------------------------------------------------------

_STENCILS = {
    0: ((0, 1.0),),
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
    4: ((-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)),
}


def _stencil_pass(field, s, t, i, j, h):
    acc = None
    for os_, cs in _STENCILS[i]:
        for ot, ct in _STENCILS[j]:
            term = (cs * ct) * _as_cplx(field(s + os_ * h, t + ot * h))
            acc = term if acc is None else acc + term
    return acc / h ** (i + j)


def fd_oracle(field, point, multi_index, h: float = 1e-3, bounds=None):
    """Central finite difference of mixed order (i, j), Richardson (h, h/2).

    `field(s, t)` must accept scalars or numpy arrays.  `bounds`, when given,
    is ((s_lo, s_hi), (t_lo, t_hi), s_periodic): the full stencil must stay
    inside or StencilOutsideDomain is raised (s unchecked when periodic).
    """
    s, t = point
    i, j = multi_index
    if i + j > MAX_ORDER:
        raise ValueError(f"multi_index {multi_index} beyond supported order {MAX_ORDER}")
    reach = 2 * h
    if bounds is not None:
        (s_lo, s_hi), (t_lo, t_hi), s_periodic = bounds
        s_arr, t_arr = np.asarray(s, dtype=float), np.asarray(t, dtype=float)
        if not s_periodic and i > 0 and (
            np.any(s_arr - reach < s_lo) or np.any(s_arr + reach > s_hi)
        ):
            raise StencilOutsideDomain(f"s stencil at {s!r} leaves [{s_lo}, {s_hi}]")
        if j > 0 and (np.any(t_arr - reach < t_lo) or np.any(t_arr + reach > t_hi)):
            raise StencilOutsideDomain(f"t stencil at {t!r} leaves [{t_lo}, {t_hi}]")
    if i == 0 and j == 0:
        return _as_cplx(field(s, t))
    coarse = _stencil_pass(field, s, t, i, j, h)
    fine = _stencil_pass(field, s, t, i, j, h / 2.0)
    return (4.0 * fine - coarse) / 3.0
