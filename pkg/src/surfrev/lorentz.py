"""Lorentzian vector algebra of index 1 on R^3.

Scalars are python/numpy complex values (exact field arithmetic on (re, im)
pairs); purely real inputs stay purely real under all operations whose
mathematical result is real.  The scalar product is

    <X, Y> = X1*Y1 + X2*Y2 - X3*Y3

extended bilinearly (not conjugate-linearly) to complex components, and the
cross product is

    X x Y = (X2*Y3 - X3*Y2, X3*Y1 - X1*Y3, X2*Y1 - X1*Y2).

`LVec3` is a plain container: components may be complex scalars, numpy
arrays, or jet values, so the same formulas serve point computations and
jet-valued fields.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonRealVector, NullVector

__all__ = [
    "LVec3",
    "CausalCharacter",
    "NormMode",
    "lorentz_dot",
    "lorentz_cross",
    "causal_character",
    "lorentz_normalize",
    "is_zero",
]


class CausalCharacter(enum.Enum):
    SPACE_LIKE = "space-like"
    TIME_LIKE = "time-like"
    LIGHT_LIKE = "light-like"


class NormMode(enum.Enum):
    """Normalization convention for the Gauss map.

    ABSOLUTE divides by sqrt(|<X,X>|) and reports epsilon = sign<X,X>;
    BILINEAR divides by the principal complex root sqrt(<X,X>) and always
    reports epsilon = +1.  Charts with complexified components need BILINEAR.
    """

    ABSOLUTE = "absolute"
    BILINEAR = "bilinear"


@dataclass(frozen=True)
class LVec3:
    x1: object
    x2: object
    x3: object

    def __add__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "LVec3":
        return LVec3(-self.x1, -self.x2, -self.x3)

    def scale(self, c) -> "LVec3":
        return LVec3(c * self.x1, c * self.x2, c * self.x3)

    def dot(self, other: "LVec3"):
        return lorentz_dot(self, other)

    def cross(self, other: "LVec3") -> "LVec3":
        return lorentz_cross(self, other)

    def components(self):
        return (self.x1, self.x2, self.x3)

    def map(self, fn) -> "LVec3":
        return LVec3(fn(self.x1), fn(self.x2), fn(self.x3))

    def as_array(self) -> np.ndarray:
        return np.asarray([complex(self.x1), complex(self.x2), complex(self.x3)])


def lorentz_dot(x: LVec3, y: LVec3):
    """Index-1 scalar product X1*Y1 + X2*Y2 - X3*Y3, bilinear over complex."""
    return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3


def lorentz_cross(x: LVec3, y: LVec3) -> LVec3:
    """Lorentz cross product; orthogonal to both factors under lorentz_dot."""
    return LVec3(
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x3 * y.x1 - x.x1 * y.x3,
        x.x2 * y.x1 - x.x1 * y.x2,
    )


def _euclid_sq(x: LVec3) -> float:
    return float(sum(abs(complex(c)) ** 2 for c in x.components()))


def _require_real(x: LVec3, tol: float, who: str) -> tuple[float, float, float]:
    comps = []
    scale = 1.0 + math.sqrt(_euclid_sq(x))
    for c in x.components():
        c = complex(c)
        if abs(c.imag) > tol * scale:
            raise NonRealVector(f"{who}: component {c!r} has |imag| > {tol * scale:g}")
        comps.append(c.real)
    return tuple(comps)


def is_zero(x: LVec3, tol: float = 1e-12) -> bool:
    return _euclid_sq(x) <= tol * tol


def causal_character(x: LVec3, tol: float = 1e-12) -> CausalCharacter:
    """Classify a real vector as space-, time- or light-like.

    The zero vector counts as space-like; light-like requires a nonzero
    vector with |<X,X>| below a scale-aware threshold tol*(1 + |X|^2).
    """
    _require_real(x, tol, "causal_character")
    if is_zero(x, tol):
        return CausalCharacter.SPACE_LIKE
    q = complex(lorentz_dot(x, x)).real
    if abs(q) <= tol * (1.0 + _euclid_sq(x)):
        return CausalCharacter.LIGHT_LIKE
    return CausalCharacter.SPACE_LIKE if q > 0 else CausalCharacter.TIME_LIKE


def lorentz_normalize(x: LVec3, mode: NormMode = NormMode.ABSOLUTE,
                      tol: float = 1e-12) -> tuple[LVec3, int]:
    """Normalize a non-null vector; returns (N, epsilon) with <N,N> = epsilon.

    ABSOLUTE mode requires a real vector and uses sqrt(|<X,X>|); BILINEAR
    uses the principal complex root of <X,X> so that <N,N> = +1 even for
    complexified vectors.
    """
    q = complex(lorentz_dot(x, x))
    scale = 1.0 + _euclid_sq(x)
    if abs(q) <= tol * scale:
        raise NullVector(f"<X,X> = {q!r} is null at tolerance {tol * scale:g}")
    if mode is NormMode.ABSOLUTE:
        _require_real(x, tol, "lorentz_normalize(absolute)")
        inv = 1.0 / math.sqrt(abs(q.real))
        eps = 1 if q.real > 0 else -1
        return x.map(lambda c: complex(c).real * inv), eps
    root = np.sqrt(np.complex128(q))
    return x.map(lambda c: complex(c) / root), 1
