"""Ruled surfaces x(s, t) = alpha(s) + t*beta(s) and their causal taxonomy.

The six-type classification goes by the causal characters of the base curve
velocity alpha', the director beta and its derivative beta': a space-like
(time-like) base gives the plus (minus) family, a space-like director with
non-null / light-like beta' gives superscript 1 / 2, a time-like director
gives superscript 3 (only possible in the plus family), and light-like
alpha' with light-like beta is a null scroll.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import jets as J
from .errors import InconsistentCharacter
from .geometry import SurfacePatch, sweep
from .lorentz import CausalCharacter, LVec3, NormMode, causal_character

__all__ = [
    "RuledSurface",
    "RuledType",
    "RulingConstancy",
    "classify_ruled",
    "constancy_along_rulings",
]


class RuledType(enum.Enum):
    M1_PLUS = "M1+"
    M2_PLUS = "M2+"
    M3_PLUS = "M3+"
    M1_MINUS = "M1-"
    M2_MINUS = "M2-"
    NULL_SCROLL = "null scroll"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class RuledSurface:
    """Base curve and director field, each jet-evaluable to order 4."""

    label: str
    alpha: Callable  # S jet -> LVec3 of jets
    beta: Callable
    domain: tuple[float, float, float, float]
    norm_mode: NormMode = NormMode.ABSOLUTE
    sign: int = 1

    def to_patch(self) -> SurfacePatch:
        def chart(js, jt):
            a = self.alpha(js)
            b = self.beta(js)
            return (a.x1 + jt * b.x1, a.x2 + jt * b.x2, a.x3 + jt * b.x3)

        return SurfacePatch(
            label=f"{self.label}[ruled]",
            chart=chart,
            domain=self.domain,
            norm_mode=self.norm_mode,
            sign=self.sign,
        )

    def frames_at(self, s: float) -> tuple[LVec3, LVec3, LVec3]:
        """(alpha'(s), beta(s), beta'(s)) as value vectors."""
        js, _ = J.seed(float(s), 0.0, 1)
        a = self.alpha(js)
        b = self.beta(js)
        aprime = a.map(lambda jj: jj.deriv(1, 0))
        bval = b.map(lambda jj: jj.value)
        bprime = b.map(lambda jj: jj.deriv(1, 0))
        return aprime, bval, bprime


def _constant_character(vectors, tol: float, what: str, samples) -> CausalCharacter:
    chars = [causal_character(v, tol) for v in vectors]
    if any(c is not chars[0] for c in chars):
        bad = [s for s, c in zip(samples, chars) if c is not chars[0]]
        raise InconsistentCharacter(what, bad)
    return chars[0]


def classify_ruled(r: RuledSurface, s_samples: Sequence[float],
                   tol: float = 1e-12) -> RuledType:
    """Type per the six-group taxonomy; characters must agree across samples.

    beta' is only consulted where the taxonomy needs it (the superscript of
    a space-like director), so a null scroll with beta' vanishing somewhere
    still classifies.
    """
    triples = [r.frames_at(s) for s in s_samples]
    a_char = _constant_character([tr[0] for tr in triples], tol, "alpha'", s_samples)
    b_char = _constant_character([tr[1] for tr in triples], tol, "beta", s_samples)
    L = CausalCharacter.LIGHT_LIKE
    if a_char is L and b_char is L:
        return RuledType.NULL_SCROLL
    if a_char is CausalCharacter.SPACE_LIKE:
        if b_char is CausalCharacter.SPACE_LIKE:
            bp_char = _constant_character([tr[2] for tr in triples], tol,
                                          "beta'", s_samples)
            return RuledType.M2_PLUS if bp_char is L else RuledType.M1_PLUS
        if b_char is CausalCharacter.TIME_LIKE:
            return RuledType.M3_PLUS
        return RuledType.UNCLASSIFIED
    if a_char is CausalCharacter.TIME_LIKE:
        if b_char is CausalCharacter.SPACE_LIKE:
            bp_char = _constant_character([tr[2] for tr in triples], tol,
                                          "beta'", s_samples)
            return RuledType.M2_MINUS if bp_char is L else RuledType.M1_MINUS
        return RuledType.UNCLASSIFIED
    return RuledType.UNCLASSIFIED


@dataclass
class RulingConstancy:
    holds: bool
    max_deviation: float
    side_condition_ok: bool
    note: str


def _side_conditions(c_kii: float, c_h: float, c_k: float) -> tuple[bool, str]:
    if c_kii != 0.0 and c_h != 0.0 and c_k == 0.0:
        if 2.0 * c_kii - c_h == 0.0:
            return False, "combo a*K_II + b*H requires 2a - b != 0"
        return True, "combo a*K_II + b*H, coefficients admissible"
    if c_h != 0.0 and c_kii == 0.0:
        return True, "combo a*H + b*K, coefficients admissible"
    if c_kii != 0.0 and c_h == 0.0:
        return True, "combo a*K_II + b*K, coefficients admissible"
    if c_k != 0.0 and c_kii == 0.0 and c_h == 0.0:
        return True, "pure K combo (no stated side condition)"
    return False, "all coefficients zero"


def constancy_along_rulings(r: RuledSurface, combo: tuple[float, float, float],
                            t_samples: Sequence[float], s_samples: Sequence[float],
                            tol: float = 1e-8) -> RulingConstancy:
    """Is c_KII*K_II + c_H*H + c_K*K constant in t on each ruling (fixed s)?

    Violated coefficient side conditions are reported in the result, not
    silently enforced.
    """
    c_kii, c_h, c_k = combo
    side_ok, note = _side_conditions(c_kii, c_h, c_k)
    patch = r.to_patch()
    t_arr = np.asarray(list(t_samples), dtype=float)
    worst = 0.0
    need_kii = c_kii != 0.0
    for s in s_samples:
        s_arr = np.full_like(t_arr, float(s))
        data = sweep(patch, s_arr, t_arr, with_kii=need_kii)
        q = c_h * data["H"] + c_k * data["K"]
        if need_kii:
            q = q + c_kii * data["K_II"]
        q = np.asarray(q)
        spread = float(np.max(np.abs(q - q.flat[0])))
        worst = max(worst, spread)
    return RulingConstancy(holds=worst <= tol, max_deviation=worst,
                           side_condition_ok=side_ok, note=note)
