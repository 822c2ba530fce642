"""Closed-form angle invariants for quadrilaterals of factors.

All operations here evaluate formulas; they do not (and cannot) check the
operator-algebraic hypotheses behind them, such as irreducibility of the
elementary subfactors or 2-supertransitivity.  Callers are responsible for
those, and the CLI prints a "hypotheses assumed" note with every result.

Angles are radians throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .scalar import eps_abs, quad_eval

_DEDUP = 1e-9

HYPOTHESES_NOTE = (
    "hypotheses assumed: irreducible quadrilateral with the supertransitivity "
    "the formula requires; not checked from the numeric inputs"
)


def _real(x) -> float:
    """Accept float, int, Fraction or QuadExt inputs."""
    return quad_eval(x)


@dataclass(frozen=True)
class AngleSpectrum:
    """Set of angles of a quadrilateral, with 0 and pi/2 stripped.

    The endpoints carry no information beyond the projection geometry
    (0 collapses P = Q, pi/2 is the commuting direction), so only the
    interior angles are stored and a `commuting` flag records whether
    the data forces E_P E_Q = E_N.
    """

    angles: Tuple[float, ...]
    commuting: bool = False

    def __post_init__(self):
        for a in self.angles:
            if not (0.0 < a < math.pi / 2):
                raise ValueError(f"angle {a} outside the open interval (0, pi/2)")
        if any(b - a < _DEDUP for a, b in zip(self.angles, self.angles[1:])):
            raise ValueError("angles must be strictly increasing after dedup")

    @classmethod
    def from_cosines(cls, cosines: Iterable[float], commuting: bool = False) -> "AngleSpectrum":
        kept = []
        for c in cosines:
            c = _real(c)
            if c >= 1.0 - _DEDUP or abs(c) <= _DEDUP:
                continue
            kept.append(math.acos(min(1.0, max(-1.0, c))))
        kept.sort()
        dedup = []
        for a in kept:
            if not dedup or a - dedup[-1] >= _DEDUP:
                dedup.append(a)
        return cls(tuple(dedup), commuting)


@dataclass(frozen=True)
class QuadIndexData:
    """The two elementary indices [P:N] and [M:P] of a quadrilateral."""

    pn: float
    mp: float

    def __post_init__(self):
        object.__setattr__(self, "pn", _real(self.pn))
        object.__setattr__(self, "mp", _real(self.mp))
        if not (self.pn > 1 and self.mp > 1):
            raise ValueError("indices must both exceed 1")


@dataclass(frozen=True)
class InnerData:
    """Dimension d(sigma) and inner product <s_P, s_Q> of the coupling isometries."""

    d_sigma: float
    s: float

    def __post_init__(self):
        object.__setattr__(self, "d_sigma", _real(self.d_sigma))
        object.__setattr__(self, "s", _real(self.s))
        if not self.d_sigma > 1:
            raise ValueError("d_sigma must exceed 1")
        if abs(self.s) > 1 + eps_abs():
            raise ValueError("|s| must not exceed 1")


@dataclass(frozen=True)
class AngleCandidate:
    """One branch of the quadratic angle formula.

    A cosine of 1 does not correspond to an angle at all (it would force
    P = Q), so `angle` is None and `degenerate` is set on that branch.
    """

    cosine: float
    degenerate: bool
    angle: Optional[float]


def angle_cocommuting(pn, mp) -> AngleSpectrum:
    """Angle of a cocommuting quadrilateral from its two indices.

    cos^2 = (pn - mp) / (mp * (pn - 1)); equal indices force the
    commuting case instead of an angle.
    """
    q = QuadIndexData(pn, mp)
    if q.pn < q.mp - eps_abs():
        raise ValueError("pn must be >= mp (cos^2 would be negative)")
    if abs(q.pn - q.mp) <= eps_abs():
        return AngleSpectrum((), commuting=True)
    cos2 = (q.pn - q.mp) / (q.mp * (q.pn - 1.0))
    return AngleSpectrum.from_cosines([math.sqrt(cos2)])


def angle_group(g: int, h: int, k: int, hk: int) -> AngleSpectrum:
    """Angle of a group-subgroup quadrilateral from the four group orders.

    Uses pn = [G:H] and mp = [H:H image in the intersection], which requires
    |H| = |K| and the usual divisibility of orders.
    """
    for name, val in (("g", g), ("h", h), ("k", k), ("hk", hk)):
        if not isinstance(val, int) or val < 1:
            raise ValueError(f"order {name} must be a positive integer")
    if h != k:
        raise ValueError("|H| = |K| is required (equal elementary indices)")
    if g % h != 0 or h % hk != 0:
        raise ValueError("group orders must divide: |H∩K| | |H| and |H| | |G|")
    pn = g // h
    mp = h // hk
    if pn <= 1 or mp <= 1:
        raise ValueError("degenerate inclusion: both indices must exceed 1")
    return angle_cocommuting(pn, mp)


def angle_candidates(d_sigma, s) -> Tuple[AngleCandidate, AngleCandidate]:
    """Both candidate cosines allowed by the coupling quadratic.

    c± = (sqrt((d-1)^2 s^2 + 4 d) ± (d-1)|s|) / (2 d); the product of the
    two cosines is exactly 1/d.  Returned with the plus branch first.
    """
    data = InnerData(d_sigma, s)
    d = data.d_sigma
    root = math.sqrt((d - 1.0) ** 2 * data.s ** 2 + 4.0 * d)
    spread = (d - 1.0) * abs(data.s)
    out = []
    for c in ((root + spread) / (2.0 * d), (root - spread) / (2.0 * d)):
        if c >= 1.0 - _DEDUP:
            out.append(AngleCandidate(c, True, None))
        else:
            out.append(AngleCandidate(c, False, math.acos(c)))
    return (out[0], out[1])


def t_inner_roots(d_sigma, s) -> Tuple[float, float]:
    """Roots of x^2 - ((d-1)/d) s x - 1/d = 0, larger root first.

    Vieta: sum = (d-1) s / d, product = -1/d; the absolute values of the
    roots coincide with the two candidate cosines.
    """
    data = InnerData(d_sigma, s)
    d = data.d_sigma
    b = (d - 1.0) * data.s / d
    disc = math.sqrt(b * b + 4.0 / d)
    return ((b + disc) / 2.0, (b - disc) / 2.0)


def angle_bound(pn) -> float:
    """Largest possible angle arccos(1/(pn-1)) in the 3-supertransitive case."""
    val = _real(pn)
    if val <= 2:
        raise ValueError("pn must exceed 2 for the bound to be a cosine")
    return math.acos(1.0 / (val - 1.0))
