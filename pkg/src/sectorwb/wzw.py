"""SU(2) level-k modular data and the angle spectra it induces.

Covers the S-matrix and quantum dimensions, Verlinde fusion numbers,
monodromy ratios, induced angle spectra for a chosen branching subset J,
the shipped Goodman-de la Harpe-Jones branching table, asymptotic-inclusion
spectra, and Kirillov-Reshetikhin quantum 6j-symbols at a root of unity.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

import numpy as np

from .angles import AngleSpectrum


@dataclass(frozen=True)
class ModularData:
    """S-matrix and quantum dimensions of SU(2) at level k."""

    k: int
    S: np.ndarray
    d: Tuple[float, ...]

    def verlinde(self, i: int, j: int, l: int) -> float:
        """Fusion number N_ij^l = sum_m S_im S_jm S_lm / S_0m (real, near-integer)."""
        S = self.S
        return float(np.sum(S[i] * S[j] * S[l] / S[0]))


def su2k_modular(k: int) -> ModularData:
    """S_ij = sqrt(2/(k+2)) sin((i+1)(j+1) pi/(k+2)) and d_i = S_0i/S_00."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("level k must be an integer >= 1")
    n = k + 2
    idx = np.arange(1, k + 2, dtype=float)
    S = math.sqrt(2.0 / n) * np.sin(np.outer(idx, idx) * math.pi / n)
    d = tuple(float(x) for x in S[0] / S[0, 0])
    return ModularData(k, S, d)


def monodromy_ratio(k: int, i0: int, j: int) -> float:
    """|S_00 S_{i0 j}| / (|S_{0 i0}| |S_{0 j}|), clipped into [0, 1].

    For i0 = 1 this collapses to |cos((j+1) pi/(k+2))| / |cos(pi/(k+2))|.
    """
    if not (0 <= i0 <= k and 0 <= j <= k):
        raise ValueError("labels must satisfy 0 <= i0, j <= k")
    S = su2k_modular(k).S
    ratio = abs(S[0, 0] * S[i0, j]) / (abs(S[0, i0]) * abs(S[0, j]))
    return min(1.0, ratio)


def alpha_induction_spectrum(k: int, i0: int, J: Iterable[int]) -> AngleSpectrum:
    """Angle spectrum {arccos(monodromy_ratio(k, i0, j)) : j in J}.

    Ratios of 1 (angle 0) and 0 (angle pi/2) are dropped; J must contain 0
    and stay within the level-k labels.
    """
    Jset = sorted(set(int(j) for j in J))
    if 0 not in Jset:
        raise ValueError("J must contain 0")
    if any(j < 0 or j > k for j in Jset):
        raise ValueError("J must be a subset of {0..k}")
    return AngleSpectrum.from_cosines(monodromy_ratio(k, i0, j) for j in Jset)


@dataclass(frozen=True)
class BranchingRule:
    """Level and label subset J describing the dual canonical endomorphism."""

    graph: str
    k: int
    J: Tuple[int, ...]
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        if 0 not in self.J:
            raise ValueError("J must contain 0")
        if any(j < 0 or j > self.k for j in self.J):
            raise ValueError("J must be a subset of {0..k}")
        if len(self.multiplicities) != len(self.J):
            raise ValueError("one multiplicity per element of J")


_GRAPH_RE = re.compile(r"^([ADE])(\d+)$")


def branching_rule(graph: str) -> BranchingRule:
    """Shipped branching data for the A, D_even and E series graphs.

    A_n carries the trivial subset {0}; D_{2n} at level 4n-4 carries
    {0, k}; E6, E7, E8 carry their standard subsets at levels 10, 16, 28.
    The E and D entries are standard branching-rule data rather than
    anything this package derives.
    """
    m = _GRAPH_RE.match(graph)
    if not m:
        raise ValueError(f"unknown graph name {graph!r} (expected An, D2n, E6, E7 or E8)")
    series, num = m.group(1), int(m.group(2))
    if series == "A":
        if num < 2:
            raise ValueError("A-series graphs need at least 2 vertices")
        k = num - 1
        J = (0,)
    elif series == "D":
        if num % 2 != 0:
            raise ValueError("D-series branching is only shipped for D_even")
        if num < 4:
            raise ValueError("D-series graphs start at D4")
        k = 2 * num - 4
        J = (0, k)
    else:
        table = {6: (10, (0, 6)), 7: (16, (0, 8, 16)), 8: (28, (0, 10, 18, 28))}
        if num not in table:
            raise ValueError(f"unknown graph name {graph!r}")
        k, J = table[num]
    return BranchingRule(graph, k, J, (1,) * len(J))


def ghj_spectrum(graph: str) -> AngleSpectrum:
    """Angle spectrum of the Goodman-de la Harpe-Jones pair for a graph."""
    rule = branching_rule(graph)
    return alpha_induction_spectrum(rule.k, 1, rule.J)


def asymptotic_spectrum(n: int) -> AngleSpectrum:
    """Angle spectrum of the asymptotic inclusion of the A_n subfactor.

    {arccos(cos((j+1) pi/(n+1)) / cos(pi/(n+1))) : j = 1 .. floor((n-2)/2)};
    the count is exactly floor((n-2)/2).
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3")
    base = math.cos(math.pi / (n + 1))
    cosines = [math.cos((j + 1) * math.pi / (n + 1)) / base
               for j in range(1, (n - 2) // 2 + 1)]
    return AngleSpectrum.from_cosines(cosines)


# ---------------------------------------------------------------------------
# quantum 6j-symbols


class SixJDomainError(ValueError):
    """A q-factorial index left the positive range of the truncation."""


def _half_int(x) -> Fraction:
    f = Fraction(x)
    if f < 0 or (2 * f).denominator != 1:
        raise ValueError(f"spin {x} is not a nonnegative half-integer")
    return f


@dataclass(frozen=True)
class QSixJ:
    """A quantum 6j-symbol {j1 j2 j12; j3 j j23} at q = e^{i pi / m}."""

    m: int
    j1: Fraction
    j2: Fraction
    j12: Fraction
    j3: Fraction
    j: Fraction
    j23: Fraction

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError("root-of-unity order m must be an integer >= 2")
        for name in ("j1", "j2", "j12", "j3", "j", "j23"):
            object.__setattr__(self, name, _half_int(getattr(self, name)))

    @property
    def spins(self) -> Tuple[Fraction, ...]:
        return (self.j1, self.j2, self.j12, self.j3, self.j, self.j23)


def _qint(x: int, M: int) -> float:
    return math.sin(x * math.pi / M) / math.sin(math.pi / M)


@lru_cache(maxsize=None)
def _qfact(n: int, M: int) -> float:
    if n < 0:
        raise SixJDomainError("q-factorial of a negative index")
    if n >= M:
        raise SixJDomainError(
            f"q-factorial index {n} reaches the vanishing quantum integer [{M}]"
        )
    p = 1.0
    for i in range(1, n + 1):
        p *= _qint(i, M)
    return p


def _admissible(a: Fraction, b: Fraction, c: Fraction) -> bool:
    return abs(a - b) <= c <= a + b and (a + b + c).denominator == 1


def _delta(a: Fraction, b: Fraction, c: Fraction, M: int) -> float:
    num = (_qfact(int(-a + b + c), M) * _qfact(int(a - b + c), M)
           * _qfact(int(a + b - c), M))
    return math.sqrt(num / _qfact(int(a + b + c + 1), M))


def q6j(sym: QSixJ) -> complex:
    """Evaluate the symbol by the Racah single-sum formula.

    Quantum integers are taken at the half power of q, [x] =
    sin(x pi/(2m)) / sin(pi/(2m)), which keeps every factorial index of an
    admissible level-(m-2) symbol inside the positive range; inadmissible
    triads give 0, and indices at or past the vanishing integer raise
    SixJDomainError.
    """
    j1, j2, j12, j3, j, j23 = sym.spins
    triads = ((j1, j2, j12), (j1, j, j23), (j3, j2, j23), (j3, j, j12))
    if not all(_admissible(*t) for t in triads):
        return complex(0.0)
    M = 2 * sym.m
    T = [int(j1 + j2 + j12), int(j1 + j + j23), int(j3 + j2 + j23), int(j3 + j + j12)]
    Q = [int(j1 + j2 + j3 + j), int(j2 + j12 + j + j23), int(j1 + j12 + j3 + j23)]
    pre = 1.0
    for t in triads:
        pre *= _delta(*t, M)
    total = 0.0
    for t in range(max(T), min(Q) + 1):
        term = (-1) ** t * _qfact(t + 1, M)
        for Ti in T:
            term /= _qfact(t - Ti, M)
        for Qi in Q:
            term /= _qfact(Qi - t, M)
        total += term
    phase = (-1) ** int(j1 + j2 + j3 + j)
    scale = math.sqrt(_qint(int(2 * j12 + 1), M) * _qint(int(2 * j23 + 1), M))
    return complex(phase * scale * pre * total)
