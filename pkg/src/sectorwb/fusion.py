"""Fusion rings: labels, duals, integer structure constants, and the calculus
built on them (validation, Perron-Frobenius dimensions, decomposition of
formal words, hom-space dimensions).

A fusion ring here is purely combinatorial: an ordered label set with a unit,
a dual involution, and a tensor table N(i,j,k) of nonnegative integers.  The
four axiom families checked by :func:`validate_ring`:

* unit:        N(1,j,k) = N(j,1,k) = delta_{jk}
* duality:     N(i,j,1) = delta_{j, dual(i)},  dual(dual(i)) = i, dual(1) = 1
* Frobenius:   N(i,j,k) = N(dual(i),k,j) = N(k,dual(j),i)
* associativity: sum_m N(i,j,m) N(m,k,l) = sum_m N(j,k,m) N(i,m,l)

Sector expressions ("t2*r*r + 2*r") are formal nonnegative-integer
combinations of words of labels; :func:`decompose` reduces them to
multiplicity vectors and :func:`hom_dim` counts intertwiners between two
expressions.  Frobenius reciprocity then holds automatically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from .scalar import eps_abs

LABEL_RE = re.compile(r"^[A-Za-z0-9_']+$")

PF_TOL = 1e-12
PF_MAX_ITER = 100_000

# a decomposition: label -> multiplicity (absent = 0)
MultVector = Dict[str, int]


class RingStructureError(ValueError):
    """Malformed ring data (unknown labels, bad multiplicities, ...)."""


class ExprSyntaxError(ValueError):
    """Sector-expression text that does not parse; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PFConvergenceError(ArithmeticError):
    """Power iteration failed to converge; carries the iteration count."""

    def __init__(self, iterations: int):
        super().__init__(f"power iteration did not converge after {iterations} iterations")
        self.iterations = iterations


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Immutable fusion-ring data.

    ``tensor`` maps (i, j) to {k: N(i,j,k)} with only positive entries stored;
    ``dual`` is total after construction (identity entries filled in).
    """

    name: str
    labels: Tuple[str, ...]
    unit: str
    dual: Mapping[str, str]
    tensor: Mapping[Tuple[str, str], Mapping[str, int]]

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise RingStructureError("empty label set")
        for lab in labels:
            if not isinstance(lab, str) or not LABEL_RE.match(lab):
                raise RingStructureError(f"bad label {lab!r}")
        if len(set(labels)) != len(labels):
            raise RingStructureError("duplicate labels")
        if self.unit not in labels:
            raise RingStructureError(f"unit {self.unit!r} not among labels")
        dual = dict(self.dual or {})
        for a, b in dual.items():
            if a not in labels or b not in labels:
                raise RingStructureError(f"dual entry {a!r}->{b!r} uses unknown label")
        for lab in labels:
            dual.setdefault(lab, lab)
        tensor: Dict[Tuple[str, str], Dict[str, int]] = {}
        for key, row in dict(self.tensor).items():
            i, j = key
            if i not in labels or j not in labels:
                raise RingStructureError(f"tensor key ({i!r},{j!r}) uses unknown label")
            clean = {}
            for k, n in row.items():
                if k not in labels:
                    raise RingStructureError(f"tensor value label {k!r} unknown in ({i},{j})")
                if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                    raise RingStructureError(f"multiplicity N({i},{j},{k})={n!r} is not a nonnegative integer")
                if n > 0:
                    clean[k] = n
            if clean:
                tensor[(i, j)] = clean
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "tensor", tensor)

    # -- access -------------------------------------------------------------

    def n(self, i: str, j: str, k: str) -> int:
        return self.tensor.get((i, j), {}).get(k, 0)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def fusion_matrix(self, i: str) -> np.ndarray:
        """Left multiplication by i: M[k, j] = N(i, j, k)."""
        n = len(self.labels)
        mat = np.zeros((n, n), dtype=np.int64)
        for jx, j in enumerate(self.labels):
            for k, mult in self.tensor.get((i, j), {}).items():
                mat[self.index(k), jx] = mult
        return mat

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.name == other.name
            and self.labels == other.labels
            and self.unit == other.unit
            and dict(self.dual) == dict(other.dual)
            and {k: dict(v) for k, v in self.tensor.items()}
            == {k: dict(v) for k, v in other.tensor.items()}
        )


# ---------------------------------------------------------------------------
# sector expressions


@dataclass(frozen=True)
class SectorExpr:
    """Formal sum of words: ((coeff, (label, ...)), ...); () is the unit."""

    terms: Tuple[Tuple[int, Tuple[str, ...]], ...]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coeff, word in self.terms:
            bits = ([] if coeff == 1 and word else [str(coeff)]) + list(word)
            parts.append("*".join(bits) if bits else "1")
        return " + ".join(parts)


def parse_sector_expr(text: str, labels: Sequence[str]) -> SectorExpr:
    """Parse ``TERM ('+' TERM)*`` with ``TERM := [COEFF '*']? label ('*' label)*``.

    A leading all-digit token is a coefficient unless it names a label (so the
    Haagerup unit "1" stays a label).  Unknown labels raise RingStructureError.
    """
    label_set = set(labels)
    terms: List[Tuple[int, Tuple[str, ...]]] = []
    pos = 0
    for chunk in text.split("+"):
        stripped = chunk.strip()
        if not stripped:
            raise ExprSyntaxError("empty term", pos)
        tokens = [t.strip() for t in stripped.split("*")]
        if any(not t for t in tokens):
            raise ExprSyntaxError("empty factor", pos + chunk.find("*") + 1)
        coeff = 1
        if tokens[0].isdigit() and tokens[0] not in label_set:
            coeff = int(tokens[0])
            if coeff <= 0:
                raise ExprSyntaxError("coefficient must be positive", pos)
            tokens = tokens[1:]
            if not tokens:
                raise ExprSyntaxError("coefficient without a word", pos)
        for t in tokens:
            if t not in label_set:
                if LABEL_RE.match(t):
                    raise RingStructureError(f"unknown label {t!r}")
                raise ExprSyntaxError(f"bad token {t!r}", pos + chunk.find(t))
        terms.append((coeff, tuple(tokens)))
        pos += len(chunk) + 1
    return SectorExpr(tuple(terms))


# ---------------------------------------------------------------------------
# operations


def validate_ring(ring: FusionRing, max_reports: int = 50) -> List[str]:
    """Check the four axiom families; returns one message per violation."""
    out: List[str] = []
    labels = ring.labels
    unit = ring.unit

    def report(msg: str) -> bool:
        out.append(msg)
        return len(out) >= max_reports

    for j in labels:
        for k in labels:
            want = 1 if j == k else 0
            if ring.n(unit, j, k) != want:
                if report(f"unit: N({unit},{j},{k})={ring.n(unit, j, k)} != {want}"):
                    return out
            if ring.n(j, unit, k) != want:
                if report(f"unit: N({j},{unit},{k})={ring.n(j, unit, k)} != {want}"):
                    return out

    if ring.dual[unit] != unit:
        report(f"duality: dual({unit})={ring.dual[unit]} != {unit}")
    for i in labels:
        if ring.dual[ring.dual[i]] != i:
            if report(f"duality: dual(dual({i}))={ring.dual[ring.dual[i]]} != {i}"):
                return out
        for j in labels:
            want = 1 if j == ring.dual[i] else 0
            if ring.n(i, j, unit) != want:
                if report(f"duality: N({i},{j},{unit})={ring.n(i, j, unit)} != {want}"):
                    return out

    for i in labels:
        for j in labels:
            for k in labels:
                n = ring.n(i, j, k)
                if n != ring.n(ring.dual[i], k, j):
                    if report(
                        f"frobenius: N({i},{j},{k})={n} != "
                        f"N({ring.dual[i]},{k},{j})={ring.n(ring.dual[i], k, j)}"
                    ):
                        return out
                if n != ring.n(k, ring.dual[j], i):
                    if report(
                        f"frobenius: N({i},{j},{k})={n} != "
                        f"N({k},{ring.dual[j]},{i})={ring.n(k, ring.dual[j], i)}"
                    ):
                        return out

    mats = {i: ring.fusion_matrix(i) for i in labels}
    for i in labels:
        for j in labels:
            lhs = sum(ring.n(i, j, m) * mats[m] for m in labels)
            if isinstance(lhs, int):  # all coefficients zero
                lhs = np.zeros_like(mats[i])
            rhs = mats[i] @ mats[j]
            if not np.array_equal(lhs, rhs):
                bad = np.argwhere(lhs != rhs)
                l_ix, k_ix = bad[0]
                k, l = labels[k_ix], labels[l_ix]
                if report(
                    f"associativity: sum_m N({i},{j},m)N(m,{k},{l})={lhs[l_ix, k_ix]}"
                    f" != sum_m N({j},{k},m)N({i},m,{l})={rhs[l_ix, k_ix]}"
                ):
                    return out
    return out


def _strongly_connected(mat: np.ndarray) -> bool:
    n = mat.shape[0]
    adj = mat > 0

    def reach(start: int, forward: bool) -> set:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            row = adj[:, v] if forward else adj[v, :]
            for w in np.nonzero(row)[0]:
                if w not in seen:
                    seen.add(int(w))
                    stack.append(int(w))
        return seen

    return len(reach(0, True)) == n and len(reach(0, False)) == n


def _power_iterate(mat: np.ndarray) -> float:
    """PF eigenvalue by power iteration on mat + I (kills periodicity)."""
    n = mat.shape[0]
    m = mat.astype(float)
    v = np.ones(n) / np.sqrt(n)
    for it in range(PF_MAX_ITER):
        w = m @ v + v
        w /= np.linalg.norm(w)
        if np.max(np.abs(w - v)) < PF_TOL:
            v = w
            return float(v @ (m @ v))
        v = w
    raise PFConvergenceError(PF_MAX_ITER)


def pf_dimensions(ring: FusionRing) -> Dict[str, float]:
    """Perron-Frobenius dimension of every label.

    Each label's left-multiplication matrix is power-iterated directly; labels
    whose matrix is reducible fall back to the global matrix sum(M_i), whose
    PF eigenvector (normalized at the unit) is exactly the dimension vector.
    """
    mats = {i: ring.fusion_matrix(i) for i in ring.labels}
    global_vec = None
    out: Dict[str, float] = {}
    for i in ring.labels:
        if _strongly_connected(mats[i]):
            out[i] = _power_iterate(mats[i])
            continue
        if global_vec is None:
            total = sum(mats.values()).astype(float).T
            n = total.shape[0]
            v = np.ones(n) / np.sqrt(n)
            for it in range(PF_MAX_ITER):
                w = total @ v + v
                w /= np.linalg.norm(w)
                if np.max(np.abs(w - v)) < PF_TOL:
                    v = w
                    break
                v = w
            else:
                raise PFConvergenceError(PF_MAX_ITER)
            global_vec = v / v[ring.index(ring.unit)]
        out[i] = float(global_vec[ring.index(i)])
    return out


def _as_expr(ring: FusionRing, e) -> SectorExpr:
    if isinstance(e, SectorExpr):
        for _, word in e.terms:
            for lab in word:
                if lab not in ring.labels:
                    raise RingStructureError(f"unknown label {lab!r}")
        return e
    if isinstance(e, str):
        return parse_sector_expr(e, ring.labels)
    raise TypeError(f"expected SectorExpr or str, got {type(e).__name__}")


def _mul_label(ring: FusionRing, vec: Mapping[str, int], lab: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for i, mult in vec.items():
        for k, n in ring.tensor.get((i, lab), {}).items():
            out[k] = out.get(k, 0) + mult * n
    return out


def decompose(ring: FusionRing, e) -> MultVector:
    """Reduce a sector expression to irreducible multiplicities.

    Words reduce strictly left to right; associativity of a validated ring
    makes the bracketing irrelevant.
    """
    expr = _as_expr(ring, e)
    total: Dict[str, int] = {}
    for coeff, word in expr.terms:
        vec: Dict[str, int] = {ring.unit: 1}
        for lab in word:
            vec = _mul_label(ring, vec, lab)
        for k, n in vec.items():
            total[k] = total.get(k, 0) + coeff * n
    return {lab: total[lab] for lab in ring.labels if total.get(lab)}


def hom_dim(ring: FusionRing, x, y) -> int:
    """dim Hom(x, y) = sum over irreducibles of the multiplicity product."""
    dx = decompose(ring, x)
    dy = decompose(ring, y)
    return sum(n * dy.get(lab, 0) for lab, n in dx.items())


def check_multiplicity_bound(ring: FusionRing, decomposition: Mapping[str, int]) -> bool:
    """Every multiplicity n_i must satisfy n_i <= d(i) (within tolerance)."""
    dims = pf_dimensions(ring)
    tol = eps_abs()
    return all(n <= dims[lab] + tol for lab, n in decomposition.items())
