"""Normal-form rewriting for the Cuntz algebra O_4 and the Haagerup data.

Expressions are finite complex-linear combinations of words in the four
isometries S0, T0, T1, T2 and their adjoints.  The rule X^* Y = delta_{XY} 1
for generators X, Y pushes every adjoint to the right, reducing each word
to the shape u v^* with u, v plain generator strings; products of such
words telescope through the middle adjoint block.  Those shapes still span
the algebra redundantly, since completeness makes the four length-one
projections sum to 1, so normalization additionally expands junction
T2 T2^* pairs to reach a genuine linear basis.

On top of the rewriting engine the module defines the endomorphism rho and
the order-3 automorphism alpha that generate the even part of the Haagerup
subfactor, verifies the defining relations, and solves the two-coefficient
system that pins down the second Q-system.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .scalar import QuadExt, eps_abs

GEN_NAMES = ("S0", "T0", "T1", "T2")

Atom = Tuple[int, bool]  # (generator index 0..3, adjoint flag)
Word = Tuple[Atom, ...]

RESIDUAL_TOL = 1e-9


class CuntzSyntaxError(ValueError):
    """Raised for malformed expression text; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CuntzExpr:
    """Immutable complex-linear combination of words; not auto-normalized."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Word, complex]] = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = complex(c)
            if c != 0:
                clean[w] = c
        self._terms = clean

    @property
    def terms(self) -> Dict[Word, complex]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, CuntzExpr) and self._terms == other._terms

    def __add__(self, other: "CuntzExpr") -> "CuntzExpr":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0j) + c
        return CuntzExpr(out)

    def __sub__(self, other: "CuntzExpr") -> "CuntzExpr":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, CuntzExpr):
            out: Dict[Word, complex] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0j) + c1 * c2
            return CuntzExpr(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __neg__(self) -> "CuntzExpr":
        return self.scale(-1)

    def scale(self, c) -> "CuntzExpr":
        c = complex(c)
        return CuntzExpr({w: c * v for w, v in self._terms.items()})

    def adjoint(self) -> "CuntzExpr":
        out = {}
        for w, c in self._terms.items():
            out[tuple((g, not adj) for g, adj in reversed(w))] = c.conjugate()
        return CuntzExpr(out)

    def prune(self, tol: Optional[float] = None) -> "CuntzExpr":
        """Drop coefficients of modulus at most tol (default the global abs tolerance)."""
        t = eps_abs() if tol is None else tol
        return CuntzExpr({w: c for w, c in self._terms.items() if abs(c) > t})


def zero() -> CuntzExpr:
    return CuntzExpr({})


def one() -> CuntzExpr:
    return CuntzExpr({(): 1.0 + 0j})


def gen_expr(idx: int, adj: bool = False) -> CuntzExpr:
    if not 0 <= idx <= 3:
        raise ValueError("generator index must be 0..3")
    return CuntzExpr({((idx, adj),): 1.0 + 0j})


def gens() -> Tuple[CuntzExpr, CuntzExpr, CuntzExpr, CuntzExpr]:
    """The four generators S0, T0, T1, T2 as expressions."""
    return tuple(gen_expr(i) for i in range(4))


def _reduce_word(word: Word) -> Optional[Word]:
    """Apply X^* Y = delta_{XY} until no adjoint sits left of a non-adjoint.

    Returns the reduced word, or None when an orthogonality delta kills it.
    """
    atoms = list(word)
    i = 0
    while i < len(atoms) - 1:
        (g1, a1), (g2, a2) = atoms[i], atoms[i + 1]
        if a1 and not a2:
            if g1 != g2:
                return None
            del atoms[i:i + 2]
            i = max(0, i - 1)
        else:
            i += 1
    return tuple(atoms)


def _junction(word: Word) -> int:
    """Index of the first adjoint atom (== len(word) when there is none)."""
    for pos, (_, adj) in enumerate(word):
        if adj:
            return pos
    return len(word)


def _eliminate_completeness(terms: Dict[Word, complex]) -> Dict[Word, complex]:
    """Expand in the standard linear basis of the Cuntz algebra.

    The words u v^* only span the algebra redundantly: completeness says
    1 = S0 S0^* + sum_i T_i T_i^*, so any word with a T2 T2^* pair at the
    junction rewrites as u' v'^* minus the S0/T0/T1 counterparts.  After
    eliminating those junction pairs the remaining words are linearly
    independent, which is what makes residuals meaningful.
    """
    work = dict(terms)
    done: Dict[Word, complex] = {}
    while work:
        w, c = work.popitem()
        if c == 0:
            continue
        j = _junction(w)
        if 0 < j < len(w) and w[j - 1] == (3, False) and w[j] == (3, True):
            head, tail = w[:j - 1], w[j + 1:]
            base = head + tail
            work[base] = work.get(base, 0j) + c
            for x in range(3):
                nw = head + ((x, False), (x, True)) + tail
                work[nw] = work.get(nw, 0j) - c
        else:
            done[w] = done.get(w, 0j) + c
    return done


def normalize(e: CuntzExpr) -> CuntzExpr:
    """Rewrite into the standard linear basis; idempotent, linear,
    compatible with the adjoint.

    Two stages: the delta rule X^* Y = delta_{XY} pushes every adjoint to
    the right, giving words u v^*; then junction T2 T2^* pairs are expanded
    through completeness so each element has a unique representation.
    """
    out: Dict[Word, complex] = {}
    for w, c in e.terms.items():
        r = _reduce_word(w)
        if r is not None:
            out[r] = out.get(r, 0j) + c
    return CuntzExpr(_eliminate_completeness(out))


def residual(e: CuntzExpr) -> float:
    """Largest coefficient modulus of the normal form; 0 for the zero element."""
    n = normalize(e)
    return max((abs(c) for c in n.terms.values()), default=0.0)


@dataclass(frozen=True)
class CuntzWord:
    """Normal-form word u v^* as two generator-index strings."""

    u: Tuple[int, ...]
    v: Tuple[int, ...]

    @classmethod
    def from_atoms(cls, word: Word) -> "CuntzWord":
        split = len(word)
        for pos, (_, adj) in enumerate(word):
            if adj:
                split = pos
                break
        if any(not adj for _, adj in word[split:]):
            raise ValueError("word is not in normal form")
        u = tuple(g for g, _ in word[:split])
        v = tuple(g for g, _ in reversed(word[split:]))
        return cls(u, v)

    def atoms(self) -> Word:
        return tuple((g, False) for g in self.u) + tuple(
            (g, True) for g in reversed(self.v))

    def __str__(self) -> str:
        parts = [GEN_NAMES[g] for g in self.u]
        parts += [GEN_NAMES[g] + "^" for g in reversed(self.v)]
        return "*".join(parts) if parts else "1"


def _format_coeff(c: complex) -> str:
    if abs(c.imag) <= 1e-14 * max(1.0, abs(c.real)):
        return f"{c.real:.12g}"
    if abs(c.real) <= 1e-14 * max(1.0, abs(c.imag)):
        return f"{c.imag:.12g}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"({c.real:.12g}{sign}{abs(c.imag):.12g}i)"


def render_expr(e: CuntzExpr, tol: Optional[float] = None) -> str:
    """Deterministic text form of a normalized expression."""
    n = normalize(e).prune(tol)
    if not n.terms:
        return "0"
    items = sorted(n.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    parts = []
    for w, c in items:
        word = str(CuntzWord.from_atoms(w))
        coeff = _format_coeff(c)
        if word == "1":
            parts.append(coeff)
        elif coeff == "1":
            parts.append(word)
        elif coeff == "-1":
            parts.append(f"-{word}")
        else:
            parts.append(f"{coeff}*{word}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# ---------------------------------------------------------------------------
# parser

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<gen>S0|T0|T1|T2)(?P<adj>\^)?"
    r"|(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<imag>i)?"
    r"|(?P<op>[+*-]))"
)


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise CuntzSyntaxError(f"unexpected character {text[bad]!r}", bad)
        if m.group("gen"):
            tokens.append(("atom", (GEN_NAMES.index(m.group("gen")),
                                    m.group("adj") is not None), m.start()))
        elif m.group("num"):
            val = float(m.group("num"))
            tokens.append(("num", val * 1j if m.group("imag") else complex(val),
                           m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    return tokens


def parse(text: str) -> CuntzExpr:
    """Parse expression text; the result is not normalized.

    Grammar: EXPR := TERM (('+'|'-') TERM)*; TERM := [COEFF '*']? WORD;
    WORD := ATOM ('*' ATOM)*; ATOM := generator name with optional '^' for
    the adjoint; COEFF := decimal literal, with an 'i' suffix for imaginary.
    Two leniencies beyond that: a leading '-' negates the first term, and a
    bare COEFF is accepted as a multiple of the empty word (so output like
    "1" round-trips).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise CuntzSyntaxError("empty expression", 0)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else ("end", None, len(text))

    def parse_term() -> CuntzExpr:
        nonlocal idx
        kind, val, pos = peek()
        coeff = 1.0 + 0j
        have_coeff = False
        if kind == "num":
            coeff = val
            have_coeff = True
            idx += 1
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                idx += 1
                kind, val, pos = peek()
            else:
                return CuntzExpr({(): coeff})
        atoms = []
        if kind != "atom":
            raise CuntzSyntaxError("expected a generator", pos)
        while True:
            kind, val, pos = peek()
            if kind != "atom":
                raise CuntzSyntaxError("expected a generator", pos)
            atoms.append(val)
            idx += 1
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                idx += 1
                continue
            break
        return CuntzExpr({tuple(atoms): coeff})

    kind, val, pos = peek()
    sign = 1.0
    if kind == "op" and val == "-":
        sign = -1.0
        idx += 1
    expr = parse_term().scale(sign)
    while idx < len(tokens):
        kind, val, pos = peek()
        if kind != "op" or val not in "+-":
            raise CuntzSyntaxError("expected '+' or '-'", pos)
        idx += 1
        term = parse_term()
        expr = expr + (term if val == "+" else -term)
    return expr


# ---------------------------------------------------------------------------
# Haagerup data

_D_EXACT = QuadExt(Fraction(3, 2), Fraction(1, 2), 13)


@dataclass(frozen=True)
class HaagerupConstants:
    """Numeric constants entering the generator images.

    d = (3+sqrt(13))/2 satisfies d^2 = 3d+1 exactly; A is the 3x3 complex
    matrix in the image of the T generators, and B = (d-1) A(1,2) satisfies
    B^2 - B + d = 0.
    """

    d_exact: QuadExt
    d: float
    sqrt_d: float
    sqrt_4d_minus_1: float
    A: Tuple[Tuple[complex, complex, complex], ...]
    B: complex


def haagerup_constants(a12: Optional[complex] = None) -> HaagerupConstants:
    """Standard constants, or a variant with A(1,2) overridden.

    Overriding keeps A(2,1) = conj(A(1,2)); it exists for sensitivity
    experiments on the relation checks.
    """
    d = float(_D_EXACT)
    sqrt_d = math.sqrt(d)
    sqrt_4d1 = math.sqrt(4 * d - 1)
    if a12 is None:
        a12 = (1 + sqrt_4d1 * 1j) / (2 * (d - 1))
    else:
        a12 = complex(a12)
    off = -1 / (d - 1)
    A = (
        (complex(1 - 1 / (d - 1)), complex(off), complex(off)),
        (complex(off), complex(off), a12),
        (complex(off), a12.conjugate(), complex(off)),
    )
    return HaagerupConstants(_D_EXACT, d, sqrt_d, sqrt_4d1, A, (d - 1) * a12)


_DEFAULT = None


def _default_constants() -> HaagerupConstants:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = haagerup_constants()
    return _DEFAULT


def _t(i: int) -> int:
    """Generator index of T_i for i taken mod 3."""
    return (i % 3) + 1


def rho_images(constants: Optional[HaagerupConstants] = None) -> Dict[int, CuntzExpr]:
    """Normal-form images of the four generators under rho."""
    c = constants or _default_constants()
    img: Dict[int, CuntzExpr] = {}
    terms: Dict[Word, complex] = {((0, False),): 1 / c.d}
    for i in range(3):
        terms[((_t(i), False), (_t(i), False))] = 1 / c.sqrt_d
    img[0] = CuntzExpr(terms)
    for i in range(3):
        terms = {
            ((0, False), (_t(-i), True)): 1 / c.sqrt_d,
            ((_t(-i), False), (0, False), (0, True)): 1.0 + 0j,
        }
        for j in range(3):
            for k in range(3):
                w = ((_t(j), False), (_t(i + j + k), False), (_t(k), True))
                terms[w] = terms.get(w, 0j) + c.A[(i + j) % 3][(i + k) % 3]
        img[_t(i)] = CuntzExpr(terms)
    return img


_IMAGE_CACHE: Dict[HaagerupConstants, Dict[int, CuntzExpr]] = {}


def rho_apply(e: CuntzExpr, constants: Optional[HaagerupConstants] = None) -> CuntzExpr:
    """Apply rho homomorphically (adjoint-compatibly) and normalize."""
    c = constants or _default_constants()
    if c not in _IMAGE_CACHE:
        _IMAGE_CACHE[c] = rho_images(c)
    img = _IMAGE_CACHE[c]
    out = zero()
    for w, coeff in e.terms.items():
        acc = one()
        for g, adj in w:
            factor = img[g].adjoint() if adj else img[g]
            acc = normalize(acc * factor)
        out = out + acc.scale(coeff)
    return normalize(out)


def alpha_apply(e: CuntzExpr, shift: int = 2) -> CuntzExpr:
    """The automorphism fixing S0 and cycling T_i -> T_{i+shift} (default 2)."""
    out = {}
    for w, c in e.terms.items():
        out[tuple((g if g == 0 else _t(g - 1 + shift), adj) for g, adj in w)] = c
    return CuntzExpr(out)


def permute_t(e: CuntzExpr, perm: Tuple[int, int, int]) -> CuntzExpr:
    """Relabel T_i -> T_{perm[i]} while fixing S0.

    Exists for mutation experiments on the relation checks; note that every
    cyclic shift satisfies the alpha-rho exchange relation identically, so
    only non-cyclic permutations can break it.
    """
    if sorted(perm) != [0, 1, 2]:
        raise ValueError("perm must be a permutation of (0, 1, 2)")
    out = {}
    for w, c in e.terms.items():
        out[tuple((g if g == 0 else perm[g - 1] + 1, adj) for g, adj in w)] = c
    return CuntzExpr(out)


# ---------------------------------------------------------------------------
# relation verification


@dataclass(frozen=True)
class RelationCheck:
    name: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[RelationCheck, ...]
    tolerance: float

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def residual_of(self, name: str) -> float:
        for c in self.checks:
            if c.name == name:
                return c.residual
        raise KeyError(name)


def verify_haagerup_relations(
    constants: Optional[HaagerupConstants] = None,
    alpha=None,
    tol: float = RESIDUAL_TOL,
) -> VerificationReport:
    """Check the five relation families defining the Haagerup endomorphism.

    * isometry_relations: rho(X)^* rho(Y) = delta_{XY} on the generators,
      so rho extends to a unital *-endomorphism.
    * t0_s0_relation: rho(T0) S0 = T0 S0.
    * r_element_relation: sqrt(d) S0 + (d-1) T0^2 =
      sqrt(d) rho(S0) + (d-1) rho(T0) T0.
    * alpha_rho_commutation: alpha rho = rho alpha^2 on the generators.
    * s0_intertwines_rho_squared: rho^2(X) S0 = S0 X on the generators.

    Residuals are max coefficient moduli after normalization.  Passing a
    replacement `alpha` (any map on expressions) runs the exchange check
    against that map instead; the default is the genuine automorphism.
    """
    c = constants or _default_constants()
    if alpha is None:
        alpha = alpha_apply
    rho = {i: rho_apply(gen_expr(i), c) for i in range(4)}

    def check(name: str, value: float) -> RelationCheck:
        return RelationCheck(name, value, value < tol)

    iso = 0.0
    for x in range(4):
        for y in range(4):
            target = one() if x == y else zero()
            iso = max(iso, residual(rho[x].adjoint() * rho[y] - target))

    t0, s0 = gen_expr(1), gen_expr(0)
    r_t0s0 = residual(rho[1] * s0 - t0 * s0)

    lhs = c.sqrt_d * s0 + (c.d - 1) * (t0 * t0)
    rhs = c.sqrt_d * rho[0] + (c.d - 1) * (rho[1] * t0)
    r_relation = residual(lhs - rhs)

    comm = 0.0
    for i in range(4):
        left = alpha(rho[i])
        right = rho_apply(alpha(alpha(gen_expr(i))), c)
        comm = max(comm, residual(left - right))

    inter = 0.0
    for i in range(4):
        left = rho_apply(rho[i], c) * s0
        inter = max(inter, residual(left - s0 * gen_expr(i)))

    return VerificationReport(
        (
            check("isometry_relations", iso),
            check("t0_s0_relation", r_t0s0),
            check("r_element_relation", r_relation),
            check("alpha_rho_commutation", comm),
            check("s0_intertwines_rho_squared", inter),
        ),
        tol,
    )


# ---------------------------------------------------------------------------
# the two-coefficient system


@dataclass(frozen=True)
class QSystemSolution:
    """Coefficients of S = a S1 + b S2 satisfying the four scalar equations."""

    a: complex
    b: complex
    residuals: Dict[str, float]

    @property
    def norm_sq(self) -> float:
        return abs(self.a) ** 2 + abs(self.b) ** 2


def _qsystem_residuals(a: complex, b: complex, c: HaagerupConstants) -> Dict[str, float]:
    d = c.d
    s = math.sqrt(d - 1)
    a12 = c.A[1][2]
    return {
        "s0_component": abs(a * a + s * a * b - 1 / c.sqrt_d),
        "t0_component": abs(a * b - b * b / s - math.sqrt((d - 1) / d)),
        "t1_component": abs(a * a - a * b / s - a12 * b * b),
        "t2_component": abs(a * b + (1 + (d - 1) * a12) / s ** 3 * b * b),
    }


def solve_qsystem(
    constants: Optional[HaagerupConstants] = None,
) -> Tuple[QSystemSolution, QSystemSolution]:
    """Solve the four scalar equations; exactly two solutions, (a,b) and (-a,-b).

    b^2 = -(d-1)^2 / ((B+d) sqrt(d)) and a = -(B+1) b / (d-1)^{3/2}; the
    solutions satisfy |a|^2 = 1/d and |b|^2 = (d-1)/d, so |a|^2+|b|^2 = 1.
    Residuals beyond tolerance signal corrupted constants and raise.
    """
    c = constants or _default_constants()
    d = c.d
    b_sq = -((d - 1) ** 2) / ((c.B + d) * c.sqrt_d)
    b = cmath.sqrt(b_sq)
    a = -(c.B + 1) / (d - 1) ** 1.5 * b
    out = []
    for sign in (1, -1):
        ai, bi = sign * a, sign * b
        res = _qsystem_residuals(ai, bi, c)
        sol = QSystemSolution(ai, bi, res)
        if max(res.values()) >= RESIDUAL_TOL or abs(sol.norm_sq - 1) >= RESIDUAL_TOL:
            raise ArithmeticError(
                "the coefficient system is inconsistent; constants are corrupted "
                f"(residuals {res}, |a|^2+|b|^2 = {sol.norm_sq})"
            )
        out.append(sol)
    return (out[0], out[1])
