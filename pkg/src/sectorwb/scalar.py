"""Number tower for the workbench.

Two kinds of scalars cover everything we compute:

* :class:`QuadExt`: exact elements a + b*sqrt(m) of a real quadratic field,
  with rational a, b and a fixed square-free radicand m.  Index values such as
  (3+sqrt(13))/2 or 2+sqrt(2) live here, and identities like d^2 = 3d + 1 are
  checked with zero error.
* plain ``float`` / ``complex``: everything that needs nested radicals or
  roots of unity, compared through :func:`approx_eq` with a fixed tolerance
  policy.

Only one radicand per value is supported; mixing distinct radicands (other
than through a purely rational operand) raises.  Nested radicals such as
sqrt(d) for d itself irrational are handled downstream in floating point.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

EPS_ABS = 1e-9
EPS_REL = 1e-12

_ENV_TOLERANCE = "SWB_TOLERANCE"


def eps_abs() -> float:
    """Absolute comparison tolerance; SWB_TOLERANCE overrides the default."""
    raw = os.environ.get(_ENV_TOLERANCE)
    if raw is None:
        return EPS_ABS
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"invalid {_ENV_TOLERANCE} value: {raw!r}") from None


def approx_eq(x, y, abs_tol: float | None = None, rel_tol: float = EPS_REL) -> bool:
    """|x - y| <= max(abs_tol, rel_tol * max(|x|, |y|)), for real or complex."""
    if abs_tol is None:
        abs_tol = eps_abs()
    diff = abs(complex(x) - complex(y))
    return diff <= max(abs_tol, rel_tol * max(abs(complex(x)), abs(complex(y))))


def _is_square_free(m: int) -> bool:
    if m < 2:
        return False
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


def _as_fraction(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"expected a rational component, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadExt:
    """Exact a + b*sqrt(m) with rational a, b and square-free integer m >= 2."""

    a: Fraction
    b: Fraction = Fraction(0)
    m: int = 2

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if not isinstance(self.m, int):
            raise TypeError("radicand must be an integer")
        if not _is_square_free(self.m):
            raise ValueError(f"radicand {self.m} is not square-free (or < 2)")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.b != 0 and self.b != 0 and other.m != self.m:
                raise ValueError(f"mixed radicands {self.m} and {other.m}")
            if other.b != 0 and self.b == 0:
                return other
            if other.b == 0:
                return QuadExt(other.a, Fraction(0), self.m)
            return other
        if isinstance(other, Rational):
            return QuadExt(Fraction(other), Fraction(0), self.m)
        return NotImplemented  # type: ignore[return-value]

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        m = self.m if self.b != 0 else o.m
        return QuadExt(self.a + o.a, self.b + o.b, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        m = self.m if self.b != 0 else o.m
        return QuadExt(self.a * o.a + self.b * o.b * m, self.a * o.b + self.b * o.a, m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * o.m
        if norm == 0:
            if o.a == 0 and o.b == 0:
                raise ZeroDivisionError("division by zero")
            # a^2 = b^2 m with m square-free forces a = b = 0
            raise ZeroDivisionError("division by zero element")
        return self * QuadExt(o.a / norm, -o.b / norm, o.m)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = QuadExt(Fraction(1), Fraction(0), self.m)
        base = self
        for _ in range(n):
            out = out * base
        return out

    # -- exact predicates ----------------------------------------------------

    def conj(self) -> "QuadExt":
        """Galois conjugate a - b*sqrt(m)."""
        return QuadExt(self.a, -self.b, self.m)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sign(self) -> int:
        """Exact sign of the real value a + b*sqrt(m)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 m exactly
        if self.a * self.a > self.b * self.b * self.m:
            return 1 if self.a > 0 else -1
        if self.a * self.a < self.b * self.b * self.m:
            return 1 if self.b > 0 else -1
        return 0  # unreachable for square-free m, kept for safety

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            o = other
        elif isinstance(other, Rational):
            o = QuadExt(Fraction(other), Fraction(0), self.m)
        else:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return self.a == o.a
        # distinct square-free radicands never produce equal irrational values
        return self.a == o.a and self.b == o.b and self.m == o.m

    def __hash__(self):
        return hash((self.a, self.b, self.m if self.b != 0 else 0))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError("cannot compare")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- evaluation -----------------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        bs = "" if self.b == 1 else ("-" if self.b == -1 else f"{self.b}*")
        rad = f"{bs}sqrt({self.m})"
        if self.a == 0:
            return rad
        return f"{self.a}{'+' if self.b > 0 else ''}{rad}" if not rad.startswith("-") else f"{self.a}{rad}"


def quad(a, b=0, m: int = 2) -> QuadExt:
    """Convenience constructor accepting ints, Fractions, or 'p/q' strings."""

    def conv(x):
        if isinstance(x, str):
            return Fraction(x)
        return _as_fraction(x)

    return QuadExt(conv(a), conv(b), m)


def quad_eval(x) -> float:
    """Evaluate a QuadExt (or any real scalar) as a float."""
    if isinstance(x, QuadExt):
        return float(x)
    return float(x)
