import math
import os
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sectorwb.scalar import QuadExt, approx_eq, eps_abs, quad, quad_eval


def test_basic_arithmetic():
    d = quad(Fraction(3, 2), Fraction(1, 2), 13)  # (3+sqrt(13))/2
    assert d * d == 3 * d + 1
    assert (d - 3) * d == quad(1, 0, 13)
    assert float(d) == pytest.approx((3 + math.sqrt(13)) / 2, abs=1e-15)


def test_golden_ratio_identities():
    phi = quad(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi * phi == phi + 1
    assert phi ** 3 == 2 * phi + 1
    assert (phi - 1) * phi == quad(1, 0, 5)


def test_exact_sign_near_zero():
    # Pell pair: 665857^2 - 2*470832^2 = 1, so 665857 beats 470832*sqrt(2)
    # by about 7.5e-7; float comparison at this scale is already unreliable
    x = quad(665857, -470832, 2)
    assert x > 0
    assert quad(-665857, 470832, 2) < 0


def test_division_and_inverse():
    y = quad(2, 1, 2)
    assert y / y == quad(1, 0, 2)
    assert (1 / y) * y == quad(1, 0, 2)


def test_square_free_radicand_rejected():
    with pytest.raises(ValueError):
        quad(1, 1, 12)
    with pytest.raises(ValueError):
        quad(1, 1, 0)


def test_mixed_radicand_comparisons():
    assert quad(0, 1, 2) != quad(0, 1, 3)
    assert quad(5, 0, 2) == quad(5, 0, 3) == 5


def test_quad_eval_passthrough():
    assert quad_eval(Fraction(1, 4)) == 0.25
    assert quad_eval(2) == 2.0
    assert quad_eval(quad(1, 1, 5)) == pytest.approx(1 + math.sqrt(5), abs=1e-15)


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("SWB_TOLERANCE", "0.5")
    assert eps_abs() == 0.5
    assert approx_eq(1.0, 1.3)
    monkeypatch.delenv("SWB_TOLERANCE")
    assert eps_abs() == 1e-9
    assert not approx_eq(1.0, 1.3)


fracs = st.fractions(min_value=-30, max_value=30, max_denominator=12)


@given(fracs, fracs, fracs, fracs, st.sampled_from([2, 3, 5, 7, 13]))
def test_ring_axioms_hold(a1, b1, a2, b2, m):
    x = quad(a1, b1, m)
    y = quad(a2, b2, m)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * (x - y) == x * x - y * y
    assert float(x * y) == pytest.approx(float(x) * float(y), abs=1e-6, rel=1e-9)


@given(fracs, fracs, st.sampled_from([2, 3, 5, 7, 13]))
def test_sign_matches_float(a, b, m):
    x = quad(a, b, m)
    fx = float(x)
    if fx > 1e-7:
        assert x > 0
    elif fx < -1e-7:
        assert x < 0
