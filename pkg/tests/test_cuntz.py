import math

import pytest
from hypothesis import given, strategies as st

from sectorwb.cuntz import (
    CuntzExpr,
    CuntzSyntaxError,
    alpha_apply,
    gen_expr,
    gens,
    haagerup_constants,
    normalize,
    one,
    parse,
    permute_t,
    render_expr,
    residual,
    rho_apply,
    solve_qsystem,
    verify_haagerup_relations,
    zero,
)


S0, T0, T1, T2 = gens()


def test_delta_rule():
    assert normalize(T0.adjoint() * T0) == one()
    assert normalize(S0.adjoint() * T1) == zero()
    assert normalize(T1.adjoint() * T2) == zero()
    w = S0 * T1 * (T1.adjoint()) * (S0.adjoint())
    assert normalize(w * w) == normalize(w)


def test_completeness_rewrite():
    # the range projections sum to 1; the T2 junction is rewritten into the
    # other three, so the sum collapses without a dedicated rule
    total = sum((g * g.adjoint() for g in gens()), zero())
    assert normalize(total) == one()
    # and a lone T2 T2^ becomes 1 minus the three siblings
    n = normalize(T2 * T2.adjoint())
    assert n.terms[()] == 1
    assert len(n) == 4


def test_normalize_fixes_nothing_on_basis_words():
    e = parse("S0*T1^ + 2*T0")
    assert normalize(e) == e


def test_residual_of_exact_relation():
    lhs = sum((g * g.adjoint() for g in gens()), zero())
    assert residual(lhs - one()) == 0.0


def test_render_and_parse_round_trip():
    e = normalize(parse("2*S0*T1^ - T0 + 0.5i*T2*T2") + one())
    assert normalize(parse(render_expr(e))) == e
    assert render_expr(one()) == "1"
    assert render_expr(zero()) == "0"
    assert render_expr(-one()) == "-1"
    assert render_expr(T0 - T1) == "T0 - T1"


def test_parse_error_positions():
    with pytest.raises(CuntzSyntaxError) as exc:
        parse("T0*")
    assert exc.value.position == 3
    with pytest.raises(CuntzSyntaxError) as exc:
        parse("Q0")
    assert exc.value.position == 0
    with pytest.raises(CuntzSyntaxError, match="empty"):
        parse("   ")
    with pytest.raises(CuntzSyntaxError):
        parse("T0 T1")


def test_parse_coefficients():
    e = parse("2i*S0 + 3")
    assert e.terms[((0, False),)] == 2j
    assert e.terms[()] == 3
    assert parse("-T0") == -gen_expr(1, False)


def test_expr_algebra():
    a = parse("S0 + T0")
    b = parse("T0^")
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a
    assert (2 * a).terms == a.scale(2).terms


def test_constants_satisfy_quadratic():
    c = haagerup_constants()
    assert abs(c.B * c.B - c.B + c.d) < 1e-12
    assert abs(abs(c.B + 1) ** 2 - (c.d - 1) ** 2) < 1e-12
    assert c.A[2][1] == c.A[1][2].conjugate()
    # column sums: each row of A has absolute row sum below 2, nothing blows up
    assert c.d == pytest.approx((3 + math.sqrt(13)) / 2, abs=1e-15)


def test_constants_override():
    c = haagerup_constants(a12=0.25 + 0.5j)
    assert c.A[1][2] == 0.25 + 0.5j
    assert c.A[2][1] == 0.25 - 0.5j


def test_relations_all_pass():
    report = verify_haagerup_relations()
    assert report.all_pass
    assert {c.name for c in report.checks} == {
        "isometry_relations", "t0_s0_relation", "r_element_relation",
        "alpha_rho_commutation", "s0_intertwines_rho_squared"}
    for c in report.checks:
        assert c.residual < 1e-9, c


def test_alpha_has_order_three():
    for g in gens():
        e = alpha_apply(alpha_apply(alpha_apply(g)))
        assert e == g
    assert alpha_apply(S0) == S0


def test_transposed_alpha_breaks_exchange():
    swapped = verify_haagerup_relations(
        alpha=lambda e: permute_t(e, (1, 0, 2)))
    assert not swapped.all_pass
    assert swapped.residual_of("alpha_rho_commutation") > 1e-1


def test_qsystem_solutions():
    s1, s2 = solve_qsystem()
    d = (3 + math.sqrt(13)) / 2
    for s in (s1, s2):
        assert abs(s.a) ** 2 == pytest.approx(1 / d, abs=1e-9)
        assert abs(s.b) ** 2 == pytest.approx((d - 1) / d, abs=1e-9)
        assert s.norm_sq == pytest.approx(1.0, abs=1e-12)
        for name in ("s0_component", "t0_component",
                     "t1_component", "t2_component"):
            assert s.residuals[name] < 1e-9
    assert s2.a == -s1.a
    assert s2.b == -s1.b


atoms = st.tuples(st.integers(min_value=0, max_value=3), st.booleans())
words = st.lists(atoms, min_size=0, max_size=4).map(tuple)
coeffs = st.complex_numbers(min_magnitude=0.1, max_magnitude=2.0,
                            allow_nan=False, allow_infinity=False)
exprs = st.dictionaries(words, coeffs, min_size=0, max_size=4).map(CuntzExpr)


@given(exprs)
def test_normalize_idempotent(e):
    n = normalize(e)
    assert residual(n - normalize(n)) <= 1e-12


@given(exprs, exprs)
def test_normalize_linear(x, y):
    assert residual(normalize(x + y) - (normalize(x) + normalize(y))) <= 1e-12


@given(exprs)
def test_normalize_star_compatible(e):
    assert residual(normalize(e.adjoint()) - normalize(e).adjoint()) <= 1e-12


@given(words.filter(lambda w: len(w) <= 3), st.integers(min_value=0, max_value=3))
def test_rho_multiplicative_on_words(w, cut):
    cut = min(cut, len(w))
    x = CuntzExpr({w[:cut]: 1.0})
    y = CuntzExpr({w[cut:]: 1.0})
    whole = rho_apply(CuntzExpr({w: 1.0}))
    assert residual(whole - rho_apply(x) * rho_apply(y)) <= 1e-9
