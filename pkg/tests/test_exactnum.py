"""Exact cyclotomic scalars and three-variable Laurent polynomials."""

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from yokohecke.exactnum import Cyclo, LPoly, euler_phi, root_power

# ---------------------------------------------------------------------------
# cyclotomic scalars
# ---------------------------------------------------------------------------


def test_euler_phi_against_sympy():
    for d in range(1, 31):
        assert euler_phi(d) == sympy.totient(d)


def test_zeta_satisfies_minimal_polynomial():
    # the d-th cyclotomic polynomial annihilates zeta_d: reduce it by hand
    for d in range(1, 13):
        poly = sympy.cyclotomic_poly(d, sympy.Symbol("x"))
        coeffs = sympy.Poly(poly, sympy.Symbol("x")).all_coeffs()[::-1]
        acc = Cyclo.zero(d)
        for k, c in enumerate(coeffs):
            acc = acc + Cyclo.zeta(d, k) * Fraction(int(c))
        assert acc.is_zero(), d


def test_zeta_power_wraps_modulo_order():
    assert Cyclo.zeta(5, 7) == Cyclo.zeta(5, 2)
    assert Cyclo.zeta(6, 6) == Cyclo.one(6)
    assert Cyclo.zeta(2) == Cyclo.from_rat(2, -1)


def test_root_power_is_group_homomorphism_in_s():
    for d in range(1, 9):
        for a in range(1, d + 1):
            for s in range(0, 2 * d):
                for s2 in range(0, d):
                    lhs = root_power(d, a, s) * root_power(d, a, s2)
                    assert lhs == root_power(d, a, s + s2)


def test_root_orthogonality():
    # sum_{s=0}^{d-1} xi_a^s xi_b^{-s} = d * [a == b]
    for d in range(1, 9):
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                acc = Cyclo.zero(d)
                for s in range(d):
                    acc = acc + root_power(d, a, s) * root_power(d, b, -s)
                expected = Cyclo.from_rat(d, d if a == b else 0)
                assert acc == expected, (d, a, b)


def test_cyclo_inverse():
    for d in (1, 2, 3, 4, 5, 6, 8, 12):
        for k in range(d):
            x = Cyclo.zeta(d, k) + Cyclo.from_rat(d, 2)
            assert x * x.inverse() == Cyclo.one(d)
    with pytest.raises(ZeroDivisionError):
        Cyclo.zero(3).inverse()


def test_cyclo_eval_complex_is_primitive_root():
    for d in range(1, 13):
        z = Cyclo.zeta(d).eval_complex()
        assert abs(z - cmath.exp(2j * cmath.pi / d)) < 1e-9


rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def cyclos(draw, order=6):
    phi = euler_phi(order)
    coeffs = draw(st.lists(rationals, min_size=phi, max_size=phi))
    return Cyclo(order, tuple(coeffs))


@given(cyclos(), cyclos(), cyclos())
@settings(max_examples=60, deadline=None)
def test_cyclo_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Cyclo.zero(6) == a
    assert a * Cyclo.one(6) == a
    assert a - a == Cyclo.zero(6)


@given(cyclos(), cyclos())
@settings(max_examples=40, deadline=None)
def test_cyclo_eval_complex_is_ring_map(a, b):
    za, zb = a.eval_complex(), b.eval_complex()
    assert abs((a + b).eval_complex() - (za + zb)) < 1e-9
    assert abs((a * b).eval_complex() - za * zb) < 1e-9


# ---------------------------------------------------------------------------
# Laurent polynomials in u, v, g
# ---------------------------------------------------------------------------


@st.composite
def lpolys(draw, order=2):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        key = (
            draw(st.integers(min_value=-3, max_value=3)),
            draw(st.integers(min_value=-3, max_value=3)),
            draw(st.integers(min_value=-3, max_value=3)),
        )
        terms[key] = draw(rationals)
    out = LPoly.zero(order)
    for (eu, ev, eg), c in terms.items():
        out = out + LPoly.monomial(order, c, eu, ev, eg)
    return out


@given(lpolys(), lpolys(), lpolys())
@settings(max_examples=60, deadline=None)
def test_lpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LPoly.zero(2) == a
    assert a * LPoly.one(2) == a
    assert a - a == LPoly.zero(2)


@given(lpolys(), lpolys())
@settings(max_examples=40, deadline=None)
def test_lpoly_eval_complex_is_ring_map(a, b):
    pt = (0.3 + 0.7j, -1.1 + 0.2j, 0.5 - 0.4j)
    za, zb = a.eval_complex(*pt), b.eval_complex(*pt)
    assert abs((a + b).eval_complex(*pt) - (za + zb)) < 1e-9
    assert abs((a * b).eval_complex(*pt) - za * zb) < 1e-9


def test_lpoly_shift_and_monomial_inverse():
    p = LPoly.var(1, "u", 2) + LPoly.var(1, "v")
    assert p.shift(eu=-2) == LPoly.one(1) + LPoly.monomial(1, 1, -2, 1, 0)
    m = LPoly.monomial(3, Fraction(2, 3), 1, -2, 5)
    assert m * m.monomial_inverse() == LPoly.one(3)
    with pytest.raises(ValueError):
        p.monomial_inverse()


def test_lpoly_pow_matches_repeated_product():
    p = LPoly.var(1, "u") + LPoly.one(1)
    q = LPoly.one(1)
    for k in range(5):
        assert p**k == q
        q = q * p
    m = LPoly.monomial(1, Fraction(1, 2), 1, 0, 0)
    assert m**-2 == LPoly.monomial(1, 4, -2, 0, 0)


def test_as_order_round_trip():
    p = LPoly.var(1, "u", 2) - LPoly.monomial(1, Fraction(1, 3), 0, 1, -1)
    q = p.as_order(4)
    assert q.order == 4
    assert q.as_order(1) == p
    bad = LPoly.monomial(3, Cyclo.zeta(3))
    with pytest.raises(ValueError):
        bad.as_order(2)


def test_constant_value():
    assert LPoly.const(2, 7).constant_value() == Cyclo.from_rat(2, 7)
    with pytest.raises(ValueError):
        (LPoly.var(2, "u") + LPoly.one(2)).constant_value()


# ---------------------------------------------------------------------------
# canonical text and machine formats
# ---------------------------------------------------------------------------


def test_text_golden_examples():
    assert LPoly.zero(1).text() == "0"
    assert LPoly.one(1).text() == "1"
    p = LPoly.monomial(1, 2, 4, 0, -4) - LPoly.monomial(1, 8, 2, 0, -4)
    assert p.text() == "2 * u^4 * g^-4 - 8 * u^2 * g^-4"
    q = LPoly.monomial(1, -1, 4, 0, 0) + LPoly.monomial(1, 2, 2, 0, 0) + LPoly.var(1, "v", 2)
    assert q.text() == "-1 * u^4 + 2 * u^2 + 1 * v^2"


def test_text_orders_terms_descending():
    p = LPoly.var(2, "v") + LPoly.var(2, "u") + LPoly.one(2)
    assert p.text() == "1 * u^1 + 1 * v^1 + 1"


def test_machine_lines_golden():
    p = LPoly.monomial(2, Fraction(1, 2), 1, 0, -1) + LPoly.monomial(2, -3, 0, 2, 0)
    assert p.machine_lines() == ["1 0 -1 1/2", "0 2 0 -3"]
    # order-3 coefficients carry phi(3) = 2 rationals per line
    q = LPoly.monomial(3, Cyclo.zeta(3), 0, 0, 1)
    assert q.machine_lines() == ["0 0 1 0 1"]


@given(lpolys(order=3))
@settings(max_examples=40, deadline=None)
def test_machine_lines_width(p):
    for line in p.machine_lines():
        assert len(line.split()) == 3 + euler_phi(3)
