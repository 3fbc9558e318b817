"""Exact polynomial arithmetic: ring axioms, division, round-trips."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from csmflag.errors import NotDivisibleError, ParseError
from csmflag.linear import LinearForm
from csmflag.polynomial import (Polynomial, monomial, poly_from_json,
                                poly_from_text, poly_to_json, poly_to_latex,
                                poly_to_text)
from csmflag.variables import tvar, zvar

VARS = [zvar(1), zvar(2), zvar(3), tvar(1, 1), tvar(2, 1), tvar(2, 2)]

coeffs = st.builds(Fraction,
                   st.integers(-9, 9).filter(lambda n: n != 0),
                   st.integers(1, 7))
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(1, 4), max_size=3)
polys = st.lists(st.tuples(coeffs, monomials), max_size=5).map(
    lambda pairs: Polynomial.from_terms((c, monomial(m)) for c, m in pairs))
points = st.fixed_dictionaries(
    {v: st.fractions(min_value=-5, max_value=5, max_denominator=5) for v in VARS})


def test_zero_and_constants():
    assert Polynomial.zero().is_zero()
    assert Polynomial.constant(0) == Polynomial.zero()
    assert Polynomial.constant(Fraction(3, 2)).constant_value() == Fraction(3, 2)
    assert Polynomial.constant(5) == 5
    assert Polynomial.zero().degree() == float("-inf")


def test_variable_arithmetic():
    z1, z2 = Polynomial.variable(zvar(1)), Polynomial.variable(zvar(2))
    p = (z1 + z2) * (z1 - z2)
    assert p == z1 * z1 - z2 * z2
    assert p.degree() == 2
    assert (z1 * z2).degree() == 2


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys)
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@given(polys, polys, polys)
@settings(max_examples=30, suppress_health_check=[HealthCheck.too_slow])
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_additive_inverse(p):
    assert (p - p).is_zero()
    assert p + Polynomial.zero() == p
    assert p * Polynomial.constant(1) == p


@given(polys, polys, points)
@settings(max_examples=40)
def test_evaluate_is_a_homomorphism(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


@given(polys)
def test_homogeneous_parts_sum_back(p):
    if p.is_zero():
        return
    total = Polynomial.zero()
    for d in range(p.degree() + 1):
        total = total + p.homogeneous_part(d)
    assert total == p


def test_substitute_composition():
    z1, z2 = zvar(1), zvar(2)
    p = Polynomial.variable(z1) ** 2 + Polynomial.variable(z2)
    image = p.substitute({z1: Polynomial.variable(z2) + 1})
    expected = ((Polynomial.variable(z2) + 1) ** 2 + Polynomial.variable(z2))
    assert image == expected


@given(polys)
@settings(max_examples=60)
def test_exact_division_inverts_multiplication(p):
    form = LinearForm.difference(zvar(2), zvar(1), const=1)
    assert (p * form.to_polynomial()).divide_exact(form) == p


def test_division_remainder_raises():
    form = LinearForm.difference(zvar(2), zvar(1))
    with pytest.raises(NotDivisibleError):
        Polynomial.constant(1).divide_exact(form)
    with pytest.raises(NotDivisibleError):
        (Polynomial.variable(zvar(1)) + 2).divide_exact(form)


def test_division_by_constant_form():
    p = Polynomial.variable(zvar(1)) * 6
    assert p.divide_exact(LinearForm(const=3)) == Polynomial.variable(zvar(1)) * 2


@given(polys)
def test_text_round_trip_is_byte_identical(p):
    s = poly_to_text(p)
    assert poly_to_text(poly_from_text(s)) == s


@given(polys)
def test_json_round_trip_is_byte_identical(p):
    s = poly_to_json(p)
    assert poly_to_json(poly_from_json(s)) == s


def test_canonical_text_form():
    z1, z3 = Polynomial.variable(zvar(1)), Polynomial.variable(zvar(3))
    p = z1 * z3 - z3 * 2 + Fraction(1, 2)
    assert poly_to_text(p) == "z1*z3 - 2*z3 + 1/2"
    assert poly_to_text(Polynomial.zero()) == "0"


def test_term_order_graded_lex_descending():
    z1, z2 = Polynomial.variable(zvar(1)), Polynomial.variable(zvar(2))
    p = z2 + z1 * z1 + z1 * z2 + 1
    assert poly_to_text(p) == "z1^2 + z1*z2 + z2 + 1"


def test_parse_errors():
    for bad in ["", "z1 +", "1//2", "z1 z2", "@"]:
        with pytest.raises(ParseError):
            poly_from_text(bad)
    with pytest.raises(ParseError):
        poly_from_json('{"nope": []}')


def test_latex_emission():
    p = Polynomial.variable(tvar(2, 1)) ** 2 - Polynomial.variable(zvar(1)) * Fraction(1, 2)
    assert poly_to_latex(p) == r"t^{(2)}_{1}^{2} - \tfrac{1}{2} z_{1}"
    assert poly_to_latex(Polynomial.zero()) == "0"
