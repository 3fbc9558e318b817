"""Weight functions, fillings, and fixed-point restrictions."""

import itertools

import pytest

from csmflag.errors import BudgetExceeded
from csmflag.flags import IndexTuple, Shape, bruhat_leq, enumerate_index_tuples
from csmflag.linear import LinearForm
from csmflag.polynomial import Polynomial, poly_from_text, prod
from csmflag.variables import tvar, zvar
from csmflag.weights import (check_budget, class_of, e_lambda, fillings,
                             modified_weight_function, restriction,
                             restriction_via_expansion, weight_function,
                             weight_terms)


def _tuples(lam):
    return enumerate_index_tuples(Shape(lam))


def test_grassmannian_closed_form():
    """For lam = (1, n-1) the weight function is the closed-form product
    prod_{i<k}(1 + z_i - t) * prod_{i>k}(z_i - t) with t = t^(1)_1."""
    for n in range(2, 5):
        sh = Shape((1, n - 1))
        t = tvar(1, 1)
        for k in range(1, n + 1):
            I = IndexTuple(sh, ((k,), tuple(i for i in range(1, n + 1) if i != k)))
            expected = prod(
                [LinearForm.difference(zvar(i), t, const=1).to_polynomial()
                 for i in range(1, k)]
                + [LinearForm.difference(zvar(i), t).to_polynomial()
                   for i in range(k + 1, n + 1)])
            assert weight_function(I) == expected


def test_point_and_trivial_shapes():
    sh = Shape((4,))
    (I,) = _tuples((4,))
    assert weight_function(I) == Polynomial.constant(1)
    assert e_lambda(sh) == Polynomial.constant(1)


def test_e_lambda_small():
    assert e_lambda(Shape((1, 1))) == Polynomial.constant(1)
    expected = poly_from_text("-t2_1^2 + 2*t2_1*t2_2 - t2_2^2 + 1")
    assert e_lambda(Shape((1, 1, 1))) == expected


def test_filling_count_and_term_count():
    sh = Shape((1, 1, 1))
    I = _tuples((1, 1, 1))[0]
    assert len(fillings(I)) == sh.term_count() == 2
    assert len(weight_terms(I, "tables")) == 2


@pytest.mark.parametrize("lam", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 1, 1)])
def test_methods_agree(lam):
    for I in _tuples(lam):
        assert weight_function(I, "sym") == weight_function(I, "tables")


def test_weight_function_is_group_symmetric():
    """W is invariant under permuting the variables within each t-group."""
    for I in _tuples((1, 1, 1)):
        w = weight_function(I)
        swap = {tvar(2, 1): Polynomial.variable(tvar(2, 2)),
                tvar(2, 2): Polynomial.variable(tvar(2, 1))}
        assert w.substitute(swap) == w


def test_modified_weight_function_times_e_lambda_is_w():
    sh = Shape((1, 1, 1))
    I = IndexTuple.parse("{2};{1};{3}", sh)
    wt = modified_weight_function(I)
    assert (wt * e_lambda(sh)).to_polynomial() == weight_function(I)


@pytest.mark.parametrize("lam", [(1, 1), (1, 2), (1, 1, 1), (2, 2)])
def test_restriction_matches_expansion_route(lam):
    for I, J in itertools.product(_tuples(lam), repeat=2):
        assert restriction(I, J) == restriction_via_expansion(I, J)


def test_restriction_table_n2():
    """The full 2x2 restriction table of the lam=(1,1) flag (projective line)."""
    a, b = _tuples((1, 1))
    assert restriction(a, a) == poly_from_text("z2 - z1")
    assert restriction(a, b) == Polynomial.zero()
    assert restriction(b, a) == Polynomial.constant(1)
    assert restriction(b, b) == poly_from_text("z1 - z2 + 1")


def test_restriction_worked_example():
    I = IndexTuple.parse("{2};{1};{3}", Shape((1, 1, 1)))
    expected = prod([poly_from_text("1 + z1 - z2"),
                     poly_from_text("z3 - z1"),
                     poly_from_text("z3 - z2")])
    assert restriction(I, I) == expected


def test_bruhat_vanishing_small():
    for I, J in itertools.product(_tuples((1, 2, 1)), repeat=2):
        if not bruhat_leq(J, I):
            assert restriction(I, J).is_zero()


def test_class_of_is_the_restriction_tuple():
    I = _tuples((1, 1))[1]
    cls = class_of(I)
    for J, value in cls.items():
        assert value == restriction(I, J)
        assert cls[J] == value


def test_budget_guardrail():
    sh = Shape((1,) * 7)
    with pytest.raises(BudgetExceeded) as exc:
        check_budget(sh)
    assert exc.value.terms == 24883200
    with pytest.raises(BudgetExceeded):
        weight_function(enumerate_index_tuples(sh)[0])
    with pytest.raises(BudgetExceeded):
        restriction(enumerate_index_tuples(sh)[0], enumerate_index_tuples(sh)[0])
    # a raised budget lets small shapes through unchanged
    I = _tuples((1, 1))[0]
    assert weight_function(I, budget=10) == weight_function(I)
