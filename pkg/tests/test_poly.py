import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qgroth.exceptions import NotDivisible
from qgroth.poly import (Polynomial, exact_div, graded_components, lowest_component,
                         parse, q, shifted_expand, shifted_reconstruct, substitute,
                         x, y)

exps = st.lists(st.integers(0, 2), max_size=3).map(tuple)
monomials = st.tuples(exps, exps, exps)
polys = st.dictionaries(monomials, st.integers(-4, 4), max_size=5).map(
    lambda d: Polynomial({(m[0], m[1], m[2]): c for m, c in d.items()}))


def to_sympy(f: Polynomial):
    out = 0
    for m, c in f.items():
        term = sympy.Integer(c)
        for fam, es in zip("xqy", m):
            for i, e in enumerate(es, start=1):
                term *= sympy.Symbol(f"{fam}{i}") ** e
        out += term
    return sympy.expand(out)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()
    assert a * 1 == a and a + 0 == a


@settings(max_examples=50)
@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys)
def test_json_round_trip(f):
    blob = json.dumps(f.to_json())
    assert Polynomial.from_json(json.loads(blob)) == f


@given(polys)
def test_render_parse_round_trip(f):
    assert parse(str(f)) == f


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if not b:
        return
    assert exact_div(a * b, b) == a


def test_exact_division_rejects_remainder():
    with pytest.raises(NotDivisible):
        exact_div(x(1) ** 2 + 1, x(1))


def test_trailing_zeros_and_equality():
    assert Polynomial({((1, 0), (), ()): 1}) == x(1)
    assert hash(Polynomial({((1, 0), (), ()): 1})) == hash(x(1))
    assert q(0) == Polynomial()


def test_render_examples():
    f = (1 - q(2)) * (x(1) + x(2) - x(1) * x(2)) + q(2)
    assert str(f) == "-(1-q2)*x1*x2 + (1-q2)*x1 + (1-q2)*x2 + q2"
    assert str((1 - q(1)) * x(1) + q(1)) == "(1-q1)*x1 + q1"
    assert str(Polynomial()) == "0"
    assert str(-1 - q(2)) == "-1-q2"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("x1 / x2")
    with pytest.raises(ValueError):
        parse("import os")


def test_substitute_and_specialize():
    f = parse("x1*x2 + q1*x1 + y1")
    assert substitute(f, {"x2": 0}) == parse("q1*x1 + y1")
    assert f.specialize_q() == parse("x1*x2 + y1")
    assert f.swap_xy() == parse("y1*y2 + q1*y1 + x1")


@given(polys)
def test_graded_components_sum_back(f):
    total = sum((c for _, c in graded_components(f)), Polynomial())
    assert total == f
    if f:
        assert lowest_component(f).min_degree() == f.min_degree()


@given(st.dictionaries(exps, st.integers(-3, 3), max_size=4))
def test_shifted_expansion_round_trip(d):
    f = Polynomial({(e, (1,), ()): c for e, c in d.items()}) + Polynomial.constant(2)
    coeffs = shifted_expand(f, 3)
    assert shifted_reconstruct(coeffs) == f


def test_degree_counts_q_twice():
    assert (q(1) * x(1)).degree() == 3
    assert y(2).degree() == 1
