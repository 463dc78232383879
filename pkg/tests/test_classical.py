import pytest
from hypothesis import given, settings, strategies as st

from qgroth.classical import (apply_perm, apply_word, divided_diff, dual_grothendieck,
                              elem_e, elem_f, elem_g, elementary_coordinates,
                              elementary_indices, elementary_monomial, expand_grothendieck,
                              expand_schubert, grothendieck, in_ln, isobaric_diff, schubert,
                              unitriangular_pattern)
from qgroth.exceptions import IterationGuard, NotInLn
from qgroth.perm import Permutation, all_perms, bruhat_leq, cycle, longest
from qgroth.poly import Polynomial, lex_min_x_monomial, lowest_component, parse, x

P = Permutation.from_string
exps = st.lists(st.integers(0, 3), max_size=4).map(tuple)
xpolys = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(
    lambda d: Polynomial({(e, (), ()): c for e, c in d.items()}))


def resum(exp):
    return exp.resum()


def test_operator_examples():
    assert divided_diff(1, x(1)) == Polynomial.constant(1)
    assert divided_diff(1, parse("x1^2*x2")) == parse("x1*x2")
    assert divided_diff(1, x(1) + x(2)) == Polynomial()
    assert isobaric_diff(1, x(1)) == Polynomial.constant(1)
    assert isobaric_diff(1, Polynomial.constant(7)) == Polynomial.constant(7)
    assert isobaric_diff(1, x(1) ** 2) == grothendieck(P("132"))
    assert apply_word([1], x(1), "pi") == Polynomial.constant(1)


@settings(max_examples=60)
@given(xpolys, st.integers(1, 3))
def test_operators_square(f, i):
    assert divided_diff(i, divided_diff(i, f)) == Polynomial()
    assert isobaric_diff(i, isobaric_diff(i, f)) == isobaric_diff(i, f)


@settings(max_examples=40)
@given(xpolys)
def test_braid_relations(f):
    for kind in ("partial", "pi"):
        assert apply_word([1, 2, 1], f, kind) == apply_word([2, 1, 2], f, kind)
        assert apply_word([1, 3], f, kind) == apply_word([3, 1], f, kind)


def test_operators_on_y_only():
    f = parse("y1^2*x1")
    assert divided_diff(1, f, "y") == parse("y1*x1 + y2*x1")
    assert divided_diff(1, f) == parse("y1^2")


def test_small_polynomials():
    assert grothendieck(P("132")) == parse("x1 + x2 - x1*x2")
    assert schubert(P("213")) == x(1)
    assert grothendieck(Permutation.identity()) == Polynomial.constant(1)
    assert schubert(longest(4)) == parse("x1^3*x2^2*x3")
    assert grothendieck(longest(3)) == parse("x1^2*x2")


def test_top_down_matches_definition():
    w0 = longest(4)
    top = grothendieck(w0)
    for w in all_perms(4):
        assert apply_perm(w.inverse() * w0, top, "pi") == grothendieck(w)
        assert apply_perm(w.inverse() * w0, schubert(w0)) == schubert(w)


def test_lowest_component_and_stability():
    for w in all_perms(4):
        assert lowest_component(grothendieck(w)) == schubert(w)
        bigger = Permutation(w.embed(5))
        assert grothendieck(bigger) == grothendieck(w)


def test_elementary_families():
    assert elem_g(1, 2) == elem_e(1, 2) - elem_e(2, 2)
    assert elem_f(1, 1) == 1 - x(1)
    assert elem_g(0, 3) == Polynomial.constant(1)
    assert elem_g(3, 2) == Polynomial()
    for k in range(1, 5):
        for p in range(1, k + 1):
            assert elem_g(p, k) == grothendieck(cycle(k, p))
            assert schubert(cycle(k, p)) == elem_e(p, k)


def test_dual_grothendieck():
    assert dual_grothendieck(longest(3), 3) == grothendieck(longest(3))
    assert dual_grothendieck(Permutation.identity(), 2) == 1 - x(1)
    expected = (grothendieck(P("213")) - grothendieck(P("231"))
                - grothendieck(P("312")) + grothendieck(P("321")))
    assert dual_grothendieck(P("213"), 3) == expected


def test_expansion_examples():
    assert [(str(c), str(w)) for c, w in expand_schubert(x(1) * x(2))] == [("1", "231")]
    assert [(str(c), str(w)) for c, w in expand_schubert(x(1) + x(2))] == [("1", "132")]
    assert len(expand_schubert(Polynomial())) == 0
    assert [(str(c), str(w)) for c, w in expand_grothendieck(x(1) + x(2))] == [
        ("1", "132"), ("1", "231")]
    prod = grothendieck(P("321")) * grothendieck(P("231"))
    assert [(str(c), str(w)) for c, w in expand_grothendieck(prod)] == [("1", "4312")]


@settings(max_examples=40)
@given(xpolys)
def test_expansions_resum(f):
    assert resum(expand_schubert(f)) == f
    assert resum(expand_grothendieck(f, guard=50)) == f


def test_guard_raises_with_partial_result():
    with pytest.raises(IterationGuard) as info:
        expand_grothendieck(grothendieck(longest(4)) + x(1), guard=1)
    assert info.value.remainder is not None


def test_unitriangular_transitions():
    for w in all_perms(4):
        exp = expand_schubert(grothendieck(w)).to_dict()
        assert exp[w] == Polynomial.constant(1)
        assert all(u.length() > w.length() for u in exp if u != w)
    for w in all_perms(4):
        (xs, _, _), c = lex_min_x_monomial(schubert(w))
        code = list(w.code())
        assert list(xs) + [0] * (len(code) - len(xs)) == code[:max(len(xs), len(code))]
        assert c == 1
    matrix = {ps: {w: int(str(c)) for c, w in expand_schubert(elementary_monomial(ps))}
              for ps in elementary_indices(4)}
    assert len(matrix) == 24
    assert unitriangular_pattern(matrix)
    # the pattern check is not vacuous
    matrix[(0, 0, 0)] = {Permutation.identity(): 2}
    assert not unitriangular_pattern(matrix)


def test_grothendieck_expansion_of_product_is_bruhat_above():
    for u in all_perms(3):
        for v in all_perms(3):
            for c, w in expand_grothendieck(grothendieck(u) * grothendieck(v)):
                assert bruhat_leq(u, w) and bruhat_leq(v, w)


def test_elementary_coordinates_round_trip():
    for kind in ("e", "f", "g"):
        for w in all_perms(4):
            coords = elementary_coordinates(grothendieck(w), kind, 4)
            total = sum((c * elementary_monomial(ps, kind) for ps, c in coords.items()),
                        Polynomial())
            assert total == grothendieck(w)


def test_ln_membership():
    assert in_ln(parse("x1^2*x2"), 3)
    assert not in_ln(parse("x2^2"), 3)
    with pytest.raises(NotInLn):
        elementary_coordinates(parse("x2^2"), "e", 3)


def test_largest_grothendieck_polynomial_in_s5():
    counts = {w: len(grothendieck(w)) for w in all_perms(5)}
    top = max(counts.values())
    assert top == 40
    assert P("21543") in [w for w, c in counts.items() if c == top]
