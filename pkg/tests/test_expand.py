import pytest
from hypothesis import given, settings, strategies as st

from qgroth.exceptions import IterationGuard
from qgroth.expand import (expand_qgrothendieck, expand_qschubert, gw_invariants,
                           sign_alternation)
from qgroth.perm import Permutation, all_perms
from qgroth.poly import Polynomial, parse, q, x
from qgroth.quantum import quantum_grothendieck, quantum_schubert

P = Permutation.from_string
S4 = all_perms(4)


def pairs(exp):
    return [(str(c), str(w)) for c, w in exp]


def as_set(exp):
    return {(c, w) for c, w in exp}


SECTION7 = [("1", "4312"), ("q2", "4123"), ("q1*q2", "132"), ("-q2", "4132"),
            ("-q1*q2", "1342"), ("-q1*q2", "1423"), ("q1*q2", "1432")]


def expected(rows):
    return {(parse(c), P(w)) for c, w in rows}


def test_qschubert_examples():
    assert pairs(expand_qschubert(x(1) * x(2))) == [("1", "231"), ("-q1", "1")]
    assert pairs(expand_qschubert(quantum_schubert(P("3412")))) == [("1", "3412")]
    f0 = parse("x1^3*x2^2 + q1^2*x1 + 2*q1*x1^2*x2")
    assert pairs(expand_qschubert(f0)) == [("1", "4312"), ("q2", "4123"), ("q1*q2", "132")]


def test_product_expansion_and_first_block():
    u, v = P("321"), P("231")
    exp = expand_qgrothendieck(quantum_grothendieck(u) * quantum_grothendieck(v))
    assert as_set(exp) == expected(SECTION7)
    assert len(exp) == 7
    first = expand_qschubert(quantum_schubert(u) * quantum_schubert(v))
    assert as_set(exp.blocks[0]) == as_set(first)
    assert as_set(first) == expected(SECTION7[:3])


def test_square_of_simple_class():
    g = quantum_grothendieck(P("213"))
    assert as_set(expand_qgrothendieck(g * g)) == expected([("1", "312"), ("q1", "1"), ("-q1", "132")])


def test_basis_elements_expand_to_themselves():
    for w in S4:
        assert pairs(expand_qgrothendieck(quantum_grothendieck(w))) == [("1", str(w))]


qcoeffs = st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(-2, 2)),
                   min_size=1, max_size=2)
combos = st.dictionaries(st.sampled_from(S4), qcoeffs, min_size=1, max_size=3)


def build(combo):
    total = Polynomial()
    for w, terms in combo.items():
        c = sum((k * q(1) ** a * q(2) ** b for a, b, k in terms), Polynomial())
        total = total + c * quantum_grothendieck(w)
    return total


@settings(max_examples=200, deadline=None)
@given(combos)
def test_round_trip_and_ordering(combo):
    f = build(combo)
    exp = expand_qgrothendieck(f)
    assert exp.resum() == f
    keys = [max(c.min_degree(), 0) + w.length() for c, w in exp]
    assert keys == sorted(keys)
    assert expand_qschubert(f).resum() == f


def test_invariants_of_section7_product():
    table = gw_invariants(P("3214"), P("2314"))
    assert table[(P("1432"), (1, 1))] == 1
    assert table[(P("4312"), (0, 0))] == 1
    assert table[(P("4312"), ())] == 1
    assert table[(P("1432"), (1, 0))] == 0
    assert table.conjectural and "conjectural" in table.note
    assert sign_alternation(table).passed


def test_unit_invariants():
    for v in all_perms(3):
        table = gw_invariants(Permutation.identity(), v)
        assert table.values == {(v, ()): 1}


def test_sign_alternation_over_s3():
    s3 = all_perms(3)
    for u in s3:
        for v in s3:
            assert sign_alternation(gw_invariants(u, v)).passed, (u, v)


def test_sign_alternation_flags_violations():
    table = gw_invariants(P("213"), P("213"))
    bad = dict(table.values)
    bad[(P("312"), ())] = -1
    table.values = bad
    report = sign_alternation(table)
    assert not report.passed and report.failures[0][0] == P("312")


def test_guard_on_polynomial_outside_span():
    # x1^2 needs coefficients in 1/(1-q1), so peeling never stops
    with pytest.raises(IterationGuard) as info:
        expand_qgrothendieck(x(1) ** 2, guard=20)
    assert info.value.partial is not None and info.value.remainder


def test_rejects_y_variables():
    with pytest.raises(ValueError):
        expand_qgrothendieck(parse("y1"))
