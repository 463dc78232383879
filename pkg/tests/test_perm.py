import itertools

import pytest
from hypothesis import given, strategies as st

from qgroth.perm import (Permutation, all_perms, bruhat_leq, covers, cycle, edge_type,
                         label_precedes, longest, quantum_edges, simple)

P = Permutation.from_string
perm_words = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def inversions(word):
    return sum(1 for i, j in itertools.combinations(range(len(word)), 2) if word[i] > word[j])


def reachable_up(u, v, n):
    # Bruhat order as the transitive closure of covers
    frontier, seen = [u], {u}
    while frontier:
        w = frontier.pop()
        if w == v:
            return True
        for _, nxt in covers(w, N=n):
            if nxt.length() <= v.length() and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return False


@given(perm_words)
def test_length_code_and_inverse(word):
    w = Permutation(word)
    assert w.length() == inversions(word) == sum(w.code())
    assert Permutation.from_code(w.code()) == w
    assert w * w.inverse() == Permutation.identity()
    assert len(w.reduced_word()) == w.length()


@given(st.lists(st.integers(0, 3), max_size=5))
def test_from_code_accepts_any_sequence(code):
    w = Permutation.from_code(code)
    padded = list(w.code()) + [0] * len(code)
    assert padded[:len(code)] == list(code)


def test_strings_and_embedding():
    assert P("2,1,3") == P("213") == P("21")
    assert str(P("2,1,3")) == "21" and P("21").to_string(4) == "2,1,3,4"
    assert P("1,2,3").is_identity()
    with pytest.raises(ValueError):
        P("2,2")
    assert str(Permutation([1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 10])) == "1,2,3,4,5,6,7,8,9,11,10"


def test_helpers():
    assert longest(3) == P("321")
    assert simple(2) == P("132")
    assert cycle(3, 2) == P("1342") and cycle(2, 2) == P("231") and cycle(1, 1) == P("213")
    assert P("1342").first_descent() == 3 and P("1").first_descent() is None
    assert len(all_perms(4)) == 24


def test_bruhat_against_cover_closure():
    perms = all_perms(4)
    for u in perms:
        for v in perms:
            assert bruhat_leq(u, v) == reachable_up(u, v, 4)


def test_covers_examples():
    assert [(lab, str(w)) for lab, w in covers(P("213"), N=3)] == [((1, 3), "312"), ((2, 3), "231")]
    assert [(lab, str(w)) for lab, w in covers(P("213"), 1, 3)] == [((1, 3), "312")]
    assert [(lab, str(w)) for lab, w in covers(Permutation.identity(), N=2)] == [((1, 2), "21")]


def test_quantum_edges_examples():
    edges = {(e.label, e.direction, str(e.target)) for e in quantum_edges(P("213"), N=3)}
    assert edges == {((1, 3), "up", "312"), ((2, 3), "up", "231"), ((1, 2), "down", "1")}
    ident = quantum_edges(Permutation.identity(), N=3)
    assert {(e.label, e.direction) for e in ident} == {((1, 2), "up"), ((2, 3), "up")}
    down = {(e.label, str(e.target)) for e in quantum_edges(P("321"), N=3) if e.direction == "down"}
    assert ((1, 2), "231") in down and ((1, 3), "231") not in down


def test_edge_weight_exponents():
    e = next(e for e in quantum_edges(P("321"), N=3) if e.label == (1, 3))
    assert e.direction == "down" and e.qexp == (1, 1)
    assert edge_type((1, 2, 3), 1, 3) is None


def test_label_order():
    assert label_precedes((1, 5), (1, 4))
    assert label_precedes((1, 4), (2, 4))
    assert not label_precedes((2, 4), (1, 4))
