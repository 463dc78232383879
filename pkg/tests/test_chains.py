import pytest

from qgroth.chains import (is_pieri_sequence, m_value, make_chain, marking_counts,
                           monk_no_cancellation, monk_oracle, monk_paths, monk_product,
                           monk_x_expansion, monk_x_lhs, no_cancellation, pieri_chains,
                           pieri_oracle, pieri_product, quantum_pieri_product)
from qgroth.expand import expand_qgrothendieck
from qgroth.perm import Permutation, all_perms

P = Permutation.from_string
S3 = all_perms(3)
W12 = Permutation([1, 3, 5, 7, 9, 11, 12, 6, 10, 2, 8, 4])
GAMMA_BAR = [(2, 12), (1, 10), (3, 8), (2, 8)]

# (labels, k, {p: printed m_p})
MARKED = {
    "gamma1": (GAMMA_BAR, 5, {4: 0, 3: -1}),
    "gamma2": (GAMMA_BAR + [(5, 6)], 5, {4: -1, 3: 2}),
    "gamma3": (GAMMA_BAR + [(5, 6), (4, 6)], 5, {4: 2, 3: -1}),
    "delta1": (GAMMA_BAR, 4, {3: -1, 2: 1}),
    "delta2": (GAMMA_BAR + [(4, 5)], 4, {3: 2, 2: -1}),
}


@pytest.mark.parametrize("name", sorted(MARKED))
def test_marking_values_of_long_chains(name):
    labels, k, values = MARKED[name]
    chain = make_chain(W12, labels)
    assert len(chain) == len(labels)
    assert all(a <= k < b for a, b in labels)
    assert is_pieri_sequence(labels)
    for p, m in values.items():
        assert m_value(labels, p) == m


def test_marking_counts_small():
    assert marking_counts([]) == {0: 1}
    assert marking_counts([(1, 3)]) == {1: 1}
    assert m_value([(1, 3)], 0) == 0


def test_make_chain_rejects_non_covers():
    with pytest.raises(ValueError):
        make_chain(P("213"), [(1, 2)])
    with pytest.raises(ValueError):
        make_chain(P("123"), [(2, 1)])
    chain = make_chain(P("213"), [(1, 2)], quantum=True)
    assert chain.directions == ("down",) and chain.qexp == (1,)
    assert chain.to_json()["qweight"] == [1]


def test_pieri_sequence_conditions():
    assert is_pieri_sequence([(1, 4), (2, 3)])
    assert not is_pieri_sequence([(1, 3), (1, 4)])


def test_pieri_rule_on_s3():
    for k in range(1, 4):
        for p in range(1, k + 1):
            for w in S3:
                assert pieri_product(w, p, k).to_dict() == pieri_oracle(w, p, k).to_dict()
                assert no_cancellation(w, k, p)


def test_pieri_rule_on_sample_of_s4():
    for w in (P("2143"), P("1324"), P("3142")):
        for p, k in ((1, 2), (2, 3), (1, 3)):
            assert pieri_product(w, p, k).to_dict() == pieri_oracle(w, p, k).to_dict()


def test_pieri_chains_rejects_bad_indices():
    with pytest.raises(ValueError):
        pieri_chains(P("213"), 2, 3)


def test_monk_expansion_of_x_multiplication():
    for k in (1, 2, 3):
        for w in S3:
            lhs = expand_qgrothendieck(monk_x_lhs(w, k)).to_dict()
            assert lhs == monk_x_expansion(w, k).to_dict()


def test_monk_product_with_simple_class():
    for k in (1, 2, 3):
        for w in S3:
            assert monk_product(w, k).to_dict() == monk_oracle(w, k).to_dict()
            assert monk_no_cancellation(w, k)


def test_monk_paths_shape():
    for ch in monk_paths(P("321"), 2):
        seconds = [b for a, b in ch.labels if a == 2]
        assert seconds == sorted(seconds, reverse=True)


def test_quantum_pieri_readings_on_s3():
    # paths repeating a label are excluded in the default reading; the
    # literal reading (repeats allowed) is reported and does not match
    literal_failures = 0
    for k in range(1, 4):
        for p in range(1, k + 1):
            for w in S3:
                v = quantum_pieri_product(w, p, k)
                assert v.conjectural
                assert v.verified and v.no_cancellation, (w, p, k)
                literal_failures += not v.literal_verified
    assert literal_failures > 0
