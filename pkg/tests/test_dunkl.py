import pytest

from qgroth import dunkl as D
from qgroth.dunkl import (GroupAlgebraElement, bracket, dunkl_cleared, dunkl_commute,
                          dunkl_evaluate, main_cases, qb_apply, relation_checks,
                          verify_gp_action, verify_main, verify_section5)
from qgroth.exceptions import HypothesisViolation
from qgroth.perm import Permutation, all_perms
from qgroth.poly import Polynomial, q, x

P = Permutation.from_string
ID = GroupAlgebraElement.basis(Permutation.identity())


def test_generators_on_small_elements():
    assert bracket(1, 2, ID, 2) == GroupAlgebraElement.basis(P("21"))
    assert bracket(2, 1, ID, 2) == GroupAlgebraElement.basis(P("21"), -1)
    down = bracket(1, 2, GroupAlgebraElement.basis(P("21")), 2)
    assert down == GroupAlgebraElement.basis(Permutation.identity(), q(1))
    with pytest.raises(ValueError):
        bracket(1, 1, ID, 2)
    with pytest.raises(ValueError):
        qb_apply([("hinv", 1, 2)], ID, 2)


def test_relations_on_s3_and_s4():
    for n in (3, 4):
        assert all(relation_checks(n).values())


def test_dunkl_elements_commute_on_s4():
    assert dunkl_commute(4)


def test_cleared_dunkl_on_identity():
    assert str(dunkl_cleared(1, ID, 2)) == "[1] - [21]"


def test_evaluate_constant_and_linear():
    res = dunkl_evaluate(Polynomial.constant(3), 3)
    assert res.value == ID.scale(3)
    lin = dunkl_evaluate(x(1), 2)
    # x_1 = 1 - (1 - x_1); cleared by (1 - q_1)
    assert lin.value == ID.scale(1 - q(1)) - dunkl_cleared(1, ID, 2)
    with pytest.raises(ValueError):
        dunkl_evaluate(x(4), 3)


@pytest.mark.parametrize("which", ["main", "gp_action", "product_action", "quantmap"])
def test_drivers_on_s4(which):
    checks = verify_section5(which, n=4)
    assert checks
    bad = [c.params for c in checks if not c.passed]
    assert not bad


def test_drivers_on_s3():
    for which in ("main", "gp_action", "product_action", "quantmap"):
        assert all(c.passed for c in verify_section5(which, n=3))


def test_hypothesis_is_enforced():
    with pytest.raises(HypothesisViolation):
        verify_main(P("213"), 1, 1, 3)
    with pytest.raises(HypothesisViolation):
        verify_main(P("123"), 1, 3, 3)
    with pytest.raises(HypothesisViolation):
        verify_gp_action(P("213"), 1, 3, 3)


def test_keeping_q_term_at_p_one_breaks_main():
    # the q_{k-1} correction inside f_1^k does not belong there
    failures = [(str(w), p, k) for w, p, k in main_cases(4)
                if not verify_main(w, p, k, 4, literal=True).passed]
    assert failures and all(p == 1 for _, p, _ in failures)


def test_rightmost_first_order_fails(monkeypatch):
    original = D.dunkl_word
    monkeypatch.setattr(D, "dunkl_word", lambda k, N: list(reversed(original(k, N))))
    assert not all(D.verify_quantmap(w, 3).passed for w in all_perms(3))
