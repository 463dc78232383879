import json

import pytest

from qgroth.verify import SUITES, Report, run_identity


def test_report_bookkeeping():
    rep = Report("demo", 3)
    rep.add({"w": "21"}, True)
    rep.add({"w": "12"}, False, "broken")
    assert not rep.passed and len(rep.failures) == 1
    data = json.loads(json.dumps(rep.to_json()))
    assert data["checked"] == 2 and data["failures"][0]["detail"] == "broken"
    assert "conjectural" not in data


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"quantum-pieri-conjecture"}))
def test_every_suite_passes_on_s3(name):
    rep = run_identity(name, 3)
    assert rep.instances and rep.passed, rep.failures[:1]


def test_filters_narrow_the_range():
    full = run_identity("pieri", 3)
    narrow = run_identity("pieri", 3, p=1, k=2)
    assert 0 < len(narrow.instances) < len(full.instances)
    assert all(i.params["k"] == 2 for i in narrow.instances)
    only = run_identity("cauchy", 3, kind="qschubert")
    assert [i.params["kind"] for i in only.instances] == ["qschubert"]


def test_conjecture_suite_is_flagged():
    rep = run_identity("quantum-pieri-conjecture", 3)
    assert rep.conjectural and rep.passed
    literal = run_identity("quantum-pieri-conjecture", 3, reading="literal")
    assert literal.conjectural and not literal.passed


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_identity("nope", 3)
