import json

import pytest

from edgecode.verify import SUITES, run_suite


def test_table1_q3():
    (rep,) = run_suite("table1", [3])
    assert len(rep.cases) == 4
    assert rep.summary == {"pass": 4, "fail": 0, "not_covered": 0}
    assert [c.actual for c in rep.cases] == [0, 8, 8, 4]


def test_aster_p4():
    (rep,) = run_suite("aster", [3])
    case = rep.case("aster:P4")
    assert case.predicted == case.actual == 8 and case.match


def test_selforth_q3_is_experiment():
    (rep,) = run_suite("selforth", [3])
    assert all(c.match is None for c in rep.cases)
    assert rep.ok


def test_single_edge_clutter_not_covered():
    (rep,) = run_suite("clutter", [3])
    case = rep.case("single-edge-s3-d3")
    assert case.match is None and case.predicted is None


def test_report_layout():
    (rep,) = run_suite("table1", 4)
    data = json.loads(rep.to_json())
    assert set(data) == {"suite", "q", "cases", "summary", "notes"}
    assert set(data["cases"][0]) == {"id", "predicted", "actual", "match", "witness", "elapsed_ms", "note"}


def test_unknown_suite_and_small_q():
    with pytest.raises(ValueError):
        run_suite("bogus", [3])
    with pytest.raises(ValueError):
        run_suite("table1", [2])


def test_resource_limit_becomes_not_covered():
    (rep,) = run_suite("table2", [3], max_messages=10)
    case = rep.case("C5:distance")
    assert case.match is None and "SearchTooLarge" in case.note


def _strip(rep):
    d = rep.to_dict()
    for c in d["cases"]:
        c.pop("elapsed_ms")
    return d


def test_resume_reuses_finished_cases(tmp_path):
    progress = tmp_path / "progress.jsonl"
    (first,) = run_suite("table2", [3], progress=str(progress))
    lines = progress.read_text().splitlines()
    assert len(lines) == len(first.cases)

    # tamper with one stored record: a resumed run must take it as is
    rec = json.loads(lines[0])
    rec["case"]["note"] = "from progress file"
    progress.write_text("\n".join([json.dumps(rec)] + lines[1:3]) + "\n")
    (second,) = run_suite("table2", [3], progress=str(progress))
    assert second.cases[0].note == "from progress file"
    assert [c.id for c in second.cases] == [c.id for c in first.cases]
    assert len(progress.read_text().splitlines()) == len(first.cases)
    a, b = _strip(first), _strip(second)
    a["cases"][0]["note"] = b["cases"][0]["note"]
    assert a == b


@pytest.mark.parametrize("suite", ["table1", "table2", "tree", "interval", "aster"])
def test_suite_results_independent_of_workers(suite):
    (one,) = run_suite(suite, [3], workers=1)
    (many,) = run_suite(suite, [3], workers=4)
    assert _strip(one) == _strip(many)


def test_every_suite_runs_at_q3():
    for name in SUITES:
        (rep,) = run_suite(name, [3])
        assert rep.cases
