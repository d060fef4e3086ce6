import json

import pytest

from idcodes.codes import IMPLICATIONS, CodeKind
from idcodes.enumeration import GraphStream, canonical_key, is_isomorphic, parse_graph6
from idcodes.families import complete, corona, cycle, extremal_tid, family_A, path, star
from idcodes.graph import GraphError, build_graph
from idcodes.harness import (
    CHECKERS,
    CLAIM_SUMMARIES,
    CLAIMS,
    Report,
    check_hierarchy,
    is_extremal_member,
    run_checker,
    search_girth5_tight,
    verify,
    verify_bound,
    verify_characterization,
    verify_corona_tightness,
    verify_family_values,
    verify_hierarchy,
)

BULL = extremal_tid((), True, 2)


def test_claims_are_closed_and_described():
    assert len(CLAIMS) == 18 and set(CLAIMS) == set(CLAIM_SUMMARIES)
    with pytest.raises(ValueError):
        verify("thm-9.9")


def test_membership_examples():
    assert is_extremal_member(BULL) == (True, "ii")
    assert is_extremal_member(cycle(6)) == (False, None)
    assert is_extremal_member(star(5)) == (True, "i")
    assert is_extremal_member(family_A((2, 1), True))[0]
    with pytest.raises(GraphError):
        is_extremal_member(path(13))


def test_report_serialisation():
    r = Report("thm-4.1", "scope", checked=3, counterexamples=[("Bw", "x"), ("Bg", "y")])
    d = json.loads(r.to_json())
    assert d["verdict"] == "fail" and [c["graph6"] for c in d["counterexamples"]] == ["Bg", "Bw"]
    assert list(d) == sorted(d)
    assert Report("thm-4.1", "s").verdict == "pass"


def test_characterization_small_and_p3_branch():
    assert verify_characterization(5).passed
    report = verify_characterization(3, GraphStream.of([path(3)]))
    assert report.checked == 1 and report.passed


def test_characterization_flags_planted_failure(monkeypatch):
    import idcodes.harness as h

    monkeypatch.setattr(h, "is_extremal_member", lambda G: (False, None))
    report = h.verify_characterization(4)
    assert not report.passed and report.verdict == "fail"


def test_bound_examples():
    assert verify_bound("thm-4.1", GraphStream.connected(range(1, 7))).passed
    assert verify_bound("thm-3.4", GraphStream.connected(range(1, 8), min_girth=5)).passed
    report = verify_bound("cor-3.3", GraphStream.trees(range(1, 11)))
    assert report.passed and report.checked > 0


def test_hypothesis_filters_skip():
    # graphs outside the hypothesis class are skipped, never counterexamples
    twins = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert CHECKERS["thm-3.4"](twins)[0] == "skip"
    assert CHECKERS["thm-3.4"](cycle(4))[0] == "skip"
    assert CHECKERS["lem-3.1"](path(4))[0] == "skip"
    assert CHECKERS["cor-3.3"](star(5))[0] == "skip"
    assert CHECKERS["thm-4.1"](complete(3))[0] == "skip"
    assert CHECKERS["thm-4.4"](complete(2))[0] == "skip"
    assert CHECKERS["prop-2.1"](build_graph(3, [(0, 1)]))[0] == "skip"
    report = run_checker("thm-3.4", [twins, cycle(4)], "planted")
    assert report.skipped == 2 and report.checked == 0 and report.passed


def test_cor_3_5_p3_is_reported():
    status, detail = CHECKERS["cor-3.5"](path(3))
    assert status == "fail" and "TID=3" in detail
    assert CHECKERS["cor-3.5"](path(5))[0] == "ok"


def test_family_values():
    for claim in ("prop-4.5", "prop-4.6", "prop-4.7"):
        assert verify_family_values(claim).passed
    report = verify_family_values("prop-2.2", max_n=9)
    assert report.passed and report.checked > 10
    with pytest.raises(ValueError):
        verify_family_values("thm-4.1")


def test_hierarchy_and_mutation():
    assert verify_hierarchy(max_n=5).passed
    assert check_hierarchy(cycle(6)) == ("ok", None)
    mutated = [(CodeKind.ID, CodeKind.TID) if e == (CodeKind.TID, CodeKind.ID) else e for e in IMPLICATIONS]
    report = verify_hierarchy(GraphStream.connected(range(1, 5)), 4, mutated)
    assert not report.passed


def test_corona_tightness():
    report = verify_corona_tightness(12)
    assert report.passed
    tight = [g for g, _ in report.findings]
    assert len(tight) == 3
    bases = [complete(1), path(2), path(3)]
    for g6, base in zip(tight, bases):
        assert is_isomorphic(parse_graph6(g6), corona(base, 3))


def test_girth5_search():
    stream = GraphStream.connected(range(1, 9), min_girth=5).filtered(twin_free=True)
    report = search_girth5_tight(8, stream)
    assert report.verdict == "info"
    found = {canonical_key(parse_graph6(g)) for g, _ in report.findings}
    assert canonical_key(cycle(8)) in found and canonical_key(corona(path(2), 3)) in found
    assert canonical_key(path(4)) in found
    assert not any(d.startswith(("n=5", "n=6", "n=7")) for _, d in report.findings)
    relaxed = search_girth5_tight(7, GraphStream.connected(range(5, 8), min_girth=5), relaxed=True)
    assert relaxed.verdict == "info"


def test_reports_deterministic():
    a = verify("thm-4.2", max_n=5)
    b = verify("thm-4.2", max_n=5)
    assert (a.checked, a.skipped, a.counterexamples) == (b.checked, b.skipped, b.counterexamples)


def test_parallel_matches_serial():
    serial = verify("thm-4.3", max_n=5)
    parallel = verify("thm-4.3", max_n=5, jobs=2)
    assert (serial.checked, serial.skipped, serial.counterexamples) == (
        parallel.checked, parallel.skipped, parallel.counterexamples)


def test_source_streams_are_not_truncated_by_default():
    big = GraphStream.of([path(9), cycle(9)], "two graphs")
    report = verify("thm-4.3", source=big)
    assert report.checked == 2 and report.passed
    assert verify("thm-4.3", max_n=8, source=big).checked == 0
    assert verify("fig-1", source=GraphStream.of([path(4), cycle(9)])).checked == 1
    assert verify("thm-2.4", source=GraphStream.of([path(4)])).passed
    with pytest.raises(ValueError):
        verify("thm-3.6", source=big)
