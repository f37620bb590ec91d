import pytest

from heapalg import CHECKS, GF2, QQ, build_graph, heap_from_word, run_check


def test_every_id_passes_on_a_small_regular_graph():
    g = build_graph("a:3")
    for pid in CHECKS:
        rep = run_check(pid, g, 5, QQ, strategies=10, graph_spec="a:3")
        assert rep.passed, rep.line()
        assert rep.checked > 0


def test_report_line_format():
    rep = run_check("lemma-1.2.4", build_graph("a:2"), 3, GF2, graph_spec="a:2")
    assert rep.line() == "PROPERTY lemma-1.2.4 a:2 size<=3 field=gf:2: OK checked=15"
    assert rep.line(timing=True).startswith(rep.line() + " elapsed=")


def test_counterexample_is_replayable():
    g = build_graph("aff-a:3")
    rep = run_check("regularity-2.4.1", g, 6, graph_spec="aff-a:3")
    assert rep.verdict == "counterexample"
    h = heap_from_word(g, rep.counterexample)
    assert str(h) == rep.counterexample


def test_unknown_id():
    with pytest.raises(KeyError, match="valid ids"):
        run_check("thm-9.9.9", build_graph("a:2"), 3)
