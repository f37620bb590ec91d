"""Acceptance gate: one recorded PASS/FAIL line per criterion.

Tolerances are pinned below. All answers are exact integers, so the only
tolerances are wall-clock limits.
"""

import contextlib
import io
import itertools
import time

import pytest

from heapalg import GF2, QQ, build_graph, heap_from_word, linear_extension, monomial_basis, run_check
from heapalg.cli import main

from . import oracles

SINGLE_HEAP_SECONDS = 1.0
SWEEP_SECONDS = 600.0
SWEEP_BOUND = 7
REGULARITY_BOUND = 8
TL_BOUND = 8
STRATEGIES = 200
SEED = 0

SWEEP_GRAPHS = ["a:3", "a:4", "d:4", "aff-a:3", "aff-a:4"]
REGULAR_GRAPHS = ["a:2", "a:3", "a:4", "d:4", "e:6", "aff-a:4"]
SQUARE = "aff-a:3"
ROUND_TRIP_GRAPHS = ["a:2", "a:3", "a:4", "d:4", "e:6", "aff-a:3", "aff-a:4"]


def _cli(*argv):
    buf = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(buf):
        status = main(list(argv))
    elapsed = time.perf_counter() - t0
    fields = {}
    for line in buf.getvalue().splitlines():
        key, sep, value = line.partition(" = ")
        if sep:
            fields[key] = value.split()[0]
    return status, fields, elapsed


def _sweep(jobs):
    """Run ``(property, graph, bound, field)`` jobs; return failing report lines."""
    bad = []
    t0 = time.perf_counter()
    for pid, spec, bound, field in jobs:
        rep = run_check(pid, build_graph(spec), bound, field, SEED, STRATEGIES, graph_spec=spec)
        if not rep.passed:
            bad.append(rep.line())
    return bad, time.perf_counter() - t0


def _verdict(record, n, title, bad, elapsed, limit=SWEEP_SECONDS):
    ok = not bad and elapsed < limit
    detail = "; ".join(bad) if bad else f"{elapsed:.1f}s"
    record(n, title, ok, detail)
    assert not bad, "\n".join(bad)
    assert elapsed < limit


def test_golden_example(record):
    results = []
    for field in ("q", "gf:2"):
        status, f, elapsed = _cli("analyze", "--graph", "a:3", "--word", "1 3 2 1 3", "--field", field)
        results.append((field, status, f["ker"], f["coker"], elapsed))
    ok = all(s == 0 and k == "1" and c == "4" and t < SINGLE_HEAP_SECONDS for _, s, k, c, t in results)
    detail = ", ".join(f"{fl}: ker={k} coker={c} {t * 1000:.0f}ms" for fl, _, k, c, t in results)
    record(1, "golden example ker=1 coker=4 over Q and GF(2)", ok, detail)
    assert ok, detail


def test_counterexample_pair(record):
    _, acyclic_heap, t1 = _cli("analyze", "--graph", SQUARE, "--word", "1 3 2 4")
    _, p2_heap, t2 = _cli("analyze", "--graph", SQUARE, "--word", "1 3 2 4 1 3")
    ok = (
        acyclic_heap["acyclic"] == "true" and acyclic_heap["P1"] == "false"
        and p2_heap["P2"] == "true" and p2_heap["ker"] == "1"
        and max(t1, t2) < SINGLE_HEAP_SECONDS
    )
    detail = (
        f"acyclic={acyclic_heap['acyclic']} P1={acyclic_heap['P1']}; "
        f"P2={p2_heap['P2']} ker={p2_heap['ker']}"
    )
    record(2, "square counterexamples: acyclic not P1, P2 not acyclic", ok, detail)
    assert ok, detail


def test_label_count_identity(record):
    bad, t = _sweep([("lemma-1.2.4", g, SWEEP_BOUND, QQ) for g in SWEEP_GRAPHS])
    _verdict(record, 3, "coker - ker = number of labels", bad, t)


def test_deletion_sweep(record):
    jobs = [("deletion-2.1.1", g, SWEEP_BOUND, f) for g in SWEEP_GRAPHS for f in (QQ, GF2)]
    bad, t = _sweep(jobs)
    _verdict(record, 4, "deletion changes ker by at most one (image-vertex refined)", bad, t)


def test_contraction_sweep(record):
    jobs = [
        (pid, g, SWEEP_BOUND, f)
        for pid in ("contract-2.3.4", "contract-2.3.5")
        for g in SWEEP_GRAPHS
        for f in (QQ, GF2)
    ]
    bad, t = _sweep(jobs)
    _verdict(record, 5, "contractions: x<z drops ker by 1, x<y<z keeps ker", bad, t)


def test_implications(record):
    jobs = [
        (pid, g, SWEEP_BOUND, QQ)
        for pid in ("prop-2.2.3", "prop-2.2.7", "lemma-2.2.9")
        for g in SWEEP_GRAPHS
    ]
    bad, t = _sweep(jobs)
    _verdict(record, 6, "P1 => acyclic, strongly acyclic => P2, minimal-vertex disjunction", bad, t)


def test_regularity(record):
    t0 = time.perf_counter()
    bad = []
    for g in REGULAR_GRAPHS:
        rep = run_check("regularity-2.4.1", build_graph(g), REGULARITY_BOUND, QQ, graph_spec=g)
        if not rep.passed:
            bad.append(rep.line())
    square = run_check("regularity-2.4.1", build_graph(SQUARE), 6, QQ, graph_spec=SQUARE)
    if square.passed or len(square.counterexample.split()) > 6:
        bad.append(square.line() + " (expected a counterexample of <= 6 elements)")
    for pid in ("thm-2.4.2", "thm-2.4.4"):
        for g in REGULAR_GRAPHS:
            rep = run_check(pid, build_graph(g), SWEEP_BOUND, QQ, graph_spec=g)
            if not rep.passed:
                bad.append(rep.line())
    _verdict(record, 7, "regularity verdicts; P2 <=> strongly acyclic and acyclic <=> P1 on regular graphs",
             bad, time.perf_counter() - t0)


def test_tl_structure(record):
    bad, t = _sweep([("thm-3.2.3", g, TL_BOUND, QQ) for g in ("a:3", "aff-a:4")])
    _verdict(record, 8, "ker(D) = m + ker(G), m = ker(D), single delta^m products", bad, t)


def test_confluence(record):
    bad, t = _sweep([("confluence-3.2.2", g, SWEEP_BOUND, QQ) for g in ("a:3", SQUARE)])
    _verdict(record, 9, f"{STRATEGIES} random reduction orders agree with the normal form", bad, t)


def test_letter_deletion(record):
    bad, t = _sweep([("prop-3.4.2", "a:3", SWEEP_BOUND, QQ)])
    _verdict(record, 10, "deleting a letter moves m by at most one, to 0 on P2 words", bad, t)


def test_basis_counts(record):
    found = {}
    for spec, expected in (("a:2", 5), ("a:3", 14)):
        g = build_graph(spec)
        adj = oracles.adjacency(g)
        # longest basis words have 2 and 4 letters; 6 leaves room to see none beyond
        oracle = {
            oracles.class_key(w, adj)
            for w in oracles.all_words(g.pieces, 6)
            if oracles.fully_commutative(w, adj)
        }
        basis = monomial_basis(g)
        keys = {oracles.class_key(tuple(h.labels), adj) for h in basis}
        found[spec] = (len(basis), len(oracle), expected, keys == oracle)
    ok = all(b == o == e and same for b, o, e, same in found.values())
    detail = ", ".join(f"{s}: basis={b} oracle={o}" for s, (b, o, _, _) in found.items())
    record(11, "monomial basis sizes 5 and 14 match brute force", ok, detail)
    assert ok, detail


def test_round_trip(record):
    bad = []
    count = 0
    t0 = time.perf_counter()
    for spec in ROUND_TRIP_GRAPHS:
        g = build_graph(spec)
        for n in range(SWEEP_BOUND + 1):
            for w in itertools.product(g.pieces, repeat=n):
                h = heap_from_word(g, w)
                count += 1
                if heap_from_word(g, linear_extension(h)) != h:
                    bad.append(f"{spec}: {' '.join(w)}")
                    break
    t = time.perf_counter() - t0
    bad = bad[:5]
    ok = not bad and t < SWEEP_SECONDS
    record(12, "word -> heap -> linear extension -> heap is the identity", ok,
           "; ".join(bad) if bad else f"{count} words, {t:.1f}s")
    assert not bad
    assert t < SWEEP_SECONDS


@pytest.mark.parametrize("spec", ["a:3", SQUARE])
def test_linear_extension_stays_in_class(spec):
    # supports criterion 12: the canonical word is a rearrangement by commutations
    g = build_graph(spec)
    adj = oracles.adjacency(g)
    for w in oracles.all_words(g.pieces, 5):
        h = heap_from_word(g, w)
        assert tuple(linear_extension(h)) in oracles.commutation_class(w, adj)
