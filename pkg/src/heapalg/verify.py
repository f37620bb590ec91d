"""Exhaustive and seeded-random sweeps of the structural results.

Each check walks all heaps (or words) up to a size bound over one graph and
stops at the first violation, which is reported as a replayable canonical
word.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .boundary import build_complex, contract, image_vertices, is_acyclic, is_strongly_acyclic, ker_dim
from .field import QQ, Field
from .graph import ConcurrencyGraph
from .heap import Heap, convex_chains
from .laurent import LaurentPoly
from .props import check_regular, enumerate_heaps, has_p2, is_dismantlable
from .tl import TLElement, monomial_basis, multiply, reduce

DEFAULT_STRATEGIES = 200


@dataclass
class VerificationReport:
    property_id: str
    graph_spec: str
    bound: int
    field: Field
    verdict: str  # "pass", "counterexample" or "skipped"
    checked: int = 0
    counterexample: str | None = None
    detail: str = ""
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def line(self, timing: bool = False) -> str:
        head = f"PROPERTY {self.property_id} {self.graph_spec} size<={self.bound} field={self.field}: "
        if self.verdict == "pass":
            body = "OK"
        elif self.verdict == "counterexample":
            body = f"COUNTEREXAMPLE [{self.counterexample}]"
        else:
            body = "SKIPPED"
        tail = f" checked={self.checked}"
        if self.detail:
            tail += f" detail={self.detail.replace(' ', '_')}"
        if timing:
            tail += f" elapsed={self.elapsed:.3f}s"
        return head + body + tail


class _Found(Exception):
    def __init__(self, heap: Heap, detail: str, checked: int = 0):
        self.heap = heap
        self.detail = detail
        self.checked = checked


_ENUM_CACHE: dict[tuple, list[Heap]] = {}


def heaps_upto(graph: ConcurrencyGraph, bound: int, p2_only: bool = False) -> list[Heap]:
    key = (graph, bound, p2_only)
    hit = _ENUM_CACHE.get(key)
    if hit is None:
        hit = list(enumerate_heaps(graph, bound, p2_only))
        _ENUM_CACHE[key] = hit
    return hit


def _delete(h: Heap, v: int) -> Heap:
    return Heap(h.graph, h.word[:v] + h.word[v + 1:])


def _label_count(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        cx = build_complex(h, field)
        k = len(cx.edges) - cx.rank
        c = len(h) - cx.rank
        if len(cx.edges) != len(h) - h.distinct_labels() or c - k != h.distinct_labels():
            raise _Found(h, f"coker={c} ker={k}", n)
        n += 1
    return n


def _deletion(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        cx = build_complex(h, field)
        k = ker_dim(cx)
        images = set(image_vertices(cx))
        for v in range(len(h)):
            d = ker_dim(_delete(h, v), field) - k
            allowed = (0, 1) if v in images else (0, -1)
            if d not in allowed:
                raise _Found(h, f"vertex={v} change={d}", n)
            n += 1
    return n


def _p1_implies_acyclic(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        if is_dismantlable(h):
            if ker_dim(h, field) != 0:
                raise _Found(h, "dismantlable with nonzero kernel", n)
        n += 1
    return n


def _strongly_acyclic_implies_p2(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        if is_strongly_acyclic(h, field) and not has_p2(h):
            raise _Found(h, "strongly acyclic without P2", n)
        n += 1
    return n


def _minimal_vertex(graph, bound, field, seed, strategies):
    n = 0
    for e in heaps_upto(graph, bound - 1, p2_only=True):
        minimal_labels = {e.word[i] for i in e.minimal()}
        for a in range(len(graph)):
            f = Heap(graph, (a,) + e.word)
            n += 1
            if has_p2(f) or a in minimal_labels:
                continue
            bottom = f.fiber(a)[0]
            ok = any(
                ch.elements[0] == bottom and f.word[ch.elements[1]] != a
                for ch in convex_chains(f, 3, balanced_only=True)
                if ch.length == 3
            )
            if not ok:
                raise _Found(e, f"piece={graph.pieces[a]}", n)
    return n


def _short_contraction(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        k = None
        for ch in convex_chains(h, 2, balanced_only=True):
            if k is None:
                k = ker_dim(h, field)
            if ker_dim(contract(h, ch), field) != k - 1:
                raise _Found(h, f"chain={list(ch.elements)}", n)
            n += 1
    return n


def _long_contraction(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        k = images = None
        for ch in convex_chains(h, 3, balanced_only=True):
            if ch.length != 3:
                continue
            x, y, _ = ch.elements
            if h.word[x] == h.word[y]:
                continue
            if k is None:
                cx = build_complex(h, field)
                k = ker_dim(cx)
                images = set(image_vertices(cx))
            if ker_dim(contract(h, ch), field) != k or y not in images:
                raise _Found(h, f"chain={list(ch.elements)}", n)
            n += 1
    return n


def _p2_vs_strong_acyclicity(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        if has_p2(h) != is_strongly_acyclic(h, field):
            raise _Found(h, "P2 differs from strong acyclicity", n)
        n += 1
    for e in heaps_upto(graph, bound - 1, p2_only=True):
        lows = {e.word[i] for i in e.minimal()}
        highs = {e.word[i] for i in e.maximal()}
        for a in range(len(graph)):
            if ker_dim(Heap(graph, (a,) + e.word), field) and a not in lows:
                raise _Found(e, f"below={graph.pieces[a]}", n)
            if ker_dim(Heap(graph, e.word + (a,)), field) and a not in highs:
                raise _Found(e, f"above={graph.pieces[a]}", n)
            n += 1
    return n


def _acyclic_vs_p1(graph, bound, field, seed, strategies):
    n = 0
    for h in heaps_upto(graph, bound):
        if is_acyclic(h, field) != is_dismantlable(h):
            raise _Found(h, "acyclic differs from dismantlable", n)
        n += 1
    return n


def _regularity(graph, bound, field, seed, strategies):
    rep = check_regular(graph, bound, field)
    if rep.counterexample is not None:
        raise _Found(rep.counterexample, "P2 but not P1", rep.checked - 1)
    if rep.not_strongly_acyclic is not None:
        raise _Found(rep.not_strongly_acyclic, "P2 but not strongly acyclic", rep.checked)
    return rep.checked


def _structure_constants(graph, bound, field, seed, strategies):
    regular = check_regular(graph, bound, field).regular
    n = 0
    for h in heaps_upto(graph, bound):
        nf = reduce(h)
        k = ker_dim(h, field)
        kg = ker_dim(nf.basis_heap, field)
        if not has_p2(nf.basis_heap) or k != nf.m + kg:
            raise _Found(h, f"m={nf.m} ker={k} ker_G={kg}", n)
        if regular and kg != 0:
            raise _Found(h, f"m={nf.m} ker={k}", n)
        n += 1
    if regular:
        basis = monomial_basis(graph, bound)
        elems = [TLElement(graph, {b: 1}) for b in basis]
        for (e, te), (f, tf) in itertools.product(zip(basis, elems), repeat=2):
            if len(e) + len(f) > bound:
                continue
            prod = multiply(te, tf)
            k = ker_dim(Heap(graph, e.word + f.word), field)
            if len(prod.terms) != 1:
                raise _Found(Heap(graph, e.word + f.word), f"product has {len(prod.terms)} terms", n)
            (coeff,) = prod.terms.values()
            if coeff != LaurentPoly.delta(k):
                raise _Found(Heap(graph, e.word + f.word), f"coefficient ({coeff}) with ker={k}", n)
            n += 1
    return n


def _confluence(graph, bound, field, seed, strategies):
    rng = random.Random(seed)
    n = 0
    for h in heaps_upto(graph, bound):
        expected = reduce(h)
        for _ in range(strategies):
            got = reduce(h, seed=rng.getrandbits(63))
            if got != expected:
                raise _Found(h, f"{got} vs {expected}", n)
            n += 1
    return n


def _letter_deletion(graph, bound, field, seed, strategies):
    n = 0
    for length in range(bound + 1):
        for word in itertools.product(range(len(graph)), repeat=length):
            h = Heap(graph, word)
            m = reduce(h).m
            p2 = has_p2(h)
            for l in range(length):
                m2 = reduce(Heap(graph, word[:l] + word[l + 1:])).m
                if abs(m2 - m) > 1 or (p2 and m2 != 0):
                    raise _Found(h, f"letter={l} m={m} m'={m2}", n)
                n += 1
    return n


# id -> sweep. In words:
#   lemma-1.2.4       coker - ker equals the number of distinct labels
#   deletion-2.1.1    deleting a vertex changes ker by at most one: by 0 or +1
#                     for image vertices, 0 or -1 otherwise
#   prop-2.2.3        dismantlable heaps are acyclic
#   prop-2.2.7        strongly acyclic heaps have P2
#   lemma-2.2.9       if E has P2 and a o E does not, a's label is on a minimal
#                     element of E or a starts a convex a < b < d with
#                     e(a) = e(d) != e(b)
#   contract-2.3.4    contracting a balanced x < z lowers ker by one
#   contract-2.3.5    contracting x < y < z with e(x) != e(y) keeps ker, and y
#                     is an image vertex
#   thm-2.4.2         on regular graphs P2 <=> strongly acyclic, and a nonzero
#                     kernel of a o E (or E o a) forces a minimal (maximal) a
#   thm-2.4.4         on regular graphs acyclic <=> dismantlable
#   regularity-2.4.1  every P2 heap is dismantlable
#   thm-3.2.3         ker(D) = m + ker(G) for D = delta^m G; on regular graphs
#                     m = ker(D) and basis products are single delta^m terms
#   confluence-3.2.2  random reduction orders reach the same normal form
#   prop-3.4.2        deleting one letter of a word moves m by at most one,
#                     and to zero when the word's heap has P2
CHECKS: dict[str, Callable] = {
    "lemma-1.2.4": _label_count,
    "deletion-2.1.1": _deletion,
    "prop-2.2.3": _p1_implies_acyclic,
    "prop-2.2.7": _strongly_acyclic_implies_p2,
    "lemma-2.2.9": _minimal_vertex,
    "contract-2.3.4": _short_contraction,
    "contract-2.3.5": _long_contraction,
    "thm-2.4.2": _p2_vs_strong_acyclicity,
    "thm-2.4.4": _acyclic_vs_p1,
    "regularity-2.4.1": _regularity,
    "thm-3.2.3": _structure_constants,
    "confluence-3.2.2": _confluence,
    "prop-3.4.2": _letter_deletion,
}


def run_check(
    property_id: str,
    graph: ConcurrencyGraph,
    bound: int,
    field: Field = QQ,
    seed: int = 0,
    strategies: int = DEFAULT_STRATEGIES,
    graph_spec: str | None = None,
) -> VerificationReport:
    try:
        fn = CHECKS[property_id]
    except KeyError:
        raise KeyError(
            f"unknown property {property_id!r}; valid ids: {', '.join(CHECKS)}"
        ) from None
    spec = graph_spec or "custom"
    t0 = time.perf_counter()
    try:
        checked = fn(graph, bound, field, seed, strategies)
    except _Found as hit:
        return VerificationReport(
            property_id, spec, bound, field, "counterexample",
            checked=hit.checked, counterexample=str(hit.heap), detail=hit.detail,
            elapsed=time.perf_counter() - t0,
        )
    return VerificationReport(
        property_id, spec, bound, field, "pass", checked=checked,
        elapsed=time.perf_counter() - t0,
    )
