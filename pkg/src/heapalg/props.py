"""Combinatorial properties of heaps: P2, dismantlability (P1), enumeration
and regularity of a class of heaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from . import _accel
from .boundary import is_strongly_acyclic
from .field import QQ, Field
from .graph import ConcurrencyGraph
from .heap import Heap, _bits


def has_p2(heap: Heap) -> bool:
    """No balanced convex chain ``x < z`` or ``x < y < z``.

    Such a chain joins two consecutive elements of one label fiber with at
    most one element strictly between them, so it suffices to inspect the
    fiber edges.
    """
    word = heap.word
    if len(word) < 2:
        return True
    pred, succ = heap.pred, heap.succ
    last: dict[int, int] = {}
    for z, p in enumerate(word):
        x = last.get(p)
        if x is not None:
            inner = succ[x] & pred[z]
            if inner & (inner - 1) == 0:
                return False
        last[p] = z
    return True


@dataclass(frozen=True)
class DismantlingStep:
    """Removal of ``removed`` with ``witness`` certifying the step.

    ``direction`` is ``"minus"`` when ``removed`` is minimal (and ``witness``
    becomes minimal), ``"plus"`` for the maximal case. Indices refer to the
    heap passed to :func:`dismantle`.
    """

    removed: int
    direction: Literal["minus", "plus"]
    witness: int


def _sub_orders(heap: Heap, mask: int) -> tuple[list[int], list[int], list[int]]:
    """Order masks of the subheap on ``mask``, in ``heap``'s element indices."""
    pos = list(_bits(mask))
    pred_s, succ_s = _accel.order_masks(
        [heap.word[i] for i in pos], heap.graph.conc_bytes, len(heap.graph)
    )

    def lift(m: int) -> int:
        out = 0
        for k in _bits(m):
            out |= 1 << pos[k]
        return out

    return pos, [lift(m) for m in pred_s], [lift(m) for m in succ_s]


def _candidate_steps(heap: Heap, mask: int) -> Iterator[DismantlingStep]:
    """Steps from the subheap on ``mask``, minus before plus, by element."""
    pos, pred, succ = _sub_orders(heap, mask)
    word = heap.word
    for direction, lower in (("minus", pred), ("plus", succ)):
        extremal = {i for i, m in zip(pos, lower) if not m}
        for a in sorted(extremal):
            rest = mask & ~(1 << a)
            rpos, rpred, rsucc = _sub_orders(heap, rest)
            rlower = rpred if direction == "minus" else rsucc
            for b, m in zip(rpos, rlower):
                if not m and b not in extremal and word[b] != word[a]:
                    yield DismantlingStep(a, direction, b)
                    break


_P1_MEMO: dict[Heap, bool] = {}


def is_dismantlable(heap: Heap) -> bool:
    """Whether ``heap`` has property P1 (memoized on canonical forms)."""
    hit = _P1_MEMO.get(heap)
    if hit is not None:
        return hit
    if heap.is_trivial():
        result = True
    else:
        result = False
        full = heap.full_mask
        for step in _candidate_steps(heap, full):
            if is_dismantlable(Heap(heap.graph, _sub_word(heap, full & ~(1 << step.removed)))):
                result = True
                break
    _P1_MEMO[heap] = result
    return result


def _sub_word(heap: Heap, mask: int) -> tuple[int, ...]:
    return tuple(p for i, p in enumerate(heap.word) if mask >> i & 1)


def dismantle(heap: Heap) -> list[DismantlingStep] | None:
    """A dismantling witness, or None if the heap is not dismantlable.

    The steps are listed in removal order, starting from ``heap``; after the
    last step the remaining elements form a trivial heap. Replaying them in
    reverse order builds ``heap`` back up from that trivial heap.
    """
    if not is_dismantlable(heap):
        return None
    steps = []
    mask = heap.full_mask
    while not Heap(heap.graph, _sub_word(heap, mask)).is_trivial():
        for step in _candidate_steps(heap, mask):
            rest = mask & ~(1 << step.removed)
            if is_dismantlable(Heap(heap.graph, _sub_word(heap, rest))):
                steps.append(step)
                mask = rest
                break
        else:  # pragma: no cover - is_dismantlable guarantees a step
            raise AssertionError("memoized dismantlability is inconsistent")
    return steps


def check_dismantling(heap: Heap, steps: list[DismantlingStep]) -> bool:
    """Validate a witness step by step against the definition."""
    mask = heap.full_mask
    word = heap.word
    for st in steps:
        if st.witness == st.removed or not mask >> st.removed & 1 or not mask >> st.witness & 1:
            return False
        pos, pred, succ = _sub_orders(heap, mask)
        lower = dict(zip(pos, pred if st.direction == "minus" else succ))
        rest = mask & ~(1 << st.removed)
        rpos, rpred, rsucc = _sub_orders(heap, rest)
        rlower = dict(zip(rpos, rpred if st.direction == "minus" else rsucc))
        if lower[st.removed] or rlower[st.witness] or not lower[st.witness]:
            return False
        if word[st.witness] == word[st.removed]:
            return False
        mask = rest
    return Heap(heap.graph, _sub_word(heap, mask)).is_trivial()


def enumerate_heaps(
    graph: ConcurrencyGraph, max_size: int | None, p2_only: bool = False
) -> Iterator[Heap]:
    """Every heap with at most ``max_size`` elements, once, by size.

    Size ``k + 1`` heaps are obtained by superposing a single piece on top
    of size ``k`` heaps. With ``p2_only`` the layers are pruned to P2 heaps,
    which is sound because removing a maximal element preserves P2. A
    ``max_size`` of None runs until a layer comes out empty, which only
    happens for P2 heaps over a graph with finitely many of them.
    """
    if max_size is not None and max_size < 0:
        return
    if max_size is None and not p2_only:
        raise ValueError("an unbounded enumeration of all heaps never terminates")
    layer = [Heap.empty(graph)]
    size = 0
    npieces = len(graph)
    while layer:
        yield from layer
        if max_size is not None and size >= max_size:
            return
        seen: set[tuple[int, ...]] = set()
        nxt = []
        for h in layer:
            for p in range(npieces):
                cand = Heap(graph, h.word + (p,))
                if cand.word in seen:
                    continue
                seen.add(cand.word)
                if p2_only and not has_p2(cand):
                    continue
                nxt.append(cand)
        nxt.sort(key=lambda h: h.word)
        layer = nxt
        size += 1


@dataclass
class RegularityReport:
    graph: ConcurrencyGraph
    max_size: int
    field: Field
    checked: int
    counterexample: Heap | None = None
    not_strongly_acyclic: Heap | None = None

    @property
    def regular(self) -> bool:
        return self.counterexample is None


def check_regular(graph: ConcurrencyGraph, max_size: int, field: Field = QQ) -> RegularityReport:
    """Search for a heap with P2 but not P1 among heaps of ``<= max_size``.

    While no counterexample has turned up, every P2 heap is also checked to
    be strongly acyclic.
    """
    report = RegularityReport(graph, max_size, field, 0)
    for heap in enumerate_heaps(graph, max_size, p2_only=True):
        report.checked += 1
        if not is_dismantlable(heap):
            report.counterexample = heap
            break
        if report.not_strongly_acyclic is None and not is_strongly_acyclic(heap, field):
            report.not_strongly_acyclic = heap
    return report
