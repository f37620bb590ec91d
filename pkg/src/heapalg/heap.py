"""Heaps of pieces as canonical words.

A heap is stored as its Cartier-Foata word: elements are grouped into
layers (layer 0 is the set of minimal elements, layer k+1 the minimal
elements once layers 0..k are removed), each layer is sorted by piece
order, and element ``i`` is the ``i``-th letter. Two words give the same
heap exactly when they give the same canonical word, so heap equality is
tuple equality.

Because the canonical word is a linear extension, ``i < j`` in the heap
implies ``i < j`` as integers. Orders are kept as bitmasks over element
indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _accel, _debug
from .graph import ConcurrencyGraph, GraphError, dot_quote


class HeapError(ValueError):
    """Invalid operation on a heap (bad element, graph mismatch, ...)."""


def _canonical(graph: ConcurrencyGraph, word: Sequence[int]) -> tuple[int, ...]:
    if not word:
        return ()
    levels = _accel.foata_levels(word, graph.conc_bytes, len(graph))
    order = sorted(range(len(word)), key=lambda i: (levels[i], word[i]))
    return tuple(word[i] for i in order)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Heap:
    """An immutable heap of pieces over a concurrency graph."""

    __slots__ = ("graph", "word", "_pred", "_succ", "_hash")

    def __init__(self, graph: ConcurrencyGraph, word: Sequence[int], *, canonical: bool = False):
        self.graph = graph
        self.word = tuple(word) if canonical else _canonical(graph, word)
        self._pred = None
        self._succ = None
        self._hash = None
        if _debug.CHECKS:
            self.check_axioms()

    @classmethod
    def empty(cls, graph: ConcurrencyGraph) -> "Heap":
        return cls(graph, (), canonical=True)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def size(self) -> int:
        return len(self.word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Heap):
            return NotImplemented
        return self.word == other.word and self.graph == other.graph

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.graph, self.word))
        return self._hash

    def __repr__(self) -> str:
        return f"Heap([{self.graph.format_word(self.word)}])"

    def __str__(self) -> str:
        return self.graph.format_word(self.word)

    def _orders(self) -> None:
        self._pred, self._succ = _accel.order_masks(
            self.word, self.graph.conc_bytes, len(self.graph)
        )

    @property
    def pred(self) -> list[int]:
        """``pred[i]``: bitmask of the elements strictly below ``i``."""
        if self._pred is None:
            self._orders()
        return self._pred

    @property
    def succ(self) -> list[int]:
        """``succ[i]``: bitmask of the elements strictly above ``i``."""
        if self._succ is None:
            self._orders()
        return self._succ

    def label(self, i: int) -> str:
        return self.graph.pieces[self.word[i]]

    @property
    def labels(self) -> list[str]:
        return [self.graph.pieces[p] for p in self.word]

    def less(self, i: int, j: int) -> bool:
        return bool(self.pred[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j) or self.less(j, i)

    def between(self, i: int, j: int) -> int:
        """Bitmask of elements strictly between ``i`` and ``j``."""
        return self.succ[i] & self.pred[j]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.word)) - 1

    def minimal(self) -> list[int]:
        return [i for i, m in enumerate(self.pred) if not m]

    def maximal(self) -> list[int]:
        return [i for i, m in enumerate(self.succ) if not m]

    def is_trivial(self) -> bool:
        """No element lies below another."""
        return not any(self.pred)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)``: ``i < j`` with nothing between."""
        out = []
        succ, pred = self.succ, self.pred
        for i in range(len(self.word)):
            for j in _bits(succ[i]):
                if not succ[i] & pred[j]:
                    out.append((i, j))
        return out

    def fiber(self, piece: int) -> list[int]:
        """Elements labelled ``piece``, bottom to top."""
        return [i for i, p in enumerate(self.word) if p == piece]

    def distinct_labels(self) -> int:
        return len(set(self.word))

    def check_axioms(self) -> None:
        """Assert the heap axioms on the stored representative."""
        g, word = self.graph, self.word
        n = len(word)
        pred = self.pred
        for j in range(n):
            for i in range(n):
                lt = bool(pred[j] >> i & 1)
                if lt and i >= j:
                    raise AssertionError("canonical word is not a linear extension")
                if i < j and g.concurrent(word[i], word[j]) and not lt:
                    raise AssertionError("concurrent labels must be comparable")
        # the order is generated by its concurrent comparable pairs
        gen = [0] * n
        for j in range(n):
            for i in range(j):
                if pred[j] >> i & 1 and g.concurrent(word[i], word[j]):
                    gen[j] |= 1 << i
        closure = [0] * n
        for j in range(n):
            acc = gen[j]
            for i in _bits(gen[j]):
                acc |= closure[i]
            closure[j] = acc
        if closure != list(pred):
            raise AssertionError("order is not the closure of its concurrent pairs")
        for p in set(word):
            fib = self.fiber(p)
            for a, b in zip(fib, fib[1:]):
                if not pred[b] >> a & 1:
                    raise AssertionError("label fiber is not a chain")
        if _canonical(g, word) != word:
            raise AssertionError("stored word is not canonical")

    def to_dot(self, name: str = "heap") -> str:
        """Hasse diagram (cover relations) as a DOT digraph, lower to upper."""
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, p in enumerate(self.word):
            lines.append(f"  n{i} [label={dot_quote(f'{i}:{self.graph.pieces[p]}')}];")
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def heap_from_word(graph: ConcurrencyGraph, word: str | Sequence[str]) -> Heap:
    """Heap of a word of piece names (string or sequence).

    Raises GraphError naming the first unknown letter and its position.
    """
    return Heap(graph, graph.parse_word(word))


def linear_extension(heap: Heap) -> list[str]:
    """The canonical linear extension: layers bottom up, each in piece order."""
    return heap.labels


def superpose(e: Heap, f: Heap) -> Heap:
    """The superposition ``e o f``.

    Each element of ``e`` lies below every element of ``f`` with a concurrent
    label, so the word of ``e`` followed by the word of ``f`` is a linear
    extension. (Read with ``a <= b`` as "a above b", this is ``e`` over ``f``.)
    """
    if e.graph != f.graph:
        raise HeapError("cannot superpose heaps over different concurrency graphs")
    if not f.word:
        return e
    if not e.word:
        return f
    return Heap(e.graph, e.word + f.word)


def _mask_of(heap: Heap, keep: Iterable[int] | int) -> int:
    if isinstance(keep, int):
        mask = keep
    else:
        mask = 0
        for i in keep:
            if not 0 <= i < len(heap):
                raise HeapError(f"element {i} out of range for a heap of size {len(heap)}")
            mask |= 1 << i
    if mask >> len(heap):
        raise HeapError("element mask out of range")
    return mask


def subword(heap: Heap, keep: Iterable[int] | int) -> tuple[int, ...]:
    mask = _mask_of(heap, keep)
    return tuple(p for i, p in enumerate(heap.word) if mask >> i & 1)


def subheap(heap: Heap, keep: Iterable[int] | int) -> Heap:
    """Subheap on the given elements (an iterable of indices or a bitmask).

    Its order is generated by the kept pairs with concurrent labels, which
    can be coarser than the restriction of the ambient order.
    """
    return Heap(heap.graph, subword(heap, keep))


def delete_vertex(heap: Heap, v: int) -> Heap:
    """``E(v)``: the subheap omitting element ``v``."""
    if not 0 <= v < len(heap):
        raise HeapError(f"element {v} out of range for a heap of size {len(heap)}")
    return Heap(heap.graph, heap.word[:v] + heap.word[v + 1:])


def piece_heap(graph: ConcurrencyGraph, piece: str) -> Heap:
    """Single-element heap."""
    return Heap(graph, (graph.lookup(piece),), canonical=True)


@dataclass(frozen=True)
class Chain:
    """A chain ``x1 < x2 < ... < xt`` of elements of a particular heap."""

    elements: tuple[int, ...]
    convex: bool = False
    balanced: bool = False

    @property
    def length(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def is_chain(heap: Heap, elements: Sequence[int]) -> bool:
    return all(heap.less(a, b) for a, b in zip(elements, elements[1:]))


def is_convex_chain(heap: Heap, elements: Sequence[int]) -> bool:
    """Chain whose interval ``[x1, xt]`` contains nothing else."""
    if len(elements) < 2 or not is_chain(heap, elements):
        return False
    x, z = elements[0], elements[-1]
    inside = heap.between(x, z) | (1 << x) | (1 << z)
    return inside == _mask_of(heap, elements)


def is_balanced(heap: Heap, elements: Sequence[int]) -> bool:
    return len(elements) >= 1 and heap.word[elements[0]] == heap.word[elements[-1]]


def make_chain(heap: Heap, elements: Sequence[int]) -> Chain:
    """Chain with its flags computed from ``heap``; raises if not a chain."""
    elements = tuple(elements)
    for i in elements:
        if not 0 <= i < len(heap):
            raise HeapError(f"element {i} out of range for a heap of size {len(heap)}")
    if not is_chain(heap, elements):
        raise HeapError(f"{list(elements)} is not a chain")
    return Chain(elements, is_convex_chain(heap, elements), is_balanced(heap, elements))


def convex_chains(heap: Heap, max_len: int, balanced_only: bool = False) -> list[Chain]:
    """All convex chains of length ``2..max_len``, lexicographically ordered.

    A convex chain is determined by its endpoints: it is the interval
    between them, which must be totally ordered.
    """
    if max_len < 2:
        raise HeapError("max_len must be at least 2")
    out = []
    succ, pred, word = heap.succ, heap.pred, heap.word
    for x in range(len(word)):
        for z in _bits(succ[x]):
            if balanced_only and word[x] != word[z]:
                continue
            inner = succ[x] & pred[z]
            if inner.bit_count() + 2 > max_len:
                continue
            members = [x, *_bits(inner), z]
            if all(pred[b] >> a & 1 for a, b in zip(members, members[1:])):
                out.append(Chain(tuple(members), True, word[x] == word[z]))
    out.sort(key=lambda ch: ch.elements)
    return out


__all__ = [
    "Chain",
    "GraphError",
    "Heap",
    "HeapError",
    "convex_chains",
    "delete_vertex",
    "heap_from_word",
    "is_convex_chain",
    "linear_extension",
    "make_chain",
    "piece_heap",
    "subheap",
    "subword",
    "superpose",
]
