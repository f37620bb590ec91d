"""Generalized Temperley-Lieb algebras on the basis of P2 heaps.

A heap reduces to ``delta**m * G`` with ``G`` a P2 heap by repeatedly
contracting balanced convex chains: a chain ``x < z`` costs a factor of
``delta = v + v^-1``, a chain ``x < y < z`` with a different middle label is
free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import _accel, _debug
from .boundary import ker_dim
from .field import QQ
from .graph import ConcurrencyGraph
from .heap import Heap, HeapError, heap_from_word
from .laurent import LaurentPoly
from .props import enumerate_heaps, has_p2


@dataclass(frozen=True)
class NormalForm:
    """``delta**m * basis_heap``."""

    m: int
    basis_heap: Heap

    def __str__(self) -> str:
        return f"delta^{self.m} [{self.basis_heap}]"


_NF_CACHE: dict[Heap, NormalForm] = {}


def reduce(heap: Heap, seed: int | None = None) -> NormalForm:
    """Normal form of a heap in the Temperley-Lieb quotient.

    With ``seed=None`` the contraction applied at each step is the one of
    smallest kind (length 2 before length 3), then smallest first element,
    and the result is cached. A nonnegative ``seed`` draws each step at
    random instead; the answer must not depend on it.
    """
    if seed is None:
        hit = _NF_CACHE.get(heap)
        if hit is not None:
            return hit
    graph = heap.graph
    m, kept = _accel.reduce_word(
        heap.word, graph.conc_bytes, len(graph), -1 if seed is None else seed
    )
    nf = NormalForm(m, Heap(graph, tuple(heap.word[i] for i in kept)))
    if seed is None:
        _NF_CACHE[heap] = nf
    return nf


def word_normal_form(graph: ConcurrencyGraph, word: str | Sequence[str]) -> tuple[int, list[str]]:
    """``(m, canonical word of G)`` for the product of generators in ``word``."""
    heap = heap_from_word(graph, word)
    nf = reduce(heap)
    if _debug.CHECKS:
        assert ker_dim(heap, QQ) == nf.m + ker_dim(nf.basis_heap, QQ)
    return nf.m, nf.basis_heap.labels


class TLElement:
    """A finite combination of P2 heaps with Laurent polynomial coefficients."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: ConcurrencyGraph, terms: Mapping[Heap, LaurentPoly] | None = None):
        self.graph = graph
        clean: dict[Heap, LaurentPoly] = {}
        for h, c in (terms or {}).items():
            if h.graph != graph:
                raise HeapError("basis heap belongs to a different graph")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly(c)
            if c:
                if not has_p2(h):
                    raise HeapError(f"[{h}] is not a basis heap (fails P2)")
                clean[h] = c
        self.terms = clean

    @classmethod
    def zero(cls, graph: ConcurrencyGraph) -> "TLElement":
        return cls(graph)

    @classmethod
    def one(cls, graph: ConcurrencyGraph) -> "TLElement":
        return cls(graph, {Heap.empty(graph): LaurentPoly(1)})

    @classmethod
    def from_heap(cls, heap: Heap) -> "TLElement":
        """Image of an arbitrary heap: ``delta**m`` times its basis heap."""
        nf = reduce(heap)
        return cls(heap.graph, {nf.basis_heap: LaurentPoly.delta(nf.m)})

    @classmethod
    def from_word(cls, graph: ConcurrencyGraph, word: str | Sequence[str]) -> "TLElement":
        return cls.from_heap(heap_from_word(graph, word))

    @classmethod
    def generator(cls, graph: ConcurrencyGraph, piece: str) -> "TLElement":
        return cls.from_word(graph, [piece])

    def _check(self, other: "TLElement") -> None:
        if self.graph != other.graph:
            raise HeapError("cannot combine elements over different concurrency graphs")

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check(other)
        out = dict(self.terms)
        for h, c in other.terms.items():
            out[h] = out.get(h, LaurentPoly()) + c
        return TLElement(self.graph, out)

    def __neg__(self) -> "TLElement":
        return TLElement(self.graph, {h: -c for h, c in self.terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "TLElement":
        return TLElement(self.graph, {h: c * k for h, k in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self):
        return hash((self.graph, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"TLElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for h in sorted(self.terms, key=lambda h: (len(h), h.word)):
            c = self.terms[h]
            cs = str(c) if c.num_terms() == 1 else f"({c})"
            parts.append(f"{cs} * [{h}]")
        return " + ".join(parts)


def multiply(x: TLElement, y: TLElement) -> TLElement:
    """Product in the algebra, extended bilinearly from superposition."""
    x._check(y)
    graph = x.graph
    out: dict[Heap, LaurentPoly] = {}
    for hx, cx in x.terms.items():
        for hy, cy in y.terms.items():
            nf = reduce(Heap(graph, hx.word + hy.word))
            coeff = cx * cy * LaurentPoly.delta(nf.m)
            g = nf.basis_heap
            out[g] = out.get(g, LaurentPoly()) + coeff
    return TLElement(graph, out)


def product(graph: ConcurrencyGraph, factors: Iterable[TLElement]) -> TLElement:
    acc = TLElement.one(graph)
    for f in factors:
        acc = multiply(acc, f)
    return acc


def monomial_basis(graph: ConcurrencyGraph, max_size: int | None = None) -> list[Heap]:
    """All P2 heaps of at most ``max_size`` elements.

    ``None`` means no bound, which terminates only when the basis is finite.
    """
    return list(enumerate_heaps(graph, max_size, p2_only=True))
