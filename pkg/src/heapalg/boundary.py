"""The boundary map of a heap and the linear invariants built on it.

Edges of a heap are the pairs ``(x, y)`` of consecutive elements in one
label fiber. The boundary of an edge is the sum of the elements strictly
between ``x`` and ``y`` whose labels are concurrent with theirs. Because the
canonical word is a linear extension, those are exactly the positions
strictly between ``x`` and ``y`` carrying a concurrent label.

Columns of the boundary matrix are stored as bitmasks over vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import _accel, _debug
from .field import QQ, Field, FieldScalar, nullspace
from .heap import Chain, Heap, HeapError, is_convex_chain, subheap


@dataclass(frozen=True)
class BoundaryComplex:
    heap: Heap
    field: Field
    edges: tuple[tuple[int, int], ...]
    columns: tuple[int, ...]
    _rank: list = dc_field(default_factory=list, repr=False, compare=False)

    @property
    def vertices(self) -> range:
        return range(len(self.heap))

    @property
    def matrix(self) -> list[list[FieldScalar]]:
        """Rows indexed by vertices, columns by edges."""
        one, zero = self.field.one, self.field.zero
        return [
            [one if col >> v & 1 else zero for col in self.columns]
            for v in self.vertices
        ]

    def boundary(self, k: int) -> list[int]:
        """Vertices in the boundary of edge number ``k``."""
        col = self.columns[k]
        return [v for v in self.vertices if col >> v & 1]

    @property
    def rank(self) -> int:
        if not self._rank:
            self._rank.append(_rank_bits(self.columns, len(self.heap), self.field))
        return self._rank[0]


def _rank_bits(cols: Sequence[int], nrows: int, field: Field) -> int:
    if not cols:
        return 0
    if field.is_rational:
        return _accel.rank_bits_q(list(cols), nrows)
    return _accel.rank_bits_mod(list(cols), nrows, field.characteristic)


def heap_edges(heap: Heap) -> list[tuple[int, int]]:
    """Edges ordered by fiber (piece order), then along the fiber."""
    fibers: dict[int, list[int]] = {}
    for i, p in enumerate(heap.word):
        fibers.setdefault(p, []).append(i)
    out = []
    for p in sorted(fibers):
        fib = fibers[p]
        out.extend(zip(fib, fib[1:]))
    return out


def build_complex(heap: Heap, field: Field = QQ) -> BoundaryComplex:
    graph, word = heap.graph, heap.word
    edges = heap_edges(heap)
    cols = []
    for x, y in edges:
        adj = graph.adj[word[x]]
        col = 0
        for w in range(x + 1, y):
            if adj >> word[w] & 1:
                col |= 1 << w
        cols.append(col)
    cx = BoundaryComplex(heap, field, tuple(edges), tuple(cols))
    if _debug.CHECKS:
        assert len(edges) == len(heap) - heap.distinct_labels()
        pred, succ = heap.pred, heap.succ
        for (x, y), col in zip(edges, cols):
            assert col & ~(succ[x] & pred[y]) == 0
    return cx


def _complex(obj, field: Field | None) -> BoundaryComplex:
    if isinstance(obj, BoundaryComplex):
        return obj
    return build_complex(obj, field or QQ)


def ker_dim(cx: BoundaryComplex | Heap, field: Field | None = None) -> int:
    """Dimension of the kernel of the boundary map."""
    cx = _complex(cx, field)
    return len(cx.columns) - cx.rank


def coker_dim(cx: BoundaryComplex | Heap, field: Field | None = None) -> int:
    """Dimension of the cokernel; exceeds ``ker_dim`` by the number of labels."""
    cx = _complex(cx, field)
    d = len(cx.heap) - cx.rank
    assert d - (len(cx.columns) - cx.rank) == cx.heap.distinct_labels()
    return d


def kernel_basis(cx: BoundaryComplex | Heap, field: Field | None = None) -> list[list[FieldScalar]]:
    """Kernel vectors as coefficient lists over ``cx.edges``."""
    cx = _complex(cx, field)
    return nullspace(cx.matrix, cx.field, len(cx.columns))


def is_acyclic(heap: Heap, field: Field = QQ) -> bool:
    return ker_dim(build_complex(heap, field)) == 0


def is_strongly_acyclic(heap: Heap, field: Field = QQ) -> bool:
    """Acyclic, and acyclic after deleting any single element."""
    if not is_acyclic(heap, field):
        return False
    word = heap.word
    for v in range(len(word)):
        if not is_acyclic(Heap(heap.graph, word[:v] + word[v + 1:]), field):
            return False
    return True


def image_vertices(cx: BoundaryComplex | Heap, field: Field | None = None) -> list[int]:
    """Vertices whose basis vector lies in the image of the boundary map."""
    cx = _complex(cx, field)
    n, r = len(cx.heap), cx.rank
    if r == 0:
        return []
    cols = list(cx.columns)
    return [
        v for v in range(n)
        if _rank_bits(cols + [1 << v], n, cx.field) == r
    ]


def contract(heap: Heap, chain: Chain | Sequence[int]) -> Heap:
    """Contraction along a balanced convex chain: keep only its first element."""
    elements = tuple(chain.elements if isinstance(chain, Chain) else chain)
    for i in elements:
        if not 0 <= i < len(heap):
            raise HeapError(f"element {i} out of range for a heap of size {len(heap)}")
    if len(elements) < 2:
        raise HeapError("contraction needs a chain of length at least 2")
    if heap.word[elements[0]] != heap.word[elements[-1]]:
        raise HeapError(f"chain {list(elements)} is not balanced")
    if not is_convex_chain(heap, elements):
        raise HeapError(f"chain {list(elements)} is not convex")
    drop = 0
    for i in elements[1:]:
        drop |= 1 << i
    result = subheap(heap, heap.full_mask & ~drop)
    if _debug.CHECKS:
        other = 0
        for i in elements[:-1]:
            other |= 1 << i
        assert subheap(heap, heap.full_mask & ~other) == result
    return result
