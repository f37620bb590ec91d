"""Concurrency graphs: a finite piece set with a symmetric reflexive relation."""

from __future__ import annotations

import logging
from typing import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)


class GraphError(ValueError):
    """Malformed graph description or unknown piece."""


class ConcurrencyGraph:
    """Pieces together with their concurrency relation.

    The relation is stored as one bitmask per piece (over piece indices),
    always including the piece itself. Piece order is fixed at construction
    and is the total order used for canonical forms.
    """

    __slots__ = ("pieces", "index", "adj", "_conc", "_key")

    def __init__(self, pieces: Sequence[str], edges: Iterable[tuple[str, str]] = ()):
        pieces = tuple(str(p) for p in pieces)
        for p in pieces:
            if not p or any(ch.isspace() for ch in p):
                raise GraphError(f"invalid piece name {p!r}")
        if len(set(pieces)) != len(pieces):
            raise GraphError("duplicate piece names")
        self.pieces = pieces
        self.index = {p: i for i, p in enumerate(pieces)}
        adj = [1 << i for i in range(len(pieces))]
        for u, v in edges:
            i, j = self.lookup(u), self.lookup(v)
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.adj = tuple(adj)
        n = len(pieces)
        self._conc = bytes(
            1 if adj[i] >> j & 1 else 0 for i in range(n) for j in range(n)
        )
        self._key = (self.pieces, self.adj)

    @classmethod
    def from_adjacency(cls, adjacency: Mapping[str, Iterable[str]]) -> "ConcurrencyGraph":
        """Build from ``{piece: neighbours}``, symmetrizing with a warning."""
        pieces = list(adjacency)
        seen = set(pieces)
        for nbrs in adjacency.values():
            for q in nbrs:
                if q not in seen:
                    seen.add(q)
                    pieces.append(q)
        edges = []
        for p, nbrs in adjacency.items():
            for q in nbrs:
                if q == p:
                    continue
                if p not in adjacency.get(q, ()):
                    logger.warning("asymmetric adjacency %s -> %s; adding %s -> %s", p, q, q, p)
                edges.append((p, q))
        return cls(pieces, edges)

    def lookup(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise GraphError(f"unknown piece {name!r}") from None

    def __len__(self) -> int:
        return len(self.pieces)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, ConcurrencyGraph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"ConcurrencyGraph({list(self.pieces)!r}, {self.edges()!r})"

    @property
    def conc_bytes(self) -> bytes:
        """Row-major 0/1 concurrency matrix, as consumed by the kernels."""
        return self._conc

    def concurrent(self, p: int, q: int) -> bool:
        return bool(self.adj[p] >> q & 1)

    def neighbours(self, p: int) -> list[int]:
        return [q for q in range(len(self.pieces)) if q != p and self.adj[p] >> q & 1]

    def edges(self) -> list[tuple[str, str]]:
        """Edges of the concurrency graph (distinct concurrent pieces), each once."""
        out = []
        for i in range(len(self.pieces)):
            for j in range(i + 1, len(self.pieces)):
                if self.adj[i] >> j & 1:
                    out.append((self.pieces[i], self.pieces[j]))
        return out

    def parse_word(self, word: str | Sequence[str]) -> tuple[int, ...]:
        """Translate piece names to indices.

        Raises GraphError naming the first unknown letter and its position.
        """
        letters = word.split() if isinstance(word, str) else list(word)
        out = []
        for pos, letter in enumerate(letters):
            idx = self.index.get(letter)
            if idx is None:
                raise GraphError(f"unknown piece {letter!r} at position {pos}")
            out.append(idx)
        return tuple(out)

    def format_word(self, word: Iterable[int]) -> str:
        return " ".join(self.pieces[i] for i in word)

    def induced(self, keep: Iterable[str]) -> "ConcurrencyGraph":
        """Induced subgraph on ``keep``, in this graph's piece order."""
        keep = set(keep)
        pieces = [p for p in self.pieces if p in keep]
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        return ConcurrencyGraph(pieces, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for p in self.pieces:
            lines.append(f"  {dot_quote(p)};")
        for u, v in self.edges():
            lines.append(f"  {dot_quote(u)} -- {dot_quote(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def dot_quote(text: str) -> str:
    """A DOT quoted-string literal for ``text``."""
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def parse_graph_text(text: str) -> ConcurrencyGraph:
    """Parse the ``vertex: neighbour neighbour ...`` line format.

    Blank lines and ``#`` comments are ignored. A vertex may appear on
    several lines; its neighbour lists are merged.
    """
    adjacency: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        head = head.strip()
        if not sep or not head or any(ch.isspace() for ch in head):
            raise GraphError(f"line {lineno}: expected 'vertex: neighbours', got {raw!r}")
        nbrs = adjacency.setdefault(head, [])
        for q in tail.split():
            if q == head:
                continue
            nbrs.append(q)
    if not adjacency:
        raise GraphError("graph file declares no vertices")
    return ConcurrencyGraph.from_adjacency(adjacency)
