"""Named concurrency graphs and graph-spec strings.

Spec strings: ``a:N`` (path on 1..N), ``d:N`` (fork on 0, 2..N branching at
3), ``e:N`` (vertices 0..N-1: path 1..N-1 with 0 attached to 3), ``aff-a:N``
(the (N+1)-cycle on 1..N+1) and ``file:PATH``.

The E family carries the others: deleting vertex 0 from ``e:N`` leaves the
path ``a:N-1`` and deleting vertex 1 leaves the fork ``d:N-1``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import ConcurrencyGraph, GraphError, parse_graph_text


def type_e(n: int) -> ConcurrencyGraph:
    if n < 4:
        raise GraphError(f"type E needs n >= 4, got {n}")
    pieces = [str(i) for i in range(n)]
    edges = [(str(i), str(i + 1)) for i in range(1, n - 1)]
    edges.append(("0", "3"))
    return ConcurrencyGraph(pieces, edges)


def type_a(n: int) -> ConcurrencyGraph:
    if n < 1:
        raise GraphError(f"type A needs n >= 1, got {n}")
    return ConcurrencyGraph(
        [str(i) for i in range(1, n + 1)],
        [(str(i), str(i + 1)) for i in range(1, n)],
    )


def type_d(n: int) -> ConcurrencyGraph:
    if n < 3:
        raise GraphError(f"type D needs n >= 3, got {n}")
    pieces = ["0"] + [str(i) for i in range(2, n + 1)]
    edges = [(str(i), str(i + 1)) for i in range(2, n)]
    edges.append(("0", "3"))
    return ConcurrencyGraph(pieces, edges)


def type_affine_a(n: int) -> ConcurrencyGraph:
    """Affine type A of rank ``n``: the cycle on ``n + 1`` vertices ``1..n+1``."""
    if n < 2:
        raise GraphError(f"affine type A needs at least 3 vertices (n >= 2), got n = {n}")
    k = n + 1
    pieces = [str(i) for i in range(1, k + 1)]
    edges = [(str(i), str(i % k + 1)) for i in range(1, k + 1)]
    return ConcurrencyGraph(pieces, edges)


_FAMILIES = {
    "a": type_a,
    "d": type_d,
    "e": type_e,
    "aff-a": type_affine_a,
}


def load_graph_file(path: str | Path) -> ConcurrencyGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read graph file {path}: {exc}") from None
    return parse_graph_text(text)


def build_graph(spec: str) -> ConcurrencyGraph:
    """Build a graph from a spec string such as ``e:6`` or ``file:square.txt``."""
    tag, sep, arg = spec.strip().partition(":")
    tag = tag.lower()
    if not sep:
        raise GraphError(f"graph spec {spec!r} must look like 'a:4' or 'file:PATH'")
    if tag == "file":
        return load_graph_file(arg)
    family = _FAMILIES.get(tag)
    if family is None:
        raise GraphError(f"unknown graph family {tag!r}; expected one of a, d, e, aff-a, file")
    try:
        n = int(arg)
    except ValueError:
        raise GraphError(f"graph parameter must be an integer in {spec!r}") from None
    return family(n)
