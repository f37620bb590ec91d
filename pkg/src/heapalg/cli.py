"""Command-line interface: ``heapalg <command> [options]``.

Every report is plain, line-oriented text and identical invocations give
byte-identical output. Exit status is 0 on success, 1 when a ``verify``
sweep finds a counterexample and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .boundary import build_complex, image_vertices, is_strongly_acyclic
from .catalog import build_graph
from .field import Field
from .graph import ConcurrencyGraph
from .heap import Heap, heap_from_word
from .props import dismantle, enumerate_heaps, has_p2
from .tl import TLElement, product, reduce
from .verify import CHECKS, DEFAULT_STRATEGIES, run_check


def _yn(flag: bool) -> str:
    return "true" if flag else "false"


def _bracket(heap: Heap) -> str:
    return f"[{heap}]"


def _describe(heap: Heap, i: int) -> str:
    return f"{i}:{heap.label(i)}"


def cmd_analyze(graph: ConcurrencyGraph, word: str, field: Field) -> list[str]:
    heap = heap_from_word(graph, word)
    cx = build_complex(heap, field)
    ker = len(cx.edges) - cx.rank
    coker = len(heap) - cx.rank
    labels = heap.distinct_labels()
    steps = dismantle(heap)
    out = [
        f"heap: {_bracket(heap)}",
        f"field: {field}",
        f"|E| = {len(heap)}",
        f"|V1| = {len(cx.edges)}",
        f"ker = {ker}",
        f"coker = {coker}",
        f"labels = {labels} (coker - ker = {coker} - {ker} = {coker - ker})",
        f"acyclic = {_yn(ker == 0)}",
        f"strongly_acyclic = {_yn(is_strongly_acyclic(heap, field))}",
        f"P1 = {_yn(steps is not None)}",
    ]
    for n, st in enumerate(steps or (), 1):
        side = "minimal" if st.direction == "minus" else "maximal"
        out.append(
            f"  step {n}: remove {_describe(heap, st.removed)} ({side}),"
            f" witness {_describe(heap, st.witness)}"
        )
    out.append(f"P2 = {_yn(has_p2(heap))}")
    images = " ".join(_describe(heap, v) for v in image_vertices(cx))
    out.append(f"image_vertices = [{images}]")
    return out


def cmd_normal_form(graph: ConcurrencyGraph, word: str) -> list[str]:
    return [str(reduce(heap_from_word(graph, word)))]


def cmd_multiply(graph: ConcurrencyGraph, words: Sequence[str]) -> list[str]:
    return [str(product(graph, (TLElement.from_word(graph, w) for w in words)))]


def cmd_enumerate(graph: ConcurrencyGraph, bound: int, p2_only: bool) -> list[str]:
    return [_bracket(h) for h in enumerate_heaps(graph, bound, p2_only)]


def cmd_export_dot(graph: ConcurrencyGraph, word: str, which: str) -> list[str]:
    if which == "concurrency":
        return graph.to_dot().splitlines()
    return heap_from_word(graph, word).to_dot().splitlines()


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="a:N, d:N, e:N, aff-a:N or file:PATH")
    common.add_argument("--field", default="q", help="q (default) or gf:p")

    ap = argparse.ArgumentParser(prog="heapalg", description="Heaps of pieces and their boundary maps.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="boundary map and properties of one heap")
    p.add_argument("--word", default="", help="space-separated pieces")

    p = sub.add_parser("normal-form", parents=[common], help="reduce a word to delta^m [basis heap]")
    p.add_argument("--word", default="")

    p = sub.add_parser("multiply", parents=[common], help="product of words in the Temperley-Lieb algebra")
    p.add_argument("words", nargs="*", help="factors, left to right")
    p.add_argument("--word", action="append", default=[], dest="more", help="factor (repeatable)")

    p = sub.add_parser("enumerate", parents=[common], help="list heaps up to a size bound")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--p2-only", action="store_true", help="only basis (P2) heaps")

    p = sub.add_parser("verify", parents=[common], help="exhaustive sweep of one property")
    p.add_argument("property", help=f"one of: {', '.join(CHECKS)}, or 'all'")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategies", type=int, default=DEFAULT_STRATEGIES,
                   help="random strategies per heap for confluence")
    p.add_argument("--timing", action="store_true", help="append elapsed time (not byte-stable)")

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram or concurrency graph as DOT")
    p.add_argument("--word", default="")
    p.add_argument("--which", choices=("hasse", "concurrency"), default="hasse")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    status = 0
    try:
        graph = build_graph(args.graph)
        field = Field.parse(args.field)
        if args.command == "analyze":
            lines = cmd_analyze(graph, args.word, field)
        elif args.command == "normal-form":
            lines = cmd_normal_form(graph, args.word)
        elif args.command == "multiply":
            lines = cmd_multiply(graph, list(args.words) + args.more)
        elif args.command == "enumerate":
            lines = cmd_enumerate(graph, args.max_size, args.p2_only)
        elif args.command == "export-dot":
            lines = cmd_export_dot(graph, args.word, args.which)
        else:
            ids = list(CHECKS) if args.property == "all" else [args.property]
            if ids[0] not in CHECKS:
                raise ValueError(f"unknown property {ids[0]!r}; valid ids: {', '.join(CHECKS)}")
            lines = []
            for pid in ids:
                rep = run_check(pid, graph, args.max_size, field, args.seed,
                                args.strategies, graph_spec=args.graph)
                lines.append(rep.line(timing=args.timing))
                if not rep.passed:
                    status = 1
    except ValueError as exc:  # GraphError, HeapError and FieldError included
        print(f"heapalg: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write("".join(line + "\n" for line in lines))
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
