"""Heaps of pieces, their boundary maps and generalized Temperley-Lieb algebras."""

from ._accel import BACKEND
from .boundary import (
    BoundaryComplex,
    build_complex,
    coker_dim,
    contract,
    image_vertices,
    is_acyclic,
    is_strongly_acyclic,
    kernel_basis,
    ker_dim,
)
from .catalog import build_graph, type_a, type_affine_a, type_d, type_e
from .field import GF, GF2, QQ, Field, FieldError
from .graph import ConcurrencyGraph, GraphError, parse_graph_text
from .heap import (
    Chain,
    Heap,
    HeapError,
    convex_chains,
    heap_from_word,
    linear_extension,
    make_chain,
    subheap,
    superpose,
)
from .laurent import LaurentPoly
from .props import (
    DismantlingStep,
    RegularityReport,
    check_regular,
    dismantle,
    enumerate_heaps,
    has_p2,
    is_dismantlable,
)
from .tl import NormalForm, TLElement, monomial_basis, multiply, reduce, word_normal_form
from .verify import CHECKS, VerificationReport, run_check

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundaryComplex", "CHECKS", "Chain", "ConcurrencyGraph",
    "DismantlingStep", "Field", "FieldError", "GF", "GF2", "GraphError",
    "Heap", "HeapError", "LaurentPoly", "NormalForm", "QQ", "RegularityReport",
    "TLElement", "VerificationReport", "build_complex", "build_graph",
    "check_regular", "coker_dim", "contract", "convex_chains", "dismantle",
    "enumerate_heaps", "has_p2", "heap_from_word", "image_vertices",
    "is_acyclic", "is_dismantlable", "is_strongly_acyclic", "kernel_basis",
    "ker_dim", "linear_extension", "make_chain", "monomial_basis", "multiply",
    "parse_graph_text", "reduce", "run_check", "subheap", "superpose",
    "type_a", "type_affine_a", "type_d", "type_e", "word_normal_form",
]
