"""Hypothesis strategies shared by the unit tests."""

from hypothesis import strategies as st

from heapalg import build_graph

GRAPH_SPECS = ["a:2", "a:3", "a:4", "d:4", "e:6", "aff-a:3", "aff-a:4"]


@st.composite
def graph_and_word(draw, max_len=8, specs=GRAPH_SPECS):
    g = build_graph(draw(st.sampled_from(specs)))
    word = draw(st.lists(st.sampled_from(g.pieces), max_size=max_len))
    return g, tuple(word)


def words_over(g, max_len=8):
    return st.lists(st.sampled_from(g.pieces), max_size=max_len).map(tuple)
