from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fam
from lapcert.errors import (
    DomainError,
    FamilyParameterError,
    GraphFormatError,
    LoopError,
    MalformedCharacterError,
    MultiEdgeError,
    PaddingError,
    TruncatedInputError,
    UnsupportedSizeError,
    VertexRangeError,
)
from lapcert.families import FamilySpec, enumerate_graphs, expand_family_range, generate_family
from lapcert.graph import (
    Graph,
    VertexSet,
    boundary_sets,
    connected_components,
    edges_within,
    is_connected,
    subset_stats,
)
from lapcert.io import parse_edge_list, parse_graph6, read_graph6_lines, write_edge_list, write_graph6


# ---- graph6 ----------------------------------------------------------------


def test_graph6_examples():
    k4 = parse_graph6("C~")
    assert k4.n == 4 and k4.m == 6
    assert parse_graph6("C?").m == 0
    p4 = parse_graph6("Ch")
    assert p4.sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert write_graph6(fam("complete:4")) == "C~"
    assert write_graph6(Graph.from_edges(1, [])) == "@"
    assert write_graph6(fam("path:4")) == "Ch"


def test_graph6_header_and_long_form():
    assert parse_graph6(">>graph6<<C~") == fam("complete:4")
    g = fam("cycle:70")
    text = write_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    assert write_graph6(g, header=True) == ">>graph6<<" + text


def test_graph6_errors():
    with pytest.raises(MalformedCharacterError, match="offset 1"):
        parse_graph6("C\x01")
    with pytest.raises(TruncatedInputError):
        parse_graph6("E")
    with pytest.raises(GraphFormatError, match="payload"):
        parse_graph6("C~~")
    # n=3 uses 3 of the 6 payload bits; the low bits are padding
    assert parse_graph6("Bw").m == 3
    with pytest.raises(PaddingError):
        parse_graph6("B~", strict=True)
    assert parse_graph6("B~").m == 3
    with pytest.raises(UnsupportedSizeError):
        parse_graph6("~~??????????")


def test_graph6_matches_networkx(small_corpus):
    for g in small_corpus:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert write_graph6(g) == ref
        assert parse_graph6(ref) == g


def test_read_graph6_lines_skips_blanks():
    got = list(read_graph6_lines(["C~", "", "Ch\n"]))
    assert [k for k, _ in got] == [1, 3]


# ---- edge lists ------------------------------------------------------------


def test_edge_list_examples():
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == fam("complete:3")
    g = parse_edge_list("# two isolated vertices\n2 0\n")
    assert g.n == 2 and g.m == 0
    with pytest.raises(LoopError):
        parse_edge_list("3 1\n0 0")


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(MultiEdgeError) as info:
        parse_edge_list("3 2\n0 1\n1 0\n")
    assert info.value.line == 3
    with pytest.raises(VertexRangeError):
        parse_edge_list("3 1\n0 3")
    with pytest.raises(TruncatedInputError):
        parse_edge_list("3 2\n0 1\n")


def test_edge_list_round_trip(small_corpus):
    for g in small_corpus[::7]:
        assert parse_edge_list(write_edge_list(g)) == g


# ---- families ---------------------------------------------------------------


def test_family_examples():
    assert fam("path:4").sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    octa = fam("complete_multipartite:2,2,2")
    assert octa.m == 12 and octa.is_regular() and octa.degree(0) == 4
    pet = fam("petersen")
    assert (pet.n, pet.m) == (10, 15) and pet.is_regular()
    assert nx.girth(nx.Graph(list(pet.edges))) == 5


def test_family_errors():
    with pytest.raises(FamilyParameterError):
        fam("paley:6")
    with pytest.raises(FamilyParameterError):
        fam("paley:7")
    with pytest.raises(FamilyParameterError):
        fam("random_regular:5,3,0")
    with pytest.raises(FamilyParameterError):
        fam("widget:3")


def test_random_families_are_seeded():
    assert fam("gnp:12,0.4,3") == fam("gnp:12,0.4,3")
    assert fam("gnp:12,0.4,3") != fam("gnp:12,0.4,4")
    g = fam("random_regular:12,5,1")
    assert g.is_regular() and g.degree(0) == 5
    assert fam("random_regular:10,8,2").is_regular()


def test_paley_and_hypercube():
    g = fam("paley:13")
    assert g.is_regular() and g.degree(0) == 6
    q = fam("hypercube:4")
    assert (q.n, q.m) == (16, 32)


def test_expand_family_range():
    specs = expand_family_range("path:4..6")
    assert [str(s) for s in specs] == ["path:4", "path:5", "path:6"]
    assert len(expand_family_range("gnp:5..6,0.5,1..2")) == 4


def test_enumeration_counts():
    assert [len(enumerate_graphs(n, connected=False)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert [len(enumerate_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    for g in enumerate_graphs(5):
        assert is_connected(g)


def test_enumeration_is_isomorphism_free():
    graphs = [nx.Graph(list(g.edges)) for g in enumerate_graphs(5)]
    for i, a in enumerate(graphs):
        for b in graphs[i + 1 :]:
            assert not nx.is_isomorphic(a, b)


# ---- subsets -----------------------------------------------------------------


def test_subset_stats_examples():
    k3 = fam("complete:3")
    assert subset_stats(k3, [0, 1], [1, 2]).e_xy == 3
    assert tuple(subset_stats(k3, [], [])) == (0, 0, 0, 0, 0)
    c4 = fam("cycle:4")
    st4 = subset_stats(c4, [0, 1], [0, 1])
    assert st4.e_xy == 2 and st4.vol_x == 4


def test_boundary_sets_examples():
    nb, plus = boundary_sets(fam("path:4"), [0])
    assert list(nb) == [1] and list(plus) == [2, 3]
    nb, plus = boundary_sets(fam("complete:4"), [0])
    assert list(nb) == [1, 2, 3] and len(plus) == 0
    nb, plus = boundary_sets(fam("petersen"), [0])
    assert (len(nb), len(plus)) == (3, 6)
    with pytest.raises(DomainError):
        boundary_sets(fam("path:4"), [])
    with pytest.raises(DomainError):
        boundary_sets(fam("path:4"), range(4))


def test_components():
    assert len(connected_components(fam("path:4"))) == 1
    assert len(connected_components(Graph.from_edges(2, []))) == 2
    u = fam("complete:3").disjoint_union(fam("complete:2"))
    assert [sorted(c) for c in connected_components(u)] == [[0, 1, 2], [3, 4]]
    assert not is_connected(Graph.from_edges(0, []))


def test_vertex_set_basics():
    s = VertexSet.of(5, [0, 3])
    assert 3 in s and 2 not in s and len(s) == 2
    assert sorted(s.complement()) == [1, 2, 4]
    with pytest.raises(VertexRangeError):
        VertexSet.of(3, [3])


def test_graph_rejects_bad_edges():
    with pytest.raises(LoopError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(MultiEdgeError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    assert Graph.from_edges(3, [(0, 1), (1, 0)], strict=False).m == 1


@st.composite
def graph_and_sets(draw):
    n = draw(st.integers(1, 9))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, edges)
    x = draw(st.integers(0, (1 << n) - 1))
    y = draw(st.integers(0, (1 << n) - 1))
    return g, VertexSet(n, x), VertexSet(n, y)


@settings(max_examples=200, deadline=None)
@given(graph_and_sets())
def test_subset_identities(case):
    g, x, y = case
    a, b = subset_stats(g, x, y), subset_stats(g, y, x)
    assert a.e_xy == b.e_xy
    # ordered-pair count checked by brute force
    assert a.e_xy == sum(1 for u in x for v in y if g.has_edge(u, v))
    rest = x.complement()
    assert subset_stats(g, x, rest).e_xy + 2 * edges_within(g, x) == subset_stats(g, x, x).vol_x
    if 0 < len(x) < g.n:
        nb, plus = boundary_sets(g, x)
        assert len(x) + len(nb) + len(plus) == g.n
        assert (x & nb).mask == 0 and (x & plus).mask == 0 and (nb & plus).mask == 0


@settings(max_examples=100, deadline=None)
@given(graph_and_sets())
def test_graph6_round_trip_property(case):
    g = case[0]
    assert parse_graph6(write_graph6(g)) == g
    assert sum(g.degrees) == 2 * g.m


def test_relabel_and_complement():
    g = fam("path:4")
    h = g.relabel([3, 2, 1, 0])
    assert h == g
    assert g.complement().m == 6 - 3
    assert isinstance(FamilySpec("path", (4,)), FamilySpec)
    assert generate_family(FamilySpec("path", (4,))) == g
