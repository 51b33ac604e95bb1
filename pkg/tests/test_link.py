import pytest

from syspres.conditions import check_systolic_conditions
from syspres.corpus import corpus_table, f2xf2_table, random_valid_table, table_names
from syspres.garside import AmalgamSpec, garside_table
from syspres.link import (
    LinkGraph,
    build_link,
    canonical_cycle,
    check_six_large,
    classify_diagonal_free_4cycle,
    cycle_from_witness,
    enumerate_embedded_cycles,
    format_dot,
    format_link,
    has_diagonal,
    neg,
    pos,
    positive_to_negative_edges,
)
from syspres.table import ProductTable
from syspres.words import counterexample_table


def g(n, m):
    return garside_table(AmalgamSpec.of((n, m)))


def test_z2_link_is_a_hexagon():
    link = build_link(g(2, 2))
    assert len(link.vertices) == 6 and len(link.edges) == 6
    assert all(len(nb) == 2 for nb in link.neighbours.values())
    assert enumerate_embedded_cycles(link, 4) == []
    assert enumerate_embedded_cycles(link, 5) == []
    assert check_six_large(link).passed


def test_three_edge_rule():
    link = build_link(ProductTable.from_triples("s t u".split(), [("s", "t", "u")]))
    assert link.sorted_edges() == [
        (pos("s"), pos("u"), "t"),
        (neg("s"), pos("t"), "u"),
        (neg("u"), neg("t"), "s"),
    ]


def test_isolated_generator():
    link = build_link(ProductTable(("a",)))
    assert len(link.vertices) == 2 and not link.edges


def test_g23_counts():
    link = build_link(g(2, 3))
    assert (len(link.vertices), len(link.edges)) == (10, 18)


def test_k4_has_three_four_cycles_all_with_diagonals():
    verts = ["+a", "+b", "+c", "+d"]
    edges = [(p, q, "l") for i, p in enumerate(verts) for q in verts[i + 1:]]
    link = LinkGraph.from_edges(verts, edges)
    cycles = enumerate_embedded_cycles(link, 4)
    assert len(cycles) == 3
    assert all(has_diagonal(link, c) for c in cycles)
    with pytest.raises(ValueError):
        enumerate_embedded_cycles(link, 6)


def test_has_diagonal_rejects_non_cycles():
    link = build_link(g(2, 2))
    bogus = canonical_cycle(link, [pos("f1_x1"), pos("f1_x2"), neg("f1_x1"), neg("f1_x2")])
    with pytest.raises(ValueError):
        has_diagonal(link, bogus)


@pytest.mark.parametrize("i, cycle", [
    (1, "(+u +v +w +x)"),
    (2, "(-u -v -w -x)"),
    (3, "(+v +w +x -u)"),
    (4, "(+w -v -u -x)"),
    (5, "(+u -v +w -x)"),
])
def test_counterexample_links(i, cycle):
    t = counterexample_table(i)
    link = build_link(t)
    six = check_six_large(link)
    assert not six.passed
    assert [str(c) for c in six.diagonal_free] == [cycle]
    assert classify_diagonal_free_4cycle(link, six.diagonal_free[0]) == i
    # every witness of the direct checker spells out that same cycle
    for w in check_systolic_conditions(t)[i].witnesses:
        c = canonical_cycle(link, cycle_from_witness(t, i, w))
        assert str(c) == cycle


def test_f2xf2_witness_cycles_are_type_five():
    t = f2xf2_table()
    link = build_link(t)
    for w in check_systolic_conditions(t)[5].witnesses:
        c = canonical_cycle(link, cycle_from_witness(t, 5, w))
        assert not has_diagonal(link, c)
        assert classify_diagonal_free_4cycle(link, c) == 5
    assert sorted(str(c) for c in check_six_large(link).diagonal_free) == \
        ["(+a -b +c -d)", "(+b -a +d -c)"]


@pytest.mark.parametrize("name", table_names())
def test_corpus_link_structure(name):
    t = corpus_table(name)
    link = build_link(t)
    assert len(link.edges) == 3 * len(t.products)
    assert positive_to_negative_edges(link) == []
    assert all(has_diagonal(link, c) for c in enumerate_embedded_cycles(link, 5))


def test_classifier_rejects_cycles_with_diagonals():
    link = build_link(g(3, 3))
    cyc = next(c for c in enumerate_embedded_cycles(link, 4))
    with pytest.raises(ValueError):
        classify_diagonal_free_4cycle(link, cyc)


def test_text_dumps():
    link = build_link(ProductTable.from_triples("s t u".split(), [("s", "t", "u")]))
    assert format_link(link).splitlines()[-1] == "edge: -u -t label=s"
    dot = format_dot(link)
    assert dot.startswith('digraph "link" {') and '"+s" -> "+u" [label="t"];' in dot


@pytest.mark.parametrize("seed", range(0, 200, 7))
def test_diagonal_free_cycles_match_networkx(seed):
    nx = pytest.importorskip("networkx")
    link = build_link(random_valid_table(seed))
    graph = nx.Graph()
    graph.add_nodes_from(link.vertices)
    graph.add_edges_from(link.edges)
    theirs = {frozenset(c) for c in nx.chordless_cycles(graph, length_bound=5) if len(c) >= 4}
    ours = {frozenset(c.vertices) for c in check_six_large(link).diagonal_free}
    assert ours == theirs
