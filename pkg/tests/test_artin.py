import warnings

import pytest

from syspres.artin import (
    GraphError,
    MisdirectedCycleWarning,
    UndirectedTriangleError,
    check_four_cycles_not_misdirected,
    check_three_cycles_directed,
    dual_table,
    dual_to_garside_renaming,
    dual_weights,
    format_graph,
    grading_check,
    parse_graph,
)
from syspres.conditions import check_systolic_conditions
from syspres.corpus import ARTIN_GRAPHS, artin_graph
from syspres.table import ProductTable


def edge_graph(label, orient="v2"):
    return parse_graph(f"vertex: v1\nvertex: v2\nedge: v1 v2 label={label} orient={orient}\n")


def test_single_edge_label_three():
    t = dual_table(edge_graph(3))
    assert t.generators == ("x_v1", "x_v2", "D_1", "t_1_1")
    assert t.products == {("x_v1", "x_v2"): "D_1", ("x_v2", "t_1_1"): "D_1", ("t_1_1", "x_v1"): "D_1"}


def test_single_edge_orientation_is_respected():
    t = dual_table(edge_graph(3, orient="v1"))
    assert t.products == {("x_v2", "x_v1"): "D_1", ("x_v1", "t_1_1"): "D_1", ("t_1_1", "x_v2"): "D_1"}


def test_single_edge_label_two():
    t = dual_table(edge_graph(2, orient="both"))
    assert t.generators == ("x_v1", "x_v2", "D_1")
    assert t.products == {("x_v1", "x_v2"): "D_1", ("x_v2", "x_v1"): "D_1"}


def test_directed_triangle():
    t = dual_table(artin_graph("triangle-333"))
    assert (len(t.generators), len(t.products)) == (9, 9)
    assert t.validation.ok
    assert check_systolic_conditions(t).overall


@pytest.mark.parametrize("name", list(ARTIN_GRAPHS))
def test_symbol_count_and_grading(name):
    g = artin_graph(name)
    t = dual_table(g)
    assert len(t.generators) == len(g.vertices) + sum(e.label - 1 for e in g.edges)
    assert grading_check(t, dual_weights(t))
    # products land only on edge elements
    assert all(u.startswith("D_") for u in t.products.values())


def test_grading_check():
    t = ProductTable.from_triples("a b c".split(), [("a", "b", "c")])
    assert not grading_check(t, {"a": 1, "b": 1, "c": 1})
    assert grading_check(t, {"a": 1, "b": 1, "c": 2})
    with pytest.raises(KeyError):
        grading_check(t, {"a": 1})


def test_triangle_with_bioriented_edge_is_refused():
    g = parse_graph("""
    vertex: a
    vertex: b
    vertex: c
    edge: a b label=2 orient=both
    edge: b c label=3 orient=c
    edge: c a label=3 orient=a
    """)
    check = check_three_cycles_directed(g)
    assert not check.passed and check.witnesses == (("a", "b", "c"),)
    with pytest.raises(UndirectedTriangleError):
        dual_table(g)


def test_triangle_free_graph_is_vacuously_directed():
    assert check_three_cycles_directed(artin_graph("square-3333")).passed
    assert check_four_cycles_not_misdirected(artin_graph("path-34")).passed


MISDIRECTED = """
vertex: a1
vertex: a2
vertex: a3
vertex: a4
edge: a1 a2 label=3 orient=a2
edge: a2 a3 label=3 orient=a2
edge: a3 a4 label=3 orient=a4
edge: a4 a1 label=3 orient=a4
"""


def test_misdirected_square():
    g = parse_graph(MISDIRECTED)
    check = check_four_cycles_not_misdirected(g)
    assert not check.passed
    assert check.witnesses == (("a1", "a2", "a3", "a4"),)
    assert check_four_cycles_not_misdirected(artin_graph("square-3333")).passed
    assert check_four_cycles_not_misdirected(artin_graph("square-bioriented")).passed


def test_misdirected_square_only_warns():
    with pytest.warns(MisdirectedCycleWarning):
        t = dual_table(parse_graph(MISDIRECTED))
    assert t.validation.ok


def test_misdirection_found_in_every_position():
    # relabel the vertices so the pattern starts elsewhere on the cycle
    text = MISDIRECTED
    for old, new in [("a1", "q3"), ("a2", "q4"), ("a3", "q1"), ("a4", "q2")]:
        text = text.replace(old, new)
    assert not check_four_cycles_not_misdirected(parse_graph(text)).passed


@pytest.mark.parametrize("text, line", [
    ("vertex: a\nvertex: b\nedge: a b label=3 orient=both\n", 3),
    ("vertex: a\nvertex: b\nedge: a b label=2 orient=a\n", 3),
    ("vertex: a\nvertex: b\nedge: a b label=1 orient=b\n", 3),
    ("vertex: a\nedge: a b label=3 orient=b\n", 2),
    ("vertex: a\nvertex: b\nedge: a b label=3 orient=b\nedge: b a label=3 orient=a\n", 4),
    ("vertex: a\nedge: a a label=3 orient=a\n", 2),
    ("vertex: a\nvertex: b\nedge: a b label=x orient=b\n", 3),
    ("vertex: a\nvertex: b\nedge: a b orient=b\n", 3),
    ("vertex: a\nvertex: a\n", 2),
    ("node: a\n", 1),
])
def test_graph_parse_errors(text, line):
    with pytest.raises(GraphError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_graph_format_roundtrip():
    g = artin_graph("square-bioriented")
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("n", range(2, 9))
def test_renaming_onto_garside(n):
    from syspres.garside import AmalgamSpec, garside_table
    from syspres.table import rename_table

    g = edge_graph(n, "both" if n == 2 else "v2")
    renamed = rename_table(dual_table(g), dual_to_garside_renaming(g))
    assert renamed.same_structure(garside_table(AmalgamSpec.of((n, 2))))


def test_no_warning_on_clean_graph():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        dual_table(artin_graph("square-bioriented"))
