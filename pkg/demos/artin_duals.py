"""Dual presentations of Artin groups from oriented labelled graphs."""

import warnings

from syspres.artin import (
    check_four_cycles_not_misdirected,
    check_three_cycles_directed,
    dual_table,
    parse_graph,
)
from syspres.conditions import check_systolic_conditions
from syspres.corpus import ARTIN_GRAPHS, artin_graph
from syspres.table import format_table

# a single edge labelled 4: the dual table is a 4-cycle of products onto D_1
edge = parse_graph("vertex: s\nvertex: t\nedge: s t label=4 orient=t\n")
print(format_table(dual_table(edge)))

for name in ARTIN_GRAPHS:
    g = artin_graph(name)
    t = dual_table(g)
    print(f"{name:<18} |S|={len(t):<3} systolic={check_systolic_conditions(t).overall}")

# two sinks facing each other across a square
square = parse_graph("""
vertex: a1
vertex: a2
vertex: a3
vertex: a4
edge: a1 a2 label=3 orient=a2
edge: a2 a3 label=3 orient=a2
edge: a3 a4 label=3 orient=a4
edge: a4 a1 label=3 orient=a4
""")
print("\nmisdirected witnesses:", check_four_cycles_not_misdirected(square).witnesses)
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    t = dual_table(square)
print("warning:", caught[0].message)
print("failing conditions:", check_systolic_conditions(t).failed)

# a bioriented edge inside a triangle makes the dual presentation non-triangular
bad = parse_graph("vertex: a\nvertex: b\nvertex: c\n"
                  "edge: a b label=2 orient=both\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n")
print("\nundirected triangles:", check_three_cycles_directed(bad).witnesses)
