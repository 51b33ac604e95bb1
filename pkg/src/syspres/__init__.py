"""Decide whether a restricted triangular presentation is systolic.

The core objects are :class:`ProductTable` (the presentation), the five
condition checkers, and the link of the identity used as their oracle.
Generators for Garside amalgams, Artin dual presentations and free-group
counterexamples produce tables to feed them.
"""

__version__ = "0.1.0"

from .table import (
    IDENTITY,
    InvalidTableError,
    ParseError,
    ProductTable,
    TableError,
    ValidationReport,
    format_table,
    load_table,
    parse_table,
    rename_table,
    require_valid,
    validate_table,
)
from .conditions import (
    ConditionReport,
    ConditionResult,
    check_conditions_via_orders,
    check_systolic_conditions,
    prefix_orders,
)
from .link import (
    LinkGraph,
    SignedVertex,
    build_link,
    check_six_large,
    classify_diagonal_free_4cycle,
    enumerate_embedded_cycles,
    has_diagonal,
)
from .garside import (
    AmalgamSpec,
    GarsideFactor,
    SimpleElement,
    check_gcd_condition,
    classify_garside,
    garside_table,
    left_gcd,
    monoid_bfs_oracle,
    parse_spec,
    poset_meet_left,
    poset_meet_right,
    right_gcd,
    simple_product,
    simples,
)
from .artin import (
    OrientedLabeledGraph,
    check_four_cycles_not_misdirected,
    check_three_cycles_directed,
    dual_table,
    grading_check,
    parse_graph,
)
from .words import (
    counterexample_realization,
    counterexample_table,
    reduce,
    verify_restricted_triangular_free,
)

__all__ = [
    "AmalgamSpec",
    "build_link",
    "check_conditions_via_orders",
    "check_four_cycles_not_misdirected",
    "check_gcd_condition",
    "check_six_large",
    "check_systolic_conditions",
    "check_three_cycles_directed",
    "classify_diagonal_free_4cycle",
    "classify_garside",
    "ConditionReport",
    "ConditionResult",
    "counterexample_realization",
    "counterexample_table",
    "dual_table",
    "enumerate_embedded_cycles",
    "format_table",
    "garside_table",
    "GarsideFactor",
    "grading_check",
    "has_diagonal",
    "IDENTITY",
    "InvalidTableError",
    "left_gcd",
    "LinkGraph",
    "load_table",
    "monoid_bfs_oracle",
    "OrientedLabeledGraph",
    "parse_graph",
    "parse_spec",
    "parse_table",
    "ParseError",
    "poset_meet_left",
    "poset_meet_right",
    "prefix_orders",
    "ProductTable",
    "reduce",
    "rename_table",
    "require_valid",
    "right_gcd",
    "SignedVertex",
    "simple_product",
    "SimpleElement",
    "simples",
    "TableError",
    "validate_table",
    "ValidationReport",
    "verify_restricted_triangular_free",
]
