"""Built-in tables and graphs, so every check runs without external files."""

from __future__ import annotations

import random
from typing import Callable

from .artin import OrientedLabeledGraph, dual_table, parse_graph
from .garside import AmalgamSpec, garside_table
from .table import ProductTable, TableError
from .words import counterexample_table

__all__ = [
    "f2xf2_table",
    "gcd_failing_table",
    "GRID_SPECS",
    "ARTIN_GRAPHS",
    "artin_graph",
    "table_names",
    "graph_names",
    "corpus_table",
    "random_valid_table",
]


def f2xf2_table() -> ProductTable:
    """``F_2 x F_2`` on ``a, c`` and ``b, d``: each commuting pair spans a square."""
    gens = ("a", "b", "c", "d", "D1", "D2", "D3", "D4")
    pairs = (("a", "b", "D1"), ("b", "c", "D2"), ("c", "d", "D3"), ("d", "a", "D4"))
    triples = []
    for p, q, delta in pairs:
        triples += [(p, q, delta), (q, p, delta)]
    return ProductTable.from_triples(gens, triples)


def gcd_failing_table() -> ProductTable:
    """``ab`` and ``ac`` share the proper left divisor ``a``."""
    gens = ("a", "b", "c", "ab", "ac", "r", "s", "D")
    triples = (("a", "b", "ab"), ("a", "c", "ac"), ("b", "r", "D"), ("c", "s", "D"))
    return ProductTable.from_triples(gens, triples)


GRID_SPECS: tuple[AmalgamSpec, ...] = tuple(
    AmalgamSpec.of((n, m)) for n in range(1, 6) for m in range(1, 6) if n == 1 or m >= 2
) + (
    AmalgamSpec.of((1, 2), (1, 3)),
    AmalgamSpec.of((2, 3), (3, 2)),
    AmalgamSpec.of((1, 2), (1, 3), (1, 4)),
)

ARTIN_GRAPHS: dict[str, str] = {
    "triangle-333": """\
vertex: v1 v2 v3
edge: v1 v2 label=3 orient=v2
edge: v2 v3 label=3 orient=v3
edge: v3 v1 label=3 orient=v1
""",
    "path-34": """\
vertex: v1 v2 v3
edge: v1 v2 label=3 orient=v2
edge: v2 v3 label=4 orient=v3
""",
    "square-3333": """\
vertex: v1 v2 v3 v4
edge: v1 v2 label=3 orient=v2
edge: v2 v3 label=3 orient=v3
edge: v3 v4 label=3 orient=v4
edge: v4 v1 label=3 orient=v1
""",
    "square-bioriented": """\
vertex: v1 v2 v3 v4
edge: v1 v2 label=2 orient=both
edge: v2 v3 label=3 orient=v3
edge: v3 v4 label=3 orient=v4
edge: v4 v1 label=3 orient=v1
""",
    "star-333": """\
vertex: c l1 l2 l3
edge: c l1 label=3 orient=l1
edge: c l2 label=3 orient=l2
edge: c l3 label=3 orient=l3
""",
}


def artin_graph(name: str) -> OrientedLabeledGraph:
    return parse_graph(ARTIN_GRAPHS[name])


def _builders() -> dict[str, Callable[[], ProductTable]]:
    out: dict[str, Callable[[], ProductTable]] = {}
    for i in range(1, 6):
        out[f"R{i}"] = lambda i=i: counterexample_table(i)
    out["F2xF2"] = f2xf2_table
    out["gcd-fail"] = gcd_failing_table
    for spec in GRID_SPECS:
        out[f"garside:{spec}"] = lambda spec=spec: garside_table(spec)
    for name in ARTIN_GRAPHS:
        out[f"artin:{name}"] = lambda name=name: dual_table(artin_graph(name))
    return out


def table_names() -> list[str]:
    return list(_builders())


def graph_names() -> list[str]:
    return list(ARTIN_GRAPHS)


def corpus_table(name: str) -> ProductTable:
    try:
        build = _builders()[name]
    except KeyError:
        raise KeyError(f"no corpus table named {name!r}") from None
    return build()


def random_valid_table(seed: int, max_generators: int = 12, attempts: int = 60) -> ProductTable:
    """A random table passing validation, reproducible from ``seed``.

    Products are proposed one at a time and kept only when the grown table
    still validates, so closure is never repaired, only respected.
    """
    if max_generators < 1:
        raise ValueError("max_generators must be positive")
    rng = random.Random(seed)
    n = rng.randint(min(3, max_generators), max_generators)
    gens = tuple(f"g{i}" for i in range(1, n + 1))
    products: dict[tuple[str, str], str] = {}
    for _ in range(attempts):
        s, t, u = (rng.choice(gens) for _ in range(3))
        if (s, t) in products:
            continue
        trial = dict(products)
        trial[(s, t)] = u
        try:
            table = ProductTable(gens, trial)
        except TableError:  # pragma: no cover - names are always valid
            continue
        if table.validation.ok:
            products = trial
    return ProductTable(gens, products)
