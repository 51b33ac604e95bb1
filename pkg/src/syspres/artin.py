"""Oriented labeled Artin graphs and their dual presentations.

Graph file format::

    vertex: v1
    vertex: v2
    edge: v1 v2 label=3 orient=v2      # o(e) = v2, i(e) = v1
    edge: v2 v3 label=2 orient=both    # bioriented, legal only for label 2

An edge of label ``m >= 3`` from ``i(e) = v_i`` to ``o(e) = v_j`` contributes
``Δ_e`` and ``t_1 .. t_{m-2}`` to the generators and the cycle of products
``x_i x_j = x_j t_1 = t_1 t_2 = .. = t_{m-2} x_i = Δ_e``.  A label 2 edge
contributes only ``Δ_e = x_i x_j = x_j x_i``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from .table import ProductTable

__all__ = [
    "GraphError",
    "ArtinEdge",
    "OrientedLabeledGraph",
    "parse_graph",
    "load_graph",
    "format_graph",
    "OrientationCheck",
    "check_three_cycles_directed",
    "check_four_cycles_not_misdirected",
    "UndirectedTriangleError",
    "MisdirectedCycleWarning",
    "dual_table",
    "dual_weights",
    "grading_check",
    "dual_to_garside_renaming",
    "vertex_symbol",
]

_NAME_RE = re.compile(r"^[^\s^#=]+$")


class GraphError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__((f"line {line}: " if line is not None else "") + message)


@dataclass(frozen=True)
class ArtinEdge:
    """Edge ``{a, b}`` with label ``m`` and target set ``o(e)``."""

    ends: tuple[str, str]
    label: int
    targets: frozenset[str]

    def __post_init__(self) -> None:
        a, b = self.ends
        if a == b:
            raise GraphError(f"loop at {a}")
        if not isinstance(self.label, int) or self.label < 2:
            raise GraphError(f"edge {a} {b}: label must be an integer >= 2")
        targets = frozenset(self.targets)
        if not targets or not targets <= {a, b}:
            raise GraphError(f"edge {a} {b}: targets must be a nonempty subset of the endpoints")
        if (len(targets) == 2) != (self.label == 2):
            raise GraphError(f"edge {a} {b}: bioriented iff label = 2")
        object.__setattr__(self, "targets", targets)

    @property
    def key(self) -> frozenset[str]:
        return frozenset(self.ends)

    @property
    def source(self) -> str:
        """``i(e)`` for a singly oriented edge; the first endpoint otherwise."""
        a, b = self.ends
        return b if self.targets == {a} else a

    @property
    def target(self) -> str:
        a, b = self.ends
        return a if self.targets == {a} else b

    def points_to(self, v: str) -> bool:
        return v in self.targets


@dataclass(frozen=True)
class OrientedLabeledGraph:
    vertices: tuple[str, ...]
    edges: tuple[ArtinEdge, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex")
        for v in vs:
            if not _NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
        seen = set()
        for e in self.edges:
            for v in e.ends:
                if v not in vs:
                    raise GraphError(f"edge uses undeclared vertex {v!r}")
            if e.key in seen:
                raise GraphError(f"parallel edges between {' and '.join(e.ends)}")
            seen.add(e.key)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def order(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_map(self) -> dict[frozenset[str], ArtinEdge]:
        return {e.key: e for e in self.edges}

    @cached_property
    def neighbours(self) -> dict[str, set[str]]:
        out: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = e.ends
            out[a].add(b)
            out[b].add(a)
        return out

    def edge(self, a: str, b: str) -> ArtinEdge | None:
        return self.edge_map.get(frozenset((a, b)))

    @cached_property
    def numbered_edges(self) -> tuple[tuple[int, ArtinEdge], ...]:
        """Edges with 1-based ids, ordered by their endpoint pair under the
        vertex declaration order."""
        def pair(e: ArtinEdge) -> tuple[int, int]:
            return tuple(sorted(self.order[v] for v in e.ends))  # type: ignore[return-value]
        return tuple(enumerate(sorted(self.edges, key=pair), 1))


def parse_graph(text: str) -> OrientedLabeledGraph:
    vertices: dict[str, None] = {}
    edges: list[ArtinEdge] = []
    seen: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphError(f"expected 'directive: ...', got {raw.strip()!r}", lineno)
        head = head.strip()
        if head == "vertex":
            names = rest.split()
            if not names:
                raise GraphError("empty vertex line", lineno)
            for name in names:
                if not _NAME_RE.match(name):
                    raise GraphError(f"invalid vertex name {name!r}", lineno)
                if name in vertices:
                    raise GraphError(f"duplicate vertex {name!r}", lineno)
                vertices[name] = None
        elif head == "edge":
            edges.append(_parse_edge(rest, lineno, vertices, seen))
        else:
            raise GraphError(f"unknown directive {head!r}", lineno)
    return OrientedLabeledGraph(tuple(vertices), tuple(edges))


def _parse_edge(rest: str, lineno: int, vertices: Mapping[str, None], seen: dict) -> ArtinEdge:
    tokens = rest.split()
    ends = [t for t in tokens if "=" not in t]
    opts = dict(t.split("=", 1) for t in tokens if "=" in t)
    if len(ends) != 2 or set(opts) != {"label", "orient"}:
        raise GraphError("expected 'edge: v w label=m orient=v|w|both'", lineno)
    a, b = ends
    for v in ends:
        if v not in vertices:
            raise GraphError(f"undeclared vertex {v!r}", lineno)
    try:
        label = int(opts["label"])
    except ValueError:
        raise GraphError(f"label must be an integer, got {opts['label']!r}", lineno) from None
    orient = opts["orient"]
    if orient == "both":
        targets = {a, b}
    elif orient in (a, b):
        targets = {orient}
    else:
        raise GraphError(f"orient must be {a}, {b} or both", lineno)
    key = frozenset(ends)
    if key in seen:
        raise GraphError(f"parallel edge, first declared on line {seen[key]}", lineno)
    seen[key] = lineno
    try:
        return ArtinEdge((a, b), label, frozenset(targets))
    except GraphError as exc:
        raise GraphError(str(exc), lineno) from None


def load_graph(path: str | Path) -> OrientedLabeledGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(graph: OrientedLabeledGraph) -> str:
    lines = [f"vertex: {v}" for v in graph.vertices]
    for e in graph.edges:
        orient = "both" if len(e.targets) == 2 else next(iter(e.targets))
        lines.append(f"edge: {e.ends[0]} {e.ends[1]} label={e.label} orient={orient}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# orientation hypotheses

@dataclass(frozen=True)
class OrientationCheck:
    passed: bool
    witnesses: tuple[tuple[str, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.passed


def _triangles(graph: OrientedLabeledGraph) -> list[tuple[str, str, str]]:
    nb, order = graph.neighbours, graph.order
    out = []
    for a in graph.vertices:
        for b in sorted(nb[a], key=order.__getitem__):
            if order[b] <= order[a]:
                continue
            for c in sorted(nb[a] & nb[b], key=order.__getitem__):
                if order[c] > order[b]:
                    out.append((a, b, c))
    return out


def check_three_cycles_directed(graph: OrientedLabeledGraph) -> OrientationCheck:
    """Every triangle has each vertex as a target of exactly one of its edges."""
    bad = []
    for tri in _triangles(graph):
        edges = [graph.edge(p, q) for p, q in combinations(tri, 2)]
        if any(sum(e.points_to(v) for e in edges) != 1 for v in tri):
            bad.append(tri)
    return OrientationCheck(not bad, tuple(bad))


def _four_cycles(graph: OrientedLabeledGraph) -> list[tuple[str, str, str, str]]:
    """Embedded 4-cycles, each once, starting at its least vertex."""
    nb, order = graph.neighbours, graph.order
    out = []
    for a in graph.vertices:
        higher = lambda v: order[v] > order[a]  # noqa: E731
        for b in sorted(filter(higher, nb[a]), key=order.__getitem__):
            for d in sorted(filter(higher, nb[a]), key=order.__getitem__):
                if order[d] <= order[b]:
                    continue
                for c in sorted(filter(higher, nb[b] & nb[d]), key=order.__getitem__):
                    if c not in (b, d):
                        out.append((a, b, c, d))
    return out


def _misdirected(graph: OrientedLabeledGraph, cyc: tuple[str, ...]) -> bool:
    a1, a2, a3, a4 = cyc
    return (graph.edge(a1, a2).points_to(a2) and graph.edge(a2, a3).points_to(a2)
            and graph.edge(a3, a4).points_to(a4) and graph.edge(a4, a1).points_to(a4))


def _symmetries(cyc: tuple[str, ...]) -> list[tuple[str, ...]]:
    rots = [cyc[i:] + cyc[:i] for i in range(4)]
    return rots + [tuple(reversed(r)) for r in rots]


def check_four_cycles_not_misdirected(graph: OrientedLabeledGraph) -> OrientationCheck:
    """No embedded 4-cycle has two opposite vertices that are targets of
    both of their cycle edges.  Witnesses are given in matching position."""
    bad = []
    for cyc in _four_cycles(graph):
        for sym in _symmetries(cyc):
            if _misdirected(graph, sym):
                bad.append(sym)
                break
    return OrientationCheck(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# dual presentation

class UndirectedTriangleError(ValueError):
    def __init__(self, witnesses: Iterable[tuple[str, ...]]):
        self.witnesses = tuple(witnesses)
        shown = "; ".join("(" + " ".join(w) + ")" for w in self.witnesses)
        super().__init__(f"dual presentation is not restricted triangular: undirected 3-cycle {shown}")


class MisdirectedCycleWarning(UserWarning):
    pass


def vertex_symbol(v: str) -> str:
    return f"x_{v}"


def dual_table(graph: OrientedLabeledGraph) -> ProductTable:
    """Product table of the dual presentation.

    Refuses graphs with an undirected triangle; a misdirected 4-cycle only
    emits :class:`MisdirectedCycleWarning`.
    """
    tri = check_three_cycles_directed(graph)
    if not tri:
        raise UndirectedTriangleError(tri.witnesses)
    four = check_four_cycles_not_misdirected(graph)
    if not four:
        warnings.warn(f"misdirected 4-cycle {' '.join(four.witnesses[0])}; "
                      "the dual table may fail to be systolic", MisdirectedCycleWarning, stacklevel=2)

    gens = [vertex_symbol(v) for v in graph.vertices]
    triples = []
    for eid, e in graph.numbered_edges:
        delta = f"D_{eid}"
        gens.append(delta)
        if e.label == 2:
            xa, xb = (vertex_symbol(v) for v in e.ends)
            triples += [(xa, xb, delta), (xb, xa, delta)]
            continue
        xi, xj = vertex_symbol(e.source), vertex_symbol(e.target)
        ts = [f"t_{eid}_{k}" for k in range(1, e.label - 1)]
        gens.extend(ts)
        chain = [xi, xj, *ts, xi]
        triples += [(p, q, delta) for p, q in zip(chain, chain[1:])]
    return ProductTable.from_triples(gens, triples)


def dual_weights(table: ProductTable) -> dict[str, int]:
    """Grading of a dual table: ``x`` and ``t`` symbols weigh 1, ``Δ_e`` weighs 2."""
    return {g: 2 if g.startswith("D_") else 1 for g in table.generators}


def grading_check(table: ProductTable, weights: Mapping[str, int]) -> bool:
    """Whether weights add along every defined product."""
    missing = [g for g in table.generators if g not in weights]
    if missing:
        raise KeyError(f"no weight for {', '.join(missing)}")
    return all(weights[s] + weights[t] == weights[u] for (s, t), u in table.products.items())


def dual_to_garside_renaming(graph: OrientedLabeledGraph) -> dict[str, str]:
    """Renaming that carries the dual table of a single edge of label ``n``
    onto ``garside_table(n x 2)``.

    ``i(e) -> f1_x1``, ``o(e) -> f1_x2``, ``t_k -> f1_x{k+2}``, ``Δ -> D``.
    """
    if len(graph.edges) != 1:
        raise GraphError("renaming is defined for single-edge graphs")
    (eid, e), = graph.numbered_edges
    out = {vertex_symbol(e.source): "f1_x1", vertex_symbol(e.target): "f1_x2", f"D_{eid}": "D"}
    for k in range(1, e.label - 1):
        out[f"t_{eid}_{k}"] = f"f1_x{k + 2}"
    return out
