"""Link of the identity vertex in the Cayley flag complex.

The link ``L`` has one vertex per signed generator, ``+s`` for ``s`` and
``-s`` for ``s^-1``.  A directed edge ``g -> g*a`` labelled ``a`` exists
whenever ``g*a`` is again a signed generator.  Each table entry
``s * t = u`` accounts for exactly three edges::

    +s -> +u   label t
    -s -> +t   label u
    -u -> -t   label s

and nothing else can produce an edge of a restricted triangular
presentation.  Everything here is brute force on the undirected graph
underlying ``L``; it serves as the oracle for :mod:`syspres.conditions`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .conditions import witness_cap
from .table import ProductTable, require_valid

__all__ = [
    "SignedVertex",
    "LinkGraph",
    "EmbeddedCycle",
    "SixLargeResult",
    "build_link",
    "enumerate_embedded_cycles",
    "has_diagonal",
    "check_six_large",
    "classify_diagonal_free_4cycle",
    "cycle_from_witness",
    "positive_to_negative_edges",
    "format_link",
    "format_dot",
]


class SignedVertex(NamedTuple):
    generator: str
    positive: bool

    def __str__(self) -> str:
        return ("+" if self.positive else "-") + self.generator

    @classmethod
    def parse(cls, text: str) -> "SignedVertex":
        if len(text) < 2 or text[0] not in "+-":
            raise ValueError(f"bad signed vertex {text!r}")
        return cls(text[1:], text[0] == "+")


def pos(g: str) -> SignedVertex:
    return SignedVertex(g, True)


def neg(g: str) -> SignedVertex:
    return SignedVertex(g, False)


@dataclass(frozen=True, eq=False)
class LinkGraph:
    """Directed, edge-labelled simple graph on signed generators.

    ``vertices`` is ordered: positives first, then negatives, each in
    generator order.  That order is the canonical vertex order.
    """

    vertices: tuple[SignedVertex, ...]
    edges: Mapping[tuple[SignedVertex, SignedVertex], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        known = set(verts)
        if len(known) != len(verts):
            raise ValueError("duplicate link vertices")
        edges = {}
        for (a, b), label in dict(self.edges).items():
            if a not in known or b not in known:
                raise ValueError(f"edge {a}->{b} uses an unknown vertex")
            if a == b:
                raise ValueError(f"loop at {a}")
            if (b, a) in edges:
                raise ValueError(f"antiparallel edges between {a} and {b}")
            edges[(a, b)] = label
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, vertices: Iterable[SignedVertex | str],
                   edges: Iterable[tuple[SignedVertex | str, SignedVertex | str, str]]) -> "LinkGraph":
        conv = lambda v: v if isinstance(v, SignedVertex) else SignedVertex.parse(v)  # noqa: E731
        return cls(tuple(conv(v) for v in vertices), {(conv(a), conv(b)): lab for a, b, lab in edges})

    @cached_property
    def order(self) -> dict[SignedVertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> dict[SignedVertex, frozenset[SignedVertex]]:
        nb: dict[SignedVertex, set[SignedVertex]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}

    def adjacent(self, a: SignedVertex, b: SignedVertex) -> bool:
        return b in self.neighbours[a]

    def points_to(self, a: SignedVertex, b: SignedVertex) -> bool:
        return (a, b) in self.edges

    def sorted_edges(self) -> list[tuple[SignedVertex, SignedVertex, str]]:
        o = self.order
        return [(a, b, lab) for (a, b), lab in sorted(self.edges.items(), key=lambda kv: (o[kv[0][0]], o[kv[0][1]]))]


@dataclass(frozen=True)
class EmbeddedCycle:
    """A 4- or 5-cycle in canonical form (least rotation/reflection)."""

    vertices: tuple[SignedVertex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return "(" + " ".join(str(v) for v in self.vertices) + ")"


def canonical_cycle(link: LinkGraph, cycle: Iterable[SignedVertex]) -> EmbeddedCycle:
    seq = list(cycle)
    o = link.order
    n = len(seq)
    candidates = []
    for start in range(n):
        rot = seq[start:] + seq[:start]
        candidates.append(rot)
        candidates.append([rot[0]] + rot[:0:-1])
    best = min(candidates, key=lambda c: [o[v] for v in c])
    return EmbeddedCycle(tuple(best))


def build_link(table: ProductTable) -> LinkGraph:
    """Link of the identity for a validated table."""
    require_valid(table)
    verts = tuple(pos(g) for g in table.generators) + tuple(neg(g) for g in table.generators)
    edges: dict[tuple[SignedVertex, SignedVertex], str] = {}
    for (s, t), u in table.products.items():
        edges[(pos(s), pos(u))] = t
        edges[(neg(s), pos(t))] = u
        edges[(neg(u), neg(t))] = s
    return LinkGraph(verts, edges)


def enumerate_embedded_cycles(link: LinkGraph, length: int) -> list[EmbeddedCycle]:
    """All embedded cycles of the given length (4 or 5), canonical and sorted.

    Depth-first from each start vertex through vertices later in the
    canonical order, so every cycle is met only from its least vertex.
    """
    if length not in (4, 5):
        raise ValueError(f"cycle length must be 4 or 5, got {length}")
    o = link.order
    nb = {v: sorted(link.neighbours[v], key=o.__getitem__) for v in link.vertices}
    found: set[EmbeddedCycle] = set()

    for start in link.vertices:
        s0 = o[start]
        path = [start]
        on_path = {start}

        def extend() -> None:
            last = path[-1]
            if len(path) == length:
                # each cycle is seen in both directions; keep one
                if start in link.neighbours[last] and o[path[1]] < o[last]:
                    found.add(canonical_cycle(link, path))
                return
            for nxt in nb[last]:
                if o[nxt] > s0 and nxt not in on_path:
                    path.append(nxt)
                    on_path.add(nxt)
                    extend()
                    path.pop()
                    on_path.discard(nxt)

        extend()
    return sorted(found, key=lambda c: [o[v] for v in c.vertices])


def _require_embedded(link: LinkGraph, cycle: EmbeddedCycle) -> None:
    verts = cycle.vertices
    if len(set(verts)) != len(verts) or len(verts) < 3:
        raise ValueError(f"{cycle} is not an embedded cycle")
    for v in verts:
        if v not in link.order:
            raise ValueError(f"{cycle}: vertex {v} not in link")
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if not link.adjacent(a, b):
            raise ValueError(f"{cycle} is not embedded in the link: {a} and {b} not adjacent")


def has_diagonal(link: LinkGraph, cycle: EmbeddedCycle) -> bool:
    """True iff an edge, in either direction, joins two nonconsecutive vertices."""
    _require_embedded(link, cycle)
    verts = cycle.vertices
    n = len(verts)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if link.adjacent(verts[i], verts[j]):
                return True
    return False


@dataclass(frozen=True)
class SixLargeResult:
    passed: bool
    diagonal_free: tuple[EmbeddedCycle, ...]
    truncated: bool
    cycles4: int
    cycles5: int
    diagonal_free_count: int

    def __bool__(self) -> bool:
        return self.passed


def check_six_large(link: LinkGraph) -> SixLargeResult:
    """6-largeness: every embedded 4- and 5-cycle has a diagonal."""
    c4 = enumerate_embedded_cycles(link, 4)
    c5 = enumerate_embedded_cycles(link, 5)
    bad = [c for c in c4 + c5 if not has_diagonal(link, c)]
    cap = witness_cap()
    return SixLargeResult(
        passed=not bad,
        diagonal_free=tuple(bad[:cap]),
        truncated=len(bad) > cap,
        cycles4=len(c4),
        cycles5=len(c5),
        diagonal_free_count=len(bad),
    )


def _degrees(link: LinkGraph, verts: tuple[SignedVertex, ...]) -> list[tuple[int, int]]:
    """(in, out) degree of each cycle vertex along the cycle edges."""
    n = len(verts)
    deg = [[0, 0] for _ in verts]
    for i in range(n):
        j = (i + 1) % n
        if link.points_to(verts[i], verts[j]):
            deg[i][1] += 1
            deg[j][0] += 1
        else:
            deg[i][0] += 1
            deg[j][1] += 1
    return [tuple(d) for d in deg]


SOURCE, SINK, THROUGH = (0, 2), (2, 0), (1, 1)


def _pattern_matches(signs: list[bool], deg: list[tuple[int, int]]) -> list[int]:
    npos = sum(signs)
    types = []
    alternating = all(d in (SOURCE, SINK) for d in deg)
    if npos == 4 and alternating:
        types.append(1)
    if npos == 0 and alternating:
        types.append(2)
    for i in range(4):
        opp = (i + 2) % 4
        sides = [(i + 1) % 4, (i + 3) % 4]
        through = all(deg[k] == THROUGH for k in sides)
        if npos == 3 and not signs[i] and deg[i] == SOURCE and deg[opp] == SINK and through:
            types.append(3)
        if npos == 1 and signs[i] and deg[i] == SINK and deg[opp] == SOURCE and through:
            types.append(4)
    if npos == 2 and signs[0] == signs[2] and signs[1] == signs[3]:
        if all(deg[k] == (SINK if signs[k] else SOURCE) for k in range(4)):
            types.append(5)
    return types


def classify_diagonal_free_4cycle(link: LinkGraph, cycle: EmbeddedCycle) -> int:
    """Which of the five admissible diagonal-free 4-cycle patterns this is.

    1. four positive vertices, edges alternating in and out;
    2. four negative vertices, alternating;
    3. one negative vertex, a source, facing a positive sink;
    4. one positive vertex, a sink, facing a negative source;
    5. two nonadjacent negative vertices, both sources.
    """
    if len(cycle) != 4:
        raise ValueError("only 4-cycles are classified")
    if has_diagonal(link, cycle):
        raise ValueError(f"{cycle} has a diagonal")
    verts = cycle.vertices
    matches = _pattern_matches([v.positive for v in verts], _degrees(link, verts))
    if len(matches) != 1:
        raise ValueError(f"{cycle}: table violates restricted-triangular consequences "
                         f"(pattern matches {matches})")
    return matches[0]


def cycle_from_witness(table: ProductTable, condition: int, witness: tuple[str, ...]) -> tuple[SignedVertex, ...]:
    """Cycle ``(u, v, w, x)`` of the link spelled by a direct-checker witness."""
    p = table.products
    if condition == 1:
        u, w, a, _b, _c, d = witness
        return pos(u), pos(p[(u, a)]), pos(w), pos(p[(u, d)])
    if condition == 2:
        v, x, a, b, _c, _d = witness
        return neg(p[(a, v)]), neg(v), neg(p[(b, v)]), neg(x)
    if condition == 3:
        u, v, x, b, _c = witness
        return neg(u), pos(v), pos(p[(v, b)]), pos(x)
    if condition == 4:
        v, w, x, a, _d = witness
        return neg(p[(a, v)]), neg(v), pos(w), neg(x)
    if condition == 5:
        u, v, w, x = witness
        return neg(u), pos(v), neg(w), pos(x)
    raise ValueError(f"no condition {condition}")


def positive_to_negative_edges(link: LinkGraph) -> list[tuple[SignedVertex, SignedVertex]]:
    return [(a, b) for (a, b) in link.edges if a.positive and not b.positive]


def format_link(link: LinkGraph) -> str:
    lines = [f"vertex: {v}" for v in link.vertices]
    lines += [f"edge: {a} {b} label={lab}" for a, b, lab in link.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_dot(link: LinkGraph, name: str = "link") -> str:
    lines = [f'digraph "{name}" {{']
    for v in link.vertices:
        shape = "circle" if v.positive else "box"
        lines.append(f'  "{v}" [shape={shape}];')
    for a, b, lab in link.sorted_edges():
        lines.append(f'  "{a}" -> "{b}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
