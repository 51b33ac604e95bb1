"""The five diagonal conditions deciding systolicity of a restricted
triangular presentation.

Each condition describes one family of 4-cycles in the link of the
identity (see :mod:`syspres.link`).  A tuple satisfying the hypothesis of
condition ``k`` spells out such a 4-cycle; the condition passes when every
such cycle has a diagonal.  A 4-cycle has two possible diagonals and each
can point either way, so the checkers test all four ways a diagonal can
exist; this is what makes the verdicts agree with the brute-force link
computation.

Two independent checkers are provided:

* :func:`check_systolic_conditions` works on the generator/edge-label tuples
  and evaluates memberships through the product indexes;
* :func:`check_conditions_via_orders` works on the vertex quadruples only,
  through the left and right prefix orders of ``S ∪ {e}``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from .table import IDENTITY, ProductTable, require_valid

__all__ = [
    "DEFAULT_WITNESS_CAP",
    "witness_cap",
    "ConditionResult",
    "ConditionReport",
    "check_systolic_conditions",
    "check_conditions_via_orders",
    "PrefixOrders",
    "prefix_orders",
    "WITNESS_FIELDS",
]

DEFAULT_WITNESS_CAP = 100

# Variable names of the witness tuples reported by the direct checker.
WITNESS_FIELDS = {
    1: ("u", "w", "a", "b", "c", "d"),
    2: ("v", "x", "a", "b", "c", "d"),
    3: ("u", "v", "x", "b", "c"),
    4: ("v", "w", "x", "a", "d"),
    5: ("u", "v", "w", "x"),
}


def witness_cap() -> int:
    """Witness cap per condition; ``SYSPRES_WITNESS_CAP`` overrides."""
    raw = os.environ.get("SYSPRES_WITNESS_CAP")
    if raw is None:
        return DEFAULT_WITNESS_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SYSPRES_WITNESS_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError("SYSPRES_WITNESS_CAP must be non-negative")
    return cap


@dataclass(frozen=True)
class ConditionResult:
    number: int
    passed: bool
    witnesses: tuple[tuple[str, ...], ...] = ()
    truncated: bool = False
    count: int = 0  # total witnesses before truncation


@dataclass(frozen=True)
class ConditionReport:
    results: tuple[ConditionResult, ...]
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> tuple[int, ...]:
        return tuple(r.number for r in self.results if not r.passed)

    @property
    def verdicts(self) -> tuple[bool, ...]:
        return tuple(r.passed for r in self.results)

    def __getitem__(self, number: int) -> ConditionResult:
        return self.results[number - 1]


def _finish(table: ProductTable, number: int, found: Iterable[tuple[str, ...]], cap: int) -> ConditionResult:
    witnesses = sorted(set(found), key=lambda w: table.key(*w))
    return ConditionResult(
        number=number,
        passed=not witnesses,
        witnesses=tuple(witnesses[:cap]),
        truncated=len(witnesses) > cap,
        count=len(witnesses),
    )


# ---------------------------------------------------------------------------
# direct checker

def check_systolic_conditions(table: ProductTable) -> ConditionReport:
    """Decide the five systolicity conditions on a validated table.

    Hypotheses carry only these distinctness constraints:
    ``u != w, a != d`` (1), ``v != x, a != b`` (2), ``v != x`` (3, 4),
    ``v != x, u != w`` (5).  A hypothesis tuple is a witness when none of the
    four candidate diagonals of its cycle exists.

    Witness tuples are ``(u, w, a, b, c, d)``, ``(v, x, a, b, c, d)``,
    ``(u, v, x, b, c)``, ``(v, w, x, a, d)`` and ``(u, v, w, x)``, sorted
    lexicographically under the generator order.
    """
    require_valid(table)
    cap = witness_cap()
    checks = (_cond1, _cond2, _cond3, _cond4, _cond5)
    return ConditionReport(tuple(_finish(table, k, f(table), cap) for k, f in enumerate(checks, 1)))


def _ordered(table: ProductTable, items: Iterable[str]) -> list[str]:
    return sorted(items, key=table.index.__getitem__)


def _cond1(table: ProductTable):
    # u*a = w*b = v, u*d = w*c = x; all four vertices positive.
    up = table.left_upper
    gens = table.generators
    for u in gens:
        for w in gens:
            if u == w:
                continue
            common = _ordered(table, up[u].keys() & up[w].keys())
            if len(common) < 2:
                continue
            if w in up[u] or u in up[w]:
                continue
            for v in common:
                for x in common:
                    if v == x or x in up[v] or v in up[x]:
                        continue
                    yield (u, w, up[u][v], up[w][v], up[w][x], up[u][x])


def _cond2(table: ProductTable):
    # a*v = d*x = u, b*v = c*x = w; all four vertices negative.
    up = table.right_upper
    gens = table.generators
    for v in gens:
        for x in gens:
            if v == x or x in up[v] or v in up[x]:
                continue
            common = _ordered(table, up[v].keys() & up[x].keys())
            for u in common:
                for w in common:
                    if u == w or w in up[u] or u in up[w]:
                        continue
                    yield (v, x, up[v][u], up[v][w], up[x][w], up[x][u])


def _cond3(table: ProductTable):
    # u*v, u*x in S and v*b = x*c = w; vertices u^-1, v, w, x.
    left = table.by_left
    up = table.left_upper
    for u in table.generators:
        dom = _ordered(table, left[u])
        for v in dom:
            for x in dom:
                if v == x or x in up[v] or v in up[x]:
                    continue
                for w in _ordered(table, up[v].keys() & up[x].keys()):
                    if w in left[u]:
                        continue
                    yield (u, v, x, up[v][w], up[x][w])


def _cond4(table: ProductTable):
    # v*w, x*w in S and d*x = a*v = u; vertices u^-1, v^-1, w, x^-1.
    left = table.by_left
    right = table.by_right
    rup = table.right_upper
    for w in table.generators:
        dom = _ordered(table, right[w])
        for v in dom:
            for x in dom:
                if v == x or x in rup[v] or v in rup[x]:
                    continue
                for u in _ordered(table, rup[v].keys() & rup[x].keys()):
                    if w in left[u]:
                        continue
                    yield (v, w, x, rup[v][u], rup[x][u])


def _cond5(table: ProductTable):
    # u*v, u*x, w*v, w*x in S; vertices u^-1, v, w^-1, x.
    left = table.by_left
    up = table.left_upper
    rup = table.right_upper
    gens = table.generators
    for u in gens:
        for w in gens:
            if u == w or w in rup[u] or u in rup[w]:
                continue
            common = _ordered(table, left[u].keys() & left[w].keys())
            for v in common:
                for x in common:
                    if v == x or x in up[v] or v in up[x]:
                        continue
                    yield (u, v, w, x)


# ---------------------------------------------------------------------------
# order-theoretic checker

@dataclass(frozen=True)
class PrefixOrders:
    """The relations ``<=_L`` and ``<=_R`` on ``S ∪ {e}`` as sets of pairs."""

    elements: tuple[str, ...]
    left: frozenset[tuple[str, str]]
    right: frozenset[tuple[str, str]]

    def le_left(self, a: str, b: str) -> bool:
        return (a, b) in self.left

    def le_right(self, a: str, b: str) -> bool:
        return (a, b) in self.right

    def violations(self) -> list[str]:
        """Antisymmetry and transitivity failures, as readable messages."""
        out = []
        for name, rel in (("<=_L", self.left), ("<=_R", self.right)):
            succ: dict[str, set[str]] = {a: set() for a in self.elements}
            for a, b in rel:
                succ[a].add(b)
            for a in self.elements:
                if (a, a) not in rel:
                    out.append(f"{name} not reflexive at {a}")
            for a, b in sorted(rel):
                if a != b and (b, a) in rel:
                    if a < b:
                        out.append(f"{name} not antisymmetric: {a}, {b}")
                for c in sorted(succ[b]):
                    if (a, c) not in rel:
                        out.append(f"{name} not transitive: {a} <= {b} <= {c}")
        return out


def prefix_orders(table: ProductTable) -> PrefixOrders:
    """``a <=_L b`` iff ``a*c = b`` for some ``c`` in ``S ∪ {e}``; dually ``<=_R``."""
    elements = (IDENTITY,) + table.generators
    base = {(a, a) for a in elements} | {(IDENTITY, a) for a in elements}
    left = set(base)
    right = set(base)
    for (s, t), u in table.products.items():
        left.add((s, u))
        right.add((t, u))
    return PrefixOrders(elements, frozenset(left), frozenset(right))


def check_conditions_via_orders(table: ProductTable) -> ConditionReport:
    """Decide the five conditions from the prefix orders alone.

    Each condition quantifies over the vertex labels ``(u, v, w, x)`` of one
    4-cycle family.  Vertices of equal sign must be distinct; a label of a
    negative vertex may coincide with the label of a positive one.  Order
    defects (possible only on unvalidated tables) are listed in
    ``diagnostics`` instead of being repaired.
    """
    orders = prefix_orders(table)
    le_l, le_r = orders.le_left, orders.le_right
    gens = table.generators
    cap = witness_cap()

    # strict upper sets inside S, read off the relations
    above_l = {g: {b for b in gens if b != g and le_l(g, b)} for g in gens}
    above_r = {g: {b for b in gens if b != g and le_r(g, b)} for g in gens}
    # "s*t in S", as a set of right partners per left factor
    right_of = {g: {t for t in gens if (g, t) in table.products} for g in gens}

    def comparable(le, a, b):
        return le(a, b) or le(b, a)

    def c1():
        for u in gens:
            for w in gens:
                if u == w or comparable(le_l, u, w):
                    continue
                tops = above_l[u] & above_l[w]
                for v in tops:
                    for x in tops:
                        if v != x and not comparable(le_l, v, x):
                            yield (u, v, w, x)

    def c2():
        for v in gens:
            for x in gens:
                if v == x or comparable(le_r, v, x):
                    continue
                tops = above_r[v] & above_r[x]
                for u in tops:
                    for w in tops:
                        if u != w and not comparable(le_r, u, w):
                            yield (u, v, w, x)

    def c3():
        for u in gens:
            for v in right_of[u]:
                for x in right_of[u]:
                    if v == x or comparable(le_l, v, x):
                        continue
                    for w in above_l[v] & above_l[x]:
                        if w not in right_of[u]:
                            yield (u, v, w, x)

    def c4():
        for w in gens:
            lefts = [g for g in gens if w in right_of[g]]
            for v in lefts:
                for x in lefts:
                    if v == x or comparable(le_r, v, x):
                        continue
                    for u in above_r[v] & above_r[x]:
                        if w not in right_of[u]:
                            yield (u, v, w, x)

    def c5():
        for u in gens:
            for w in gens:
                if u == w or comparable(le_r, u, w):
                    continue
                common = right_of[u] & right_of[w]
                for v in common:
                    for x in common:
                        if v != x and not comparable(le_l, v, x):
                            yield (u, v, w, x)

    results = tuple(_finish(table, k, f(), cap) for k, f in enumerate((c1, c2, c3, c4, c5), 1))
    return ConditionReport(results, tuple(orders.violations()))
