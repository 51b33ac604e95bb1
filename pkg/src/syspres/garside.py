"""Garside presentations of ``G_{n,m}`` and of their Δ-amalgams.

``G_{n,m}`` is generated by ``x_1 .. x_n`` subject to: every cyclic
rotation of the alternating product ``x_1 x_2 .. x_n x_1 ..`` of length
``m`` is the same element Δ.  Its simple elements are Δ, the identity, and
the pieces ``x_i x_{i+1} .. x_{i+k-1}`` (indices mod n) for ``0 < k < m``.
An amalgam glues several factors along their Δ.

Symbol names in generated tables are stable:

* Δ is ``D``;
* an atom of factor ``f`` is ``f<f>_x<i>``;
* a longer piece is ``f<f>_x<i>_k<k>``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .table import IDENTITY, ProductTable, require_valid
from .conditions import prefix_orders

__all__ = [
    "GarsideFactor",
    "AmalgamSpec",
    "SimpleElement",
    "IDENTITY_SIMPLE",
    "DELTA",
    "piece",
    "parse_spec",
    "format_spec",
    "simples",
    "simple_length",
    "simple_word",
    "simple_product",
    "left_gcd",
    "right_gcd",
    "garside_table",
    "symbol_of",
    "simple_of",
    "MeetError",
    "poset_meet_left",
    "poset_meet_right",
    "GcdCheck",
    "check_gcd_condition",
    "ClassificationError",
    "classify_garside",
    "MonoidClasses",
    "OracleTooLarge",
    "monoid_bfs_oracle",
    "amalgam_bfs_oracle",
]

DELTA_SYMBOL = "D"


@dataclass(frozen=True, order=True)
class GarsideFactor:
    n: int
    m: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("n and m must be integers")
        if self.n < 1 or self.m < 1:
            raise ValueError(f"factor ({self.n},{self.m}): n and m must be positive")
        if self.n >= 2 and self.m < 2:
            raise ValueError(f"factor ({self.n},{self.m}): m >= 2 is required when n >= 2")

    def __str__(self) -> str:
        return f"{self.n}x{self.m}"


@dataclass(frozen=True)
class AmalgamSpec:
    """Factors ``(n_i, m_i)`` of ``(* G_{n_i,m_i}) / (Δ_i = Δ_j)``."""

    factors: tuple[GarsideFactor, ...]

    def __post_init__(self) -> None:
        facs = tuple(f if isinstance(f, GarsideFactor) else GarsideFactor(*f) for f in self.factors)
        if not facs:
            raise ValueError("an amalgam needs at least one factor")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def of(cls, *factors: tuple[int, int] | GarsideFactor) -> "AmalgamSpec":
        return cls(tuple(factors))

    def canonical(self) -> "AmalgamSpec":
        """Sorted factors with ``(1,1)`` factors absorbed into Δ."""
        facs = [f for f in self.factors if f.m >= 2] or [GarsideFactor(1, 1)]
        return AmalgamSpec(tuple(sorted(facs)))

    def __str__(self) -> str:
        return format_spec(self)


def parse_spec(text: str) -> AmalgamSpec:
    """Parse ``"2x3"`` or ``"1x2;1x3"``."""
    parts = text.strip().split(";")
    factors = []
    for part in parts:
        m = re.fullmatch(r"\s*(\d+)\s*x\s*(\d+)\s*", part)
        if not m:
            raise ValueError(f"malformed factor {part!r}; expected NxM")
        factors.append(GarsideFactor(int(m.group(1)), int(m.group(2))))
    return AmalgamSpec(tuple(factors))


def format_spec(spec: AmalgamSpec) -> str:
    return ";".join(str(f) for f in spec.factors)


# ---------------------------------------------------------------------------
# simple elements

@dataclass(frozen=True, order=True)
class SimpleElement:
    """Identity, Δ, or the piece of ``length`` letters of factor ``factor``
    (1-based) starting at letter ``start``."""

    kind: str  # "e", "piece" or "D"
    factor: int = 0
    start: int = 0
    length: int = 0

    def __str__(self) -> str:
        if self.kind == "e":
            return "e"
        if self.kind == "D":
            return "D"
        return f"f{self.factor}_x{self.start}" + (f"_k{self.length}" if self.length > 1 else "")


IDENTITY_SIMPLE = SimpleElement("e")
DELTA = SimpleElement("D")


def piece(factor: int, start: int, length: int) -> SimpleElement:
    return SimpleElement("piece", factor, start, length)


def _factor(spec: AmalgamSpec, s: SimpleElement) -> GarsideFactor:
    return spec.factors[s.factor - 1]


def _mod(i: int, n: int) -> int:
    """Reduce an index into 1..n."""
    return (i - 1) % n + 1


def simples(spec: AmalgamSpec) -> list[SimpleElement]:
    """Non-identity simple elements: every piece, then Δ."""
    out = []
    for f, fac in enumerate(spec.factors, 1):
        for k in range(1, fac.m):
            for i in range(1, fac.n + 1):
                out.append(piece(f, i, k))
    out.append(DELTA)
    return out


def simple_length(spec: AmalgamSpec, s: SimpleElement, factor: int | None = None) -> int:
    """Word length; Δ has length ``m`` of the given (or its partner's) factor."""
    if s.kind == "e":
        return 0
    if s.kind == "piece":
        return s.length
    if factor is None:
        raise ValueError("length of D depends on the factor")
    return spec.factors[factor - 1].m


def simple_word(spec: AmalgamSpec, s: SimpleElement, factor: int = 1) -> tuple[tuple[int, int], ...]:
    """A positive word for ``s`` as ``(factor, letter)`` pairs."""
    if s.kind == "e":
        return ()
    if s.kind == "D":
        f, start, k = factor, 1, spec.factors[factor - 1].m
    else:
        f, start, k = s.factor, s.start, s.length
    n = spec.factors[f - 1].n
    return tuple((f, _mod(start + j, n)) for j in range(k))


def simple_product(spec: AmalgamSpec, s: SimpleElement, t: SimpleElement) -> SimpleElement | None:
    """``s*t`` when it is simple, else ``None``.

    Pieces ``(i, k)`` and ``(j, l)`` of one factor multiply to a simple
    element iff ``j = i + k (mod n)`` and ``k + l <= m``.  Any product with a
    Δ factor leaves the simple elements unless the other factor is ``e``.
    """
    if s.kind == "e":
        return t
    if t.kind == "e":
        return s
    if s.kind == "D" or t.kind == "D" or s.factor != t.factor:
        return None
    fac = _factor(spec, s)
    if t.start != _mod(s.start + s.length, fac.n):
        return None
    total = s.length + t.length
    if total > fac.m:
        return None
    return DELTA if total == fac.m else piece(s.factor, s.start, total)


def _gcd(spec: AmalgamSpec, s: SimpleElement, t: SimpleElement, right: bool) -> SimpleElement:
    if s.kind == "e" or t.kind == "e":
        return IDENTITY_SIMPLE
    if s.kind == "D":
        return t
    if t.kind == "D":
        return s
    if s.factor != t.factor:
        return IDENTITY_SIMPLE
    # order so that k <= l
    short, long_ = (s, t) if s.length <= t.length else (t, s)
    n = _factor(spec, s).n
    if right:
        aligned = (short.start + short.length - long_.start - long_.length) % n == 0
    else:
        aligned = short.start == long_.start
    return short if aligned else IDENTITY_SIMPLE


def left_gcd(spec: AmalgamSpec, s: SimpleElement, t: SimpleElement) -> SimpleElement:
    """Greatest common prefix: the shorter argument when both start at the
    same letter (or the longer one is Δ), otherwise the identity."""
    return _gcd(spec, s, t, right=False)


def right_gcd(spec: AmalgamSpec, s: SimpleElement, t: SimpleElement) -> SimpleElement:
    """Greatest common suffix: the shorter argument when both end at the
    same letter, i.e. ``i + k = j + l (mod n)``, or the longer one is Δ."""
    return _gcd(spec, s, t, right=True)


def symbol_of(s: SimpleElement) -> str:
    if s.kind == "e":
        return IDENTITY
    return DELTA_SYMBOL if s.kind == "D" else str(s)


_SYMBOL_RE = re.compile(r"f(\d+)_x(\d+)(?:_k(\d+))?")


def simple_of(symbol: str) -> SimpleElement:
    if symbol == IDENTITY:
        return IDENTITY_SIMPLE
    if symbol == DELTA_SYMBOL:
        return DELTA
    m = _SYMBOL_RE.fullmatch(symbol)
    if not m:
        raise ValueError(f"{symbol!r} is not a Garside table symbol")
    return piece(int(m.group(1)), int(m.group(2)), int(m.group(3) or 1))


def garside_table(spec: AmalgamSpec) -> ProductTable:
    """Product table of the Garside presentation on the non-trivial simples."""
    elems = simples(spec)
    products = {}
    for s in elems:
        for t in elems:
            u = simple_product(spec, s, t)
            if u is not None:
                products[(symbol_of(s), symbol_of(t))] = symbol_of(u)
    return ProductTable(tuple(symbol_of(s) for s in elems), products)


# ---------------------------------------------------------------------------
# brute-force meets on the table poset

class MeetError(ValueError):
    """Maximal common lower bounds inside ``S ∪ {e}`` are not unique."""

    def __init__(self, a: str, b: str, antichain: Sequence[str], side: str):
        self.antichain = tuple(antichain)
        super().__init__(f"not a meet-semilattice within S: {a} and {b} have maximal "
                         f"common {side}-divisors {', '.join(antichain)}")


def _meet(table: ProductTable, a: str, b: str, right: bool) -> str:
    orders = prefix_orders(table)
    rel = orders.right if right else orders.left
    lower = [c for c in orders.elements if (c, a) in rel and (c, b) in rel]
    maximal = [c for c in lower if not any(d != c and (c, d) in rel for d in lower)]
    if len(maximal) != 1:
        raise MeetError(a, b, maximal, "right" if right else "left")
    return maximal[0]


def poset_meet_left(table: ProductTable, a: str, b: str) -> str:
    """Meet of ``a`` and ``b`` for ``<=_L`` computed by exhaustion over ``S ∪ {e}``.

    Returns :data:`~syspres.table.IDENTITY` for the identity.
    """
    require_valid(table)
    return _meet(table, a, b, right=False)


def poset_meet_right(table: ProductTable, a: str, b: str) -> str:
    require_valid(table)
    return _meet(table, a, b, right=True)


@dataclass(frozen=True)
class GcdCheck:
    passed: bool
    witnesses: tuple[tuple[str, str, str, str], ...]  # (side, s, t, meet)

    def __bool__(self) -> bool:
        return self.passed


def check_gcd_condition(table: ProductTable) -> GcdCheck:
    """Every pair of generators has left and right meets in ``{e, s, t}``."""
    require_valid(table)
    gens = table.generators
    bad = []
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            for side, right in (("L", False), ("R", True)):
                meet = _meet(table, s, t, right)
                if meet not in (IDENTITY, s, t):
                    bad.append((side, s, t, meet))
    return GcdCheck(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# classification

class ClassificationError(ValueError):
    pass


def classify_garside(table: ProductTable) -> AmalgamSpec:
    """Recover the amalgam a systolic Garside table presents.

    Atoms are generators that are never a product value.  Each atom ``a``
    has a unique atom ``ξ(a)`` with ``a*ξ(a)`` defined; the cycles of the
    permutation ξ are the factors, and ``m`` of a factor is the length at
    which the running product along its cycle reaches Δ.
    """
    gens = table.generators
    if len(gens) == 1:
        if table.products:
            raise ClassificationError("single generator with products")
        return AmalgamSpec.of((1, 1))
    try:
        gcd = check_gcd_condition(table)
    except MeetError as exc:
        raise ClassificationError(f"not systolic Garside: {exc}") from exc
    if not gcd.passed:
        raise ClassificationError(f"not systolic Garside: gcd condition fails at {gcd.witnesses[0]}")

    values = set(table.products.values())
    factors = {s for s, _ in table.products} | {t for _, t in table.products}
    tops = [g for g in gens if g in values and g not in factors]
    if len(tops) != 1:
        raise ClassificationError(f"expected a unique maximal element, found {tops}")
    delta = tops[0]
    atoms = [g for g in gens if g not in values]
    atom_set = set(atoms)

    succ = {}
    for a in atoms:
        nxt = [b for b in table.by_left[a] if b in atom_set]
        if len(nxt) != 1:
            raise ClassificationError(f"not systolic Garside: atom {a} has successors {sorted(nxt)}")
        succ[a] = nxt[0]
    if sorted(succ.values()) != sorted(atoms):
        raise ClassificationError("not systolic Garside: atom successor map is not a permutation")

    result = []
    seen: set[str] = set()
    for a in atoms:
        if a in seen:
            continue
        cycle = [a]
        while succ[cycle[-1]] != a:
            cycle.append(succ[cycle[-1]])
        seen.update(cycle)
        n = len(cycle)
        current, m = a, 1
        while current != delta:
            if m > len(gens) + 1:
                raise ClassificationError(f"malformed table: Δ not reached from {a}")
            nxt = table.by_left[current].get(cycle[m % n])
            if nxt is None:
                raise ClassificationError(f"malformed table: {current}*{cycle[m % n]} undefined before Δ")
            current, m = nxt, m + 1
        result.append(GarsideFactor(n, m))
    return AmalgamSpec(tuple(result)).canonical()


# ---------------------------------------------------------------------------
# monoid oracle

class OracleTooLarge(ValueError):
    pass


WORD_GUARD = 10 ** 6


@dataclass(frozen=True)
class MonoidClasses:
    """Equivalence classes of positive words up to a length or weight bound."""

    class_of: dict[tuple, int]
    classes: tuple[frozenset, ...]

    def same(self, w1: Sequence, w2: Sequence) -> bool:
        return self.class_of[tuple(w1)] == self.class_of[tuple(w2)]

    def members(self, w: Sequence) -> frozenset:
        return self.classes[self.class_of[tuple(w)]]


def _closure(letters: Sequence, weights: dict, relator_sides: Sequence[tuple], max_weight: int) -> MonoidClasses:
    """Classes of all words of weight <= ``max_weight`` under replacing any
    occurrence of one relator side with any other.  Sides of one relation
    must have equal weight, so a class never leaves its weight."""
    words: list[tuple] = [()]
    frontier: list[tuple] = [()]
    while frontier:
        nxt = []
        for w in frontier:
            base = sum(weights[a] for a in w)
            for a in letters:
                if base + weights[a] <= max_weight:
                    nxt.append(w + (a,))
        words.extend(nxt)
        if len(words) > WORD_GUARD:
            raise OracleTooLarge(f"more than {WORD_GUARD} words below weight {max_weight}")
        frontier = nxt

    sides_by_len: dict[int, list[tuple]] = {}
    for side in relator_sides:
        sides_by_len.setdefault(len(side), []).append(side)

    class_of: dict[tuple, int] = {}
    classes = []
    for w in words:
        if w in class_of:
            continue
        cid = len(classes)
        members = {w}
        class_of[w] = cid
        queue = deque([w])
        while queue:
            cur = queue.popleft()
            for length, sides in sides_by_len.items():
                for pos_ in range(len(cur) - length + 1):
                    chunk = cur[pos_:pos_ + length]
                    if chunk not in sides:
                        continue
                    for other in relator_sides:
                        if other == chunk:
                            continue
                        new = cur[:pos_] + other + cur[pos_ + length:]
                        if new not in class_of:
                            class_of[new] = cid
                            members.add(new)
                            queue.append(new)
        classes.append(frozenset(members))
    return MonoidClasses(class_of, tuple(classes))


def monoid_bfs_oracle(factor: GarsideFactor, max_len: int) -> MonoidClasses:
    """Classes of positive words of length <= ``max_len`` in the monoid of
    ``G_{n,m}``; letters are ``1..n``.

    The defining relations preserve length, so exhaustive rewriting inside
    each length gives the monoid exactly.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    n, m = factor.n, factor.m
    total = sum(n ** k for k in range(max_len + 1))
    if total > WORD_GUARD:
        raise OracleTooLarge(f"{total} words exceed the guard of {WORD_GUARD}")
    letters = tuple(range(1, n + 1))
    sides = sorted({tuple(_mod(i + j, n) for j in range(m)) for i in range(1, n + 1)})
    return _closure(letters, {a: 1 for a in letters}, sides, max_len)


def amalgam_bfs_oracle(spec: AmalgamSpec, max_weight: int | None = None) -> MonoidClasses:
    """Like :func:`monoid_bfs_oracle` for a Δ-amalgam.

    Letters are ``(factor, i)``.  A letter of factor ``f`` weighs
    ``L / m_f`` with ``L = lcm(m_f)``, so every Δ word weighs ``L`` and the
    relations are weight-homogeneous.  Default bound is ``2L``.
    """
    big = lcm(*(f.m for f in spec.factors))
    weights = {}
    sides = set()
    for f, fac in enumerate(spec.factors, 1):
        for i in range(1, fac.n + 1):
            weights[(f, i)] = big // fac.m
        for i in range(1, fac.n + 1):
            sides.add(tuple((f, _mod(i + j, fac.n)) for j in range(fac.m)))
    letters = tuple(sorted(weights))
    return _closure(letters, weights, sorted(sides), 2 * big if max_weight is None else max_weight)
