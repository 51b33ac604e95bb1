"""Partial multiplication tables for restricted triangular presentations.

A :class:`ProductTable` stores a finite generating set ``S`` together with
the defined products ``s * t = u`` with ``s, t, u`` all in ``S``.  Every
entry stands for a relator ``s t u^-1``; no other relators exist in a
restricted triangular presentation, so the table *is* the presentation.

The table is the unit of trust.  :func:`validate_table` checks the
consequences of group realizability that can be read off the table
(cancellation, no self-absorption, restricted closure) but it cannot prove
that some group realizes the table.  Tables produced by the Garside,
Artin and free-group backends are realizable by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Mapping

__all__ = [
    "IDENTITY",
    "ProductTable",
    "TableError",
    "ParseError",
    "InvalidTableError",
    "Violation",
    "ValidationReport",
    "validate_table",
    "require_valid",
    "parse_table",
    "load_table",
    "format_table",
    "rename_table",
]

# Reserved internal name for the identity; '^' is illegal in generator names.
IDENTITY = "^e"

_NAME_RE = re.compile(r"^[^\s^#]+$")


class TableError(ValueError):
    """Structural error: the input does not describe a table at all."""


class ParseError(TableError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class InvalidTableError(ValueError):
    """Raised when an operation needs a validated table and gets another."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("table fails validation:\n" + report.describe())


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise TableError(f"invalid generator name {name!r}")
    return name


@dataclass(frozen=True, eq=False)
class ProductTable:
    """Finite generator set with a partial product map.

    ``products[(s, t)] == u`` encodes the relation ``s * t = u``.
    Instances are immutable; lookup indexes are built lazily.
    """

    generators: tuple[str, ...]
    products: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        for g in gens:
            _check_name(g)
        if len(set(gens)) != len(gens):
            raise TableError("duplicate generator names")
        declared = set(gens)
        prods = {}
        for key, value in dict(self.products).items():
            s, t = key
            for sym in (s, t, value):
                if sym not in declared:
                    raise TableError(f"undeclared symbol {sym!r} in product {s} {t} = {value}")
            prods[(s, t)] = value
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "products", prods)

    @classmethod
    def from_triples(cls, generators: Iterable[str], triples: Iterable[tuple[str, str, str]]) -> "ProductTable":
        """Build from ``(s, t, u)`` triples; conflicting duplicates raise."""
        products: dict[tuple[str, str], str] = {}
        for s, t, u in triples:
            if products.get((s, t), u) != u:
                raise TableError(f"conflicting values for product {s} {t}")
            products[(s, t)] = u
        return cls(tuple(generators), products)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProductTable):
            return NotImplemented
        return self.generators == other.generators and self.products == other.products

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"ProductTable({len(self.generators)} generators, {len(self.products)} products)"

    def same_structure(self, other: "ProductTable") -> bool:
        """Equality ignoring generator order."""
        return set(self.generators) == set(other.generators) and self.products == other.products

    @cached_property
    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    @cached_property
    def by_left(self) -> dict[str, dict[str, str]]:
        """``by_left[s][t] = s*t``."""
        out: dict[str, dict[str, str]] = {g: {} for g in self.generators}
        for (s, t), u in self.products.items():
            out[s][t] = u
        return out

    @cached_property
    def by_right(self) -> dict[str, dict[str, str]]:
        """``by_right[t][s] = s*t``."""
        out: dict[str, dict[str, str]] = {g: {} for g in self.generators}
        for (s, t), u in self.products.items():
            out[t][s] = u
        return out

    @cached_property
    def by_value(self) -> dict[str, list[tuple[str, str]]]:
        """All factorizations ``(s, t)`` of each value, in table order."""
        out: dict[str, list[tuple[str, str]]] = {g: [] for g in self.generators}
        for (s, t), u in self.sorted_products():
            out[u].append((s, t))
        return out

    @cached_property
    def left_upper(self) -> dict[str, dict[str, str]]:
        """``left_upper[s][u] = t`` whenever ``s*t = u`` (strict ``s <_L u``)."""
        out: dict[str, dict[str, str]] = {g: {} for g in self.generators}
        for (s, t), u in self.products.items():
            out[s][u] = t
        return out

    @cached_property
    def right_upper(self) -> dict[str, dict[str, str]]:
        """``right_upper[t][u] = s`` whenever ``s*t = u`` (strict ``t <_R u``)."""
        out: dict[str, dict[str, str]] = {g: {} for g in self.generators}
        for (s, t), u in self.products.items():
            out[t][u] = s
        return out

    def product(self, s: str, t: str) -> str | None:
        return self.products.get((s, t))

    def key(self, *symbols: str) -> tuple[int, ...]:
        """Sort key of a symbol tuple under the generator order."""
        idx = self.index
        return tuple(-1 if s == IDENTITY else idx[s] for s in symbols)

    def sorted_products(self) -> list[tuple[tuple[str, str], str]]:
        return sorted(self.products.items(), key=lambda kv: self.key(*kv[0]))

    def triples(self) -> Iterator[tuple[str, str, str]]:
        for (s, t), u in self.sorted_products():
            yield s, t, u

    @cached_property
    def validation(self) -> "ValidationReport":
        return _validate(self)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.kind}: ({', '.join(self.witness)})"
        return f"{text} {self.detail}" if self.detail else text


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def describe(self) -> str:
        return "\n".join(str(v) for v in self.violations) or "ok"


def validate_table(table: ProductTable) -> ValidationReport:
    """Check the four structural invariants of a restricted triangular table.

    * self-absorption: ``s*t`` is never ``s`` or ``t``;
    * left / right cancellation: ``s*t = s*t'`` forces ``t = t'`` and dually;
    * restricted closure: ``(ab)c = q`` defined forces ``bc`` defined with
      ``a(bc) = q``, and ``a(bc) = q`` defined forces ``ab`` defined with
      ``(ab)c = q``.

    An empty report means all four hold.
    """
    return table.validation


def _validate(table: ProductTable) -> ValidationReport:
    out: list[Violation] = []
    for (s, t), u in table.sorted_products():
        if u in (s, t):
            out.append(Violation("self-absorption", (s, t), f"= {u}"))

    for s in table.generators:
        seen: dict[str, str] = {}
        for t, u in sorted(table.by_left[s].items(), key=lambda kv: table.key(kv[0])):
            if u in seen:
                out.append(Violation("left-cancellation", (s, seen[u], t), f"both give {u}"))
            else:
                seen[u] = t
    for t in table.generators:
        seen = {}
        for s, u in sorted(table.by_right[t].items(), key=lambda kv: table.key(kv[0])):
            if u in seen:
                out.append(Violation("right-cancellation", (seen[u], s, t), f"both give {u}"))
            else:
                seen[u] = s

    left = table.by_left
    for (a, b), p in table.sorted_products():
        # (a*b)*c = q  =>  b*c defined and a*(b*c) = q
        for c, q in sorted(left[p].items(), key=lambda kv: table.key(kv[0])):
            r = left[b].get(c)
            if r is None:
                out.append(Violation("restricted-closure", (a, b, c), f"{b}*{c} undefined"))
            elif left[a].get(r) != q:
                out.append(Violation("restricted-closure", (a, b, c), f"{a}*({b}*{c}) != {q}"))
    for (b, c), r in table.sorted_products():
        # a*(b*c) = q  =>  a*b defined and (a*b)*c = q
        for a, q in sorted(table.by_right[r].items(), key=lambda kv: table.key(kv[0])):
            p = left[a].get(b)
            if p is None:
                out.append(Violation("restricted-closure", (a, b, c), f"{a}*{b} undefined"))
            elif left[p].get(c) != q:
                out.append(Violation("restricted-closure", (a, b, c), f"({a}*{b})*{c} != {q}"))
    return ValidationReport(tuple(dict.fromkeys(out)))


def require_valid(table: ProductTable) -> ProductTable:
    report = table.validation
    if not report.ok:
        raise InvalidTableError(report)
    return table


# ---------------------------------------------------------------------------
# text format

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_table(text: str) -> ProductTable:
    """Parse the line-oriented table format.

    ::

        generators: a b ab     # cumulative, may repeat
        product: a b = ab

    Unknown directives, malformed lines, undeclared symbols and conflicting
    duplicate products raise :class:`ParseError` with the line number.
    """
    generators: dict[str, None] = {}
    pending: list[tuple[int, str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'directive: ...', got {raw.strip()!r}", lineno)
        head = head.strip()
        if head == "generators":
            names = rest.split()
            if not names:
                raise ParseError("empty generators line", lineno)
            for name in names:
                if not _NAME_RE.match(name):
                    raise ParseError(f"invalid generator name {name!r}", lineno)
                generators[name] = None
        elif head == "product":
            lhs, eq, rhs = rest.partition("=")
            factors, value = lhs.split(), rhs.split()
            if not eq or len(factors) != 2 or len(value) != 1:
                raise ParseError("expected 'product: s t = u'", lineno)
            pending.append((lineno, factors[0], factors[1], value[0]))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)

    products: dict[tuple[str, str], str] = {}
    for lineno, s, t, u in pending:
        for sym in (s, t, u):
            if sym not in generators:
                raise ParseError(f"undeclared symbol {sym!r}", lineno)
        if products.get((s, t), u) != u:
            raise ParseError(f"conflicting product {s} {t}: {products[(s, t)]} vs {u}", lineno)
        products[(s, t)] = u
    return ProductTable(tuple(generators), products)


def load_table(path: str | Path) -> ProductTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))


def format_table(table: ProductTable, header: str | None = None, width: int = 12) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    gens = table.generators
    for i in range(0, len(gens), width):
        lines.append("generators: " + " ".join(gens[i:i + width]))
    for s, t, u in table.triples():
        lines.append(f"product: {s} {t} = {u}")
    return "\n".join(lines) + "\n"


def rename_table(table: ProductTable, mapping: Mapping[str, str]) -> ProductTable:
    """Apply a bijective renaming of generators (unmapped names are kept)."""
    rn = lambda g: mapping.get(g, g)  # noqa: E731
    gens = tuple(rn(g) for g in table.generators)
    if len(set(gens)) != len(gens):
        raise TableError("renaming is not injective")
    return ProductTable(gens, {(rn(s), rn(t)): rn(u) for (s, t), u in table.products.items()})

