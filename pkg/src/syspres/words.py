"""Free-group words, used to certify the five small counterexample
presentations on ``S = {a, b, c, d, u, v, w, x}``.

Each presentation ``<S | R_i>`` has four relators ``p q r^-1`` and is a free
group of rank 4: four of the symbols form a basis and the other four are
eliminated by the relators.  With the word problem solved by free
reduction, the restricted triangular property becomes a finite check over
``S^3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .table import ProductTable

__all__ = [
    "Word",
    "word",
    "reduce",
    "inverse",
    "format_word",
    "Realization",
    "Counterexample",
    "SYMBOLS",
    "RELATORS",
    "counterexample_realization",
    "counterexample_table",
    "FreeCheck",
    "verify_restricted_triangular_free",
]

# A word is a tuple of (letter, exponent) with exponent +1 or -1.
Word = tuple[tuple[str, int], ...]

SYMBOLS = ("a", "b", "c", "d", "u", "v", "w", "x")

# (p, q, r) stands for the relator p q r^-1, i.e. the table entry p*q = r.
RELATORS: dict[int, tuple[tuple[str, str, str], ...]] = {
    1: (("u", "a", "v"), ("w", "b", "v"), ("u", "d", "x"), ("w", "c", "x")),
    2: (("b", "v", "w"), ("c", "x", "w"), ("a", "v", "u"), ("d", "x", "u")),
    3: (("v", "b", "w"), ("x", "c", "w"), ("u", "x", "d"), ("u", "v", "a")),
    4: (("d", "x", "u"), ("a", "v", "u"), ("v", "w", "b"), ("x", "w", "c")),
    5: (("v", "u", "a"), ("v", "w", "b"), ("x", "w", "c"), ("x", "u", "d")),
}

# Basis and images of the eliminated symbols, obtained by solving each
# relator for the symbol that occurs in it exactly once.
_IMAGES: dict[int, tuple[tuple[str, ...], dict[str, str]]] = {
    1: (("u", "w", "a", "d"), {"v": "u a", "x": "u d", "b": "w^-1 u a", "c": "w^-1 u d"}),
    2: (("u", "v", "w", "x"), {"a": "u v^-1", "b": "w v^-1", "c": "w x^-1", "d": "u x^-1"}),
    3: (("u", "v", "w", "x"), {"a": "u v", "b": "v^-1 w", "c": "x^-1 w", "d": "u x"}),
    4: (("u", "v", "w", "x"), {"a": "u v^-1", "b": "v w", "c": "x w", "d": "u x^-1"}),
    5: (("u", "v", "w", "x"), {"a": "v u", "b": "v w", "c": "x w", "d": "x u"}),
}


def word(text: str) -> Word:
    """Parse ``"u v^-1 w"`` into a (not necessarily reduced) word."""
    out = []
    for tok in text.split():
        letter, _, exp = tok.partition("^")
        if exp not in ("", "1", "-1") or not letter:
            raise ValueError(f"bad letter {tok!r}")
        out.append((letter, -1 if exp == "-1" else 1))
    return tuple(out)


def reduce(w: Sequence[tuple[str, int]]) -> Word:
    """Free reduction: cancel adjacent ``x x^-1`` and ``x^-1 x`` pairs."""
    stack: list[tuple[str, int]] = []
    for letter, exp in w:
        if stack and stack[-1][0] == letter and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((letter, exp))
    return tuple(stack)


def inverse(w: Sequence[tuple[str, int]]) -> Word:
    return tuple((letter, -exp) for letter, exp in reversed(w))


def format_word(w: Sequence[tuple[str, int]]) -> str:
    if not w:
        return "e"
    return " ".join(letter if exp == 1 else f"{letter}^-1" for letter, exp in w)


@dataclass(frozen=True)
class Realization:
    """Images of the generators in a free group on ``basis``."""

    basis: tuple[str, ...]
    images: Mapping[str, Word]

    def __post_init__(self) -> None:
        for b in self.basis:
            if self.images.get(b) != ((b, 1),):
                raise ValueError(f"basis letter {b} must map to itself")
        for sym, img in self.images.items():
            if not img or reduce(img) != img:
                raise ValueError(f"image of {sym} must be reduced and nonempty")
            if any(letter not in self.basis for letter, _ in img):
                raise ValueError(f"image of {sym} leaves the basis")

    def evaluate(self, letters: Iterable[tuple[str, int]]) -> Word:
        """Reduced image of a word in the generators."""
        out: list[tuple[str, int]] = []
        for sym, exp in letters:
            img = self.images[sym]
            out.extend(img if exp == 1 else inverse(img))
        return reduce(out)


@dataclass(frozen=True)
class Counterexample:
    index: int
    symbols: tuple[str, ...]
    triples: tuple[tuple[str, str, str], ...]
    realization: Realization


def counterexample_realization(i: int) -> Counterexample:
    if i not in RELATORS:
        raise ValueError(f"counterexample index must be in 1..5, got {i}")
    basis, eliminated = _IMAGES[i]
    images = {b: ((b, 1),) for b in basis}
    images.update({sym: word(text) for sym, text in eliminated.items()})
    return Counterexample(i, SYMBOLS, RELATORS[i], Realization(basis, images))


def counterexample_table(i: int) -> ProductTable:
    ce = counterexample_realization(i)
    return ProductTable.from_triples(ce.symbols, ce.triples)


@dataclass(frozen=True)
class FreeCheck:
    passed: bool
    triple: tuple[str, str, str] | None = None
    reason: str = ""
    checked: int = 0


def verify_restricted_triangular_free(
    symbols: Sequence[str],
    triples: Iterable[tuple[str, str, str]],
    realization: Realization,
) -> FreeCheck:
    """Check every ``(p, q, r)`` in ``S^3`` in lexicographic order.

    Requires ``pqr != e``, ``pqr`` not in ``S``, and ``pqr^-1 = e`` exactly
    for the listed triples.  Returns the first failing triple.
    """
    rel = set(triples)
    images = {realization.evaluate([(s, 1)]) for s in symbols}
    count = 0
    for p, q, r in product(symbols, repeat=3):
        count += 1
        pqr = realization.evaluate([(p, 1), (q, 1), (r, 1)])
        if not pqr:
            return FreeCheck(False, (p, q, r), "pqr = e", count)
        if pqr in images:
            return FreeCheck(False, (p, q, r), f"pqr = {format_word(pqr)} lies in S", count)
        trivial = not realization.evaluate([(p, 1), (q, 1), (r, -1)])
        listed = (p, q, r) in rel
        if trivial and not listed:
            return FreeCheck(False, (p, q, r), "pqr^-1 = e but the relator is missing", count)
        if listed and not trivial:
            return FreeCheck(False, (p, q, r), "relator listed but pqr^-1 != e", count)
    return FreeCheck(True, None, "", count)
