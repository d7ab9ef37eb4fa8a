"""Two-row symbols attached to insertion shapes, and their values.

A B-symbol is a pair of strictly increasing rows of nonnegative integers
with lengths m+1 and m, taken up to the shift equivalence
``(top; bottom) ~ (0, top+1; 0, bottom+1)``.  A D-symbol has two rows of
equal length, unordered, with the same shift equivalence.  The symbol of
a shape packages the multiset ``{p_k + 2m+1-k}`` of a padded partition by
parity; the value functions turn symbols into a-function values and are
invariant under the equivalences.  Together they provide a computation of
a-values completely independent of the weighted row statistics.
"""

from __future__ import annotations

from .partitions import Partition

__all__ = [
    "BSymbol",
    "DSymbol",
    "b_symbol_of_shape",
    "b_symbol_value",
    "d_symbol_of_b",
    "d_symbol_value",
]


def _check_row(row: tuple[int, ...], name: str) -> None:
    if any(v < 0 for v in row):
        raise ValueError(f"{name} row entries must be nonnegative: {row}")
    if any(a >= b for a, b in zip(row, row[1:])):
        raise ValueError(f"{name} row not strictly increasing: {row}")


class BSymbol:
    """Rows ``top`` (length m+1) and ``bottom`` (length m)."""

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom):
        top = tuple(int(v) for v in top)
        bottom = tuple(int(v) for v in bottom)
        if len(top) != len(bottom) + 1:
            raise ValueError(
                f"top row must be one longer than bottom: {len(top)} vs {len(bottom)}"
            )
        _check_row(top, "top")
        _check_row(bottom, "bottom")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("BSymbol is immutable")

    @property
    def m(self) -> int:
        return len(self.bottom)

    def shift(self, k: int = 1) -> "BSymbol":
        """Apply the defining equivalence k times (k >= 0)."""
        top, bottom = self.top, self.bottom
        for _ in range(k):
            top = (0,) + tuple(v + 1 for v in top)
            bottom = (0,) + tuple(v + 1 for v in bottom)
        return BSymbol(top, bottom)

    def canonical(self) -> "BSymbol":
        """Strip shift prefixes until not both rows start with 0."""
        top, bottom = self.top, self.bottom
        while top and bottom and top[0] == 0 and bottom[0] == 0:
            top = tuple(v - 1 for v in top[1:])
            bottom = tuple(v - 1 for v in bottom[1:])
        return BSymbol(top, bottom)

    def __eq__(self, other) -> bool:
        if isinstance(other, BSymbol):
            a, b = self.canonical(), other.canonical()
            return a.top == b.top and a.bottom == b.bottom
        return NotImplemented

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.top, c.bottom))

    def __repr__(self) -> str:
        return f"BSymbol({list(self.top)}, {list(self.bottom)})"


class DSymbol:
    """An unordered pair of strictly increasing rows of equal length."""

    __slots__ = ("rows",)

    def __init__(self, first, second):
        first = tuple(int(v) for v in first)
        second = tuple(int(v) for v in second)
        if len(first) != len(second):
            raise ValueError("rows must have equal length")
        _check_row(first, "first")
        _check_row(second, "second")
        object.__setattr__(self, "rows", (first, second))

    def __setattr__(self, name, value):
        raise AttributeError("DSymbol is immutable")

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def shift(self, k: int = 1) -> "DSymbol":
        a, b = self.rows
        for _ in range(k):
            a = (0,) + tuple(v + 1 for v in a)
            b = (0,) + tuple(v + 1 for v in b)
        return DSymbol(a, b)

    def canonical(self) -> "DSymbol":
        """Fully shift-reduce, then order the rows lexicographically."""
        a, b = self.rows
        while a and b and a[0] == 0 and b[0] == 0:
            a = tuple(v - 1 for v in a[1:])
            b = tuple(v - 1 for v in b[1:])
        if b < a:
            a, b = b, a
        return DSymbol(a, b)

    def __eq__(self, other) -> bool:
        if isinstance(other, DSymbol):
            return self.canonical().rows == other.canonical().rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical().rows)

    def __repr__(self) -> str:
        a, b = self.rows
        return f"DSymbol({list(a)}, {list(b)})"


class SymbolSplitError(ValueError):
    """The padded shape multiset did not split into m+1 evens and m odds."""


def b_symbol_of_shape(p: Partition, m: int) -> BSymbol:
    """Symbol of a shape: split ``{p_k + 2m+1-k : k <= 2m+1}`` by parity.

    Requires the padding ``p_{2m+2} = 0`` (at most 2m+1 parts).  The m+1
    even values, halved, form the top row; the m odd values, via
    ``(v-1)/2``, the bottom row.  For shapes arising from doubled signed
    sequences the split always succeeds and the value functions below do
    not depend on the choice of m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(p) > 2 * m + 1:
        raise ValueError(
            f"padding requires at most {2 * m + 1} parts, got {len(p)}"
        )
    entries = [p.row(k) + 2 * m + 1 - k for k in range(1, 2 * m + 2)]
    evens = sorted(v for v in entries if v % 2 == 0)
    odds = sorted(v for v in entries if v % 2 == 1)
    if len(evens) != m + 1 or len(odds) != m:
        raise SymbolSplitError(
            f"shape {p.parts} at m={m} split into {len(evens)} even"
            f" and {len(odds)} odd entries; expected {m + 1} and {m}"
        )
    return BSymbol([v // 2 for v in evens], [(v - 1) // 2 for v in odds])


def _min_pair_sum(row_a: tuple[int, ...], row_b: tuple[int, ...]) -> int:
    return sum(min(a, b) for a in row_a for b in row_b)


def _min_within(row: tuple[int, ...]) -> int:
    return sum(
        min(row[i], row[j]) for i in range(len(row)) for j in range(i + 1, len(row))
    )


def b_symbol_value(sym: BSymbol) -> int:
    """Pairwise-minimum sum of the symbol minus ``m(m-1)(4m+1)/6``.

    Invariant under the shift equivalence.
    """
    m = sym.m
    total = (
        _min_within(sym.top)
        + _min_within(sym.bottom)
        + _min_pair_sum(sym.top, sym.bottom)
    )
    return total - m * (m - 1) * (4 * m + 1) // 6


def d_symbol_of_b(sym: BSymbol) -> DSymbol:
    """Rows ``(top; 0, bottom+1)``, shift-reduced.

    Turns a B-symbol into the D-symbol used for the even-subgroup values.
    """
    return DSymbol(
        sym.top, (0,) + tuple(v + 1 for v in sym.bottom)
    ).canonical()


def d_symbol_value(sym: DSymbol) -> int:
    """Pairwise-minimum sum of the symbol minus ``m(m-1)(4m-5)/6``.

    Row-order and shift invariant.
    """
    a, b = sym.rows
    m = sym.m
    total = _min_within(a) + _min_within(b) + _min_pair_sum(a, b)
    return total - m * (m - 1) * (4 * m - 5) // 6
