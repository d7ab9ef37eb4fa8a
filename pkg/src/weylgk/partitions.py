"""Integer partitions and box-parity statistics of their Young diagrams.

Boxes of a Young diagram are addressed ``(row, column)`` with both indices
1-based.  The box ``(k, l)`` is called *even* when ``k + l`` is even and
*odd* otherwise; the checkerboard counts per row and per column drive all
the weighted statistics in this package.

Everything here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "ParityProfile",
    "transpose",
    "row_parity",
    "column_parity_count",
    "weighted_parity_sum",
]

PARITIES = ("plain", "even", "odd")


class Partition:
    """A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped at construction, so equality and hashing
    are on canonical forms.

    >>> Partition([4, 2, 2, 2, 0, 0]).parts
    (4, 2, 2, 2)
    >>> Partition([4, 2, 2, 2]) == Partition((4, 2, 2, 2, 0))
    True
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = []
        for p in parts:
            q = int(p)
            if q != p:
                raise ValueError(f"partition parts must be integers, got {p!r}")
            cleaned.append(q)
        for a, b in zip(cleaned, cleaned[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {tuple(cleaned)}")
        if cleaned and cleaned[-1] < 0:
            raise ValueError(f"negative part in {tuple(cleaned)}")
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "parts", tuple(cleaned))

    def __setattr__(self, name, value):  # immutable after __init__
        raise AttributeError("Partition is immutable")

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-based); zero beyond the last row."""
        if i < 1:
            raise ValueError("row index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


def transpose(p: Partition) -> Partition:
    """The dual partition: lengths of the columns of the Young diagram.

    An involution: ``transpose(transpose(p)) == p``.

    >>> transpose(Partition([4, 2, 2, 2])).parts
    (4, 4, 1, 1)
    """
    parts = p.parts
    if not parts:
        return Partition()
    cols = [0] * parts[0]
    for length in parts:
        for j in range(length):
            cols[j] += 1
    return Partition(cols)


@dataclass(frozen=True)
class ParityProfile:
    """Per-row counts of even and odd boxes of a Young diagram.

    Entry ``i`` (0-based in the tuples) refers to row ``i + 1`` of the
    diagram.  ``even_counts[i] + odd_counts[i]`` equals the row length.
    """

    even_counts: tuple[int, ...]
    odd_counts: tuple[int, ...]


def column_parity_count(column_length: int, column_index: int, parity: str) -> int:
    """Number of boxes of the given parity in one column.

    The column is column ``column_index`` (1-based) of a Young diagram and
    contains boxes ``(k, column_index)`` for ``1 <= k <= column_length``;
    the box is even when ``k + column_index`` is even.

    >>> column_parity_count(3, 2, "odd")
    2
    >>> column_parity_count(4, 1, "even")
    2
    """
    if column_length < 0:
        raise ValueError("column_length must be nonnegative")
    if column_index < 1:
        raise ValueError("column_index is 1-based")
    if column_index % 2 == 0:
        even = column_length // 2
    else:
        even = (column_length + 1) // 2
    if parity == "even":
        return even
    if parity == "odd":
        return column_length - even
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def row_parity(p: Partition) -> ParityProfile:
    """Even/odd box counts per row of the Young diagram of ``p``.

    Row ``i`` has ``ceil(p_i / 2)`` even boxes when ``i`` is odd and
    ``floor(p_i / 2)`` when ``i`` is even (the row starts on an even box
    exactly when ``i`` is odd, since box ``(i, 1)`` has parity of
    ``i + 1``).

    >>> row_parity(Partition([5, 5, 4, 3, 3])).even_counts
    (3, 2, 2, 1, 2)
    >>> row_parity(Partition([5, 5, 4, 3, 3])).odd_counts
    (2, 3, 2, 2, 1)
    """
    evens = []
    odds = []
    for i, length in enumerate(p.parts, start=1):
        # Rows and columns play symmetric roles on the checkerboard.
        e = column_parity_count(length, i, "even")
        evens.append(e)
        odds.append(length - e)
    return ParityProfile(tuple(evens), tuple(odds))


def weighted_parity_sum(p: Partition, parity: str = "plain") -> int:
    """Sum of ``(i - 1) * c_i`` over rows ``i``, where ``c_i`` is the row
    length ('plain'), its even-box count ('even') or its odd-box count
    ('odd').

    >>> weighted_parity_sum(Partition([6, 4]), "odd")
    2
    >>> weighted_parity_sum(Partition([4, 4, 4, 2, 2]), "odd")
    13
    """
    if parity == "plain":
        counts: Iterable[int] = p.parts
    elif parity == "even":
        counts = row_parity(p).even_counts
    elif parity == "odd":
        counts = row_parity(p).odd_counts
    else:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    return sum(i * c for i, c in enumerate(counts))
