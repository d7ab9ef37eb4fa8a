"""Robinson-Schensted insertion on sequences of exact numbers.

Sequences may contain duplicates.  The bumping convention is fixed once and
for all: inserting ``v`` into a row bumps the leftmost entry *strictly
greater* than ``v`` (equal entries are not bumped, so ties behave like
increases).  With this convention the weakly-increasing Greene statistics
below match the insertion shape, which is what the weighted shape
statistics rely on.

Entries can be ints or :class:`fractions.Fraction`; only comparisons are
used, never float arithmetic.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import Partition, transpose, weighted_parity_sum

__all__ = [
    "YoungTableau",
    "rs_insert",
    "rs_shape",
    "shape_statistic",
    "max_union_increasing",
    "max_union_decreasing",
    "order_equivalent",
    "dual_rs_shape",
    "GREENE_LENGTH_CAP",
]

# Hard cap for the exponential Greene searches; they exist as a test oracle.
GREENE_LENGTH_CAP = 12


class YoungTableau:
    """Row/column ordered filling of a Young diagram.

    Rows are weakly increasing left to right, columns strictly increasing
    top to bottom.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            for a, b in zip(r, r[1:]):
                if a > b:
                    raise ValueError("row not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths not weakly decreasing")
            for a, b in zip(upper, lower):
                if a >= b:
                    raise ValueError("column not strictly increasing")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("YoungTableau is immutable")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, YoungTableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"YoungTableau({[list(r) for r in self.rows]!r})"

    def render(self) -> str:
        """One row per line, entries space-separated."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def rs_insert(x: Iterable) -> YoungTableau:
    """Row-insert the sequence ``x`` and return the insertion tableau.

    >>> rs_insert((3, 2, 1)).shape.parts
    (1, 1, 1)
    """
    rows: list[list] = []
    for v in x:
        for row in rows:
            pos = bisect_right(row, v)
            if pos == len(row):
                row.append(v)
                break
            row[pos], v = v, row[pos]
        else:
            rows.append([v])
    return YoungTableau(rows)


def rs_shape(x: Iterable) -> Partition:
    """Shape of the insertion tableau of ``x``."""
    return rs_insert(x).shape


def shape_statistic(x: Iterable, parity: str = "plain") -> int:
    """Row-weighted box count of the insertion shape of ``x``.

    This is ``sum((i-1) * c_i)`` over the rows of ``rs_shape(x)`` with
    ``c_i`` the row length, even-box count or odd-box count according to
    ``parity``.  The 'plain'/'odd'/'even' flavors read off a-function
    values of types A, B and D respectively.
    """
    return weighted_parity_sum(rs_shape(x), parity)


def _longest_monotone(values: Sequence, strict_decreasing: bool) -> int:
    """Longest strictly decreasing (or weakly increasing) subsequence."""
    best = [0] * len(values)
    out = 0
    for i, v in enumerate(values):
        m = 0
        for j in range(i):
            if strict_decreasing:
                ok = values[j] > v
            else:
                ok = values[j] <= v
            if ok and best[j] > m:
                m = best[j]
        best[i] = m + 1
        if best[i] > out:
            out = best[i]
    return out


@lru_cache(maxsize=256)
def _greene_tables(x: tuple) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each k, the largest subset of positions of ``x`` that splits
    into k weakly increasing (resp. strictly decreasing) subsequences.

    Uses the Dilworth dual form: a selection splits into k weakly
    increasing subsequences iff its longest strictly decreasing
    subsequence has length at most k (and dually).  The search is an
    exhaustive sweep over all position subsets.
    """
    n = len(x)
    best_c = [0] * (n + 1)
    best_d = [0] * (n + 1)
    for mask in range(1 << n):
        sub = [x[i] for i in range(n) if mask >> i & 1]
        m = len(sub)
        dec = _longest_monotone(sub, strict_decreasing=True)
        inc = _longest_monotone(sub, strict_decreasing=False)
        if m > best_c[dec]:
            best_c[dec] = m
        if m > best_d[inc]:
            best_d[inc] = m
    # A selection feasible for k chains is feasible for k+1.
    for k in range(1, n + 1):
        best_c[k] = max(best_c[k], best_c[k - 1])
        best_d[k] = max(best_d[k], best_d[k - 1])
    return tuple(best_c), tuple(best_d)


def _greene(x: Iterable, k: int, decreasing: bool) -> int:
    x = tuple(x)
    if not 1 <= k <= len(x):
        raise ValueError(f"k must be in [1, {len(x)}], got {k}")
    if len(x) > GREENE_LENGTH_CAP:
        raise ValueError(
            f"brute-force Greene statistic capped at length {GREENE_LENGTH_CAP}"
        )
    tables = _greene_tables(x)
    return tables[1][k] if decreasing else tables[0][k]


def max_union_increasing(x: Iterable, k: int) -> int:
    """Maximal total length of a union of ``k`` disjoint weakly increasing
    subsequences of ``x`` (brute force; test oracle)."""
    return _greene(x, k, decreasing=False)


def max_union_decreasing(x: Iterable, k: int) -> int:
    """Maximal total length of a union of ``k`` disjoint strictly
    decreasing subsequences of ``x`` (brute force; test oracle)."""
    return _greene(x, k, decreasing=True)


def order_equivalent(x: Iterable, y: Iterable) -> bool:
    """Whether ``y`` refines the comparison pattern of ``x``.

    True iff for every pair of positions i < j: ``y_i < y_j`` whenever
    ``x_i <= x_j`` and ``y_i > y_j`` whenever ``x_i > x_j``.  Sequences
    related this way have equal insertion shapes (ties in ``x`` must open
    up into strict increases in ``y``).
    """
    x = tuple(x)
    y = tuple(y)
    if len(x) != len(y):
        raise ValueError("sequences must have equal length")
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            if x[i] <= x[j]:
                if not y[i] < y[j]:
                    return False
            elif not y[i] > y[j]:
                return False
    return True


def dual_rs_shape(x: Iterable) -> Partition:
    """Transpose of the insertion shape (column lengths)."""
    return transpose(rs_shape(x))
