"""Domino tableaux and two-row bumping insertion for signed sequences.

A domino tableau tiles a Young diagram with labelled two-box dominoes so
that for every label j the boxes carrying labels <= j again form a Young
diagram.  Inserting a signed value into a tableau starts a new domino in
the first row (positive sign, horizontal) or the first column (negative
sign, vertical) and then pushes the larger labels outward one at a time:

* a pushed domino that no longer overlaps the shape stays where it was;
* one that overlaps in a single box (k, l) is rotated onto its free box
  together with the diagonal neighbour (k+1, l+1);
* one that is covered completely is bumped whole into the next row
  (horizontal) or next column (vertical), appended at its current end.

Feeding the window of a signed permutation through this insertion yields
an insertion tableau and a recording tableau of equal shape; the recording
tableau stores the step number on the two boxes added at that step.

The *hollow* view of a tableau keeps only the boxes (k, l) with k + l
even, with their labels; it is the part of the data that survives sign
twists of the smallest letter.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition

__all__ = [
    "Cell",
    "DominoTableau",
    "HollowTableau",
    "pq_tableaux",
    "insertion_tableau",
    "recording_tableau",
    "hollow",
]

Cell = tuple[int, int]  # (row, column), 1-based


def _is_adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


class DominoTableau:
    """Immutable labelled domino tiling of a Young diagram."""

    __slots__ = ("dominoes", "grid")

    def __init__(self, dominoes: Mapping[int, Iterable[Cell]]):
        cleaned: dict[int, tuple[Cell, Cell]] = {}
        grid: dict[Cell, int] = {}
        for label, cells in dominoes.items():
            if not isinstance(label, int) or label < 1:
                raise ValueError(f"labels must be positive integers, got {label!r}")
            pair = tuple(sorted((int(r), int(c)) for r, c in cells))
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValueError(f"domino {label} must cover two distinct boxes")
            a, b = pair
            if min(a + b) < 1:
                raise ValueError(f"domino {label} leaves the quadrant: {pair}")
            if not _is_adjacent(a, b):
                raise ValueError(f"domino {label} boxes not adjacent: {pair}")
            for cell in pair:
                if cell in grid:
                    raise ValueError(f"box {cell} covered twice")
                grid[cell] = label
            cleaned[label] = (a, b)
        self._check_prefixes(cleaned)
        object.__setattr__(self, "dominoes", cleaned)
        object.__setattr__(self, "grid", grid)

    @staticmethod
    def _check_prefixes(cleaned: dict[int, tuple[Cell, Cell]]) -> None:
        # Every label-prefix must be a Young diagram; equivalently each
        # domino, taken in label order, extends its rows contiguously and
        # keeps row lengths weakly decreasing.
        rows: dict[int, int] = {}
        for label in sorted(cleaned):
            for r, c in sorted(cleaned[label]):
                if c != rows.get(r, 0) + 1:
                    raise ValueError(
                        f"label {label} breaks the diagram at box {(r, c)}"
                    )
                rows[r] = c
                if r > 1 and rows[r] > rows.get(r - 1, 0):
                    raise ValueError(
                        f"label {label} makes row {r} longer than row {r - 1}"
                    )

    def __setattr__(self, name, value):
        raise AttributeError("DominoTableau is immutable")

    @classmethod
    def empty(cls) -> "DominoTableau":
        return cls({})

    @property
    def shape(self) -> Partition:
        rows: dict[int, int] = {}
        for r, _ in self.grid:
            rows[r] = rows.get(r, 0) + 1
        return Partition(rows.get(i, 0) for i in range(1, len(rows) + 1))

    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.dominoes))

    def domino(self, label: int) -> tuple[Cell, Cell]:
        return self.dominoes[label]

    def orientation(self, label: int) -> str:
        a, b = self.dominoes[label]
        return "horizontal" if a[0] == b[0] else "vertical"

    def __contains__(self, label: int) -> bool:
        return label in self.dominoes

    def __len__(self) -> int:
        return len(self.dominoes)

    def __eq__(self, other) -> bool:
        if isinstance(other, DominoTableau):
            return self.dominoes == other.dominoes
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.dominoes.items()))

    def __repr__(self) -> str:
        return f"DominoTableau({self.dominoes!r})"

    def insert(self, sign: int, label: int) -> "DominoTableau":
        """Insert a new domino ``label`` with the given sign; see module
        docstring for the bumping rules."""
        steps = list(self._insert_steps(sign, label))
        return steps[-1]

    def insert_trace(self, sign: int, label: int) -> list["DominoTableau"]:
        """All intermediate tableaux of :meth:`insert`, ending at the
        result (one entry per processed label)."""
        return list(self._insert_steps(sign, label))

    def _insert_steps(self, sign: int, label: int) -> Iterator["DominoTableau"]:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if label in self.dominoes:
            raise ValueError(f"label {label} already present")

        placed = {j: self.dominoes[j] for j in self.dominoes if j < label}
        rows: dict[int, int] = {}
        for cells in placed.values():
            for r, c in cells:
                rows[r] = max(rows.get(r, 0), c)
        cols: dict[int, int] = {}
        for cells in placed.values():
            for r, c in cells:
                cols[c] = max(cols.get(c, 0), r)

        def occupied(cell: Cell) -> bool:
            r, c = cell
            return c <= rows.get(r, 0)

        def add(j: int, a: Cell, b: Cell) -> None:
            for r, c in sorted((a, b)):
                assert not occupied((r, c)), f"box {(r, c)} added twice"
                assert c == rows.get(r, 0) + 1, f"box {(r, c)} not contiguous"
                rows[r] = c
                assert r == 1 or rows[r] <= rows.get(r - 1, 0), (
                    f"row {r} outgrew row {r - 1}"
                )
                cols[c] = max(cols.get(c, 0), r)
            placed[j] = (a, b) if a < b else (b, a)

        if sign > 0:
            end = rows.get(1, 0)
            add(label, (1, end + 1), (1, end + 2))
        else:
            end = cols.get(1, 0)
            add(label, (end + 1, 1), (end + 2, 1))
        yield DominoTableau(placed)

        for j in sorted(k for k in self.dominoes if k > label):
            a, b = self.dominoes[j]
            overlap = [cell for cell in (a, b) if occupied(cell)]
            if not overlap:
                add(j, a, b)
            elif len(overlap) == 1:
                (k, l) = overlap[0]
                free = b if overlap[0] == a else a
                # A Young diagram can only contain the smaller box of the
                # pair, so the overlap is the left/top box.
                assert overlap[0] == min(a, b), f"overlap on outer box of {j}"
                add(j, free, (k + 1, l + 1))
            else:
                if a[0] == b[0]:  # horizontal: whole domino drops one row
                    r = a[0] + 1
                    end = rows.get(r, 0)
                    add(j, (r, end + 1), (r, end + 2))
                else:  # vertical: whole domino shifts one column
                    c = a[1] + 1
                    end = cols.get(c, 0)
                    add(j, (end + 1, c), (end + 2, c))
            yield DominoTableau(placed)

    def render(self, cell_width: int = 0) -> str:
        """Grid of labels, both boxes of a domino printed with its label."""
        if not self.grid:
            return "(empty)"
        width = max(
            cell_width, max(len(str(v)) for v in self.dominoes) if self.dominoes else 1
        )
        shape = self.shape
        lines = []
        for r in range(1, len(shape) + 1):
            lines.append(
                " ".join(
                    str(self.grid[(r, c)]).rjust(width)
                    for c in range(1, shape.row(r) + 1)
                )
            )
        return "\n".join(lines)


class HollowTableau:
    """The even boxes of a domino tableau with their labels."""

    __slots__ = ("cells",)

    def __init__(self, cells: Mapping[Cell, int]):
        cleaned = {(int(r), int(c)): int(v) for (r, c), v in cells.items()}
        for r, c in cleaned:
            if (r + c) % 2:
                raise ValueError(f"box {(r, c)} is odd")
        # Filled even boxes are closed under moving up-left.
        for r, c in cleaned:
            for a in range(1, r + 1):
                for b in range(1, c + 1):
                    if (a + b) % 2 == 0 and (a, b) not in cleaned:
                        raise ValueError(
                            f"box {(a, b)} missing below filled box {(r, c)}"
                        )
        object.__setattr__(self, "cells", dict(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("HollowTableau is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, HollowTableau):
            return self.cells == other.cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.cells.items()))

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        return f"HollowTableau({self.cells!r})"

    def render(self, cell_width: int = 0) -> str:
        if not self.cells:
            return "(empty)"
        width = max(cell_width, max(len(str(v)) for v in self.cells.values()))
        max_r = max(r for r, _ in self.cells)
        lines = []
        for r in range(1, max_r + 1):
            row_cols = [c for (rr, c) in self.cells if rr == r]
            line = [
                str(self.cells[(r, c)]).rjust(width)
                if (r, c) in self.cells
                else ".".rjust(width)
                for c in range(1, max(row_cols) + 1)
            ]
            lines.append(" ".join(line))
        return "\n".join(lines)


def hollow(d: DominoTableau) -> HollowTableau:
    """Keep the boxes (k, l) with k + l even, labelled as in ``d``."""
    return HollowTableau(
        {cell: label for cell, label in d.grid.items() if sum(cell) % 2 == 0}
    )


def pq_tableaux(x: Sequence[int]) -> tuple[DominoTableau, DominoTableau]:
    """Insertion and recording tableaux of a signed integer sequence.

    Entries must be nonzero with distinct absolute values; entry ``x_k``
    is inserted with its sign and label ``|x_k|``, and the recording
    tableau stores ``k`` on the step-k shape increment.
    """
    seq = tuple(int(v) for v in x)
    if any(v == 0 for v in seq):
        raise ValueError("entries must be nonzero")
    if len({abs(v) for v in seq}) != len(seq):
        raise ValueError("absolute values must be distinct")
    p = DominoTableau.empty()
    q_cells: dict[int, tuple[Cell, Cell]] = {}
    for step, v in enumerate(seq, start=1):
        nxt = p.insert(1 if v > 0 else -1, abs(v))
        added = sorted(set(nxt.grid) - set(p.grid))
        assert len(added) == 2 and _is_adjacent(*added), (
            f"step {step} grew the shape by {added}"
        )
        q_cells[step] = (added[0], added[1])
        p = nxt
    return p, DominoTableau(q_cells)


def insertion_tableau(x: Sequence[int]) -> DominoTableau:
    return pq_tableaux(x)[0]


def recording_tableau(x: Sequence[int]) -> DominoTableau:
    return pq_tableaux(x)[1]
