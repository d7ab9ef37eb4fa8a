"""Explicit root systems over exact rationals.

Classical types live in R^n with the usual coordinate realization; E6 and
E7 live in R^8 with half-integer coordinates.  Roots are generated from
the simple roots by reflection-orbit closure (one code path for every
type) and positivity is decided by the sign of the simple-root
coordinates, which are solved for exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Root",
    "RootSystem",
    "build",
    "pairing",
    "rho",
    "psi_plus",
    "integral_subsystem",
]

Root = tuple[Fraction, ...]

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n - 1) // 2,  # n = number of coordinates, system A_{n-1}
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * n - n,
    "E6": lambda n: 36,
    "E7": lambda n: 63,
}


def _vec(values: Iterable) -> Root:
    return tuple(Fraction(v) for v in values)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def pairing(lam: Sequence, alpha: Sequence) -> Fraction:
    """Exact ``2(lam, alpha) / (alpha, alpha)``."""
    lam = _vec(lam)
    alpha = _vec(alpha)
    if len(lam) != len(alpha):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(alpha)}")
    return 2 * _dot(lam, alpha) / _dot(alpha, alpha)


def _reflect(beta: Root, alpha: Root) -> Root:
    c = pairing(beta, alpha)
    return tuple(b - c * a for b, a in zip(beta, alpha))


def _simple_roots(typ: str, rank: int) -> tuple[tuple[Root, ...], int]:
    """Simple roots and the ambient dimension."""
    if typ == "A":
        if rank < 1:
            raise ValueError("type A needs at least one coordinate")
        n = rank  # A_{n-1} realized in R^n
        basis = [_basis_diff(i, i + 1, n) for i in range(1, n)]
        return tuple(basis), n
    if typ in ("B", "C", "D"):
        n = rank
        if n < 1 or (typ == "D" and n < 2):
            raise ValueError(f"rank {n} not supported for type {typ}")
        basis = [_basis_diff(i, i + 1, n) for i in range(1, n)]
        last = [Fraction(0)] * n
        if typ == "B":
            last[n - 1] = Fraction(1)
        elif typ == "C":
            last[n - 1] = Fraction(2)
        else:
            basis_last = [Fraction(0)] * n
            basis_last[n - 2] = Fraction(1)
            basis_last[n - 1] = Fraction(1)
            last = basis_last
        basis.append(tuple(last))
        return tuple(basis), n
    if typ in ("E6", "E7"):
        n = 6 if typ == "E6" else 7
        half = Fraction(1, 2)
        alpha1 = (half, -half, -half, -half, -half, -half, -half, half)
        alpha2 = _vec((1, 1, 0, 0, 0, 0, 0, 0))
        basis = [alpha1, alpha2]
        for k in range(3, n + 1):
            basis.append(_basis_diff(k - 2, k - 1, 8, negate_first=True))
        return tuple(basis), 8
    raise ValueError(f"unsupported root system type {typ!r}")


def _basis_diff(i: int, j: int, dim: int, negate_first: bool = False) -> Root:
    """The vector e_i - e_j (or e_j - e_i when negate_first)."""
    v = [Fraction(0)] * dim
    if negate_first:
        i, j = j, i
    v[i - 1] = Fraction(1)
    v[j - 1] = Fraction(-1)
    return tuple(v)


def _solve_in_basis(basis: Sequence[Root], target: Root) -> tuple[Fraction, ...]:
    """Coordinates of ``target`` in the linearly independent ``basis``.

    Exact Gaussian elimination on the (overdetermined, consistent)
    system; raises if the target leaves the span.
    """
    rows = len(target)
    cols = len(basis)
    aug = [[basis[j][i] for j in range(cols)] + [target[i]] for i in range(rows)]
    pivot_rows: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("basis is not linearly independent")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivot_rows.append(r)
        r += 1
    for i in range(r, rows):
        if aug[i][cols] != 0:
            raise ValueError("target outside the span of the basis")
    return tuple(aug[i][cols] for i in range(cols))


class RootSystem:
    """A generated root system with its positive system."""

    def __init__(self, typ: str, rank: int):
        simple, dim = _simple_roots(typ, rank)
        roots: set[Root] = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for alpha in simple:
                    image = _reflect(beta, alpha)
                    if image not in roots:
                        roots.add(image)
                        nxt.append(image)
            frontier = nxt
        coords = {root: _solve_in_basis(simple, root) for root in roots}
        positive = []
        for root, cs in coords.items():
            if all(c >= 0 for c in cs):
                if any(c != int(c) for c in cs):
                    raise ValueError(f"non-integer simple coordinates for {root}")
                positive.append(root)
        expected = _POSITIVE_COUNTS[typ](rank)
        if len(positive) != expected or 2 * len(positive) != len(roots):
            raise ValueError(
                f"{typ} rank {rank}: generated {len(positive)} positive roots,"
                f" expected {expected}"
            )
        self.typ = typ
        self.rank = rank
        self.dim = dim
        self.simple_roots = tuple(simple)
        self.roots = frozenset(roots)
        self.positive_roots = tuple(sorted(positive))
        self.simple_coords = {
            root: tuple(int(c) for c in coords[root]) for root in self.positive_roots
        }
        if typ == "E6":
            self.compact_simple = tuple(simple[1:])  # drop the spin simple root
        elif typ == "E7":
            self.compact_simple = tuple(simple[:-1])  # drop the last node
        else:
            self.compact_simple = ()

    def compact_positive_roots(self) -> tuple[Root, ...]:
        """Positive roots supported on the compact simple roots (E types)."""
        if not self.compact_simple:
            raise ValueError(f"no compact subset fixed for type {self.typ}")
        drop = 0 if self.typ == "E6" else len(self.simple_roots) - 1
        return tuple(
            root
            for root in self.positive_roots
            if self.simple_coords[root][drop] == 0
        )

    def __repr__(self) -> str:
        return f"RootSystem({self.typ!r}, {self.rank})"


@lru_cache(maxsize=None)
def build(typ: str, rank: int | None = None) -> RootSystem:
    """Build (and cache) a root system.

    ``build("B", 3)``, ``build("E6")``.  For E types the rank argument is
    optional and checked when given.
    """
    typ = str(typ).upper()
    if typ in ("E6", "E7"):
        implied = int(typ[1])
        if rank is not None and rank != implied:
            raise ValueError(f"{typ} has rank {implied}")
        return RootSystem(typ, implied)
    if rank is None:
        raise ValueError("rank is required for classical types")
    if typ not in ("A", "B", "C", "D"):
        raise ValueError(f"unsupported type {typ!r}")
    return RootSystem(typ, rank)


def rho(system: RootSystem) -> Root:
    """Half the sum of the positive roots."""
    total = [Fraction(0)] * system.dim
    for root in system.positive_roots:
        for i, v in enumerate(root):
            total[i] += v
    return tuple(v / 2 for v in total)


def psi_plus(system: RootSystem, lam: Sequence) -> frozenset[Root]:
    """Positive roots pairing strictly positively with ``lam``."""
    lam = _vec(lam)
    return frozenset(
        alpha for alpha in system.positive_roots if pairing(lam, alpha) > 0
    )


def integral_subsystem(system: RootSystem, lam: Sequence) -> frozenset[Root]:
    """Roots whose pairing with ``lam`` is an integer."""
    lam = _vec(lam)
    return frozenset(
        alpha for alpha in system.roots if pairing(lam, alpha).denominator == 1
    )
