"""Associated varieties of highest weight Harish-Chandra modules.

For each Hermitian family the admissible weights are the ones pairing to
positive integers with every compact positive root.  The associated
variety of the module at such a weight is the closure of one nilpotent
orbit in a linear chain; this module computes its index via exact
closed-form case analyses on the weight and cross-checks the classical
families against the GK dimension.

Family tags: ``su`` SU(k, n-k), ``sp`` Sp(n, R), ``sostar`` SO*(2n),
``soodd`` SO(2, 2n-1), ``soeven`` SO(2, 2n-2), ``e6`` E6(-14), ``e7``
E7(-25).  Weights for the exceptional families live directly in the
8-coordinate realization of the root system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gkdim import Weight, gk_dimension, make_weight
from .partitions import column_parity_count, transpose
from .rootsys import Root, build, pairing
from .signed_perms import mirror_right
from .tableaux import rs_shape

__all__ = [
    "HermitianGroup",
    "OrbitResult",
    "NotHarishChandraError",
    "FAMILIES",
    "constants",
    "orbit_dimension",
    "is_hc_weight",
    "orbit_index",
]

FAMILIES = ("su", "sp", "sostar", "soodd", "soeven", "e6", "e7")

HALF = Fraction(1, 2)


class NotHarishChandraError(ValueError):
    """The weight is not dominant for the compact positive roots."""


@dataclass(frozen=True)
class HermitianGroup:
    family: str
    n: int = 0
    k: int = 0

    def __post_init__(self):
        fam = self.family
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}; one of {FAMILIES}")
        if fam == "su":
            if not 1 <= self.k < self.n:
                raise ValueError("su(k, n-k) needs 1 <= k < n")
        elif fam == "sp":
            if self.n < 2:
                raise ValueError("sp(n, R) needs n >= 2")
        elif fam == "sostar":
            if self.n < 4:
                raise ValueError("so*(2n) needs n >= 4")
        elif fam == "soodd":
            if self.n < 3:
                raise ValueError("so(2, 2n-1) needs n >= 3")
        elif fam == "soeven":
            if self.n < 4:
                raise ValueError("so(2, 2n-2) needs n >= 4")

    @property
    def weight_length(self) -> int:
        return 8 if self.family in ("e6", "e7") else self.n

    @property
    def label(self) -> str:
        if self.family == "su":
            return f"su({self.k},{self.n - self.k})"
        if self.family == "sp":
            return f"sp({self.n},R)"
        if self.family == "sostar":
            return f"so*({2 * self.n})"
        if self.family == "soodd":
            return f"so(2,{2 * self.n - 1})"
        if self.family == "soeven":
            return f"so(2,{2 * self.n - 2})"
        return "e6(-14)" if self.family == "e6" else "e7(-25)"


@dataclass(frozen=True)
class OrbitResult:
    k: int
    orbit_dim: int
    gk_dimension: int | None


def constants(group: HermitianGroup) -> tuple[int, Fraction, int]:
    """The chain length r, the constant c and the shifted dual Coxeter
    number used in the orbit dimension formula."""
    fam, n = group.family, group.n
    if fam == "su":
        return min(group.k, n - group.k), Fraction(1), n - 1
    if fam == "sp":
        return n, HALF, n
    if fam == "sostar":
        return n // 2, Fraction(2), 2 * n - 3
    if fam == "soodd":
        return 2, Fraction(2 * n - 3, 2), 2 * n - 2
    if fam == "soeven":
        return 2, Fraction(n - 2), 2 * n - 3
    if fam == "e6":
        return 2, Fraction(3), 11
    return 3, Fraction(4), 17


def orbit_dimension(group: HermitianGroup, k: int) -> int:
    """dim of the k-th orbit closure: ``k(h-1) - k(k-1)c``; integral."""
    r, c, h1 = constants(group)
    if not 0 <= k <= r:
        raise ValueError(f"orbit index {k} out of range [0, {r}]")
    value = k * h1 - k * (k - 1) * c
    assert value.denominator == 1
    return int(value)


# Exceptional data: the marker root sets of the integral criterion, in the
# 8-coordinate realization.

def _half_root(signs: str) -> Root:
    return tuple(Fraction(1 if ch == "+" else -1, 2) for ch in signs)


_E6_MARKERS = (
    (_half_root("+++----+"), _half_root("---+---+")),
    (_half_root("+------+"),),
)

_E7_MARKERS = (
    (
        _half_root("+--+-+-+"),
        _half_root("-++--+-+"),
        (0, 0, 0, 0, 1, 1, 0, 0),
    ),
    ((1, 0, 0, 0, 0, 1, 0, 0), (-1, 0, 0, 0, 0, 1, 0, 0)),
    ((0, 0, 0, 0, -1, 1, 0, 0),),
)


def marker_sets(family: str) -> tuple[tuple[Root, ...], ...]:
    """The marker root sets S_1, S_2(, S_3) of the exceptional criteria."""
    if family == "e6":
        raw = _E6_MARKERS
    elif family == "e7":
        raw = _E7_MARKERS
    else:
        raise ValueError(f"no marker sets for family {family!r}")
    return tuple(tuple(tuple(Fraction(v) for v in root) for root in s) for s in raw)


def _is_integer(v: Fraction) -> bool:
    return v.denominator == 1


def _is_half_integer_grid(v: Fraction) -> bool:
    return (2 * v).denominator == 1


def _compact_pairings(group: HermitianGroup, lam: Weight):
    """Yield the pairings of the weight with the compact positive roots."""
    fam, n = group.family, group.n
    if fam in ("e6", "e7"):
        system = build(fam.upper())
        for alpha in system.compact_positive_roots():
            yield pairing(lam, alpha)
        return
    if fam == "su":
        blocks = (range(1, group.k + 1), range(group.k + 1, n + 1))
        for block in blocks:
            block = list(block)
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    yield lam[block[a] - 1] - lam[block[b] - 1]
        return
    if fam in ("sp", "sostar"):
        for i in range(n):
            for j in range(i + 1, n):
                yield lam[i] - lam[j]
        return
    # so(2, *): compact roots live on coordinates 2..n
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            yield lam[i - 1] - lam[j - 1]
            yield lam[i - 1] + lam[j - 1]
    if fam == "soodd":
        for i in range(2, n + 1):
            yield 2 * lam[i - 1]


def is_hc_weight(group: HermitianGroup, lam: Iterable) -> bool:
    """True when every compact positive pairing is a positive integer."""
    lam = make_weight(lam)
    if len(lam) != group.weight_length:
        raise ValueError(
            f"{group.label} weight needs {group.weight_length} coordinates,"
            f" got {len(lam)}"
        )
    return all(_is_integer(v) and v > 0 for v in _compact_pairings(group, lam))


def _second_column(lam_sequence) -> int:
    """Length of the second column of the insertion shape."""
    return transpose(rs_shape(lam_sequence)).row(2)


def _classical_index(group: HermitianGroup, lam: Weight) -> int:
    fam, n = group.family, group.n
    if fam == "su":
        if len({v - (v.numerator // v.denominator) for v in lam}) == 1:
            return _second_column(lam)
        return min(group.k, n - group.k)
    if fam == "sp":
        q2 = _second_column(mirror_right(lam))
        if _is_integer(lam[0]):
            k = 2 * column_parity_count(q2, 2, "odd")
        elif _is_integer(lam[0] - HALF):
            k = 2 * column_parity_count(q2, 2, "even") + 1
        else:
            return n
        # The quadratic dimension count has equal values at k and
        # 2n+1-k; when the closed form lands one past the chain the
        # in-range solution is n itself (full second column).
        return min(k, n)
    if fam == "sostar":
        if _is_half_integer_grid(lam[0]):
            q2 = _second_column(mirror_right(lam))
            return column_parity_count(q2, 2, "even")
        return n // 2
    d = lam[0] - lam[1]
    if fam == "soodd":
        if _is_integer(d) and lam[0] > lam[1]:
            return 0
        if _is_integer(d - HALF) and lam[0] > 0:
            return 1
        return 2
    # soeven
    if _is_integer(d) and lam[0] > lam[1]:
        return 0
    if _is_integer(d) and -abs(lam[n - 1]) < lam[0] <= lam[1]:
        return 1
    return 2


def _exceptional_index(group: HermitianGroup, lam: Weight) -> int:
    system = build(group.family.upper())
    integral = all(
        _is_integer(pairing(lam, alpha)) for alpha in system.simple_roots
    )
    r, _, _ = constants(group)
    if not integral:
        return r
    markers = marker_sets(group.family)
    hits = [any(pairing(lam, root) > 0 for root in s) for s in markers]
    # hits[i] tells whether S_{i+1} meets the strictly-positive set; the
    # orbit index is r minus the largest hit stage, r when none is hit.
    for k in range(r):
        if hits[r - 1 - k]:
            return k
    return r


def _ambient_type(family: str) -> str:
    return {"su": "A", "sp": "C", "sostar": "D", "soodd": "B", "soeven": "D"}[family]


def orbit_index(group: HermitianGroup, lam: Iterable) -> OrbitResult:
    """Index and dimension of the associated orbit closure at ``lam``.

    Raises :class:`NotHarishChandraError` unless the weight is compactly
    dominant.  For classical families the GK dimension is computed
    independently and returned alongside; it must equal the orbit
    dimension (the package's central cross-check).
    """
    lam = make_weight(lam)
    if not is_hc_weight(group, lam):
        raise NotHarishChandraError(
            f"{group.label}: weight {lam} is not compactly dominant"
        )
    if group.family in ("e6", "e7"):
        k = _exceptional_index(group, lam)
        gk = None
    else:
        k = _classical_index(group, lam)
        gk = gk_dimension(_ambient_type(group.family), lam)
    return OrbitResult(k, orbit_dimension(group, k), gk)
