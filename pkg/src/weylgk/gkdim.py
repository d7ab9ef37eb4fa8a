"""Gelfand-Kirillov dimensions of simple highest weight modules.

The weight is an exact rational coordinate vector.  Its entries are
grouped by their coset modulo the integers: for an ambient system with
sum roots (types B/C/D) the cosets z and -z interact, so classes are
keyed by a representative in [0, 1/2]; type A has only difference roots,
so classes are keyed by the fractional part itself.  Each class carries
an orthogonal subsystem of the integral root system, whose type decides
which row statistic of the class subsequence enters the dimension count:

* integer class:       B ambient -> B subsystem, C -> C, D -> D;
* half-integer class:  B -> B, C -> D, D -> D;
* anything else:       type A (possibly joining the z and -z sides).

The dimension is the number of positive roots minus the summed
statistics.  Entries must be rationals (ints or Fractions); floats are
refused because every branch here is an exact coset membership test.
Complex coordinates are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rootsys import Root, _vec
from .signed_perms import WeylType, mirror_right
from .tableaux import shape_statistic

__all__ = [
    "Weight",
    "make_weight",
    "parse_weight",
    "CosetClass",
    "coset_decompose",
    "class_sequence",
    "class_roots",
    "gk_dimension",
    "gk_report",
]

Weight = tuple[Fraction, ...]

HALF = Fraction(1, 2)


def make_weight(values: Iterable) -> Weight:
    """Coerce to a tuple of exact rationals; floats are rejected."""
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError(
                f"float weight entry {v!r}; pass Fraction or a decimal string"
            )
        out.append(Fraction(v))
    return tuple(out)


def parse_weight(text: str) -> Weight:
    """Parse a comma-separated rational vector.

    Accepts integers, fractions ``p/q`` and decimal literals; decimals
    convert exactly (``"3.1"`` is 31/10), never through binary floats.
    """
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise ValueError("empty weight")
    try:
        return tuple(Fraction(s) for s in items)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational in {text!r}") from exc


@dataclass(frozen=True)
class CosetClass:
    """One coset class of weight coordinates.

    ``z`` is the class representative; ``indices`` the 1-based positions
    whose entries lie in z + Z (ascending); ``partner`` the positions in
    -z + Z for a generic class (empty otherwise).  ``kind`` is the
    subsystem type, with 'empty' for classes whose subsystem has no
    roots (single-index A and D classes).
    """

    z: Fraction
    indices: tuple[int, ...]
    partner: tuple[int, ...]
    kind: str

    @property
    def weight_count(self) -> int:
        return len(self.indices) + len(self.partner)


def _frac(v: Fraction) -> Fraction:
    return v - (v.numerator // v.denominator)


def coset_decompose(typ: WeylType | str, lam: Iterable) -> list[CosetClass]:
    """Group weight coordinates into coset classes.

    Classes come back sorted by representative.  For B/C/D the
    representative is min(f, 1-f) with f the fractional part, the
    ``indices`` side being the one with f < 1/2; for type A each
    fractional part is its own class.
    """
    typ = WeylType(typ)
    lam = make_weight(lam)
    if typ == WeylType.A:
        groups: dict[Fraction, list[int]] = {}
        for i, v in enumerate(lam, start=1):
            groups.setdefault(_frac(v), []).append(i)
        out = []
        for f in sorted(groups):
            members = tuple(groups[f])
            kind = "A" if len(members) >= 2 else "empty"
            out.append(CosetClass(f, members, (), kind))
        return out

    plus: dict[Fraction, list[int]] = {}
    minus: dict[Fraction, list[int]] = {}
    for i, v in enumerate(lam, start=1):
        f = _frac(v)
        key = min(f, 1 - f)
        if f == key:
            plus.setdefault(key, []).append(i)
        else:
            minus.setdefault(key, []).append(i)

    out = []
    for key in sorted(set(plus) | set(minus)):
        indices = tuple(plus.get(key, ()))
        partner = tuple(minus.get(key, ()))
        if key == 0 or key == HALF:
            assert not partner
            if typ == WeylType.B:
                kind = "B"
            elif typ == WeylType.C:
                kind = "C" if key == 0 else "D"
            else:
                kind = "D"
            if kind == "D" and len(indices) < 2:
                kind = "empty"
        else:
            kind = "A" if len(indices) + len(partner) >= 2 else "empty"
        out.append(CosetClass(key, indices, partner, kind))
    return out


def class_sequence(cls: CosetClass, lam: Iterable) -> tuple[Fraction, ...]:
    """The subsequence of the weight attached to a class.

    Integer/half-integer classes list their entries in index order; a
    generic class appends the negated partner entries in reverse index
    order.
    """
    lam = make_weight(lam)
    head = tuple(lam[i - 1] for i in cls.indices)
    tail = tuple(-lam[j - 1] for j in reversed(cls.partner))
    return head + tail


def _unit(i: int, n: int, value: int = 1) -> Root:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(value)
    return tuple(v)


def _sum_root(i: int, j: int, n: int, sign_j: int) -> Root:
    v = [Fraction(0)] * n
    v[i - 1] += 1
    v[j - 1] += sign_j
    return tuple(v)


def class_roots(cls: CosetClass, typ: WeylType | str, n: int) -> frozenset[Root]:
    """Materialize the subsystem of a class inside R^n."""
    typ = WeylType(typ)
    roots: set[Root] = set()
    idx = cls.indices
    if cls.kind == "empty":
        return frozenset()
    if cls.kind == "A":
        for group in (idx, cls.partner):
            for i in group:
                for j in group:
                    if i != j:
                        roots.add(_sum_root(i, j, n, -1))
        for i in idx:
            for j in cls.partner:
                roots.add(_sum_root(i, j, n, 1))
                roots.add(tuple(-v for v in _sum_root(i, j, n, 1)))
        return frozenset(roots)
    # B/C/D classes live on one index set.
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            for vec in (
                _sum_root(i, j, n, -1),
                _sum_root(i, j, n, 1),
            ):
                roots.add(vec)
                roots.add(tuple(-v for v in vec))
    if cls.kind == "B":
        for i in idx:
            roots.add(_unit(i, n))
            roots.add(_unit(i, n, -1))
    elif cls.kind == "C":
        for i in idx:
            roots.add(_unit(i, n, 2))
            roots.add(_unit(i, n, -2))
    return frozenset(roots)


def _class_statistic(cls: CosetClass, lam: Weight) -> int:
    seq = class_sequence(cls, lam)
    if cls.kind in ("B", "C"):
        return shape_statistic(mirror_right(seq), "odd")
    if cls.kind == "D":
        return shape_statistic(mirror_right(seq), "even")
    if cls.kind == "A":
        return shape_statistic(seq, "plain")
    return 0  # empty subsystem contributes nothing


def positive_count(typ: WeylType | str, n: int) -> int:
    """Number of positive roots of the ambient system on n coordinates."""
    typ = WeylType(typ)
    if typ == WeylType.A:
        return n * (n - 1) // 2
    if typ == WeylType.D:
        return n * n - n
    return n * n


def gk_dimension(typ: WeylType | str, lam: Iterable) -> int:
    """GK dimension of the simple highest weight module at ``lam``.

    ``lam`` has one coordinate per A/B/C/D index (type A with n
    coordinates means the system A_{n-1}).
    """
    typ = WeylType(typ)
    lam = make_weight(lam)
    if not lam:
        raise ValueError("weight must have at least one coordinate")
    total = positive_count(typ, len(lam))
    for cls in coset_decompose(typ, lam):
        total -= _class_statistic(cls, lam)
    return total


def gk_report(typ: WeylType | str, lam: Iterable) -> dict:
    """Dimension plus a per-class breakdown (used by the CLI)."""
    typ = WeylType(typ)
    lam = make_weight(lam)
    classes = []
    total = positive_count(typ, len(lam))
    for cls in coset_decompose(typ, lam):
        stat = _class_statistic(cls, lam)
        total -= stat
        classes.append(
            {
                "z": str(cls.z),
                "indices": list(cls.indices),
                "partner": list(cls.partner),
                "type": cls.kind,
                "sequence": [str(v) for v in class_sequence(cls, lam)],
                "contribution": stat,
            }
        )
    return {"gkdim": total, "classes": classes}
