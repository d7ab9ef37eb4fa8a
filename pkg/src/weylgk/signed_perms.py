"""Signed permutations: the hyperoctahedral group and its even subgroup.

An element w is stored by its window ``(w(1), ..., w(n))``, a tuple of
nonzero integers whose absolute values are exactly ``{1, ..., n}``; the
action extends to negative arguments by ``w(-i) = -w(i)``.  The full group
of these is the type B/C Weyl group; the even-sign elements form the
type D subgroup.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, Sequence

__all__ = [
    "WeylType",
    "SignedPermutation",
    "mirror_left",
    "mirror_right",
    "compose",
    "inverse",
    "left_multiply_t",
    "right_multiply_t",
    "length",
    "group_elements",
    "group_order",
    "act_on_weight",
    "parse_window",
]

ENUMERATION_RANK_CAP = {"A": 8, "B": 6, "C": 6, "D": 6}


class WeylType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class SignedPermutation:
    """Element of the signed permutation group on n letters."""

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int]):
        w = tuple(int(v) for v in window)
        n = len(w)
        if sorted(abs(v) for v in w) != list(range(1, n + 1)):
            raise ValueError(
                f"window must contain distinct absolute values 1..{n}: {w}"
            )
        object.__setattr__(self, "window", w)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    @classmethod
    def t(cls, n: int) -> "SignedPermutation":
        """The sign-change generator, window ``(-1, 2, ..., n)``."""
        return cls((-1,) + tuple(range(2, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """w(i) for i in [-n..-1] u [1..n], with w(-i) = -w(i)."""
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"argument out of range: {i}")
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def negative_count(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def is_even_signed(self) -> bool:
        """Membership in the type D subgroup."""
        return self.negative_count() % 2 == 0

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, SignedPermutation):
            return self.window == other.window
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)!r})"


def mirror_left(x: Sequence) -> tuple:
    """Prepend the reversed negation: ``(-x_n, ..., -x_1, x_1, ..., x_n)``."""
    x = tuple(x)
    return tuple(-v for v in reversed(x)) + x


def mirror_right(x: Sequence) -> tuple:
    """Append the reversed negation: ``(x_1, ..., x_n, -x_n, ..., -x_1)``."""
    x = tuple(x)
    return x + tuple(-v for v in reversed(x))


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """The product u o v, acting as ``(u o v)(i) = u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} != {v.n}")
    return SignedPermutation(u(v(i)) for i in range(1, u.n + 1))


def inverse(w: SignedPermutation) -> SignedPermutation:
    out = [0] * w.n
    for i, v in enumerate(w.window, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return SignedPermutation(out)


def left_multiply_t(w: SignedPermutation) -> SignedPermutation:
    """t o w: flips the sign of the window entry with absolute value 1."""
    return SignedPermutation(-v if abs(v) == 1 else v for v in w.window)


def right_multiply_t(w: SignedPermutation) -> SignedPermutation:
    """w o t: flips the sign of the first window entry."""
    return SignedPermutation((-w.window[0],) + w.window[1:])


def _inversions(window: Sequence[int]) -> int:
    n = len(window)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if window[i] > window[j]
    )


def length(w: SignedPermutation, typ: WeylType | str) -> int:
    """Coxeter length of ``w`` in the group of the stated type.

    Standard inversion-statistic closed forms; for type A the window must
    be a plain permutation, for type D it must be even-signed.
    """
    typ = WeylType(typ)
    inv = _inversions(w.window)
    neg_sum = sum(-v for v in w.window if v < 0)
    if typ == WeylType.A:
        if neg_sum:
            raise ValueError("type A element must have a positive window")
        return inv
    if typ in (WeylType.B, WeylType.C):
        return inv + neg_sum
    if not w.is_even_signed():
        raise ValueError(f"{w!r} is not even-signed, not a type D element")
    return inv + neg_sum - w.negative_count()


def group_order(typ: WeylType | str, n: int) -> int:
    typ = WeylType(typ)
    out = 1
    for i in range(2, n + 1):
        out *= i
    if typ in (WeylType.B, WeylType.C):
        out <<= n
    elif typ == WeylType.D:
        out <<= n - 1
    return out


def group_elements(typ: WeylType | str, n: int) -> Iterator[SignedPermutation]:
    """Yield every element of the group exactly once, windows in
    lexicographic order.

    Type A yields plain permutations (positive windows); type D yields
    only even-signed elements.  Guarded so that 2^n * n! stays tractable.
    """
    typ = WeylType(typ)
    if n < 1:
        raise ValueError("rank must be >= 1")
    cap = ENUMERATION_RANK_CAP[typ.value]
    if n > cap:
        raise ValueError(f"enumeration of type {typ.value} capped at rank {cap}")
    if typ == WeylType.A:
        values = list(range(1, n + 1))
    else:
        values = list(range(-n, 0)) + list(range(1, n + 1))

    def rec(prefix: list[int], used: set[int]) -> Iterator[SignedPermutation]:
        if len(prefix) == n:
            w = SignedPermutation(prefix)
            if typ != WeylType.D or w.is_even_signed():
                yield w
            return
        for v in values:
            if abs(v) not in used:
                prefix.append(v)
                used.add(abs(v))
                yield from rec(prefix, used)
                used.discard(abs(v))
                prefix.pop()

    yield from rec([], set())


def act_on_weight(w: SignedPermutation, lam: Sequence) -> tuple:
    """Linear action of ``w`` on a coordinate weight vector.

    The window acts on the reversed coordinate axes: the k-th window entry
    moves coordinate ``n+1-k`` to coordinate ``n+1-|w(k)|``, negated when
    ``w(k) < 0``.  In particular the generator ``t`` negates the last
    coordinate and for positive windows this restricts to a coordinate
    permutation.
    """
    lam = tuple(lam)
    n = w.n
    if len(lam) != n:
        raise ValueError(f"weight has length {len(lam)}, expected {n}")
    out: list = [None] * n
    for k in range(1, n + 1):
        v = w.window[k - 1]
        coeff = lam[n - k]
        out[n - abs(v)] = coeff if v > 0 else -coeff
    return tuple(out)


def parse_window(text: str) -> SignedPermutation:
    """Parse a comma-separated window such as ``"3,4,-1,5,2"``."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise ValueError("empty window")
    try:
        window = [int(s) for s in items]
    except ValueError as exc:
        raise ValueError(f"bad window entry in {text!r}") from exc
    return SignedPermutation(window)


