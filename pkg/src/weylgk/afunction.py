"""a-function values on classical Weyl groups.

Two independent routes are provided.  The direct route reads the value
off the insertion shape of the (doubled) window as a row-weighted box
count; the symbol route goes through the two-row symbol of the same
shape.  They agree on every element (exhaustively tested), which is the
cross-check the rest of the package leans on.

Types B and C share one Weyl group, so both are served by the B path.
"""

from __future__ import annotations

from typing import Iterable

from .signed_perms import SignedPermutation, WeylType, mirror_left
from .symbols import (
    b_symbol_of_shape,
    b_symbol_value,
    d_symbol_of_b,
    d_symbol_value,
)
from .tableaux import rs_shape, shape_statistic

__all__ = ["a_value", "a_value_symbol"]


def _coerce(w) -> SignedPermutation:
    if isinstance(w, SignedPermutation):
        return w
    return SignedPermutation(w)


def _check_membership(typ: WeylType, w: SignedPermutation) -> None:
    if typ == WeylType.A and any(v < 0 for v in w.window):
        raise ValueError("type A elements must have a positive window")
    if typ == WeylType.D and not w.is_even_signed():
        raise ValueError(f"{w!r} has an odd number of sign changes")


def a_value(typ: WeylType | str, w: SignedPermutation | Iterable[int]) -> int:
    """a-function value of ``w`` in the Weyl group of the given type.

    Type A uses the plain row statistic of the window itself; types B/C
    and D use the odd- and even-box statistics of the doubled window.
    """
    typ = WeylType(typ)
    w = _coerce(w)
    _check_membership(typ, w)
    if typ == WeylType.A:
        return shape_statistic(w.window, "plain")
    doubled = mirror_left(w.window)
    if typ in (WeylType.B, WeylType.C):
        return shape_statistic(doubled, "odd")
    return shape_statistic(doubled, "even")


def a_value_symbol(typ: WeylType | str, w: SignedPermutation | Iterable[int]) -> int:
    """a-function via the symbol of the doubled-window shape.

    Only types B/C/D carry symbols; the padding parameter is m = n.
    """
    typ = WeylType(typ)
    w = _coerce(w)
    _check_membership(typ, w)
    if typ == WeylType.A:
        raise ValueError("symbols are defined for types B, C and D only")
    shape = rs_shape(mirror_left(w.window))
    sym = b_symbol_of_shape(shape, w.n)
    if typ in (WeylType.B, WeylType.C):
        return b_symbol_value(sym)
    return d_symbol_value(d_symbol_of_b(sym))
