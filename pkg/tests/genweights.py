"""Random Harish-Chandra weight generators for the Hermitian families.

Each generator returns ``(weight, branch_tag)`` so sweeps can assert that
every case split of the orbit-index analysis actually gets exercised.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from weylgk import HermitianGroup

HALF = Fraction(1, 2)

SP_BRANCHES = ("int", "half", "generic")
SOSTAR_BRANCHES = ("int", "half", "generic")
SOODD_BRANCHES = ("int_gt", "int_le", "half_pos", "half_nonpos", "generic")
SOEVEN_BRANCHES = ("int_gt", "int_mid", "int_low", "nonint")
SU_BRANCHES = ("integral", "nonintegral")


def _descending(rng: Random, n: int, smallest: Fraction) -> list[Fraction]:
    """Strictly decreasing, integer gaps, last entry ``smallest``."""
    vals = [smallest]
    for _ in range(n - 1):
        vals.append(vals[-1] + rng.randint(1, 3))
    vals.reverse()
    return vals


def _offset(rng: Random, kind: str) -> Fraction:
    if kind == "int":
        return Fraction(0)
    if kind == "half":
        return HALF
    return Fraction(rng.randint(1, 2), rng.choice([3, 5, 7]))


def gen_sp(rng: Random, n: int) -> tuple[list[Fraction], str]:
    branch = rng.choice(SP_BRANCHES)
    base = Fraction(rng.randint(-8, 4)) + _offset(rng, branch)
    return _descending(rng, n, base), branch


def gen_sostar(rng: Random, n: int) -> tuple[list[Fraction], str]:
    branch = rng.choice(SOSTAR_BRANCHES)
    base = Fraction(rng.randint(-8, 4)) + _offset(rng, branch)
    return _descending(rng, n, base), branch


def _so_tail(rng: Random, count: int, positive: bool) -> list[Fraction]:
    """Strictly decreasing tail in Z or 1/2+Z."""
    half = rng.random() < 0.5
    smallest = (HALF if half else Fraction(1)) + rng.randint(0, 2)
    tail = _descending(rng, count, smallest)
    if not positive:
        if rng.random() < 0.5:
            tail[-1] = -tail[-1]
        elif not half and rng.random() < 0.3:
            tail[-1] = Fraction(0)
    return tail


def gen_soodd(rng: Random, n: int) -> tuple[list[Fraction], str]:
    tail = _so_tail(rng, n - 1, positive=True)
    l2 = tail[0]
    branch = rng.choice(SOODD_BRANCHES)
    if branch == "int_gt":
        lam1 = l2 + rng.randint(1, 4)
    elif branch == "int_le":
        lam1 = l2 - rng.randint(0, 6)
    elif branch == "half_pos":
        lam1 = l2 + HALF + rng.randint(0, 3)
    elif branch == "half_nonpos":
        base = l2 + HALF
        steps = int(base) + 1 + rng.randint(0, 3)  # push into lam1 <= 0
        lam1 = base - steps
        assert lam1 <= 0
    else:
        lam1 = l2 + Fraction(1, rng.choice([3, 5, 7])) + rng.randint(-4, 2)
    return [lam1] + tail, branch


def gen_soeven(rng: Random, n: int) -> tuple[list[Fraction], str]:
    tail = _so_tail(rng, n - 1, positive=False)
    l2, ln = tail[0], tail[-1]
    branch = rng.choice(SOEVEN_BRANCHES)
    if branch == "int_gt":
        lam1 = l2 + rng.randint(1, 4)
    elif branch == "int_mid":
        choices = [l2 - j for j in range(0, 12) if -abs(ln) < l2 - j <= l2]
        lam1 = rng.choice(choices)
    elif branch == "int_low":
        # -abs(ln) sits in the tail's coset, so the difference stays integral
        lam1 = -abs(ln) - rng.randint(0, 4)
    else:
        lam1 = l2 + rng.choice([HALF, Fraction(1, 3), Fraction(2, 5)])
        lam1 += rng.randint(-4, 2)
    return [lam1] + tail, branch


def gen_su(rng: Random, n: int, k: int) -> tuple[list[Fraction], str]:
    branch = rng.choice(SU_BRANCHES)
    f1 = Fraction(rng.choice([0, 1])) + (
        Fraction(1, 3) if rng.random() < 0.3 else Fraction(0)
    )
    block1 = _descending(rng, k, Fraction(rng.randint(-4, 4)) + f1)
    f2 = f1 if branch == "integral" else f1 + Fraction(1, rng.choice([2, 3, 5, 7]))
    block2 = _descending(rng, n - k, Fraction(rng.randint(-4, 4)) + f2)
    return block1 + block2, branch


def random_group_and_weight(rng: Random):
    """A random classical Hermitian group with an HC weight and branch tag."""
    fam = rng.choice(["sp", "sostar", "soodd", "soeven", "su"])
    if fam == "sp":
        n = rng.randint(2, 6)
        lam, branch = gen_sp(rng, n)
        return HermitianGroup("sp", n=n), lam, branch
    if fam == "sostar":
        n = rng.randint(4, 6)
        lam, branch = gen_sostar(rng, n)
        return HermitianGroup("sostar", n=n), lam, branch
    if fam == "soodd":
        n = rng.randint(3, 6)
        lam, branch = gen_soodd(rng, n)
        return HermitianGroup("soodd", n=n), lam, branch
    if fam == "soeven":
        n = rng.randint(4, 6)
        lam, branch = gen_soeven(rng, n)
        return HermitianGroup("soeven", n=n), lam, branch
    n = rng.randint(2, 6)
    k = rng.randint(1, n - 1)
    lam, branch = gen_su(rng, n, k)
    return HermitianGroup("su", n=n, k=k), lam, branch
