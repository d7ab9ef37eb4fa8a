import random
from fractions import Fraction

import pytest

from weylgk.partitions import Partition, transpose
from weylgk.signed_perms import mirror_left, mirror_right
from weylgk.tableaux import (
    GREENE_LENGTH_CAP,
    YoungTableau,
    max_union_decreasing,
    max_union_increasing,
    order_equivalent,
    rs_insert,
    rs_shape,
    shape_statistic,
)


def test_tableau_validation():
    YoungTableau([[1, 1, 2], [2, 3]])
    with pytest.raises(ValueError):
        YoungTableau([[2, 1]])  # row decreasing
    with pytest.raises(ValueError):
        YoungTableau([[1, 2], [1, 3]])  # column not strict
    with pytest.raises(ValueError):
        YoungTableau([[1], [2, 3]])  # shape not a partition


def test_rs_insert_doubled_window_example():
    x = mirror_left((3, 4, -1, 5, 2))
    assert x == (-2, -5, 1, -4, -3, 3, 4, -1, 5, 2)
    tab = rs_insert(x)
    assert tab.rows == ((-5, -4, -3, -1, 2, 5), (-2, 1, 3, 4))
    assert tab.shape == Partition([6, 4])


def test_rs_insert_doubled_weight_example():
    lam = (3, 4, 1, -2, 0, -3, 5, 6)
    tab = rs_insert(mirror_right(lam))
    assert tab.rows == (
        (-6, -5, -4, -3),
        (-3, -1, 0, 2),
        (-2, 0, 5, 6),
        (1, 3),
        (3, 4),
    )
    assert tab.shape == Partition([4, 4, 4, 2, 2])


def test_rs_insert_trivial():
    assert rs_insert((1, 2, 3)).rows == ((1, 2, 3),)
    assert rs_insert((3, 2, 1)).rows == ((3,), (2,), (1,))
    assert rs_shape(()) == Partition([])
    n = 7
    assert rs_shape(tuple(range(n))) == Partition([n])
    assert rs_shape((1, 1, 2, 2)) == Partition([4])  # ties stay in the row


def test_rs_output_is_valid_tableau_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(0, 12)
        x = [Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(n)]
        tab = rs_insert(x)  # constructor re-checks the invariants
        assert tab.shape.size == n


def test_shape_statistic_examples():
    w = (3, 4, -1, 5, 2)
    assert shape_statistic(mirror_left(w), "odd") == 2
    lam = (3, 4, 1, -2, 0, -3, 5, 6)
    assert shape_statistic(mirror_right(lam), "odd") == 13
    # single entry: plain and even vanish, odd sees the sign
    assert shape_statistic((5,), "plain") == 0
    assert shape_statistic(mirror_right((5,)), "even") == 0
    assert shape_statistic(mirror_right((5,)), "odd") == 1
    assert shape_statistic(mirror_right((-5,)), "odd") == 0
    assert shape_statistic(mirror_right((Fraction(0),)), "odd") == 0


def _pile_search(x, k, decreasing):
    """Reference point for the Greene statistics: directly assign a chosen
    subsequence onto k piles with the required monotonicity."""
    x = tuple(x)
    best = 0
    piles = [None] * k

    def rec(i, count):
        nonlocal best
        if count + (len(x) - i) <= best:
            return
        if i == len(x):
            best = max(best, count)
            return
        v = x[i]
        seen = set()
        for j in range(k):
            top = piles[j]
            if top in seen:
                continue
            seen.add(top)
            ok = top is None or (top > v if decreasing else top <= v)
            if ok:
                piles[j] = v
                rec(i + 1, count + 1)
                piles[j] = top
        rec(i + 1, count)

    rec(0, 0)
    return best


def test_greene_examples():
    x = (2, -5, -1, 4, 3, -3, -4, 1, 5, -2)
    assert max_union_increasing(x, 1) == 4
    assert max_union_increasing((3, 1, 2), 1) == 2
    assert max_union_increasing(tuple(range(6)), 3) == 6
    with pytest.raises(ValueError):
        max_union_increasing((1, 2), 0)
    with pytest.raises(ValueError):
        max_union_increasing((1, 2), 3)
    with pytest.raises(ValueError):
        max_union_increasing(tuple(range(GREENE_LENGTH_CAP + 1)), 1)


def test_greene_against_pile_search():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        x = tuple(rng.randint(-2, 2) for _ in range(n))
        for k in range(1, n + 1):
            assert max_union_increasing(x, k) == _pile_search(x, k, False)
            assert max_union_decreasing(x, k) == _pile_search(x, k, True)


def test_greene_matches_shape_partial_sums():
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randint(1, 8)
        x = tuple(rng.randint(-3, 3) for _ in range(n))
        p = rs_shape(x)
        q = transpose(p)
        for k in range(1, n + 1):
            assert max_union_increasing(x, k) == sum(p.row(i) for i in range(1, k + 1))
            assert max_union_decreasing(x, k) == sum(q.row(i) for i in range(1, k + 1))


def test_order_equivalent_examples():
    assert order_equivalent((1, 1), (1, 2))
    assert not order_equivalent((2, 1), (1, 2))
    assert order_equivalent((0, 5, 5), (-3, 1, 2))
    assert not order_equivalent((1, 1), (2, 1))
    with pytest.raises(ValueError):
        order_equivalent((1,), (1, 2))


def test_order_equivalence_preserves_shape():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 8)
        x = tuple(rng.randint(-2, 2) for _ in range(n))
        # y: stable rank refinement of x (ties opened in position order)
        order = sorted(range(n), key=lambda i: (x[i], i))
        y = [0] * n
        for rank, i in enumerate(order):
            y[i] = rank
        assert order_equivalent(x, tuple(y))
        assert rs_shape(x) == rs_shape(tuple(y))


def test_reverse_negate_invariance():
    rng = random.Random(19)
    for _ in range(200):
        n = rng.randint(0, 9)
        x = tuple(Fraction(rng.randint(-4, 4), rng.choice([1, 3])) for _ in range(n))
        flipped = tuple(-v for v in reversed(x))
        assert rs_shape(x) == rs_shape(flipped)


def test_render():
    tab = rs_insert((2, 1, 3))
    assert tab.render() == "1 3\n2"
