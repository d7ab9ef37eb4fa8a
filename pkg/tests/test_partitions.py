import pytest

from weylgk.partitions import (
    Partition,
    column_parity_count,
    row_parity,
    transpose,
    weighted_parity_sum,
)


def partitions_of(n, cap=None):
    """All partitions of n with parts <= cap."""
    if n == 0:
        yield ()
        return
    cap = n if cap is None else min(cap, n)
    for head in range(cap, 0, -1):
        for rest in partitions_of(n - head, head):
            yield (head,) + rest


def test_canonicalization_and_validation():
    assert Partition([4, 2, 2, 2, 0, 0]).parts == (4, 2, 2, 2)
    assert Partition([]).parts == ()
    assert Partition([0, 0]).parts == ()
    assert Partition([3, 1]) == Partition((3, 1, 0))
    assert len(Partition([3, 1])) == 2
    assert Partition([5, 3]).size == 8
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([2, -1])
    with pytest.raises(ValueError):
        Partition([2.5, 1])


def test_row_accessor():
    p = Partition([4, 2])
    assert p.row(1) == 4
    assert p.row(2) == 2
    assert p.row(3) == 0
    with pytest.raises(ValueError):
        p.row(0)


def test_transpose_examples():
    assert transpose(Partition([4, 2, 2, 2])) == Partition([4, 4, 1, 1])
    assert transpose(Partition([])) == Partition([])
    assert transpose(Partition([1, 1, 1])) == Partition([3])


def test_transpose_involution():
    for n in range(0, 11):
        for parts in partitions_of(n):
            p = Partition(parts)
            assert transpose(transpose(p)) == p


def test_row_parity_examples():
    prof = row_parity(Partition([5, 5, 4, 3, 3]))
    assert prof.even_counts == (3, 2, 2, 1, 2)
    assert prof.odd_counts == (2, 3, 2, 2, 1)
    assert row_parity(Partition([6, 4])).odd_counts == (3, 2)
    single = row_parity(Partition([1]))
    assert single.even_counts == (1,)
    assert single.odd_counts == (0,)


def test_row_parity_counts_sum_to_row_lengths():
    for n in range(0, 13):
        for parts in partitions_of(n):
            p = Partition(parts)
            prof = row_parity(p)
            for i, length in enumerate(p):
                assert prof.even_counts[i] + prof.odd_counts[i] == length


def test_column_parity_count_examples():
    assert column_parity_count(3, 2, "odd") == 2
    assert column_parity_count(0, 5, "even") == 0
    assert column_parity_count(4, 1, "even") == 2
    with pytest.raises(ValueError):
        column_parity_count(3, 0, "even")
    with pytest.raises(ValueError):
        column_parity_count(-1, 1, "even")
    with pytest.raises(ValueError):
        column_parity_count(3, 1, "plain")


def test_column_parity_count_matches_direct_box_count():
    for length in range(0, 9):
        for j in range(1, 9):
            even = sum(1 for k in range(1, length + 1) if (k + j) % 2 == 0)
            assert column_parity_count(length, j, "even") == even
            assert column_parity_count(length, j, "odd") == length - even


def test_weighted_parity_sum_examples():
    assert weighted_parity_sum(Partition([6, 4]), "odd") == 2
    assert weighted_parity_sum(Partition([7]), "plain") == 0
    assert weighted_parity_sum(Partition([4, 4, 4, 2, 2]), "odd") == 13
    with pytest.raises(ValueError):
        weighted_parity_sum(Partition([2]), "bogus")


def test_row_column_identities():
    # The row-weighted statistics have closed column forms; check all
    # three against every partition of size <= 12.
    for n in range(0, 13):
        for parts in partitions_of(n):
            p = Partition(parts)
            q = transpose(p)
            plain = sum(qj * (qj - 1) // 2 for qj in q)
            assert weighted_parity_sum(p, "plain") == plain

            odd = 0
            even = 0
            for j, qj in enumerate(q, start=1):
                qo = column_parity_count(qj, j, "odd")
                qe = column_parity_count(qj, j, "even")
                if j % 2 == 1:
                    odd += qo * qo
                    even += qe * (qe - 1)
                else:
                    odd += qo * (qo - 1)
                    even += qe * qe
            assert weighted_parity_sum(p, "odd") == odd
            assert weighted_parity_sum(p, "even") == even
