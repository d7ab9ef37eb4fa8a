from collections import deque
from fractions import Fraction

import pytest

from weylgk.signed_perms import (
    SignedPermutation,
    act_on_weight,
    compose,
    group_elements,
    group_order,
    inverse,
    left_multiply_t,
    length,
    mirror_left,
    mirror_right,
    parse_window,
    right_multiply_t,
)


def test_window_validation():
    SignedPermutation([3, 4, -1, 5, 2])
    with pytest.raises(ValueError):
        SignedPermutation([1, 1])
    with pytest.raises(ValueError):
        SignedPermutation([1, -1])
    with pytest.raises(ValueError):
        SignedPermutation([0, 1])
    with pytest.raises(ValueError):
        SignedPermutation([1, 3])


def test_call_and_sign_rule():
    w = SignedPermutation([2, -3, 1])
    assert w(1) == 2 and w(2) == -3 and w(3) == 1
    assert w(-2) == 3
    with pytest.raises(ValueError):
        w(0)
    with pytest.raises(ValueError):
        w(4)


def test_mirrors():
    assert mirror_left((3, 4, -1, 5, 2)) == (-2, -5, 1, -4, -3, 3, 4, -1, 5, 2)
    assert mirror_right((7,)) == (7, -7)
    assert mirror_left(()) == ()


def test_compose_inverse_examples():
    t = SignedPermutation.t(3)
    e = SignedPermutation.identity(3)
    assert compose(t, t) == e
    assert inverse(SignedPermutation([2, -3, 1])) == SignedPermutation([3, 1, -2])
    w = SignedPermutation([-3, 1, 2])
    assert compose(w, e) == w
    with pytest.raises(ValueError):
        compose(w, SignedPermutation.identity(2))


def test_inverse_reconstruction_exhaustive():
    for n in range(1, 5):
        for w in group_elements("B", n):
            wi = inverse(w)
            for i in range(1, n + 1):
                assert w(wi(i)) == i
            assert compose(w, wi) == SignedPermutation.identity(n)


def test_t_multiplications():
    w = SignedPermutation([-3, 1, 4, -2])
    assert left_multiply_t(w).window == (-3, -1, 4, -2)
    assert right_multiply_t(w).window == (3, 1, 4, -2)
    assert right_multiply_t(SignedPermutation.identity(4)) == SignedPermutation.t(4)
    assert left_multiply_t(left_multiply_t(w)) == w
    t = SignedPermutation.t(4)
    assert left_multiply_t(w) == compose(t, w)
    assert right_multiply_t(w) == compose(w, t)


def test_length_examples():
    for n in (1, 3, 5):
        assert length(SignedPermutation.identity(n), "B") == 0
    w0 = SignedPermutation([-i for i in range(1, 5)])
    assert length(w0, "B") == 16
    assert length(w0, "C") == 16
    assert length(w0, "D") == 12
    with pytest.raises(ValueError):
        length(SignedPermutation([-1, 2, 3]), "D")
    with pytest.raises(ValueError):
        length(SignedPermutation([-1, 2]), "A")
    assert length(SignedPermutation([3, 1, 2]), "A") == 2


def _simple_reflection(i, n):
    window = list(range(1, n + 1))
    window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation(window)


def _bfs_lengths(gens, n):
    start = SignedPermutation.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            nxt = compose(w, g)
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    return dist


@pytest.mark.parametrize("typ", ["A", "B", "D"])
def test_length_matches_bfs(typ):
    n = 3
    simples = [_simple_reflection(i, n) for i in range(1, n)]
    if typ == "A":
        gens = simples
    elif typ == "B":
        gens = [SignedPermutation.t(n)] + simples
    else:
        t = SignedPermutation.t(n)
        u = compose(t, compose(simples[0], t))
        gens = [u] + simples
    dist = _bfs_lengths(gens, n)
    assert len(dist) == group_order(typ, n)
    for w, d in dist.items():
        assert length(w, typ) == d


def test_group_elements_counts_and_order():
    assert len(list(group_elements("B", 1))) == 2
    assert len(list(group_elements("B", 4))) == 384
    assert len(list(group_elements("D", 4))) == 192
    assert len(list(group_elements("A", 4))) == 24
    windows = [w.window for w in group_elements("B", 3)]
    assert windows == sorted(windows)
    with pytest.raises(ValueError):
        next(group_elements("B", 7))
    with pytest.raises(ValueError):
        next(group_elements("D", 0))


def test_d_subgroup_closed_under_composition():
    elems = list(group_elements("D", 3))
    for u in elems[:12]:
        for v in elems[:12]:
            assert compose(u, v).is_even_signed()


def test_act_on_weight():
    lam = tuple(Fraction(v) for v in (5, -2, 7))
    e = SignedPermutation.identity(3)
    assert act_on_weight(e, lam) == lam
    t = SignedPermutation.t(3)
    assert act_on_weight(t, lam) == (5, -2, -7)
    w0 = SignedPermutation([-1, -2, -3])
    assert act_on_weight(w0, lam) == (-5, 2, -7)
    with pytest.raises(ValueError):
        act_on_weight(e, (1, 2))


def test_act_on_weight_is_group_action():
    lam = tuple(Fraction(v) for v in (3, 1, -4))
    elems = list(group_elements("B", 3))
    for u in elems[::7]:
        for v in elems[::11]:
            assert act_on_weight(compose(u, v), lam) == act_on_weight(
                u, act_on_weight(v, lam)
            )


def test_parse_window():
    assert parse_window("3,4,-1,5,2").window == (3, 4, -1, 5, 2)
    with pytest.raises(ValueError):
        parse_window("")
    with pytest.raises(ValueError):
        parse_window("1,x")
    with pytest.raises(ValueError):
        parse_window("1,1")
