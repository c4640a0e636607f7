from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from sheetcalc.linalg import (Echelon, charpoly, identity, mat_inv, mat_mul, mat_rank,
                              nullspace, rank, solve, span_equal)

small = st.integers(-3, 3)


def det(a):
    # Leibniz expansion: an independent oracle for tiny matrices
    n = len(a)
    total = F(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = F(1)
        for i in range(n):
            prod *= a[i][perm[i]]
        total += sign * prod
    return total


def as_sparse(rows):
    return [{j: F(v) for j, v in enumerate(r) if v} for r in rows]


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_plus_nullity(rows):
    # columns are the rows here; nullspace works on a list of column vectors
    cols = as_sparse(rows)
    ns = nullspace(cols, len(cols))
    assert rank(cols) + len(ns) == len(cols)
    for v in ns:
        combo = {}
        for j, c in v.items():
            for i, x in cols[j].items():
                combo[i] = combo.get(i, 0) + c * x
        assert all(x == 0 for x in combo.values())


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_dense_rank_matches_determinant(a):
    a = [[F(x) for x in r] for r in a]
    assert (mat_rank(a) == 3) == (det(a) != 0)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse(a):
    a = [[F(x) for x in r] for r in a]
    if det(a) == 0:
        return
    assert mat_mul(a, mat_inv(a)) == identity(3)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_charpoly_constant_and_trace(a):
    a = [[F(x) for x in r] for r in a]
    c = charpoly(a)
    # det(t - A) = t^3 - tr(A) t^2 + ... - det(A)
    assert c[3] == 1
    assert c[2] == -sum(a[i][i] for i in range(3))
    assert c[0] == -det(a)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(small, min_size=3, max_size=3))
def test_solve_reconstructs_target(rows, target):
    cols = as_sparse(rows)
    tgt = {i: F(v) for i, v in enumerate(target) if v}
    sol = solve(cols, tgt)
    in_span = rank(cols + [tgt]) == rank(cols)
    assert (sol is not None) == in_span
    if sol is not None:
        got = {}
        for j, c in sol.items():
            for i, x in cols[j].items():
                got[i] = got.get(i, 0) + c * x
        assert {i: x for i, x in got.items() if x} == tgt


def test_echelon_membership():
    ech = Echelon()
    ech.add({0: F(1), 1: F(1)})
    ech.add({1: F(2)})
    assert ech.contains({0: F(3)})
    assert not ech.contains({2: F(1)})


def test_span_equal_ignores_order_and_scale():
    a = [{0: F(1)}, {1: F(1)}]
    b = [{0: F(1), 1: F(1)}, {1: F(-2)}]
    assert span_equal(a, b)
    assert not span_equal(a, [{0: F(1)}])
