import copy
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sheetcalc.checks import structure_checks
from sheetcalc.liealg import build_algebra, matrix_jordan_type
from sheetcalc.orbits import Partition, algebra_for

SMALL = [("A", 1), ("A", 2), ("A", 3), ("D", 3), ("D", 4)]


@pytest.mark.parametrize("t,r", SMALL)
def test_structure_identities(t, r):
    res = structure_checks(algebra_for(t, r))
    assert res == {"antisymmetry": True, "jacobi": True, "invariance": True, "theta_norm": True}


@pytest.mark.parametrize("t,r", [("A", 2), ("A", 3), ("D", 4)])
def test_form_is_normalized_killing(t, r):
    g = algebra_for(t, r)
    hv = g.datum.dual_coxeter
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.killing(i, j) == 2 * hv * g.form.get((i, j), 0)


@pytest.mark.parametrize("t,r", SMALL)
def test_bracket_is_matrix_commutator(t, r):
    g = algebra_for(t, r)
    rng = random.Random(3)
    for _ in range(20):
        i, j = rng.randrange(g.dim), rng.randrange(g.dim)
        x, y = g.basis_element(i), g.basis_element(j)
        a, b = g.matrix(x), g.matrix(y)
        n = len(a)
        comm = [[sum(a[p][k] * b[k][q] - b[p][k] * a[k][q] for k in range(n)) for q in range(n)]
                for p in range(n)]
        assert g.matrix(g.bracket(x, y)) == comm


@pytest.mark.parametrize("t,r", SMALL)
def test_chevalley_relations(t, r):
    g = algebra_for(t, r)
    d = g.datum
    for a in d.positive_roots:
        h = g.bracket(g.e(a), g.f(a))
        assert h == g.coroot(a)
        assert g.bracket(h, g.e(a)) == g.e(a) * 2


def test_so_even_matrices_preserve_form():
    g = build_algebra("D", 4)
    n = g.size
    # the realization preserves the antidiagonal form J
    J = [[F(int(i + j == n - 1)) for j in range(n)] for i in range(n)]
    for idx in range(g.dim):
        m = g.matrix(g.basis_element(idx))
        mt_j = [[sum(m[k][i] * J[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        j_m = [[sum(J[i][k] * m[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert all(mt_j[i][j] + j_m[i][j] == 0 for i in range(n) for j in range(n))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_jordan_type_of_block_matrix(blocks):
    n = sum(blocks)
    m = [[F(0)] * n for _ in range(n)]
    pos = 0
    for b in blocks:
        for i in range(b - 1):
            m[pos + i][pos + i + 1] = F(1)
        pos += b
    assert matrix_jordan_type(m) == Partition(sorted(blocks, reverse=True))


def _generic_nilradical(g, drop, seed):
    d = g.datum
    rng = random.Random(seed)
    coeffs = {}
    for a in d.positive_roots:
        if d.simple_coeffs[a][drop - 1] > 0:
            coeffs[g.e_index[a]] = F(rng.randint(1, 9))
    return g.element(coeffs)


@pytest.mark.parametrize("r", [4, 6])
def test_very_even_label_calibration(r):
    # generic nilradical elements for the two non-conjugate Levis carry opposite labels
    g = algebra_for("D", r)
    for seed in range(3):
        a = g.jordan_type(_generic_nilradical(g, r - 1, seed))
        b = g.jordan_type(_generic_nilradical(g, r, seed))
        assert a == (Partition([2] * r), "I")
        assert b == (Partition([2] * r), "II")


def test_label_is_invariant_under_conjugation():
    g = algebra_for("D", 4)
    x = _generic_nilradical(g, 3, 0)
    lab = g.jordan_type(x)
    for a in g.datum.positive_roots[:6]:
        y = g.exp_ad(g.f(a) * 2, g.exp_ad(g.e(a), x))
        assert g.jordan_type(y) == lab


def mutated(g, seed):
    h = copy.copy(g)
    h.table = dict(g.table)
    keys = sorted(k for k, v in g.table.items() if v)
    i, j = random.Random(seed).choice(keys)
    v = dict(h.table[(i, j)])
    k = sorted(v)[0]
    v[k] = -v[k]
    h.table[(i, j)] = v
    h.table[(j, i)] = {a: -b for a, b in v.items()}
    return h


@pytest.mark.parametrize("seed", range(8))
def test_single_sign_flip_is_detected(seed):
    g = algebra_for("A", 2)
    res = structure_checks(mutated(g, seed))
    assert not all(res.values())
