from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from sheetcalc import charvar
from sheetcalc.charvar import LinearComponent, evaluate, line, solve_on_cartan
from sheetcalc.rootdata import build_root_datum, weyl_conjugate

GRID = sorted({F(a, b) for a in range(-3, 4) for b in (1, 2)})


def zero_set_agrees(gens, comps, n, pts):
    for p in pts:
        vanishes = all(evaluate(g, p) == 0 for g in gens)
        if vanishes != any(c.contains_point(p) for c in comps):
            return p
    return None


coef = st.integers(-2, 2)


@given(st.lists(st.tuples(st.integers(0, 2), st.lists(coef, min_size=4, max_size=4)),
                min_size=1, max_size=4))
def test_solver_is_complete_on_random_product_systems(spec):
    gens = []
    for i, (a, b, c, const) in spec:
        lin = {0: a, 1: b, 2: c}
        g = {}
        for k, v in lin.items():
            if v:
                m = tuple(sorted((i, k)))
                g[m] = g.get(m, 0) + F(v)
        if const:
            g[(i,)] = F(const)
        g = {k: v for k, v in g.items() if v}
        if g:
            gens.append(g)
    if not gens:
        return
    comps = solve_on_cartan(gens, 3)
    assert zero_set_agrees(gens, comps, 3, product(GRID[::2], repeat=3)) is None
    assert all(charvar.verify_component(gens, c) for c in comps)
    # irredundant
    assert not any(a != b and a.contained_in(b) for a in comps for b in comps)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_type_a_level_minus1_closed_form(n):
    gens = charvar.type_a_level_minus1(n)
    assert solve_on_cartan(gens, n - 1) == charvar.type_a_level_minus1_expected(n)


def test_type_a_level_minus1_grid():
    gens = charvar.type_a_level_minus1(4)
    comps = solve_on_cartan(gens, 3)
    assert zero_set_agrees(gens, comps, 3, product(GRID, repeat=3)) is None


@pytest.mark.parametrize("m", [2, 3, 4])
def test_xi_hat_closed_form(m):
    sol = solve_on_cartan(charvar.p_hat_system(m), 2 * m - 1)
    assert sol == charvar.xi_hat(m)
    assert solve_on_cartan(charvar.p_hat_system(m, constant=False), 2 * m - 1) == charvar.xi(m)


def test_xi_hat_small_case_by_hand():
    # m = 2: three affine lines
    got = {(c.base, c.directions) for c in charvar.xi_hat(2)}
    assert len(got) == 3
    for c in charvar.xi_hat(2):
        assert charvar.verify_component(charvar.p_hat_system(2), c)


@pytest.mark.parametrize("m", [2, 3])
def test_xi_hat_integral_dominant_points(m):
    comps = charvar.xi_hat(m)
    r = 2 * m - 1
    found = {p for p in product(range(4), repeat=r) if any(c.contains_point(p) for c in comps)}
    assert found == {tuple(t if i == m - 1 else 0 for i in range(r)) for t in range(4)}


@pytest.mark.parametrize("r", [4, 5, 6, 7])
def test_type_d_closed_form(r):
    assert solve_on_cartan(charvar.type_d_system(r), r) == charvar.type_d_expected(r)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_claim_j_exhaustive(m):
    top = 2 * m
    for s in range(1, 2 * m - 1):
        lam = set(charvar.lambda_sets(m, s))
        nxt = set(charvar.lambda_sets(m, s + 1))
        for tup in combinations(range(1, top), s):
            res = charvar.claim_j(tup, m)
            if tup in lam:
                assert res is None
                continue
            l, j = res
            new = tup[:l] + (j,) + tup[l:]
            assert new in nxt
            # independent alternating sum
            assert sum(x if k % 2 else -x for k, x in enumerate(new, 1)) * -1 == (-1) ** (s + 1) * m


def test_lambda_sets_definition():
    # alternating sum -i_1 + i_2 - ... equals (-1)^s m
    for m in (2, 3):
        for s in (1, 2, 3):
            for t in charvar.lambda_sets(m, s):
                assert sum((-1) ** k * i for k, i in enumerate(t, 1)) == (-1) ** s * m


def test_classification_type_a():
    d = build_root_datum("A", 3)
    comps = solve_on_cartan(charvar.type_a_level_minus1(4), 3)
    res = charvar.classify_components(comps, [d.fundamental_weights[0]], d)
    assert all(t == 0 for _, t, _ in res)
    # each line meets the Weyl orbit of a positive multiple of varpi_1
    for comp, _, scale in res:
        lam = d.from_fundamental(comp.point(1))
        assert weyl_conjugate(lam, d.fundamental_weights[0] * scale)


@pytest.mark.parametrize("r", [4, 5, 6])
def test_classification_type_d(r):
    d = build_root_datum("D", r)
    fw = d.fundamental_weights
    comps = solve_on_cartan(charvar.type_d_system(r), r)
    res = charvar.classify_components(comps, [fw[r - 2], fw[r - 1]], d)
    assert {t for _, t, _ in res} <= {0, 1}
    if r % 2 == 0:
        assert {t for _, t, _ in res} == {0, 1}


def test_classification_flags_unrelated_lines():
    d = build_root_datum("A", 2)
    res = charvar.classify_components([line((F(1), F(1)))], [d.fundamental_weights[0]], d)
    assert res[0][1] == "unclassified"


def test_split_product_rejects_irreducible():
    with pytest.raises(ValueError):
        charvar.split_product({(0, 0): F(1), (1, 1): F(1)})
