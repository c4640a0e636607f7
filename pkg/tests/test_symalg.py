import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sheetcalc import symalg
from sheetcalc.orbits import algebra_for
from sheetcalc.symalg import PolyElement, adjoint_act, casimir, evaluate, lie

ALGS = [("A", 2), ("A", 3), ("D", 4)]


def random_element(g, rng):
    return g.element({i: F(rng.randint(-3, 3)) for i in range(g.dim)})


def random_poly(g, rng, degree, terms=3):
    out = {}
    for _ in range(terms):
        m = tuple(sorted(rng.randrange(g.dim) for _ in range(degree)))
        out[m] = F(rng.randint(-3, 3))
    return PolyElement(g, out)


@pytest.mark.parametrize("t,r", ALGS)
def test_casimir_is_invariant(t, r):
    g = algebra_for(t, r)
    om = casimir(g)
    for i in range(g.dim):
        assert adjoint_act(g.basis_element(i), om).is_zero()


@pytest.mark.parametrize("t,r", ALGS)
def test_casimir_evaluates_to_form(t, r):
    g = algebra_for(t, r)
    rng = random.Random(0)
    for _ in range(5):
        x = random_element(g, rng)
        assert evaluate(casimir(g), x) == g.pair(x, x)


@given(st.integers(0, 10 ** 6))
def test_adjoint_action_is_derivation(seed):
    g = algebra_for("A", 2)
    rng = random.Random(seed)
    x = random_element(g, rng)
    p, q = random_poly(g, rng, 1), random_poly(g, rng, 2)
    assert adjoint_act(x, p * q) == adjoint_act(x, p) * q + p * adjoint_act(x, q)


@given(st.integers(0, 10 ** 6))
def test_adjoint_action_is_representation(seed):
    g = algebra_for("A", 2)
    rng = random.Random(seed)
    x, y = random_element(g, rng), random_element(g, rng)
    p = random_poly(g, rng, 2)
    lhs = adjoint_act(x, adjoint_act(y, p)) - adjoint_act(y, adjoint_act(x, p))
    assert lhs == adjoint_act(g.bracket(x, y), p)


@given(st.integers(0, 10 ** 6))
def test_evaluation_is_multiplicative(seed):
    g = algebra_for("A", 2)
    rng = random.Random(seed)
    x = random_element(g, rng)
    p, q = random_poly(g, rng, 1), random_poly(g, rng, 2)
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)


def test_singular_degree_one():
    g = algebra_for("A", 3)
    th = g.highest_root
    assert symalg.is_singular(lie(g.e(th.coords))) == th
    assert symalg.is_singular(lie(g.f(th.coords))) is None


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_v_one_singular(n):
    g = algebra_for("A", n - 1)
    d = g.datum
    want = d.weight(symalg.sl_root(n, 1, n)) + d.weight(symalg.sl_root(n, 2, n - 1))
    assert symalg.is_singular(symalg.v_one(g)) == want


@pytest.mark.parametrize("m", [2, 3])
def test_v_zero_singular(m):
    g = algebra_for("A", 2 * m - 1)
    assert symalg.is_singular(symalg.v_zero(g)) == g.highest_root


@pytest.mark.parametrize("r", [5, 6])
def test_w_one_singular(r):
    g = algebra_for("D", r)
    want = g.highest_root + g.datum.weight(symalg.d_root(r, 1, 2, -1))
    assert symalg.is_singular(symalg.w_one(g)) == want


@pytest.mark.parametrize("t,r,vec", [("A", 3, symalg.v_one), ("A", 4, symalg.v_one),
                                     ("A", 3, symalg.v_zero), ("D", 4, symalg.w_one)])
def test_generated_module_has_weyl_dimension(t, r, vec):
    g = algebra_for(t, r)
    v = vec(g)
    W = symalg.generate_submodule(v)
    assert W.dim == g.datum.weyl_dimension(symalg.is_singular(v))


def test_so_even_w1_zero_weight_space():
    # traceless Sym^2 of the vector representation has an (r-1)-dimensional zero weight space
    for r in (4, 5):
        g = algebra_for("D", r)
        W = symalg.generate_submodule(symalg.w_one(g))
        assert len(symalg.zero_weight_space(W)) == r - 1


def test_projections_on_cartan_monomials():
    g = algebra_for("A", 2)
    h1, h2 = symalg.hvar(g, 1), symalg.hvar(g, 2)
    p = h1 * h2
    assert symalg.chevalley_projection(p) == p
    assert symalg.hc_projection_deg2(p) == p
    a = symalg.sl_root(3, 1, 2)
    ef = lie(g.e(a)) * lie(g.f(a))
    assert symalg.chevalley_projection(ef).is_zero()
    # symmetrized e f projects to h/2
    assert symalg.hc_projection_deg2(ef) == h1 * F(1, 2)
    with pytest.raises(ValueError):
        symalg.chevalley_projection(lie(g.e(a)))
