import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sheetcalc import affine, symalg
from sheetcalc.affine import AffineModel, AffineVector, vacuum
from sheetcalc.orbits import algebra_for


def times_k(v):
    return AffineVector(v.alg, {(m, j + 1): c for (m, j), c in v.terms.items()})


MODEL = AffineModel(algebra_for("A", 2))


def pbw_vector(model, rng):
    g = model.alg
    v = vacuum(g)
    for _ in range(rng.randint(0, 3)):
        v = model.act(rng.randrange(g.dim), -rng.randint(1, 2), v)
    return v


@given(st.integers(0, 10 ** 6), st.integers(-2, 2), st.integers(-2, 2))
def test_mode_commutator(seed, m, n):
    model = MODEL
    g = model.alg
    rng = random.Random(seed)
    x, y = rng.randrange(g.dim), rng.randrange(g.dim)
    v = pbw_vector(model, rng)
    lhs = model.act(x, m, model.act(y, n, v)) - model.act(y, n, model.act(x, m, v))
    rhs = AffineVector(g)
    for z, c in g.bracket_basis(x, y).items():
        rhs = rhs + model.act(z, m + n, v) * c
    if m + n == 0:
        rhs = rhs + times_k(v) * (m * g.form.get((x, y), 0))
    assert lhs == rhs


def test_vacuum_is_annihilated_by_nonnegative_modes():
    g = MODEL.alg
    for x in range(g.dim):
        for n in (0, 1, 2):
            assert MODEL.act(x, n, vacuum(g)).is_zero()


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_sigma_is_equivariant(seed, deg):
    g = MODEL.alg
    rng = random.Random(seed)
    mono = tuple(sorted(rng.randrange(g.dim) for _ in range(deg)))
    p = symalg.PolyElement(g, {mono: 1})
    sp = MODEL.sigma(p)
    x = rng.randrange(g.dim)
    q = symalg.adjoint_act(g.basis_element(x), p)
    lhs = MODEL.sigma(q) if not q.is_zero() else AffineVector(g)
    assert lhs == MODEL.act(x, 0, sp)


def test_sigma_degree_one_and_two():
    g = MODEL.alg
    a, b = 0, g.dim - 1
    assert MODEL.sigma(symalg.lie(g.basis_element(a))) == MODEL.act(a, -1, vacuum(g))
    p = symalg.PolyElement(g, {(a, b): 1})
    half = (MODEL.apply_monomial([(a, -1), (b, -1)], vacuum(g))
            + MODEL.apply_monomial([(b, -1), (a, -1)], vacuum(g))) * F(1, 2)
    assert MODEL.sigma(p) == half


def test_commuting_power_rejects_noncommuting_support():
    g = MODEL.alg
    a = symalg.sl_root(3, 1, 2)
    p = symalg.lie(g.e(a)) * symalg.lie(g.f(a))
    with pytest.raises(ValueError):
        MODEL.commuting_power(p, 2)


def test_commuting_power_matches_sigma_for_square():
    g = algebra_for("A", 3)
    model = AffineModel(g)
    v1 = symalg.v_one(g)
    assert model.commuting_power(v1, 1) == model.sigma(v1)


@pytest.mark.parametrize("n", [4, 5])
def test_v1_levels(n):
    g = algebra_for("A", n - 1)
    model = AffineModel(g)
    v1 = symalg.v_one(g)
    assert affine.singular_levels(model, model.sigma(v1)).values == {F(-1)}
    assert affine.singular_levels(model, model.commuting_power(v1, 2)).values == {F(0)}
    w, deg = model.weight(model.sigma(v1))
    assert deg == 2
    assert g.datum.weight(w) == symalg.is_singular(v1)


def test_v0_closed_form_and_level():
    g = algebra_for("A", 3)
    model = AffineModel(g)
    s = model.sigma(symalg.v_zero(g))
    assert s == affine.sigma_v0(model, 2)
    assert affine.singular_levels(model, s).values == {F(-2)}


def test_w1_level():
    g = algebra_for("D", 5)
    model = AffineModel(g)
    sol = affine.singular_levels(model, model.sigma(symalg.w_one(g)))
    assert sol.values == {F(-3)} and not sol.all_k


def test_vacuum_is_singular_at_every_level():
    g = MODEL.alg
    sol = affine.singular_levels(MODEL, vacuum(g))
    assert sol.all_k


def test_non_singular_vector_has_no_level():
    g = MODEL.alg
    a = symalg.sl_root(3, 1, 2)
    v = MODEL.act(g.f_index[a], -1, vacuum(g))
    sol = affine.singular_levels(MODEL, v)
    assert not sol.all_k and not sol.values
