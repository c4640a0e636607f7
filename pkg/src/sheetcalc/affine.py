"""PBW model of the universal affine vertex algebra V^k(g) with symbolic k.

A vector is a dict {(monomial, j): c} meaning c * k^j * monomial * |0>, where
a monomial is a tuple of (mode, basis index) pairs with negative modes, kept in
canonical order: deeper modes to the left, ties by basis index.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .linalg import axpy

F = Fraction

VACUUM = ()


class AffineVector:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {k: F(v) for k, v in (terms or {}).items() if v != 0}

    def __add__(self, other):
        return AffineVector(self.alg, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other):
        return AffineVector(self.alg, axpy(dict(self.terms), -1, other.terms))

    def __mul__(self, c):
        return AffineVector(self.alg, {k: v * F(c) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AffineVector) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {-sum(n for n, _ in m) for m, _ in self.terms}

    def coefficient_polys(self):
        """Map monomial -> {power of k: coefficient}."""
        out = {}
        for (m, j), c in self.terms.items():
            out.setdefault(m, {})[j] = c
        return out

    def at_level(self, k):
        out = {}
        for (m, j), c in self.terms.items():
            v = out.get((m, 0), 0) + c * F(k) ** j
            out[(m, 0)] = v
        return AffineVector(self.alg, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.alg.names
        parts = []
        for (m, j), c in sorted(self.terms.items()):
            mono = "".join(f"{names[x]}({n})" for n, x in m) or "1"
            kk = "" if j == 0 else ("k" if j == 1 else f"k^{j}")
            parts.append(f"{c}{'*' + kk if kk else ''}*{mono}")
        return " + ".join(parts)


def vacuum(alg):
    return AffineVector(alg, {(VACUUM, 0): 1})


class AffineModel:
    """Caches mode actions for one algebra."""

    def __init__(self, alg):
        self.alg = alg
        self._memo = {}

    def _act_mono(self, x, n, mono):
        key = (x, n, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        out = {}
        if not mono:
            if n < 0:
                out[(((n, x),), 0)] = F(1)
        else:
            m, y = mono[0]
            rest = mono[1:]
            if n < 0 and (n, x) <= (m, y):
                out[(((n, x),) + mono, 0)] = F(1)
            else:
                # x(n) y(m) = y(m) x(n) + [x,y](n+m) + n (x|y) delta k
                for (mono2, j), c in self._act_mono(x, n, rest).items():
                    for (mono3, j3), c3 in self._act_mono(y, m, mono2).items():
                        _acc(out, (mono3, j + j3), c * c3)
                for z, c in alg.bracket_basis(x, y).items():
                    for (mono2, j), c2 in self._act_mono(z, n + m, rest).items():
                        _acc(out, (mono2, j), c * c2)
                if n + m == 0:
                    f = alg.form.get((x, y), 0)
                    if f:
                        _acc(out, (rest, 1), n * f)
        self._memo[key] = out
        return out

    def act(self, x, n, v):
        """x(n) . v for a basis index x."""
        out = {}
        for (mono, j), c in v.terms.items():
            for (m2, j2), c2 in self._act_mono(x, n, mono).items():
                _acc(out, (m2, j + j2), c * c2)
        return AffineVector(self.alg, out)

    def act_element(self, xe, n, v):
        out = AffineVector(self.alg)
        for x, c in xe.c.items():
            out = out + self.act(x, n, v) * c
        return out

    def apply_monomial(self, factors, v):
        """Apply x_1(n_1) ... x_s(n_s) (rightmost first)."""
        for x, n in reversed(factors):
            v = self.act(x, n, v)
        return v

    def sigma(self, p):
        """Symmetrization embedding S^d(g) -> V^k(g), all modes -1."""
        if not p.is_homogeneous():
            raise ValueError("sigma needs a homogeneous polynomial")
        out = AffineVector(self.alg)
        vac = vacuum(self.alg)
        for mono, c in p.terms.items():
            d = len(mono)
            orders = {}
            for perm in permutations(mono):
                orders[perm] = orders.get(perm, 0) + 1
            for perm, cnt in orders.items():
                v = self.apply_monomial([(x, -1) for x in perm], vac)
                out = out + v * (c * cnt / factorial(d))
        return out

    def commuting_power(self, p, l):
        """sigma(p)^l as an iterated (-1)-product.

        Valid when the root vectors in the support of p pairwise commute and
        are orthogonal, so the normally ordered product is plain
        multiplication of the mode operators.
        """
        alg = self.alg
        support = {x for m in p.terms for x in m}
        for a in support:
            for b in support:
                if alg.bracket_basis(a, b) or alg.form.get((a, b), 0):
                    raise ValueError("support does not commute; power not supported")
        v = vacuum(alg)
        for _ in range(l):
            nv = AffineVector(alg)
            for mono, c in p.terms.items():
                nv = nv + self.apply_monomial([(x, -1) for x in mono], v) * c
            v = nv
        return v

    def weight(self, v):
        """(finite weight, degree) if v is homogeneous, else None."""
        ws = set()
        for (mono, _), _c in v.terms.items():
            w = [F(0)] * self.alg.datum.ambient_dim
            for n, x in mono:
                for i, a in enumerate(self.alg.weights[x]):
                    w[i] += a
            ws.add((tuple(w), -sum(n for n, _ in mono)))
        return ws.pop() if len(ws) == 1 else None


def _acc(d, key, c):
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


@dataclass(frozen=True)
class LevelSolution:
    values: frozenset
    all_k: bool = False
    nonlinear: bool = False

    def __repr__(self):
        if self.all_k:
            return "LevelSolution(all k)"
        return "LevelSolution({" + ", ".join(str(v) for v in sorted(self.values)) + "})"


def _poly_eval(poly, k):
    return sum((c * k ** j for j, c in poly.items()), F(0))


def _rational_roots(poly):
    from math import gcd
    deg = max(poly)
    low = min(j for j, c in poly.items() if c != 0)
    roots = {F(0)} if low > 0 else set()
    q = {j - low: c for j, c in poly.items() if c != 0}
    d = max(q)
    if d == 0:
        return roots
    if d == 1:
        roots.add(-q.get(0, F(0)) / q[1])
        return roots
    den = 1
    for c in q.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {j: int(c * den) for j, c in q.items()}
    a0, an = abs(ints.get(0, 0)), abs(ints[d])

    def divisors(x):
        return [i for i in range(1, x + 1) if x % i == 0]

    for p_ in divisors(a0):
        for s in divisors(an):
            for sign in (1, -1):
                cand = F(sign * p_, s)
                if _poly_eval(q, cand) == 0:
                    roots.add(cand)
    return roots


def raising_images(model, v):
    alg = model.alg
    d = alg.datum
    out = []
    for i, a in enumerate(d.simple_roots):
        out.append((f"e_{i + 1}(0)", model.act(alg.e_index[a], 0, v)))
    out.append(("f_theta(1)", model.act(alg.f_index[d.highest_root.coords], 1, v)))
    return out


def singular_levels(model, v):
    if model.weight(v) is None:
        raise ValueError("not a weight vector")
    polys = []
    for _name, img in raising_images(model, v):
        polys += [p for p in img.coefficient_polys().values() if any(c != 0 for c in p.values())]
    if not polys:
        return LevelSolution(frozenset(), all_k=True)
    polys.sort(key=lambda p: max(p))
    first = polys[0]
    nonlinear = any(max(p) - min(p) > 1 for p in polys)
    cands = _rational_roots(first)
    vals = frozenset(k for k in cands if all(_poly_eval(p, k) == 0 for p in polys))
    return LevelSolution(vals, nonlinear=nonlinear)


def sigma_v0(model, m):
    """The displayed closed form of sigma(v0) in V^k(sl_2m)."""
    from .symalg import eij
    alg = model.alg
    n = 2 * m
    et = next(iter(eij(alg, 1, n).c))
    vac = vacuum(alg)
    out = AffineVector(alg)
    for i in range(1, n):
        h = alg.h_index[i - 1]
        out = out + model.apply_monomial([(h, -1), (et, -1)], vac) * F(m - i, m)
    for i in range(1, n - 1):
        a = next(iter(eij(alg, 1, i + 1).c))
        b = next(iter(eij(alg, i + 1, n).c))
        out = out + model.apply_monomial([(a, -1), (b, -1)], vac)
    out = out - model.apply_monomial([(et, -2)], vac) * (m - 1)
    return out
