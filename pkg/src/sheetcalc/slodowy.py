"""sl2-triples, gradings, the chi-reduction of S(g) and slice curves."""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice

from .linalg import Echelon, axpy, charpoly, rank, scale, solve
from .orbits import OrbitDatum, algebra_for, weighted_dynkin_diagram
from .linalg import mat_inv

F = Fraction


@dataclass
class Sl2Triple:
    e: object
    h: object
    f: object
    h_coeffs: tuple
    grading: dict
    orbit: OrbitDatum

    @property
    def alg(self):
        return self.e.alg

    def check(self):
        alg = self.alg
        b = alg.bracket
        return (b(self.h, self.e) == self.e * 2 and b(self.h, self.f) == self.f * -2
                and b(self.e, self.f) == self.h)


def grading(alg, h_coeffs):
    out = {}
    for idx in range(alg.dim):
        out.setdefault(alg.grade(idx, h_coeffs), []).append(idx)
    return out


def h_from_labels(alg, labels):
    cm = alg.datum.cartan_matrix
    r = alg.rank
    a = [[F(cm[j][i]) for i in range(r)] for j in range(r)]
    inv = mat_inv(a)
    return tuple(sum((inv[p][q] * labels[q] for q in range(r)), F(0)) for p in range(r))


def _candidate_es(alg, deg2, budget, seed):
    """Root-vector sums over subsets of g(h,2), smallest first.

    Within a size, subsets whose roots have equal height come first (this
    recovers the textbook triples such as sum e_{i,m+i}); then a seeded
    random fallback with small integer coefficients.
    """
    from math import comb
    d = alg.datum
    height = {i: d.height(alg.weights[i]) for i in deg2}
    count = 0
    for size in range(1, len(deg2) + 1):
        if comb(len(deg2), size) <= 5000:
            subs = sorted(combinations(deg2, size),
                          key=lambda s: (max(height[i] for i in s) - min(height[i] for i in s), s))
        else:
            subs = combinations(deg2, size)
        for sub in subs:
            yield {i: F(1) for i in sub}
            count += 1
            if count >= budget:
                break
        if count >= budget:
            break
    rng = random.Random(seed)
    for _ in range(budget):
        yield {i: F(rng.randint(1, 9)) for i in deg2}


def sl2_from_orbit(o, budget=20000, seed=0):
    if o.is_zero():
        raise ValueError("the zero orbit has no sl2-triple")
    alg = algebra_for(o.type_label, o.rank)
    labels = weighted_dynkin_diagram(o)
    hc = h_from_labels(alg, labels)
    h = alg.cartan_element(hc)
    gr = grading(alg, hc)
    g0, g2, gm2 = gr.get(0, []), gr.get(2, []), gr.get(-2, [])
    for ec in _candidate_es(alg, g2, budget, seed):
        e = alg.element(ec)
        cols = [alg.bracket(alg.basis_element(i), e).c for i in g0]
        if rank(cols) != len(g2):
            continue
        fcols = [alg.bracket(e, alg.basis_element(j)).c for j in gm2]
        sol = solve(fcols, h.c)
        if sol is None:
            continue
        f = alg.element({gm2[j]: c for j, c in sol.items()})
        part, label = alg.jordan_type(e)
        if part != o.partition or label != o.label:
            continue
        t = Sl2Triple(e, h, f, hc, gr, o)
        if t.check():
            return t
    raise RuntimeError(f"no sl2-triple found for {o}")


def chi(triple, x):
    return triple.alg.pair(triple.f, x)


class ChiReduction:
    """Evaluation of the m-coordinates at chi = (f|.)."""

    def __init__(self, triple, lagrangian="first"):
        self.triple = triple
        alg = triple.alg
        self.alg = alg
        gr = triple.grading
        for i, idxs in gr.items():
            if i == 1 or i >= 3:
                if any(chi(triple, alg.basis_element(j)) != 0 for j in idxs):
                    raise AssertionError("chi does not vanish where it should")
        g1 = list(gr.get(1, []))
        if lagrangian == "second":
            g1 = g1[::-1]
        elif lagrangian != "first":
            raise ValueError("lagrangian must be 'first' or 'second'")
        self.L, self.Lp = self._lagrangian(g1)
        self.m_basis = [alg.element(v) for v in self.L]
        self.chi_values = {}
        for i, idxs in gr.items():
            if i >= 2:
                for j in idxs:
                    self.m_basis.append(alg.basis_element(j))
                    self.chi_values[j] = chi(triple, alg.basis_element(j))
        # complement coordinates: g(h, <= 0) basis vectors, then L'
        self.complement_basis = []
        self.var_of = {}
        for i in sorted(gr):
            if i <= 0:
                for j in gr[i]:
                    self.var_of[j] = {len(self.complement_basis): F(1)}
                    self.complement_basis.append(alg.basis_element(j))
        offset = len(self.complement_basis)
        for v in self.Lp:
            self.complement_basis.append(alg.element(v))
        allvecs = self.L + self.Lp
        for j in gr.get(1, []):
            sol = solve(allvecs, {j: F(1)})
            self.var_of[j] = {offset + (k - len(self.L)): c
                              for k, c in sol.items() if k >= len(self.L) and c != 0}
        for j, c in self.chi_values.items():
            self.var_of[j] = {None: c} if c else {}

    def omega(self, x, y):
        alg = self.alg
        return chi(self.triple, alg.bracket(alg.element(x), alg.element(y)))

    def _lagrangian(self, order):
        remaining = [{j: F(1)} for j in order]
        L, Lp = [], []
        while remaining:
            x = remaining.pop(0)
            pos = next((k for k, y in enumerate(remaining) if self.omega(x, y) != 0), None)
            if pos is None:
                raise AssertionError("form on g(h,1) is degenerate")
            y = remaining.pop(pos)
            y = scale(y, 1 / self.omega(x, y))
            L.append(x)
            Lp.append(y)
            new = []
            for z in remaining:
                a, b = self.omega(z, y), self.omega(z, x)
                z = dict(z)
                axpy(z, -a, x)
                axpy(z, b, y)
                new.append(z)
            remaining = new
        return L, Lp

    def reduce(self, p):
        """Substitute m-coordinates by chi-values; result over complement indices."""
        out = {(): F(0)}
        out = {}
        for mono, c in p.terms.items():
            partial = {(): c}
            for b in mono:
                sub = self.var_of[b]
                nxt = {}
                for m1, c1 in partial.items():
                    for v, c2 in sub.items():
                        m2 = m1 if v is None else tuple(sorted(m1 + (v,)))
                        val = nxt.get(m2, 0) + c1 * c2
                        if val:
                            nxt[m2] = val
                        else:
                            nxt.pop(m2, None)
                partial = nxt
                if not partial:
                    break
            axpy(out, 1, partial)
        return out


def reduce_mod_chi(p, red):
    return red.reduce(p)


@dataclass
class Certificate:
    status: str                   # "certificate" or "unknown"
    combination: dict = None      # W-basis index -> coefficient
    constant: Fraction = None
    element: object = None
    lagrangian: str = "first"


def orbit_not_in_variety(W, o, degree_bound=2, lagrangian="first", triple=None):
    triple = triple or sl2_from_orbit(o)
    red = ChiReduction(triple, lagrangian)
    reds = [red.reduce(w) for w in W.basis]
    for i, rr in enumerate(reds):
        if rr and set(rr) == {()}:
            return Certificate("certificate", {i: F(1)}, rr[()], W.basis[i], lagrangian)
    # multiply by monomials in the complement coordinates for higher degree bounds
    rows = list(reds)
    labels = [(i, ()) for i in range(len(reds))]
    extra = degree_bound - W.degree
    if extra > 0:
        nvars = len(red.complement_basis)
        for d in range(1, extra + 1):
            for mono in _monomials(nvars, d):
                for i, rr in enumerate(reds):
                    rows.append({tuple(sorted(m + mono)): c for m, c in rr.items()})
                    labels.append((i, mono))
    e = Echelon(track=True)
    for rr in rows:
        e.add(rr)
    combo = {}
    rest = e.reduce({(): F(1)}, combo)
    if rest:
        return Certificate("unknown", lagrangian=lagrangian)
    combo = {k: -c for k, c in combo.items() if c}
    if all(labels[k][1] == () for k in combo):
        elem = None
        for k, c in combo.items():
            term = W.basis[labels[k][0]] * c
            elem = term if elem is None else elem + term
        return Certificate("certificate", {labels[k][0]: c for k, c in combo.items()},
                           F(1), elem, lagrangian)
    return Certificate("certificate", {labels[k]: c for k, c in combo.items()}, F(1), None, lagrangian)


def _monomials(n, d, start=0):
    if d == 0:
        yield ()
        return
    for i in range(start, n):
        for rest in _monomials(n, d - 1, i):
            yield (i,) + rest


def eta_correction(x, triple):
    alg = triple.alg
    g0 = set(triple.grading.get(0, []))
    if any(i not in g0 for i in x.c):
        raise ValueError("x must lie in g(h,0)")
    g2 = triple.grading.get(2, [])
    e, f = triple.e, triple.f
    cols = [alg.bracket(e, alg.bracket(f, alg.basis_element(j))).c for j in g2]
    sol = solve(cols, alg.bracket(e, x).c)
    if sol is None:
        raise AssertionError("eta correction has no solution")
    return alg.element({g2[j]: c for j, c in sol.items()})


def slice_curve_point(t, lam, triple):
    alg = triple.alg
    if any(i > 2 and idxs for i, idxs in triple.grading.items()):
        raise ValueError("grading has nonzero pieces of degree > 2")
    x = lam * F(t)
    z = eta_correction(x, triple)
    return alg.exp_ad(z, triple.f + x)


def on_slice(point, triple):
    alg = triple.alg
    return alg.bracket(triple.e, point - triple.f).is_zero()


def same_charpoly(x, y):
    alg = x.alg
    return charpoly(alg.matrix(x)) == charpoly(alg.matrix(y))
