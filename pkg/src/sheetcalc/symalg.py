"""Polynomials on g* (the symmetric algebra S(g)) with the adjoint action."""
from collections import deque
from fractions import Fraction
from itertools import combinations_with_replacement

from .linalg import Echelon, axpy, scale

F = Fraction


class PolyElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        t = {}
        for m, c in (terms or {}).items():
            if c != 0:
                m = tuple(sorted(m))
                t[m] = t.get(m, 0) + F(c)
        self.terms = {m: c for m, c in t.items() if c != 0}

    @classmethod
    def _raw(cls, alg, terms):
        p = cls.__new__(cls)
        p.alg = alg
        p.terms = terms
        return p

    @classmethod
    def from_lie(cls, x):
        return cls._raw(x.alg, {(i,): c for i, c in x.c.items()})

    @classmethod
    def constant(cls, alg, c):
        return cls(alg, {(): c})

    def __add__(self, other):
        return PolyElement._raw(self.alg, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other):
        return PolyElement._raw(self.alg, axpy(dict(self.terms), -1, other.terms))

    def __neg__(self):
        return PolyElement._raw(self.alg, scale(self.terms, -1))

    def __mul__(self, other):
        if not isinstance(other, PolyElement):
            return PolyElement._raw(self.alg, scale(self.terms, F(other)))
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return PolyElement._raw(self.alg, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = PolyElement.constant(self.alg, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, PolyElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def is_homogeneous(self):
        return len({len(m) for m in self.terms}) <= 1

    def weight_coords(self):
        """Common weight (epsilon coordinates) or None if not a weight vector."""
        ws = {monomial_weight(self.alg, m) for m in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.alg.names
        out = []
        for m, c in sorted(self.terms.items()):
            out.append(f"{c}*" + "*".join(names[i] for i in m) if m else str(c))
        return " + ".join(out)


def monomial_weight(alg, m):
    w = [F(0)] * alg.datum.ambient_dim
    for i in m:
        for k, x in enumerate(alg.weights[i]):
            w[k] += x
    return tuple(w)


def lie(x):
    return PolyElement.from_lie(x)


def _act_terms(alg, xc, terms):
    out = {}
    table = alg.table
    for m, c in terms.items():
        for pos, b in enumerate(m):
            if pos and m[pos - 1] == b:
                continue   # identical factors handled together via multiplicity
            mult = m.count(b)
            rest = m[:pos] + m[pos + mult:] + (b,) * (mult - 1)
            for i, a in xc.items():
                br = table.get((i, b))
                if not br:
                    continue
                for k, v in br.items():
                    mm = tuple(sorted(rest + (k,)))
                    val = out.get(mm, 0) + c * a * v * mult
                    if val:
                        out[mm] = val
                    else:
                        out.pop(mm, None)
    return out


def adjoint_act(x, p):
    """ad(x) extended to S(g) as a derivation."""
    return PolyElement._raw(p.alg, _act_terms(p.alg, x.c, p.terms))


def is_singular(p):
    """Weight of p if it is a weight vector killed by every e_i, else None."""
    if p.is_zero():
        return None
    w = p.weight_coords()
    if w is None:
        return None
    alg = p.alg
    for a in alg.datum.simple_roots:
        if _act_terms(alg, {alg.e_index[a]: F(1)}, p.terms):
            return None
    return alg.datum.weight(w)


class SubmoduleSpan:
    def __init__(self, alg, degree, basis, highest_weight, by_weight):
        self.alg = alg
        self.degree = degree
        self.basis = basis
        self.highest_weight = highest_weight
        self.by_weight = by_weight

    @property
    def dim(self):
        return len(self.basis)

    def weight_space(self, coords):
        return [PolyElement._raw(self.alg, dict(v)) for v in self.by_weight.get(tuple(coords), [])]

    def contains(self, p):
        w = p.weight_coords()
        if p.is_zero():
            return True
        if w is None:
            return all(self.contains(q) for q in split_weights(p))
        e = Echelon()
        for v in self.by_weight.get(w, []):
            e.add(v)
        return e.contains(p.terms)


def split_weights(p):
    parts = {}
    for m, c in p.terms.items():
        parts.setdefault(monomial_weight(p.alg, m), {})[m] = c
    return [PolyElement._raw(p.alg, t) for t in parts.values()]


def generate_submodule(v, max_dim=None):
    alg = v.alg
    if not v.is_homogeneous() or v.weight_coords() is None:
        raise ValueError("expected a homogeneous weight vector")
    d = v.degree
    ops = []
    for a in alg.datum.simple_roots:
        ops.append({alg.e_index[a]: F(1)})
        ops.append({alg.f_index[a]: F(1)})
    spaces = {}
    queue = deque()

    def push(terms):
        w = monomial_weight(alg, next(iter(terms)))
        ech = spaces.setdefault(w, Echelon())
        row = ech.add(terms)
        if row is not None:
            queue.append(dict(row))

    push(v.terms)
    bound = max_dim or _sym_dim(alg.dim, d)
    while queue:
        t = queue.popleft()
        for op in ops:
            r = _act_terms(alg, op, t)
            if r:
                push(r)
        if sum(len(e) for e in spaces.values()) > bound:
            raise RuntimeError("span failed to stabilize")
    by_weight = {w: e.basis() for w, e in spaces.items()}
    basis = [PolyElement._raw(alg, dict(b)) for w in sorted(by_weight) for b in by_weight[w]]
    top = max(by_weight, key=lambda w: alg.datum.inner(w, alg.datum.rho.coords))
    return SubmoduleSpan(alg, d, basis, alg.datum.weight(top), by_weight)


def _sym_dim(n, d):
    from math import comb
    return comb(n + d - 1, d)


def zero_weight_space(W):
    z = tuple(F(0) for _ in range(W.alg.datum.ambient_dim))
    return W.weight_space(z)


def casimir(alg):
    """sum x_i x^i for dual bases of the normalized form."""
    out = {}
    for a in alg.datum.positive_roots:
        e, f = alg.e_index[a], alg.f_index[a]
        c = 1 / alg.form[(e, f)]
        out[tuple(sorted((e, f)))] = 2 * c
    g = alg.cartan_gram_inv
    for i, a in enumerate(alg.h_index):
        for j, b in enumerate(alg.h_index):
            if g[i][j]:
                m = tuple(sorted((a, b)))
                out[m] = out.get(m, 0) + g[i][j]
    return PolyElement(alg, out)


def evaluate(p, x):
    """Value of p at x in g, identified with g* through the form."""
    alg = p.alg
    vals = {}
    total = F(0)
    for m, c in p.terms.items():
        v = c
        for i in m:
            if i not in vals:
                vals[i] = alg.pair(alg.basis_element(i), x)
            v *= vals[i]
        total += v
    return total


def _require_weight_zero(p):
    z = tuple(F(0) for _ in range(p.alg.datum.ambient_dim))
    for m in p.terms:
        if monomial_weight(p.alg, m) != z:
            raise ValueError("polynomial is not of weight zero")


def chevalley_projection(p):
    """Restriction to h: drop every monomial containing a root vector."""
    _require_weight_zero(p)
    hs = set(p.alg.h_index)
    return PolyElement._raw(p.alg, {m: c for m, c in p.terms.items() if all(i in hs for i in m)})


def hc_projection_deg2(p):
    """Harish-Chandra projection of the symmetrization, degree <= 2."""
    _require_weight_zero(p)
    alg = p.alg
    if p.degree > 2:
        raise ValueError("only degree <= 2 is supported")
    hs = set(alg.h_index)
    out = {}
    for m, c in p.terms.items():
        if all(i in hs for i in m):
            axpy(out, c, {m: F(1)})
            continue
        # weight zero and degree 2 with root vectors: x in g_a, y in g_-a
        x, y = m
        if x in alg.f_index.values():
            x, y = y, x
        # sym(xy) = yx + [x,y]/2 with yx in n_- U(g) n_+
        br = alg.bracket_basis(x, y)
        for k, v in br.items():
            axpy(out, c * v / 2, {(k,): F(1)})
    return PolyElement(alg, out)


def cartan_poly(p):
    """Rewrite an S(h) polynomial with 0-based Cartan indices as variables."""
    alg = p.alg
    pos = {h: i for i, h in enumerate(alg.h_index)}
    out = {}
    for m, c in p.terms.items():
        out[tuple(sorted(pos[i] for i in m))] = c
    return out


def cartan_poly_to_poly(alg, q):
    return PolyElement(alg, {tuple(alg.h_index[i] for i in m): c for m, c in q.items()})


def hvar(alg, i):
    """h_i as a polynomial, 1-based."""
    return PolyElement(alg, {(alg.h_index[i - 1],): 1})


# distinguished vectors

def sl_root(n, i, j):
    return tuple(F(int(k == i - 1) - int(k == j - 1)) for k in range(n))


def eij(alg, i, j):
    """Elementary matrix E_ij (1-based, i != j) of sl_n as a basis element."""
    n = alg.size
    a = sl_root(n, i, j)
    if i < j:
        return alg.e(a)
    return alg.f(tuple(-x for x in a))


def sl_distinguished_roots(n):
    theta = sl_root(n, 1, n)
    theta1 = sl_root(n, 2, n - 1)
    beta = sl_root(n, 1, n - 1)
    gamma = sl_root(n, 2, n)
    return theta, theta1, beta, gamma


def v_one(alg):
    n = alg.size
    if alg.datum.type_label != "A" or n < 4:
        raise ValueError("v1 lives in S^2(sl_n), n >= 4")
    return lie(eij(alg, 1, n)) * lie(eij(alg, 2, n - 1)) - lie(eij(alg, 1, n - 1)) * lie(eij(alg, 2, n))


def v_zero(alg):
    n = alg.size
    if alg.datum.type_label != "A" or n % 2 or n < 4:
        raise ValueError("v0 lives in S^2(sl_2m), m >= 2")
    m = n // 2
    et = lie(eij(alg, 1, n))
    out = PolyElement(alg)
    for i in range(1, n):
        out = out + hvar(alg, i) * et * F(m - i, m)
    for i in range(1, n - 1):
        out = out + lie(eij(alg, 1, i + 1)) * lie(eij(alg, i + 1, n))
    return out


def d_root(r, i, j, sign):
    return tuple(F(int(k == i - 1) + sign * int(k == j - 1)) for k in range(r))


def w_one(alg):
    if alg.datum.type_label != "D":
        raise ValueError("w1 lives in S^2(so_2r)")
    r = alg.rank
    out = PolyElement(alg)
    for i in range(2, r + 1):
        out = out + lie(alg.e(d_root(r, 1, i, -1))) * lie(alg.e(d_root(r, 1, i, 1)))
    return out
