"""The realization of U(sl_n) by differential operators on C^n."""
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .linalg import axpy

F = Fraction


class WeylOperator:
    """Normal-ordered sum of z^a d^b (all z's left of all derivatives)."""
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: F(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def z(cls, n, i):
        a = tuple(int(k == i) for k in range(n))
        return cls(n, {(a, (0,) * n): 1})

    @classmethod
    def d(cls, n, i):
        b = tuple(int(k == i) for k in range(n))
        return cls(n, {((0,) * n, b): 1})

    @classmethod
    def scalar(cls, n, c):
        return cls(n, {((0,) * n, (0,) * n): c})

    def __add__(self, other):
        return WeylOperator(self.n, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other):
        return WeylOperator(self.n, axpy(dict(self.terms), -1, other.terms))

    def __mul__(self, c):
        return WeylOperator(self.n, {k: v * F(c) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, WeylOperator) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for (a, b), c in sorted(self.terms.items()):
            zs = "".join(f"z{i + 1}^{e}" if e > 1 else f"z{i + 1}" for i, e in enumerate(a) if e)
            ds = "".join(f"d{i + 1}^{e}" if e > 1 else f"d{i + 1}" for i, e in enumerate(b) if e)
            out.append(f"{c}*{zs}{ds}" if zs or ds else str(c))
        return " + ".join(out)


def _falling(c, j):
    out = 1
    for t in range(j):
        out *= c - t
    return out


def compose(x, y):
    """x o y in normal order, using d^b z^c = sum_j C(b,j) c!/(c-j)! z^(c-j) d^(b-j)."""
    if x.n != y.n:
        raise ValueError("different numbers of variables")
    n = x.n
    out = {}
    for (a1, b1), c1 in x.terms.items():
        for (a2, b2), c2 in y.terms.items():
            ranges = [range(min(b1[i], a2[i]) + 1) for i in range(n)]
            for js in product(*ranges):
                coef = c1 * c2
                for i, j in enumerate(js):
                    if j:
                        coef *= comb(b1[i], j) * _falling(a2[i], j)
                a = tuple(a1[i] + a2[i] - js[i] for i in range(n))
                b = tuple(b1[i] + b2[i] - js[i] for i in range(n))
                v = out.get((a, b), 0) + coef
                if v:
                    out[(a, b)] = v
                else:
                    out.pop((a, b), None)
    return WeylOperator(n, out)


def commutator(x, y):
    return compose(x, y) - compose(y, x)


def _psi_basis(alg, idx):
    n = alg.size
    z = lambda i: WeylOperator.z(n, i)
    d = lambda i: WeylOperator.d(n, i)
    if idx in alg.h_index:
        i = alg.h_index.index(idx)
        return compose(z(i + 1), d(i + 1)) - compose(z(i), d(i))
    (i, j), _ = next(iter(alg.matrices[idx].items()))
    # e_{i,j} -> -z_j d_i
    return compose(z(j), d(i)) * -1


def psi(x):
    alg = x.alg
    if alg.datum.type_label != "A":
        raise ValueError("psi is defined for sl_n only")
    out = WeylOperator(alg.size)
    for idx, c in x.c.items():
        out = out + _psi_basis(alg, idx) * c
    return out


def psi_sym(p):
    """psi of the symmetrization of p (degree <= 2 terms, any degree works)."""
    from itertools import permutations
    alg = p.alg
    n = alg.size
    cache = {}

    def base(i):
        if i not in cache:
            cache[i] = _psi_basis(alg, i)
        return cache[i]

    out = WeylOperator(n)
    for mono, c in p.terms.items():
        perms = list(permutations(mono))
        acc = WeylOperator(n)
        for perm in perms:
            t = WeylOperator.scalar(n, 1)
            for i in perm:
                t = compose(t, base(i))
            acc = acc + t
        out = out + acc * (c / len(perms))
    return out


def kernel_check_W1(n, W=None):
    from .liealg import build_sl
    from .symalg import generate_submodule, v_one
    if n < 4:
        raise ValueError("n >= 4")
    if W is None:
        W = generate_submodule(v_one(build_sl(n)))
    return all(psi_sym(w).is_zero() for w in W.basis)
