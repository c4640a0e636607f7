"""Root systems of the simple Lie algebras in epsilon coordinates.

Simple roots follow Bourbaki numbering. The inner product is the dot product
in the ambient space rescaled so that the highest root has squared length 2.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product

from .linalg import mat_inv

F = Fraction
HALF = F(1, 2)


def _unit(n, i, c=1):
    v = [F(0)] * n
    v[i] = F(c)
    return v


def _add(*vs):
    return [sum(xs, F(0)) for xs in zip(*vs)]


def _simple_roots(t, r):
    if t == "A":
        n = r + 1
        return n, [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(r)]
    if t in "BCD":
        n = r
        roots = [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(r - 1)]
        if t == "B":
            roots.append(_unit(n, r - 1))
        elif t == "C":
            roots.append(_unit(n, r - 1, 2))
        else:
            roots.append(_add(_unit(n, r - 2), _unit(n, r - 1)))
        return n, roots
    if t == "E":
        n = 8
        a1 = [HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]
        a2 = _add(_unit(n, 0), _unit(n, 1))
        rest = [_add(_unit(n, i + 1), _unit(n, i, -1)) for i in range(6)]
        return n, ([a1, a2] + rest)[:r]
    if t == "F":
        n = 4
        return n, [_add(_unit(n, 1), _unit(n, 2, -1)),
                   _add(_unit(n, 2), _unit(n, 3, -1)),
                   _unit(n, 3),
                   [HALF, -HALF, -HALF, -HALF]]
    if t == "G":
        n = 3
        return n, [[F(1), F(-1), F(0)], [F(-2), F(1), F(1)]]
    raise ValueError(f"unknown type {t}")


_RANK_OK = {
    "A": lambda r: r >= 1, "B": lambda r: r >= 2, "C": lambda r: r >= 2,
    "D": lambda r: r >= 3, "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4, "G": lambda r: r == 2,
}


def build_root_datum(type_label, rank):
    t = str(type_label).upper()
    if t not in _RANK_OK or not _RANK_OK[t](rank):
        raise ValueError(f"unsupported root system {type_label}{rank}")
    return RootDatum(t, rank)


@dataclass(frozen=True)
class Weight:
    coords: tuple
    datum: "RootDatum" = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(F(c) for c in self.coords))

    def _check(self, other):
        if other.datum.key != self.datum.key:
            raise ValueError("weights on different root data")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.datum)

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.datum)

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords), self.datum)

    def __mul__(self, c):
        c = F(c)
        return Weight(tuple(c * a for a in self.coords), self.datum)

    __rmul__ = __mul__

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def dot(self, other):
        return self.datum.inner(self.coords, other.coords)

    def fundamental_coords(self):
        """Coordinates lambda_i with self = sum lambda_i * varpi_i."""
        return tuple(self.datum.pair_coroot(self.coords, i) for i in range(self.datum.rank))

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


class RootDatum:
    def __init__(self, type_label, rank):
        self.type_label = type_label
        self.rank = rank
        self.ambient_dim, self.simple_roots = _simple_roots(type_label, rank)
        self.simple_roots = [tuple(a) for a in self.simple_roots]
        raw_long = max(sum(x * x for x in a) for a in self.simple_roots)
        # normalize so long roots (hence the highest root) have length 2
        self.form_scale = F(2) / raw_long
        self.cartan_matrix = [[int(self.pair_coroot(a, j)) for j in range(rank)]
                              for a in self.simple_roots]
        self.positive_roots = self._positive_roots()

    @property
    def key(self):
        return (self.type_label, self.rank)

    def __repr__(self):
        return f"RootDatum({self.type_label}{self.rank})"

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # inner products
    def inner(self, u, v):
        return self.form_scale * sum((F(a) * b for a, b in zip(u, v)), F(0))

    def pair_coroot(self, u, j):
        """<u, alpha_j^vee> = 2 (u|alpha_j) / (alpha_j|alpha_j)."""
        a = self.simple_roots[j]
        return 2 * self.inner(u, a) / self.inner(a, a)

    def _positive_roots(self):
        # level-by-level closure using root strings
        simple = self.simple_roots
        roots = {a: tuple(int(i == j) for j in range(self.rank)) for i, a in enumerate(simple)}
        layer = list(simple)
        while layer:
            nxt = []
            for b in layer:
                for i, a in enumerate(simple):
                    q = 0
                    c = b
                    while True:
                        c = tuple(x - y for x, y in zip(c, a))
                        if c in roots:
                            q += 1
                        else:
                            break
                    p = q - self.pair_coroot(b, i)
                    if p > 0:
                        s = tuple(x + y for x, y in zip(b, a))
                        if s not in roots:
                            roots[s] = tuple(x + int(j == i) for j, x in enumerate(roots[b]))
                            nxt.append(s)
            layer = nxt
        self.simple_coeffs = roots
        return sorted(roots, key=lambda r: (sum(roots[r]), tuple(-x for x in roots[r])))

    def height(self, root):
        return sum(self.simple_coeffs[tuple(root)])

    # distinguished weights
    def weight(self, coords):
        return Weight(tuple(coords), self)

    def root(self, i):
        return self.weight(self.simple_roots[i])

    @cached_property
    def highest_root(self):
        return self.weight(max(self.positive_roots, key=self.height))

    @cached_property
    def fundamental_weights(self):
        a = [[F(x) for x in row] for row in self.cartan_matrix]
        inv = mat_inv(a)
        out = []
        for i in range(self.rank):
            v = [F(0)] * self.ambient_dim
            for k in range(self.rank):
                for j in range(self.ambient_dim):
                    v[j] += inv[i][k] * self.simple_roots[k][j]
            out.append(self.weight(v))
        return out

    @cached_property
    def rho(self):
        w = self.weight([0] * self.ambient_dim)
        for x in self.fundamental_weights:
            w = w + x
        return w

    def from_fundamental(self, coeffs):
        w = self.weight([0] * self.ambient_dim)
        for c, x in zip(coeffs, self.fundamental_weights):
            w = w + x * c
        return w

    def coroot_pairing(self, w, root):
        root = tuple(F(x) for x in root)
        return 2 * self.inner(w.coords, root) / self.inner(root, root)

    @cached_property
    def dual_coxeter(self):
        return int(1 + self.coroot_pairing(self.rho, self.highest_root.coords))

    @cached_property
    def coxeter(self):
        return 1 + self.height(self.highest_root.coords)

    @cached_property
    def lacing(self):
        lens = {self.inner(a, a) for a in self.simple_roots}
        return int(max(lens) / min(lens))

    @cached_property
    def dimension(self):
        return self.rank + 2 * len(self.positive_roots)

    def weyl_dimension(self, w):
        num, den = F(1), F(1)
        lr = w + self.rho
        for a in self.positive_roots:
            num *= self.inner(lr.coords, a)
            den *= self.inner(self.rho.coords, a)
        return num / den

    def reflect(self, w, i):
        a = self.simple_roots[i]
        c = self.pair_coroot(w.coords, i)
        return Weight(tuple(x - c * y for x, y in zip(w.coords, a)), self)

    def dominant(self, w):
        """Dominant representative of the Weyl orbit of a real weight."""
        while True:
            for i in range(self.rank):
                if self.pair_coroot(w.coords, i) < 0:
                    w = self.reflect(w, i)
                    break
            else:
                return w


def fundamental_weights(datum):
    return datum.fundamental_weights


def weyl_conjugate(lhs, rhs):
    d = lhs.datum
    lhs._check(rhs)
    if d.type_label == "A":
        return sorted(lhs.coords) == sorted(rhs.coords)
    if d.type_label == "D":
        if sorted(map(abs, lhs.coords)) != sorted(map(abs, rhs.coords)):
            return False
        if any(c == 0 for c in lhs.coords):
            return True
        neg = lambda w: sum(1 for c in w.coords if c < 0) % 2
        return neg(lhs) == neg(rhs)
    raise ValueError(f"weyl_conjugate supports types A and D, not {d.type_label}")


def cone_membership(lam, target):
    """Nonzero c with lam conjugate to c*target, or None."""
    lam._check(target)
    if lam.is_zero() or target.is_zero():
        return None
    cands = set()
    for x in lam.coords:
        for y in target.coords:
            if x != 0 and y != 0:
                cands.add(x / y)
    for c in sorted(cands):
        if weyl_conjugate(lam, target * c):
            return c
    return None


def brute_force_conjugate(lhs, rhs):
    """Oracle: search the whole Weyl group (types A and D, small rank)."""
    d = lhs.datum
    n = d.ambient_dim
    target = tuple(rhs.coords)
    if d.type_label == "A":
        return any(tuple(lhs.coords[p] for p in perm) == target
                   for perm in permutations(range(n)))
    if d.type_label == "D":
        for perm in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                if signs.count(-1) % 2:
                    continue
                if tuple(s * lhs.coords[p] for s, p in zip(signs, perm)) == target:
                    return True
        return False
    raise ValueError("brute force only for A and D")
