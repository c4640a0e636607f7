"""Chevalley bases of sl_n and so_2r realized by exact integer matrices.

Basis order: positive root vectors e_a (in the root datum's order), then the
Cartan elements h_1..h_r, then the negative root vectors f_a. Structure
constants are read off the matrix realization once and cached.
"""
from fractions import Fraction
from functools import cached_property
from itertools import product

from .linalg import Echelon, axpy, identity, mat_inv, mat_mul, mat_rank, rank, scale
from .rootdata import build_root_datum

F = Fraction


class LieElement:
    __slots__ = ("alg", "c")

    def __init__(self, alg, coeffs=None):
        self.alg = alg
        self.c = {k: F(v) for k, v in (coeffs or {}).items() if v != 0}

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return LieElement(self.alg, axpy(dict(self.c), 1, other.c))

    def __sub__(self, other):
        self._check(other)
        return LieElement(self.alg, axpy(dict(self.c), -1, other.c))

    def __neg__(self):
        return LieElement(self.alg, scale(self.c, -1))

    def __mul__(self, k):
        return LieElement(self.alg, scale(self.c, F(k)))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LieElement) and other.alg is self.alg and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self):
        return not self.c

    def __repr__(self):
        if not self.c:
            return "0"
        names = self.alg.names
        return " + ".join(f"{v}*{names[k]}" for k, v in sorted(self.c.items()))


def _sparse_mul(a, b):
    """Product of sparse matrices {(i,j): x}."""
    rows = {}
    for (k, j), y in b.items():
        rows.setdefault(k, []).append((j, y))
    out = {}
    for (i, k), x in a.items():
        for j, y in rows.get(k, ()):
            v = out.get((i, j), 0) + x * y
            if v:
                out[(i, j)] = v
            else:
                out.pop((i, j), None)
    return out


def _commutator(a, b):
    out = _sparse_mul(a, b)
    for key, v in _sparse_mul(b, a).items():
        w = out.get(key, 0) - v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


class LieAlgebra:
    def __init__(self, datum, size, root_matrices, names):
        self.datum = datum
        self.size = size                       # matrix size of the realization
        self.rank = datum.rank
        pos = datum.positive_roots
        self.n_pos = len(pos)
        self.dim = 2 * self.n_pos + self.rank
        r = self.rank
        mats, labels, weights = [], [], []
        for a in pos:
            mats.append(root_matrices[a])
            labels.append(names[a][0])
            weights.append(a)
        zero = tuple(F(0) for _ in range(datum.ambient_dim))
        simple_f = []
        for i, a in enumerate(datum.simple_roots):
            e = root_matrices[a]
            simple_f.append(_transpose(e))
        for i, a in enumerate(datum.simple_roots):
            mats.append(_commutator(root_matrices[a], simple_f[i]))
            labels.append(f"h_{i + 1}")
            weights.append(zero)
        for a in pos:
            mats.append(_transpose(root_matrices[a]))
            labels.append(names[a][1])
            weights.append(tuple(-x for x in a))
        self.matrices = mats
        self.names = labels
        self.weights = weights
        self.e_index = {a: i for i, a in enumerate(pos)}
        self.f_index = {a: self.n_pos + r + i for i, a in enumerate(pos)}
        self.h_index = [self.n_pos + i for i in range(r)]
        self._keys = []
        for idx in range(self.dim):
            if self.n_pos <= idx < self.n_pos + r:
                self._keys.append(None)
                continue
            m = mats[idx]
            key = min(m)
            self._keys.append((key, m[key]))
        self._key_lookup = {k[0]: (idx, k[1]) for idx, k in enumerate(self._keys) if k}
        # diagonal -> Cartan coefficients
        amb = datum.ambient_dim
        if datum.type_label == "A":
            self._diag_solve = None
        else:
            rows = [[F(x) for x in a] for a in datum.simple_roots]   # r x r
            self._diag_solve = mat_inv([list(col) for col in zip(*rows)])
        self._amb = amb
        self.table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                m = _commutator(mats[i], mats[j])
                if m:
                    v = self.decompose(m)
                    self.table[(i, j)] = v
                    self.table[(j, i)] = scale(v, -1)
        e_t, f_t = self.e_index[datum.highest_root.coords], self.f_index[datum.highest_root.coords]
        tr = _trace(_sparse_mul(mats[e_t], mats[f_t]))
        self.trace_scale = F(1) / tr
        self.form = {}
        for i in range(self.dim):
            for j in range(self.dim):
                t = _trace(_sparse_mul(mats[i], mats[j]))
                if t:
                    self.form[(i, j)] = self.trace_scale * t

    # realization
    def decompose(self, m):
        """Coordinates of a matrix of the algebra in the Chevalley basis."""
        out = {}
        for pos, v in m.items():
            if pos[0] == pos[1]:
                continue
            hit = self._key_lookup.get(pos)
            if hit is not None:
                idx, unit = hit
                out[idx] = F(v) / unit
        d = [F(m.get((i, i), 0)) for i in range(self._amb)]
        if self._diag_solve is None:
            s = F(0)
            for i in range(self.rank):
                s += d[i]
                if s:
                    out[self.h_index[i]] = s
        else:
            for i in range(self.rank):
                s = sum((self._diag_solve[i][j] * d[j] for j in range(self._amb)), F(0))
                if s:
                    out[self.h_index[i]] = s
        return {k: v for k, v in out.items() if v != 0}

    def element(self, coeffs):
        return LieElement(self, coeffs)

    def basis_element(self, idx):
        return LieElement(self, {idx: 1})

    def e(self, root):
        return self.basis_element(self.e_index[_root_key(root)])

    def f(self, root):
        return self.basis_element(self.f_index[_root_key(root)])

    def h(self, i):
        """h_i with 1-based index as in the Bourbaki numbering."""
        return self.basis_element(self.h_index[i - 1])

    def cartan_element(self, coeffs):
        """sum c_i h_i (c indexed from 0)."""
        return LieElement(self, {self.h_index[i]: c for i, c in enumerate(coeffs)})

    def coroot(self, root):
        """h_alpha = [e_alpha, f_alpha] for a positive root."""
        return self.bracket(self.e(root), self.f(root))

    def weight_to_cartan(self, w):
        """Image of a weight under the identification h* = h via the form."""
        # (h_i | x) = <alpha_i^vee-pairing>; solve via fundamental coordinates
        lam = w.fundamental_coords()
        g = self.cartan_gram_inv
        c = [sum((g[i][j] * lam[j] for j in range(self.rank)), F(0)) for i in range(self.rank)]
        return self.cartan_element(c)

    @cached_property
    def cartan_gram(self):
        return [[self.form.get((a, b), F(0)) for b in self.h_index] for a in self.h_index]

    @cached_property
    def cartan_gram_inv(self):
        return mat_inv(self.cartan_gram)

    @property
    def dual_coxeter(self):
        return self.datum.dual_coxeter

    @property
    def highest_root(self):
        return self.datum.highest_root

    def matrix(self, x):
        n = self.size
        m = [[F(0)] * n for _ in range(n)]
        for idx, c in x.c.items():
            for (i, j), v in self.matrices[idx].items():
                m[i][j] += c * v
        return m

    def from_matrix(self, m):
        sp = {(i, j): v for i, row in enumerate(m) for j, v in enumerate(row) if v != 0}
        return LieElement(self, self.decompose(sp))

    # bracket and form
    def bracket_basis(self, i, j):
        return self.table.get((i, j), {})

    def bracket(self, x, y):
        x._check(y)
        out = {}
        for i, a in x.c.items():
            for j, b in y.c.items():
                v = self.table.get((i, j))
                if v:
                    axpy(out, a * b, v)
        return LieElement(self, out)

    def pair(self, x, y):
        return sum((a * b * self.form.get((i, j), 0)
                    for i, a in x.c.items() for j, b in y.c.items()), F(0))

    def ad_columns(self, x):
        """Columns of ad(x): list over basis of [x, b] as sparse dicts."""
        out = []
        for j in range(self.dim):
            col = {}
            for i, a in x.c.items():
                v = self.table.get((i, j))
                if v:
                    axpy(col, a, v)
            out.append(col)
        return out

    def centralizer_dim(self, x):
        return self.dim - rank(self.ad_columns(x))

    def killing(self, i, j):
        """tr(ad b_i ad b_j) from the structure constants."""
        t = F(0)
        for k in range(self.dim):
            v = self.table.get((j, k))
            if not v:
                continue
            for l, c in v.items():
                w = self.table.get((i, l))
                if w:
                    t += c * w.get(k, 0)
        return t

    def root_of(self, idx):
        return self.weights[idx]

    def grade(self, idx, h_coeffs):
        """alpha(h) for the basis vector idx, h = sum c_i h_i (c 0-indexed)."""
        w = self.weights[idx]
        return sum((c * self.datum.pair_coroot(w, i) for i, c in enumerate(h_coeffs)), F(0))

    def exp_ad(self, z, x, max_terms=None):
        """exp(ad z)(x) for ad-nilpotent z (terminates exactly)."""
        total = x
        term = x
        k = 1
        limit = max_terms or 4 * self.dim
        while True:
            term = self.bracket(z, term) * F(1, k)
            if term.is_zero():
                return total
            total = total + term
            k += 1
            if k > limit:
                raise ValueError("ad z is not nilpotent")

    def jordan_type(self, x):
        from .orbits import Partition
        m = self.matrix(x)
        part = matrix_jordan_type(m)
        label = None
        if self.datum.type_label == "D" and part.is_very_even():
            label = very_even_label(m, self.rank)
        return part, label


def _root_key(root):
    if hasattr(root, "coords"):
        root = root.coords
    return tuple(F(x) for x in root)


def _transpose(m):
    return {(j, i): v for (i, j), v in m.items()}


def _trace(m):
    return sum((v for (i, j), v in m.items() if i == j), 0)


def build_sl(n):
    if n < 2:
        raise ValueError("sl_n needs n >= 2")
    datum = build_root_datum("A", n - 1)
    mats, names = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            a = tuple(F(int(k == i) - int(k == j)) for k in range(n))
            mats[a] = {(i, j): 1}
            names[a] = (f"e_{{{i + 1},{j + 1}}}", f"e_{{{j + 1},{i + 1}}}")
    return LieAlgebra(datum, n, mats, names)


def build_so_even(r):
    if r < 3:
        raise ValueError("so_2r needs r >= 3")
    datum = build_root_datum("D", r)
    n = 2 * r
    bar = lambda i: n - 1 - i     # 0-based version of 2r+1-i
    mats, names = {}, {}
    for i in range(r):
        for j in range(i + 1, r):
            a = tuple(F(int(k == i) - int(k == j)) for k in range(r))
            mats[a] = {(i, j): 1, (bar(j), bar(i)): -1}
            names[a] = (f"e[{i + 1}-{j + 1}]", f"f[{i + 1}-{j + 1}]")
            b = tuple(F(int(k == i) + int(k == j)) for k in range(r))
            mats[b] = {(i, bar(j)): 1, (j, bar(i)): -1}
            names[b] = (f"e[{i + 1}+{j + 1}]", f"f[{i + 1}+{j + 1}]")
    return LieAlgebra(datum, n, mats, names)


def build_algebra(type_label, rank):
    t = str(type_label).upper()
    if t == "A":
        return build_sl(rank + 1)
    if t == "D":
        return build_so_even(rank)
    raise ValueError(f"matrix realization only for types A and D, not {type_label}")


# Jordan types of matrices

def matrix_jordan_type(m):
    from .orbits import Partition
    n = len(m)
    ranks = [n]
    p = m
    while ranks[-1] > 0:
        if len(ranks) > n + 1:
            raise ValueError("matrix is not nilpotent")
        ranks.append(mat_rank(p))
        if ranks[-1] == ranks[-2] and ranks[-1] > 0:
            raise ValueError("matrix is not nilpotent")
        p = mat_mul(p, m)
    # blocks of size >= k: ranks[k-1] - ranks[k]
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k in range(len(ge)):
        exact = ge[k] - (ge[k + 1] if k + 1 < len(ge) else 0)
        parts += [k + 1] * exact
    return Partition(sorted(parts, reverse=True))


def _column_space(m):
    cols = [{i: m[i][j] for i in range(len(m)) if m[i][j] != 0} for j in range(len(m[0]))]
    e = Echelon()
    for c in cols:
        e.add(c)
    return e.basis()


def _kernel(m):
    from .linalg import nullspace
    n = len(m[0])
    cols = [{i: m[i][j] for i in range(len(m)) if m[i][j] != 0} for j in range(n)]
    return nullspace(cols)


def _apply(m, v):
    out = {}
    for i, row in enumerate(m):
        s = sum((row[j] * c for j, c in v.items()), F(0))
        if s:
            out[i] = s
    return out


def isotropic_flag_space(m):
    """L(x) = sum_j (im x^j cap ker x^j), a maximal isotropic subspace."""
    n = len(m)
    powers = [identity(n)]
    while True:
        nxt = mat_mul(powers[-1], m)
        powers.append(nxt)
        if all(v == 0 for row in nxt for v in row):
            break
    e = Echelon()
    for j in range(1, len(powers)):
        if 2 * j >= len(powers):
            ker = [{i: F(1)} for i in range(n)]
        else:
            ker = _kernel(powers[2 * j])
        for v in ker:
            w = _apply(powers[j], v)
            if w:
                e.add(w)
    return e.basis()


def very_even_label(m, r):
    """I/II label of a very even nilpotent in so_2r.

    Compares L(x) with the reference space spanned by the first r basis
    vectors; the orbit meeting the nilradical attached to l^I gives
    dim(L(x) cap L_ref) = r - 1 mod 2.
    """
    basis = isotropic_flag_space(m)
    if len(basis) != r:
        raise ValueError("not a very even nilpotent")
    proj = [{k: c for k, c in v.items() if k >= r} for v in basis]
    inter = r - rank(proj)
    return "I" if (inter - (r - 1)) % 2 == 0 else "II"
