"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``key -> Fraction`` with zero entries dropped.
Keys only need to be hashable and mutually comparable (pivots are chosen
as the smallest key of a row).
"""
from fractions import Fraction


def clean(v):
    return {k: c for k, c in v.items() if c != 0}


def axpy(acc, coef, v):
    """acc += coef * v, in place."""
    if coef == 0:
        return acc
    for k, c in v.items():
        x = acc.get(k, 0) + coef * c
        if x == 0:
            acc.pop(k, None)
        else:
            acc[k] = x
    return acc


def scale(v, coef):
    if coef == 0:
        return {}
    return {k: coef * c for k, c in v.items()}


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    ``add`` reduces a vector against the current rows and keeps it if it is
    new. Rows are normalized so the pivot coefficient is 1, and the basis is
    kept fully reduced so ``reduce`` is a single pass.
    """

    def __init__(self, track=False):
        self.rows = {}          # pivot -> row
        self.track = track      # remember combinations of the input vectors
        self.combos = {}        # pivot -> {input index: coef}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, v, combo=None):
        v = dict(v)
        for k in sorted(k for k in v if k in self.rows):
            c = v.get(k, 0)
            if c == 0:
                continue
            axpy(v, -c, self.rows[k])
            if combo is not None:
                axpy(combo, -c, self.combos[k])
        return v

    def add(self, v):
        """Insert v; return the new (normalized) row or None if dependent."""
        idx = self.count
        self.count += 1
        combo = {idx: Fraction(1)} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return None
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = scale(r, inv)
        if combo is not None:
            combo = scale(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c:
                axpy(row, -c, r)
                if combo is not None:
                    axpy(self.combos[q], -c, combo)
        self.rows[p] = r
        if combo is not None:
            self.combos[p] = combo
        return r

    def contains(self, v):
        return not self.reduce(v)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def span_equal(a, b):
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    return len(ea) == len(eb) and all(eb.contains(v) for v in ea.basis())


def solve(columns, target):
    """Find x with sum_j x_j * columns[j] = target, or None.

    columns: list of sparse vectors. Returns a dict j -> Fraction (a particular
    solution, free variables set to zero).
    """
    e = Echelon(track=True)
    for col in columns:
        e.add(col)
    combo = {}
    r = e.reduce(target, combo)
    if r:
        return None
    # reduce() tracked -(coefficients); target = sum of the subtracted rows
    return {j: -c for j, c in combo.items() if c != 0}


def nullspace(columns, n_cols=None):
    """Basis of {x : sum_j x_j columns[j] = 0} as dicts j -> Fraction."""
    e = Echelon(track=True)
    out = []
    for j, col in enumerate(columns):
        combo = {j: Fraction(1)}
        r = e.reduce(col, combo)
        if not r:
            out.append(clean(combo))
        else:
            # insert through the public path to keep bookkeeping consistent
            e.count = j
            e.add(col)
    return out


# dense helpers for small square matrices (lists of lists of Fraction)

def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def mat_rank(a):
    rows = [{j: x for j, x in enumerate(row) if x} for row in a]
    return rank(rows)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def charpoly(a):
    """Coefficients [c_0, ..., c_n] of det(tI - a), Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = mat_mul(a, m)
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        prod = mat_mul(a, m)
        tr = sum(prod[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def mat_inv(a):
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
