"""Zero loci on the Cartan subalgebra of product-shaped quadratic systems.

A Cartan polynomial is a dict {tuple of 0-based variable indices: Fraction};
variable i is the coordinate lambda_i = h_i(lambda) of a weight written as
sum lambda_i varpi_i.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .linalg import Echelon, nullspace, solve
from .rootdata import cone_membership

F = Fraction


@dataclass(frozen=True)
class LinearComponent:
    """The affine subspace base + span(directions), fundamental coordinates."""
    base: tuple
    directions: tuple

    @property
    def direction(self):
        if len(self.directions) > 1:
            raise ValueError("component has dimension > 1")
        return self.directions[0] if self.directions else tuple(F(0) for _ in self.base)

    @property
    def dim(self):
        return len(self.directions)

    def point(self, *ts):
        p = list(self.base)
        for t, d in zip(ts, self.directions):
            p = [a + F(t) * b for a, b in zip(p, d)]
        return tuple(p)

    def contains_point(self, x):
        diff = {i: F(a) - b for i, (a, b) in enumerate(zip(x, self.base)) if F(a) - b != 0}
        e = Echelon()
        for d in self.directions:
            e.add({i: c for i, c in enumerate(d) if c})
        return e.contains(diff)

    def contained_in(self, other):
        if not other.contains_point(self.base):
            return False
        e = Echelon()
        for d in other.directions:
            e.add({i: c for i, c in enumerate(d) if c})
        return all(e.contains({i: c for i, c in enumerate(d) if c}) for d in self.directions)


def canonical(base, directions):
    n = len(base)
    e = Echelon()
    for d in directions:
        e.add({i: F(c) for i, c in enumerate(d) if c})
    rows = e.basis()
    b = e.reduce({i: F(c) for i, c in enumerate(base) if c})
    dirs = tuple(tuple(r.get(i, F(0)) for i in range(n)) for r in rows)
    return LinearComponent(tuple(b.get(i, F(0)) for i in range(n)), dirs)


def line(direction, base=None):
    n = len(direction)
    return canonical(base or (F(0),) * n, [direction])


def split_product(poly):
    """(i, L) with poly = x_i * L and L affine-linear, choosing the smallest i."""
    monos = [m for m, c in poly.items() if c != 0]
    if not monos:
        raise ValueError("zero generator")
    common = set(monos[0])
    for m in monos[1:]:
        common &= set(m)
    for i in sorted(common):
        lin = {}
        for m, c in poly.items():
            if c == 0:
                continue
            rest = list(m)
            rest.remove(i)
            if len(rest) > 1:
                break
            key = rest[0] if rest else None
            lin[key] = lin.get(key, 0) + c
        else:
            return i, lin
    raise ValueError(f"generator {poly} is not a coordinate times an affine-linear form")


def evaluate(poly, x):
    total = F(0)
    for m, c in poly.items():
        v = F(c)
        for i in m:
            v *= x[i]
        total += v
    return total


def _solve_affine(eqs, n):
    """eqs: list of dicts var->coef with key None as constant. Return component or None."""
    cols = [dict() for _ in range(n)]
    target = {}
    for r, eq in enumerate(eqs):
        for k, c in eq.items():
            if c == 0:
                continue
            if k is None:
                target[r] = -F(c)
            else:
                cols[k][r] = F(c)
    sol = solve(cols, target)
    if sol is None:
        return None
    base = tuple(sol.get(i, F(0)) for i in range(n))
    dirs = [tuple(v.get(i, F(0)) for i in range(n)) for v in nullspace(cols)]
    return canonical(base, dirs)


def solve_on_cartan(generators, n_vars):
    """Complete zero set of x_i * L(x) generators as a union of affine pieces."""
    split = [split_product(g) for g in generators]
    dist = sorted({i for i, _ in split})
    comps = []
    for zero_set in product((True, False), repeat=len(dist)):
        zs = {i for i, z in zip(dist, zero_set) if z}
        eqs = [{i: F(1)} for i in zs]
        eqs += [lin for i, lin in split if i not in zs]
        c = _solve_affine(eqs, n_vars)
        if c is not None and c not in comps:
            comps.append(c)
    keep = []
    for c in comps:
        if any(o != c and c.contained_in(o) for o in comps):
            continue
        keep.append(c)
    return sorted(keep, key=_sort_key)


def _sort_key(c):
    return (c.dim, c.directions, c.base)


def same_components(a, b):
    return set(a) == set(b) and len(set(a)) == len(a)


def verify_component(generators, comp):
    """Every generator vanishes identically on the component."""
    # a polynomial of degree <= 2 in the parameters vanishes identically
    # iff it vanishes on a 3^d grid
    for ts in product(range(3), repeat=comp.dim):
        x = comp.point(*ts)
        if any(evaluate(g, x) != 0 for g in generators):
            return False
    return True


# type A, level -1

def type_a_level_minus1(n):
    r = n - 1
    gens = []
    for i in range(r):
        for j in range(i + 2, r):
            gens.append({(i, j): F(1)})
    for i in range(1, r - 1):
        gens.append({tuple(sorted((i, i - 1))): F(1), (i, i): F(1), tuple(sorted((i, i + 1))): F(1)})
    return gens


def type_a_level_minus1_expected(n):
    r = n - 1
    unit = lambda i: tuple(F(int(k == i)) for k in range(r))
    out = [line(unit(0)), line(unit(r - 1))]
    for i in range(r - 1):
        out.append(line(tuple(a - b for a, b in zip(unit(i), unit(i + 1)))))
    return sorted(set(out), key=_sort_key)


# type A, level -m

def q_hat(m, i, constant=True):
    """Affine-linear factor of p_i (1-based i) as {var or None: coef}."""
    out = {}
    for j in range(1, 2 * m):
        if j < i:
            c = F(-j, m)
        elif j == i:
            c = F(m - i, m)
        else:
            c = F(2 * m - j, m)
        if c:
            out[j - 1] = c
    if constant and m - i:
        out[None] = F(m - i)
    return out


def p_hat_system(m, constant=True):
    gens = []
    for i in range(1, 2 * m):
        g = {}
        for k, c in q_hat(m, i, constant).items():
            mono = (i - 1,) if k is None else tuple(sorted((i - 1, k)))
            g[mono] = g.get(mono, 0) + c
        gens.append({k: v for k, v in g.items() if v})
    return gens


def alt_sum(tup):
    return sum((-1) ** (k + 1) * i for k, i in enumerate(tup))


def lambda_sets(m, s):
    """Increasing s-tuples in 1..2m-1 with sum_k (-1)^k i_k = (-1)^s m."""
    return [t for t in combinations(range(1, 2 * m), s)
            if sum((-1) ** (k + 1) * i for k, i in enumerate(t, 0)) == (-1) ** s * m]


def _c(tup, j):
    """c at position j (1-based) of the tuple."""
    i1 = tup[0]
    s = sum((-1) ** (k + 1) * tup[k - 1] for k in range(2, j))
    return i1 + 2 * s + (-1) ** (j + 1) * tup[j - 1]


def xi_hat_component(m, tup):
    r = 2 * m - 1
    base = [F(0)] * r
    d = [F(0)] * r
    d[tup[0] - 1] += 1
    for j in range(2, len(tup) + 1):
        sign = (-1) ** j
        idx = tup[j - 1] - 1
        d[idx] += -sign
        base[idx] += sign * _c(tup, j)
    return canonical(tuple(base), [tuple(d)])


def xi_hat(m):
    comps = []
    for s in range(1, 2 * m):
        for tup in lambda_sets(m, s):
            c = xi_hat_component(m, tup)
            if c not in comps:
                comps.append(c)
    return sorted(comps, key=_sort_key)


def xi(m):
    """Lines C(sum (-1)^j varpi_{i_j}) over the same index sets."""
    r = 2 * m - 1
    comps = []
    for s in range(1, 2 * m):
        for tup in lambda_sets(m, s):
            d = [F(0)] * r
            for j, i in enumerate(tup, 1):
                d[i - 1] += (-1) ** j
            c = line(tuple(d))
            if c not in comps:
                comps.append(c)
    return sorted(comps, key=_sort_key)


def claim_j(tup, m):
    """Insertion (position l, value j) putting tup + {j} into Lambda_{s+1}.

    Returns None when tup already lies in Lambda_s.
    """
    tup = tuple(tup)
    s = len(tup)
    if sum((-1) ** (k + 1) * i for k, i in enumerate(tup, 0)) == (-1) ** s * m:
        return None
    target = (-1) ** (s + 1) * m
    # inserting j at position l (0-based) gives it sign (-1)^(l+1) and flips
    # the signs of the later entries; solve for j in closed form per position
    for l in range(s + 1):
        head = sum((-1) ** (k + 1) * tup[k] for k in range(l))
        tail = sum((-1) ** (k + 2) * tup[k] for k in range(l, s))
        j = (target - head - tail) * (-1) ** (l + 1)
        lo = tup[l - 1] if l > 0 else 0
        hi = tup[l] if l < s else 2 * m
        if lo < j < hi:
            return l, j
    for l in range(s + 1):        # exhaustive fallback
        for j in range(1, 2 * m):
            t = tup[:l] + (j,) + tup[l:]
            if list(t) == sorted(set(t)) and t in lambda_sets(m, s + 1):
                return l, j
    raise RuntimeError("no insertion found")


# type D

def type_d_system(r):
    gens = []
    for i in range(1, r - 1):
        g = {(i - 1, i - 1): F(1)}
        for j in range(i + 1, r - 1):
            g[(i - 1, j - 1)] = F(2)
        g[(i - 1, r - 2)] = F(1)
        g[(i - 1, r - 1)] = F(1)
        gens.append(g)
    gens.append({(r - 2, r - 1): F(1)})
    return gens


def type_d_expected(r):
    comps = set()
    for k in range(r - 1):
        for idx in combinations(range(1, r - 1), k):
            for last in (r - 1, r):
                d = [F(0)] * r
                for j, i in enumerate(idx, 1):
                    d[i - 1] += (-1) ** (k - j + 1)
                d[last - 1] += 1
                comps.add(line(tuple(d)))
    return sorted(comps, key=_sort_key)


# classification

def classify_components(components, targets, datum):
    """Map each component to the target whose cone contains its generic point.

    Returns a list of (component, target index, scale) with target index None
    for the zero component ("nilpotent-only"). The generic point is tested at
    t=1 and t=2 and the two answers must agree.
    """
    out = []
    for comp in components:
        if comp.dim == 0 and all(c == 0 for c in comp.base):
            out.append((comp, None, None))
            continue
        if comp.dim > 1:
            raise ValueError("only lines are classified")
        hits = []
        for t in (1, 2):
            w = datum.from_fundamental(comp.point(t))
            found = None
            for ti, target in enumerate(targets):
                c = cone_membership(w, target)
                if c is not None:
                    found = (ti, c)
                    break
            hits.append(found)
        if (hits[0] is None) != (hits[1] is None) or (hits[0] and hits[0][0] != hits[1][0]):
            raise ValueError(f"classification of {comp} depends on the parameter")
        out.append((comp, hits[0][0] if hits[0] else "unclassified", hits[0][1] if hits[0] else None))
    return out
