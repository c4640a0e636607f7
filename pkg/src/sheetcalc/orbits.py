"""Nilpotent orbits of sl_n and so_2r: partitions, induction, rigidity, sheets."""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .linalg import mat_inv

F = Fraction


class Partition(tuple):
    def __new__(cls, parts):
        parts = tuple(sorted((int(p) for p in parts if p), reverse=True))
        if any(p < 0 for p in parts):
            raise ValueError("negative part")
        return super().__new__(cls, parts)

    @property
    def total(self):
        return sum(self)

    def dual(self):
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicity(self, k):
        return sum(1 for p in self if p == k)

    def in_p1(self):
        """Even parts occur with even multiplicity (orthogonal type)."""
        return all(self.multiplicity(k) % 2 == 0 for k in set(self) if k % 2 == 0)

    def is_very_even(self):
        return bool(self) and all(p % 2 == 0 for p in self) and self.in_p1()

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"

    @classmethod
    def parse(cls, text):
        return cls(int(x) for x in str(text).replace(" ", "").split(",") if x)


def dual_partition(p):
    return Partition(p).dual()


@lru_cache(maxsize=None)
def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return (Partition(()),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def dominance_leq(p, q):
    if sum(p) != sum(q):
        raise ValueError("partitions of different totals")
    a = b = 0
    for i in range(max(len(p), len(q))):
        a += p[i] if i < len(p) else 0
        b += q[i] if i < len(q) else 0
        if a > b:
            return False
    return True


def _partition_set(n, type_label):
    ps = partitions(n)
    if type_label == "D":
        ps = tuple(p for p in ps if p.in_p1())
    return ps


def minimal_dominating(p, type_label="A"):
    p = Partition(p)
    above = [q for q in _partition_set(p.total, type_label) if q != p and dominance_leq(p, q)]
    return {q for q in above
            if not any(s != q and dominance_leq(s, q) for s in above)}


def strictly_below(p, type_label="A"):
    p = Partition(p)
    return {q for q in _partition_set(p.total, type_label) if q != p and dominance_leq(q, p)}


# orbit data

def _natural_size(type_label, rank):
    return rank + 1 if type_label == "A" else 2 * rank


def formula_dimension(type_label, rank, part):
    """Orbit dimension from the partition (independent of any realization)."""
    t = Partition(part).dual()
    n = _natural_size(type_label, rank)
    s = sum(x * x for x in t)
    if type_label == "A":
        return n * n - s
    odd = sum(1 for x in part if x % 2)
    return n * (n - 1) // 2 - (s - odd) // 2


@dataclass(frozen=True)
class OrbitDatum:
    type_label: str
    rank: int
    partition: Partition
    label: str = None

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        n = _natural_size(self.type_label, self.rank)
        if self.partition.total != n:
            raise ValueError(f"partition {self.partition} is not of {n}")
        if self.type_label == "D":
            if not self.partition.in_p1():
                raise ValueError(f"{self.partition} is not an orthogonal partition")
            if self.partition.is_very_even() != (self.label in ("I", "II")):
                raise ValueError("label required exactly for very even partitions")
        elif self.label is not None:
            raise ValueError("labels only for very even type D partitions")

    @property
    def dimension(self):
        return formula_dimension(self.type_label, self.rank, self.partition)

    def is_zero(self):
        return all(p == 1 for p in self.partition)

    def __repr__(self):
        tag = f"^{self.label}" if self.label else ""
        return f"O{self.partition}{tag}[{self.type_label}{self.rank}]"


def orbit(type_label, rank, parts, label=None):
    return OrbitDatum(str(type_label).upper(), rank, Partition(parts), label)


def all_orbits(type_label, rank):
    t = str(type_label).upper()
    out = []
    for p in _partition_set(_natural_size(t, rank), t):
        if t == "D" and p.is_very_even():
            out += [OrbitDatum(t, rank, p, "I"), OrbitDatum(t, rank, p, "II")]
        else:
            out.append(OrbitDatum(t, rank, p))
    return out


def characteristic(o):
    """Dominant h of the orbit in epsilon coordinates."""
    ev = []
    for d in o.partition:
        ev += [d - 1 - 2 * k for k in range(d)]
    ev.sort(reverse=True)
    if o.type_label == "A":
        return tuple(F(x) for x in ev)
    h = [F(x) for x in ev[: o.rank]]
    if o.label == "I":
        h[-1] = -h[-1]
    return tuple(h)


def weighted_dynkin_diagram(o):
    from .rootdata import build_root_datum
    d = build_root_datum(o.type_label, o.rank)
    h = characteristic(o)
    return tuple(int(d.pair_coroot(h, i)) for i in range(d.rank))


# Levi subalgebras

@dataclass(frozen=True)
class LeviDatum:
    type_label: str
    rank: int
    simple: frozenset    # 1-based simple root indices kept in the Levi

    def __post_init__(self):
        object.__setattr__(self, "simple", frozenset(self.simple))
        if not all(1 <= i <= self.rank for i in self.simple):
            raise ValueError("simple root index out of range")

    @classmethod
    def from_composition(cls, comp):
        """Type A Levi with diagonal blocks of the given sizes."""
        n = sum(comp)
        kept, pos = set(), 0
        for a in comp:
            kept |= set(range(pos + 1, pos + a))
            pos += a
        return cls("A", n - 1, frozenset(kept))

    @classmethod
    def dropping(cls, type_label, rank, *nodes):
        return cls(type_label, rank, frozenset(range(1, rank + 1)) - set(nodes))

    def adjacency(self, i, j):
        if self.type_label == "D" and self.rank >= 3 and {i, j} == {self.rank - 2, self.rank}:
            return True
        if self.type_label == "D" and {i, j} == {self.rank - 1, self.rank}:
            return False
        return abs(i - j) == 1

    def factors(self):
        """Connected components as (kind, sorted nodes), kind 'A' or 'D'."""
        left = set(self.simple)
        comps = []
        while left:
            stack = [min(left)]
            comp = set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack += [y for y in left if y not in comp and self.adjacency(x, y)]
            left -= comp
            r = self.rank
            kind = "D" if self.type_label == "D" and {r - 2, r - 1, r} <= comp else "A"
            nodes = sorted(comp)
            if kind == "A" and self.type_label == "D" and r in comp and r - 1 not in comp:
                nodes = sorted(comp - {r}) + [r]
            comps.append((kind, tuple(nodes)))
        comps.sort(key=lambda c: c[1][0])
        return comps

    def center_dim(self):
        return self.rank - len(self.simple)

    def class_key(self):
        """Conjugacy-class invariant of the standard Levi."""
        if self.type_label == "A":
            return ("A", tuple(sorted(composition_of(self), reverse=True)))
        r = self.rank
        m = 0
        sizes = []
        covered = set()
        # alpha_{r-1}, alpha_r without alpha_{r-2} span so_4, not two gl_2 blocks
        so4 = {r - 1, r} <= self.simple and r - 2 not in self.simple
        if so4:
            m = 2
            covered = {r - 1, r}
        for kind, nodes in self.factors():
            if kind == "D":
                m = len(nodes)
                covered |= set(range(nodes[0], r + 1))
            elif so4 and nodes[0] in (r - 1, r):
                continue
            else:
                coords = set()
                for i in nodes:
                    coords |= {i, i + 1} if i < r else {r - 1, r}
                covered |= coords
                sizes.append(len(coords))
        sizes += [1] * (r - len(covered))
        sizes.sort(reverse=True)
        flag = None
        if m == 0 and all(s % 2 == 0 for s in sizes):
            flag = "I" if (r in self.simple and r - 1 not in self.simple) else "II"
        return ("D", tuple(sizes), m, flag)


def composition_of(levi):
    n = levi.rank + 1
    comp, size = [], 1
    for i in range(1, n):
        if i in levi.simple:
            size += 1
        else:
            comp.append(size)
            size = 1
    comp.append(size)
    return comp


def factor_orbits(kind, nodes, type_label):
    """All orbits of a Levi factor: partitions (type A) or D orbit data."""
    k = len(nodes)
    if kind == "A":
        return [("A", p, None) for p in partitions(k + 1)]
    return [("D", o.partition, o.label) for o in all_orbits("D", k)]


def factor_dim_orbit(fo, k):
    kind, p, label = fo
    return formula_dimension(kind, k, p)


def factor_is_zero(fo):
    return all(x == 1 for x in fo[1])


def levi_dim(levi, datum):
    kept = levi.simple
    n_roots = sum(1 for a in datum.positive_roots
                  if all(c == 0 or (i + 1) in kept for i, c in enumerate(datum.simple_coeffs[a])))
    return datum.rank + 2 * n_roots


def _factor_labels(fo, k):
    kind, p, label = fo
    if kind == "A":
        return weighted_dynkin_diagram(OrbitDatum("A", k, p))
    if k == 3 and not Partition(p).in_p1():
        raise ValueError("bad D3 orbit")
    return weighted_dynkin_diagram(OrbitDatum("D", k, p, label))


@dataclass
class SheetDatum:
    levi: LeviDatum
    rigid_orbit: tuple
    induced: OrbitDatum
    rank: int
    dimension: int


class Inducer:
    """Induction of nilpotent orbits from standard Levis by generic sampling."""

    def __init__(self, alg, seed=0, budget=12):
        self.alg = alg
        self.seed = seed
        self.budget = budget
        self.last_seed = None

    def _levi_h(self, levi, orbit_tuple):
        d = self.alg.datum
        cm = d.cartan_matrix
        coeff = [F(0)] * d.rank
        for (kind, nodes), fo in zip(levi.factors(), orbit_tuple):
            labels = _factor_labels(fo, len(nodes))
            idx = [i - 1 for i in _factor_node_order(kind, nodes, d)]
            # alpha_j(h) = sum_i c_i <alpha_j, alpha_i^vee>
            a = [[F(cm[j][i]) for i in idx] for j in idx]
            inv = mat_inv(a)
            c = [sum((inv[p][q] * labels[q] for q in range(len(idx))), F(0)) for p in range(len(idx))]
            for p, i in enumerate(idx):
                coeff[i] += c[p]
        return coeff

    def sample(self, levi, orbit_tuple, seed):
        alg = self.alg
        d = alg.datum
        rng = random.Random(seed)
        h = self._levi_h(levi, orbit_tuple)
        x = {}
        for a in d.positive_roots:
            coeffs = d.simple_coeffs[a]
            in_levi = all(c == 0 or (i + 1) in levi.simple for i, c in enumerate(coeffs))
            idx = alg.e_index[a]
            if in_levi:
                if alg.grade(idx, h) == 2:
                    x[idx] = F(rng.randint(1, 29))
            else:
                x[idx] = F(rng.choice((-1, 1)) * rng.randint(1, 29))
        return alg.element(x)

    def induce(self, levi, orbit_tuple=None):
        alg = self.alg
        d = alg.datum
        facs = levi.factors()
        if orbit_tuple is None:
            orbit_tuple = tuple(("A" if k == "A" else "D", Partition([1] * (len(n) + 1 if k == "A" else 2 * len(n))), None)
                                for k, n in facs)
        dim_ol = sum(factor_dim_orbit(fo, len(n)) for fo, (k, n) in zip(orbit_tuple, facs))
        target = alg.dim - levi_dim(levi, d) + dim_ol
        for attempt in range(self.budget):
            seed = self.seed + attempt
            x = self.sample(levi, orbit_tuple, seed)
            part, label = alg.jordan_type(x)
            o = OrbitDatum(d.type_label, d.rank, part, label)
            if o.dimension == target:
                self.last_seed = seed
                return o
        raise RuntimeError("induction certificate not reached within budget")


def _factor_node_order(kind, nodes, datum):
    return list(nodes)


_ALG_CACHE = {}


def algebra_for(type_label, rank):
    from .liealg import build_algebra
    key = (type_label, rank)
    if key not in _ALG_CACHE:
        _ALG_CACHE[key] = build_algebra(type_label, rank)
    return _ALG_CACHE[key]


def zero_tuple(levi):
    return tuple((k, Partition([1] * (len(n) + 1 if k == "A" else 2 * len(n))), None)
                 for k, n in levi.factors())


def induce(levi, orbit_on_levi=None, seed=0):
    alg = algebra_for(levi.type_label, levi.rank)
    return Inducer(alg, seed).induce(levi, orbit_on_levi)


def induce_type_a_rule(composition, parts=None):
    """Oracle: induction in type A adds the Levi partitions row by row."""
    parts = parts or [Partition([1] * a) for a in composition]
    width = max(len(p) for p in parts)
    return Partition(sum(p[i] if i < len(p) else 0 for p in parts) for i in range(width))


def standard_levis(type_label, rank, proper=True):
    """One standard representative per conjugacy class."""
    seen = {}
    for bits in product((0, 1), repeat=rank):
        s = frozenset(i + 1 for i, b in enumerate(bits) if b)
        if proper and len(s) == rank:
            continue
        lv = LeviDatum(type_label, rank, s)
        seen.setdefault(lv.class_key(), lv)
    return [seen[k] for k in sorted(seen, key=str)]


def is_rigid(o, seed=0):
    if o.is_zero():
        return True
    alg = algebra_for(o.type_label, o.rank)
    ind = Inducer(alg, seed)
    target = o.dimension
    for lv in standard_levis(o.type_label, o.rank):
        facs = lv.factors()
        base = alg.dim - levi_dim(lv, alg.datum)
        choices = [factor_orbits(k, n, o.type_label) for k, n in facs]
        for tup in product(*choices):
            dim_ol = sum(factor_dim_orbit(fo, len(n)) for fo, (k, n) in zip(tup, facs))
            if base + dim_ol != target:
                continue
            got = ind.induce(lv, tup)
            if got == o:
                return False
    return True


@lru_cache(maxsize=None)
def rigid_orbits(type_label, rank):
    if type_label == "D" and rank == 3:
        # so_6 = sl_4: only the zero orbit is rigid
        return tuple(o for o in all_orbits("D", 3) if o.is_zero())
    return tuple(o for o in all_orbits(type_label, rank) if is_rigid(o))


def enumerate_sheets(type_label, rank, seed=0):
    t = str(type_label).upper()
    alg = algebra_for(t, rank)
    ind = Inducer(alg, seed)
    out = []
    for lv in standard_levis(t, rank, proper=False):
        facs = lv.factors()
        choices = []
        for k, n in facs:
            if k == "A":
                choices.append([("A", Partition([1] * (len(n) + 1)), None)])
            else:
                choices.append([("D", o.partition, o.label) for o in rigid_orbits("D", len(n))])
        for tup in product(*choices):
            if len(lv.simple) == rank:
                kind, p, label = tup[0] if tup else ("A", Partition([1] * (rank + 1)), None)
                induced = OrbitDatum(t, rank, p, label)
            else:
                induced = ind.induce(lv, tup)
            rk = lv.center_dim()
            out.append(SheetDatum(lv, tup, induced, rk, induced.dimension + rk))
    return out


def representative(o, seed=0, budget=12):
    """A nilpotent element of the orbit: generic point of g(h,2)."""
    alg = algebra_for(o.type_label, o.rank)
    lv = LeviDatum(o.type_label, o.rank, frozenset(range(1, o.rank + 1)))
    ind = Inducer(alg, seed)
    tup = (("A" if o.type_label == "A" else "D", o.partition, o.label),)
    for attempt in range(budget):
        x = ind.sample(lv, tup, seed + attempt)
        part, label = alg.jordan_type(x)
        if part == o.partition and label == o.label:
            return x
    raise RuntimeError("no representative found")


def orbit_dimension(o):
    if o.is_zero():
        return 0
    alg = algebra_for(o.type_label, o.rank)
    x = representative(o)
    return alg.dim - alg.centralizer_dim(x)
