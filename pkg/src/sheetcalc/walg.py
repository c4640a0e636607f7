"""Central charges, admissible levels and the lisse test for minimal W-algebras."""
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd

from .rootdata import build_root_datum

F = Fraction

ENV_VAR = "SHEETCALC_NATURAL_LEVELS"


@dataclass
class WParams:
    triple: object
    level: Fraction

    def __post_init__(self):
        self.level = F(self.level)
        if self.level == -self.triple.alg.dual_coxeter:
            raise ValueError("critical level k = -h^vee")


def central_charge_terms(triple):
    """(dim g0, dim g1, (rho|rho), (rho|h), (h|h)) for the triple's h."""
    alg = triple.alg
    d = alg.datum
    gr = triple.grading
    rho2 = d.inner(d.rho.coords, d.rho.coords)
    rho_h = sum(triple.h_coeffs, F(0))      # rho(h_i) = 1
    hh = alg.pair(triple.h, triple.h)
    return len(gr.get(0, [])), len(gr.get(1, [])), rho2, rho_h, hh


def central_charge(p):
    k = p.level
    hv = p.triple.alg.dual_coxeter
    if k + hv == 0:
        raise ValueError("critical level")
    d0, d1, rho2, rho_h, hh = central_charge_terms(p.triple)
    s = k + hv
    return d0 - F(d1, 2) - 12 * (rho2 / s - rho_h + s * hh / 4)


def is_admissible(datum, k):
    """Denominator q if k is principal admissible, else None."""
    k = F(k)
    s = k + datum.dual_coxeter
    if s <= 0:
        return None
    p, q = s.numerator, s.denominator
    rv = datum.lacing
    if gcd(q, rv) == 1:
        ok = p >= datum.dual_coxeter
    elif q % rv == 0:
        ok = p >= datum.coxeter
    else:
        ok = False
    return q if ok else None


class NaturalLevelTable:
    def __init__(self, rows):
        self.rows = rows

    @classmethod
    def load(cls, path=None):
        path = path or os.environ.get(ENV_VAR)
        if path:
            with open(path) as fh:
                data = json.load(fh)
        else:
            data = json.loads(resources.files("sheetcalc").joinpath("data/natural_levels.json").read_text())
        rows = []
        for r in data["rows"]:
            rows.append({**r, "a": F(r["a"]), "b": F(r["b"])})
        return cls(rows)

    def entries(self, type_label, rank):
        out = []
        for r in self.rows:
            if r["g_type"] == type_label and _rank_match(r["rank_spec"], rank):
                out.append(r)
        return sorted(out, key=lambda r: r["component_index"])


def _rank_match(spec, rank):
    spec = str(spec)
    if ".." in spec:
        lo, hi = spec.split("..")
        return int(lo) <= rank <= (int(hi) if hi else rank)
    return int(spec) == rank


def natural_levels(type_label, rank, k, table):
    return [(r["component_index"], r["a"] * F(k) + r["b"]) for r in table.entries(type_label, rank)]


def minimal_lisse(type_label, rank, k, table=None):
    """True iff every k_i^natural (i >= 1) is a nonnegative integer."""
    if type_label == "A":
        raise ValueError("the lisse criterion assumes g is not of type A")
    table = table or NaturalLevelTable.load()
    vals = [v for i, v in natural_levels(type_label, rank, k, table) if i >= 1]
    if not vals:
        raise KeyError(f"no natural-level entries for {type_label}{rank}")
    return all(v.denominator == 1 and v >= 0 for v in vals)


def min_orbit_variety_predicted(type_label, rank, k):
    """Whether the associated variety of V_k(g) is the minimal orbit closure,
    per the classification for g not of type A."""
    k = F(k)
    if type_label == "A":
        raise ValueError("type A is excluded")
    d = build_root_datum(type_label, rank)
    q = is_admissible(d, k)
    if type_label in ("C", "F") or (type_label == "B" and rank == 2):
        return q == 2
    if type_label == "G":
        return q == 3 or k == -1
    if (type_label == "D" and rank == 4) or type_label == "E":
        return k.denominator == 1 and F(-d.dual_coxeter, 6) - 1 <= k <= -1
    if type_label == "D":
        return k in (-2, -1)
    return False
