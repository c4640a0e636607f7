#!/usr/bin/env python3
"""Sheets of small classical algebras, and a lisse check for G2."""

from fractions import Fraction

from sheetcalc import walg
from sheetcalc.orbits import enumerate_sheets, rigid_orbits
from sheetcalc.rootdata import build_root_datum

for t, r in (("A", 3), ("D", 4)):
    print(f"{t}{r}: rigid orbits", list(rigid_orbits(t, r)))
    for s in enumerate_sheets(t, r):
        print(f"  Levi {sorted(s.levi.simple)}  rigid {[p for _, p, _ in s.rigid_orbit]}"
              f"  -> {s.induced}  rank {s.rank}  dim {s.dimension}")

g2 = build_root_datum("G", 2)
for k in map(Fraction, ("-5/3", "-4/3", "-3/2", "-1", "-2")):
    print(f"G2, k = {k}: admissible q = {walg.is_admissible(g2, k)},"
          f" minimal W-algebra lisse: {walg.minimal_lisse('G', 2, k)}")
