#!/usr/bin/env python3
"""so_2r at level 2-r: the vector w1, its zero locus, and the very even orbits."""

from sheetcalc import affine, charvar, slodowy, symalg
from sheetcalc.orbits import LeviDatum, algebra_for, induce, orbit, weighted_dynkin_diagram
from sheetcalc.rootdata import weyl_conjugate

for r in (5, 6):
    g = algebra_for("D", r)
    w1 = symalg.w_one(g)
    model = affine.AffineModel(g)
    print(f"so_{2 * r}: sigma(w1) singular at", affine.singular_levels(model, model.sigma(w1)))

    comps = charvar.solve_on_cartan(charvar.type_d_system(r), r)
    fw = g.datum.fundamental_weights
    tally = {}
    for _, target, _ in charvar.classify_components(comps, [fw[r - 2], fw[r - 1]], g.datum):
        tally[target] = tally.get(target, 0) + 1
    print(f"  {len(comps)} lines; by target (0 = varpi_r-1, 1 = varpi_r):", tally)
    if r % 2:
        print("  varpi_r-1 ~ -varpi_r:", weyl_conjugate(fw[r - 2], -fw[r - 1]))

    # the next orbit up is cut off by a degree-2 certificate
    part = [3] + [2] * (r - 3) + [1] * 3 if r % 2 else [3] + [2] * (r - 2) + [1]
    o = orbit("D", r, part)
    print(" ", o, weighted_dynkin_diagram(o),
          slodowy.orbit_not_in_variety(symalg.generate_submodule(w1), o).status)

# Two Levis of type A_{r-1} that are not conjugate give the two very even orbits
for node in (5, 6):
    print("drop alpha_%d:" % node, induce(LeviDatum.dropping("D", 6, node)))
