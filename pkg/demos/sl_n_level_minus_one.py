#!/usr/bin/env python3
"""sl_n at level -1, step by step.

Start from the quadratic singular vector v1, move it to the affine vertex
algebra, cut out its zero locus on h, and rule out the next orbit up with a
slice certificate.
"""

from sheetcalc import affine, charvar, slodowy, symalg, walg
from sheetcalc.orbits import algebra_for, orbit


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


n = 5
g = algebra_for("A", n - 1)

# The quadratic vector and the module it generates
v1 = symalg.v_one(g)
print("v1 =", v1)
print("weight in fundamental coordinates:", show(symalg.is_singular(v1).fundamental_coords()))
W1 = symalg.generate_submodule(v1)
print("dim W1 =", W1.dim)

# In V^k(sl_n) the symmetrized vector is singular at one level only
model = affine.AffineModel(g)
print("sigma(v1) singular at k in", affine.singular_levels(model, model.sigma(v1)))
print("sigma(v1)^2 singular at k in", affine.singular_levels(model, model.commuting_power(v1, 2)))

# Zero locus on h of the zero-weight part of W1
gens = charvar.type_a_level_minus1(n)
comps = charvar.solve_on_cartan(gens, n - 1)
d = g.datum
for comp, target, scale in charvar.classify_components(comps, [d.fundamental_weights[0]], d):
    print(f"line through {show(comp.direction)} is Weyl conjugate into C*varpi_1 (scale {scale})")

# (2^2, 1^(n-4)) is not in the zero set: 1 lies in I_W1 + J_chi
o = orbit("A", n - 1, [2, 2] + [1] * (n - 4))
cert = slodowy.orbit_not_in_variety(W1, o)
print(o, cert.status, "constant", cert.constant)
print("  via", cert.element)

# and the minimal W-algebra at k = -1 has central charge 1
t = slodowy.sl2_from_orbit(orbit("A", n - 1, [2] + [1] * (n - 2)))
print("c =", walg.central_charge(walg.WParams(t, -1)))
