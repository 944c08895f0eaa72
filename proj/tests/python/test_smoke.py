#!/usr/bin/env python3
"""End-to-end smoke checks for the Python module.

Usage: test_smoke.py <fixture-dir>
"""
import sys

import nchodge

FIX = sys.argv[1]

# Rings and validation.
p2 = nchodge.builtin_ring("p2")
assert p2.size() == 3
assert p2.dimension() == 2
assert nchodge.validate_ring(p2).ok()
assert p2.labels() == ["1", "h", "h^2"]

# Constructed rings.
torus = nchodge.formal_cy(1, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
assert torus.size() == 4 and nchodge.validate_ring(torus).ok()
p1xp1 = nchodge.product_ring(nchodge.builtin_ring("p1"),
                             nchodge.builtin_ring("p1"))
assert p1xp1.dimension() == 2 and nchodge.validate_ring(p1xp1).ok()

# Characteristic classes render exactly.
assert nchodge.todd_class(p2).str() == "1 + 3/2 h + 1 h^2"
assert nchodge.todd_series(4).coeff(1).str() == "1/2"

# Euler pairings.
chi = nchodge.hrr_chi(nchodge.bundle(p2, "O"), nchodge.bundle(p2, "O(1)"))
assert chi.str() == "3"
k3 = nchodge.builtin_ring("builtin:k3")
assert nchodge.mukai_pairing(nchodge.bundle(k3, "O"),
                             nchodge.bundle(k3, "O")).str() == "2"

# Lattice elements, twists, pairings.
e = nchodge.builtin_ring("e")
one = nchodge.hkr_embed(e.one())
pt = nchodge.hkr_embed(e.basis("pt"))
assert nchodge.higher_residue(one, pt).str("u") == "1"
assert nchodge.canonical_pairing(one, nchodge.vee(pt)).str("u") == "1"
assert nchodge.symmetry_defect(one, pt).is_zero()
assert nchodge.twist(one, "J") == nchodge.twist(one, "K")
assert nchodge.rational_check(one)
assert nchodge.u_valuation(one) == 0

# Families.
fam = nchodge.load_family(f"{FIX}/k3_family.json")
assert nchodge.mc_check(fam)
assert nchodge.transversality_check(fam).ok()
assert nchodge.flatness_check(fam).ok()
sec = nchodge.constant_section(fam, fam.ring().one(), 1)
assert nchodge.intertwining_defect(fam.ring().one(), sec, 0, fam).is_zero()
moved = nchodge.connect(sec, 0, fam)
bad = nchodge.load_family(f"{FIX}/noncommuting_family.json")
assert not nchodge.mc_check(bad)

# Graphs.
wedge = nchodge.make_graph("disk", 1, 2, [(0, 1), (0, 2)])
assert nchodge.config_dimension(wedge) == 2
assert nchodge.vanishing_check(wedge) == (False, "")
w = nchodge.weight_estimate(wedge, 40000, seed=5)
assert abs(w.mean - 0.5) < 0.02
assert w.samples == 40000
w2 = nchodge.weight_estimate(wedge, 40000, seed=5)
assert w.mean == w2.mean and w.std_error == w2.std_error
graphs = nchodge.enumerate_admissible(1, 2, 2)
assert len(graphs) == 4
assert graphs[-1].edges == [(0, 1), (0, 2)]
assert nchodge.load_graph(f"{FIX}/wedge_graph.json").edges == wedge.edges

loop = nchodge.make_graph("disk", 2, 0, [(0, 0), (0, 1)])
assert nchodge.vanishing_check(loop) == (True, "self-loop")

# Error mapping.
try:
    nchodge.builtin_ring("p9")
    raise AssertionError("expected an Error")
except nchodge.Error as exc:
    assert "ParseError" in str(exc)

try:
    nchodge.weight_estimate(wedge, 0, seed=1)
    raise AssertionError("expected an Error")
except nchodge.Error as exc:
    assert "SampleBudgetZero" in str(exc)

print("python smoke checks passed")
