#pragma once

#include "nchodge/coh_ring.hpp"

#include <map>
#include <string>

namespace nchodge::builtin {

// H^*(P^n) with basis 1, h, ..., h^n and c(T) = (1+h)^{n+1}.
RingPtr projective_space(int n);

// CY curve: basis 1, dz, dzbar, pt with dz.dzbar = pt and c_1 = 0.
RingPtr elliptic_curve();

// K3 model: sigma (2,0), sigmabar (0,2), w1..w20 (1,1) with the diagonal
// intersection form, pt; c_1 = 0, c_2 = 24 pt.
RingPtr k3();

// Full quintic-threefold cohomology model: e (1,1), f (2,2) with e.e = f,
// e.f = 5 pt, omega/omegabar in (3,0)/(0,3), a1..a101 (2,1) and b1..b101
// (1,2) with a_i.b_j = delta_ij pt; c_2 = 10 f, c_3 = -200 pt.
RingPtr quintic_diamond();

// Formal Calabi-Yau model of an arbitrary symmetric Hodge diamond: only the
// unit and complementary-bidegree (Poincare pairing) products are defined;
// everything else is marked unavailable. Tangent Chern classes are zero.
// Errors: BadDiamond when the diamond is asymmetric or lacks the unit/top
// slots.
RingPtr formal_cy(int n, const std::map<std::pair<int, int>, int>& diamond);

// Kunneth product with Koszul signs and Whitney tangent data. Both factors
// must be fully defined (no unavailable products).
RingPtr product_ring(const RingPtr& a, const RingPtr& b);

// Resolves "builtin:<name>" for name in {p1, p2, p3, p4, e, k3,
// quintic-diamond}; errors ParseError on anything else.
RingPtr by_uri(const std::string& uri);

}  // namespace nchodge::builtin
