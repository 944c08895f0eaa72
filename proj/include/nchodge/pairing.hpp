#pragma once

#include "nchodge/hp_lattice.hpp"

namespace nchodge {

// Pairing results are u-series; the truncation order is the minimum u_order
// of the two arguments. Render with str("u").
using PairingValue = CharSeries;

// (-1)^{n(n+1)/2}, the residue-pairing orientation in complex dimension n.
int residue_sign(int n);

// <a,b> = (-1)^{n(n+1)/2} integral_alg( J(a)(u) cup J(vee(b))(-u) ).
// The second slot is conjugated u -> -u (sesquilinear convention), so
// <u a, b> = u <a,b> and <a, u b> = -u <a,b>.
// Errors: RingMismatch, MixedParity (either argument), MissingTangentData.
PairingValue higher_residue(const HPElement& a, const HPElement& b);

// <a,b>_can = (-1)^{n(n+1)/2} integral_alg( a(u) cup b(-u) cup td ).
// Satisfies higher_residue(a, b) = canonical_pairing(a, vee(b)).
// Errors: RingMismatch, MissingTangentData.
PairingValue canonical_pairing(const HPElement& a, const HPElement& b);

// integral_alg( ch(e)^dual cup ch(f) cup td ), the chi-pairing; equals
// hrr_chi by construction. Errors: RingMismatch, MissingTangentData.
TauScalar mukai_pairing(const BundleData& e, const BundleData& f);

// chi(E,F) computed two ways: the classical route
//   integral_alg( ch(E)^dual cup ch(F) cup td )
// and the normalized route through nc Chern characters and the analytic
// trace,
//   (-1)^{n(n+1)/2} integral_an( nc_ch(E^dual) cup nc_ch(F) cup
//                                nc_normalize(td) ).
// The tau-powers cancel exactly; disagreement raises RouteMismatch (a sign
// or tau bookkeeping bug, never expected on valid input).
TauScalar hrr_chi(const BundleData& e, const BundleData& f);

// <a,b>(u) - (-1)^{n+|a||b|} <b,a>(u) with |.| the Z/2 parity. Zero exactly
// when the residue-pairing symmetry holds; only asserted on Calabi-Yau
// rings. Errors: NotCalabiYau (c_1 != 0), MixedParity, RingMismatch.
PairingValue symmetry_defect(const HPElement& a, const HPElement& b);

}  // namespace nchodge
