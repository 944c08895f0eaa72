#pragma once

#include "nchodge/char_series.hpp"
#include "nchodge/coh_ring.hpp"

#include <vector>

namespace nchodge {

// A (virtual) bundle on a ring: an exact rank together with Chern classes
// c_1..c_n, where c_k must be concentrated in bidegree (k,k). Build through
// make_bundle so the degree constraint is checked (BadChernDegrees).
struct BundleData {
  RingPtr ring;
  long rank = 0;
  std::vector<CohClass> chern;  // chern[k-1] = c_k, padded to the dimension

  // c_k, with k past the dimension reading as zero
  CohClass chern_at(int k) const;
};

BundleData make_bundle(RingPtr ring, long rank, std::vector<CohClass> chern);
BundleData trivial_bundle(RingPtr ring, long rank);
BundleData line_bundle(const CohClass& c1);
// The tangent bundle from the ring's Chern data (MissingTangentData).
BundleData tangent_bundle(const RingPtr& ring);

// c_k -> (-1)^k c_k
BundleData bundle_dual(const BundleData& e);
// Ranks add, total Chern classes multiply.
BundleData whitney_sum(const BundleData& e, const BundleData& f);

// rank + sum_k p_k / k! with the power sums p_k given by Newton's identity.
CohClass chern_character(const BundleData& e);

// Multiplies the (p,q) component by (-1/tau)^p. This is a ring automorphism
// on bigraded classes, used to pass between the two trace normalizations.
CohClass nc_normalize(const CohClass& a);

// nc_normalize(chern_character(e))
CohClass nc_chern_character(const BundleData& e);

// Degreewise dual of a diagonal class: the (k,k) part picks up (-1)^k. For a
// Chern character this is exactly chern_character(bundle_dual(e)).
CohClass ch_dual(const CohClass& a);

// exp of a class with no (0,0) part (NonzeroConstantTerm otherwise)
CohClass class_exp(const CohClass& a);
// Multiplicative inverse of a unital class (NotUnital otherwise).
CohClass class_inverse(const CohClass& a);
// Square root of a unital class by the binomial series (NotUnital otherwise).
CohClass sqrt_class(const CohClass& a);

// Genus of a unital series f: prod_i f(x_i) over the Chern roots x_i.
// Errors: SeriesNotUnital when f(0) != 1, OrderTooSmall when the series
// carries fewer coefficients than the ring dimension needs.
CohClass multiplicative_class(const BundleData& e, const CharSeries& f);

// Todd class of the tangent bundle, and the modified (symmetrized) variant
// td' = td . exp(-c_1/2).
CohClass todd_class(const RingPtr& ring);
CohClass modified_todd_class(const RingPtr& ring);
CohClass sqrt_todd(const RingPtr& ring);

}  // namespace nchodge
