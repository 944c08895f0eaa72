#pragma once

#include "nchodge/coh_ring.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace nchodge {

// Abelian Maurer-Cartan model of a polydisk deformation: mu commuting
// contraction operators kappa_j, each a bidegree (-1,+1) derivation of the
// ring given by its values on basis elements (absent entries read as zero).
// Construction validates the bidegree shift and the Leibniz rule on all
// basis pairs (ValidationError); pairs whose product lies outside a partial
// model are skipped. Pairwise commutativity is computed and stored, not
// enforced: mc_check reports it.
class DeformationSpec {
 public:
  DeformationSpec(RingPtr ring, std::vector<std::map<int, CohClass>> kappa,
                  int t_order, int u_headroom = 1);

  const RingPtr& ring() const { return ring_; }
  int mu() const { return static_cast<int>(kappa_.size()); }
  int t_order() const { return t_order_; }
  int u_headroom() const { return u_headroom_; }

  const std::map<int, CohClass>& kappa(int j) const;
  // Linear extension of kappa_j to a class.
  CohClass apply(int j, const CohClass& a) const;

  bool commuting() const { return commuting_; }

 private:
  RingPtr ring_;
  std::vector<std::map<int, CohClass>> kappa_;
  int t_order_;
  int u_headroom_;
  bool commuting_;
};

// true iff the model Maurer-Cartan equation holds, which in the abelian
// harmonic model is pairwise commutativity of the kappa_j.
bool mc_check(const DeformationSpec& d);

// A section of the family: basis index x t-monomial -> u-Laurent coefficient
// within the stored window u^{u_min}..u^{u_max}. Sections are built
// u-regular (set_coeff rejects negative u-exponents); the headroom below
// u^0 exists so the connection's 1/u term stays total.
class FamilySection {
 public:
  using TMulti = std::vector<int>;

  FamilySection(RingPtr ring, int mu, int t_order, int u_headroom,
                int u_order);

  const RingPtr& ring() const { return ring_; }
  int mu() const { return mu_; }
  int t_order() const { return t_order_; }
  int u_min() const { return u_lo_; }
  int u_max() const { return u_hi_; }

  const TauScalar& coeff(int basis_index, const TMulti& t, int u_exp) const;
  // Rejects u_exp < 0 (ValidationError): an artificial pole is a
  // construction error, never data.
  void set_coeff(int basis_index, const TMulti& t, int u_exp,
                 const TauScalar& value);

  bool is_zero() const;
  std::optional<int> u_valuation() const;
  // Every nonzero slot as a (basis, t-monomial, u-exponent) triple.
  std::vector<std::tuple<int, TMulti, int>> support() const;

  // d/dt_j
  FamilySection t_derivative(int j) const;
  // Multiply by u^k; coefficients above u_max are truncated away, while a
  // nonzero coefficient pushed below u_min raises UHeadroomExhausted.
  FamilySection mul_u_pow(int k) const;

  FamilySection& operator+=(const FamilySection& o);
  FamilySection& operator-=(const FamilySection& o);
  friend FamilySection operator+(FamilySection a, const FamilySection& b);
  friend FamilySection operator-(FamilySection a, const FamilySection& b);
  FamilySection operator-() const;
  friend FamilySection operator*(const TauScalar& c, FamilySection s);
  bool operator==(const FamilySection& o) const;

  // Constant classes cup into sections slot by slot.
  friend FamilySection cup_section(const CohClass& t, const FamilySection& s);
  friend FamilySection apply_kappa(const DeformationSpec& d, int j,
                                   const FamilySection& s);

 private:
  RingPtr ring_;
  int mu_, t_order_, u_lo_, u_hi_;
  std::map<std::pair<int, TMulti>, std::map<int, TauScalar>> data_;

  void check_key(int basis_index, const TMulti& t) const;
  void raw_set(int basis_index, const TMulti& t, int u_exp,
               const TauScalar& value);
  void raw_add(int basis_index, const TMulti& t, int u_exp,
               const TauScalar& value);
};

// The constant section with value a at t = 0, u^0.
FamilySection constant_section(const DeformationSpec& d, const CohClass& a,
                               int u_order);

FamilySection cup_section(const CohClass& t, const FamilySection& s);
FamilySection apply_kappa(const DeformationSpec& d, int j,
                          const FamilySection& s);

// The u-connection ds/dt_j - u^{-1} kappa_j(s).
// Errors: UHeadroomExhausted when the 1/u term underflows the stored range.
FamilySection connect(const FamilySection& s, int j,
                      const DeformationSpec& d);

// Report-valued checks reuse the ring validation report shape. Both start
// with a "precondition" entry (mc_check) and never throw on bad specs.
ValidationReport transversality_check(const DeformationSpec& d,
                                      const std::vector<FamilySection>& corpus);
ValidationReport flatness_check(const DeformationSpec& d);

// nabla_j(T cup s) - T cup nabla_j(s). Internally proved equal to
// -u^{-1} (kappa_j T) cup s, so the defect vanishes exactly when the twist
// class is kappa_j-closed. Errors: TNotUnital; the section overload also
// raises TNotConstant when T depends on t or u.
FamilySection intertwining_defect(const CohClass& t, const FamilySection& s,
                                  int j, const DeformationSpec& d);
FamilySection intertwining_defect(const FamilySection& t,
                                  const FamilySection& s, int j,
                                  const DeformationSpec& d);

namespace builtin {

// dz -> dzbar on the elliptic curve; mu = 1.
DeformationSpec elliptic_family(int t_order = 2);
// sigma -> w_j, w_j -> -sigmabar in each direction j = 1..mu; mu in {1, 2}.
DeformationSpec k3_family(int mu = 1, int t_order = 2);
// omega -> a1 -> b1 -> -omegabar; mu = 1.
DeformationSpec quintic_family(int t_order = 2);

}  // namespace builtin

}  // namespace nchodge
