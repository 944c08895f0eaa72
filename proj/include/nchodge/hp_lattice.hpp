#pragma once

#include "nchodge/chern.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nchodge {

enum class TwistKind { J, K };

// Z/2 parity of an element: the common parity of p+q over its support.
enum class Parity { even, odd, mixed };

// A u-truncated lattice element: each basis direction carries a u-series
// with exponents 0..u_order inclusive (same inclusive convention as
// CharSeries). The zero element stores no components. Elements of different
// u_order never mix (OrderMismatch), mirroring the series contract.
class HPElement {
 public:
  HPElement(RingPtr ring, int u_order);

  const RingPtr& ring() const { return ring_; }
  int u_order() const { return u_order_; }

  const TauScalar& coeff(int basis_index, int u_exp) const;
  void set_coeff(int basis_index, int u_exp, const TauScalar& value);

  // The cohomology class sitting at one u-exponent.
  CohClass slice(int u_exp) const;
  // Indices with a nonzero u-series.
  std::vector<int> support() const;

  bool is_zero() const;
  Parity parity() const;  // the zero element counts as even

  HPElement& operator+=(const HPElement& o);
  HPElement& operator-=(const HPElement& o);
  friend HPElement operator+(HPElement a, const HPElement& b);
  friend HPElement operator-(HPElement a, const HPElement& b);
  HPElement operator-() const;
  friend HPElement operator*(const TauScalar& c, HPElement x);
  bool operator==(const HPElement& o) const;

 private:
  RingPtr ring_;
  int u_order_;
  std::map<int, std::vector<TauScalar>> comp_;  // basis index -> coeffs 0..u_order

  void prune(int basis_index);
};

// u-degree-0 embedding of a cohomology class.
HPElement hkr_embed(const CohClass& a, int u_order);

// Multiply by u^k (k >= 0); coefficients pushed past u_order are dropped.
HPElement u_mul(const HPElement& x, int k = 1);

// sqrt td for J, sqrt td' for K (MissingTangentData without Chern data).
CohClass twist_class(const RingPtr& ring, TwistKind which);

// Cup with the twist class at every u-coefficient.
HPElement twist(const HPElement& x, TwistKind which);
// Cup with the inverse twist class; untwist(twist(x, w), w) == x.
HPElement untwist(const HPElement& x, TwistKind which);

// The involution acting by (-1)^p on the (p,q) component; u-series untouched.
HPElement vee(const HPElement& x);

// Minimal u-exponent carrying a nonzero coefficient; nullopt for the zero
// element (read as +infinity).
std::optional<int> u_valuation(const HPElement& x);

// Rationality bookkeeping: the (p,q) component may spend tau-powers between
// the algebraic normalization (tau^0) and the analytic one (tau^{-p}), so the
// check accepts exactly the tau-exponents -p..0 in that component. Both
// twist classes are tau-free, hence preserve the property.
bool rational_check(const HPElement& x);

}  // namespace nchodge
