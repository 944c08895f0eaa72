#pragma once

#include "nchodge/tau_scalar.hpp"

#include <string>
#include <vector>

namespace nchodge {

// Truncated univariate power series over TauScalar with an explicit
// truncation order. Arithmetic never touches coefficients beyond `order`,
// and combining series of different orders is an error (OrderMismatch)
// rather than a silent re-truncation.
class CharSeries {
 public:
  explicit CharSeries(int order);
  CharSeries(int order, std::vector<TauScalar> coeffs);

  static CharSeries constant(int order, const TauScalar& value);
  // The series z (requires order >= 1).
  static CharSeries variable(int order);

  int order() const { return order_; }
  const TauScalar& coeff(int k) const;
  void set_coeff(int k, const TauScalar& value);

  bool is_unital() const { return coeffs_[0] == TauScalar(1); }
  bool is_zero() const;

  friend CharSeries operator+(const CharSeries& a, const CharSeries& b);
  friend CharSeries operator-(const CharSeries& a, const CharSeries& b);
  friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
  CharSeries operator-() const;
  bool operator==(const CharSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }

  // Requires b unital; errors DivisorNotUnital otherwise.
  friend CharSeries div(const CharSeries& a, const CharSeries& b);

  // exp requires f(0) = 0 (NonzeroConstantTerm); log and sqrt require f
  // unital (NotUnital). sqrt(f)^2 = f and exp(log f) = f hold exactly up to
  // the truncation order.
  friend CharSeries exp(const CharSeries& f);
  friend CharSeries log(const CharSeries& f);
  friend CharSeries sqrt(const CharSeries& f);

  // Same textual contract as TauScalar: "c0 + c1*z + c2*z^2 + ..." with zero
  // terms omitted; multi-term coefficients parenthesized. `var` lets the
  // u-series rendering share this code.
  std::string str(const std::string& var = "z") const;

 private:
  int order_;
  std::vector<TauScalar> coeffs_;
};

// Exact truncation of z / (1 - e^{-z}).
CharSeries todd_series(int order);
// Exact truncation of z / (e^{z/2} - e^{-z/2}); even in z.
CharSeries modified_todd_series(int order);

}  // namespace nchodge
