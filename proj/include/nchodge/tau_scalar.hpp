#pragma once

#include "nchodge/rational.hpp"

#include <map>
#include <string>

namespace nchodge {

// Rational Laurent polynomial in the formal symbol tau, which stands for
// 2*pi*i. Keeping tau formal makes every algebraic/analytic trace conversion
// exact. Canonical form: zero coefficients are never stored; the zero value
// has an empty term map.
class TauScalar {
 public:
  TauScalar() = default;
  TauScalar(long value) { set(0, Rational(value)); }
  TauScalar(const Rational& value) { set(0, value); }

  static TauScalar tau_power(int exp, const Rational& coeff = Rational(1)) {
    TauScalar s;
    s.set(exp, coeff);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  // True when only the tau^0 term is present (zero counts as rational).
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Rational coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational rational_part() const { return coeff(0); }
  const std::map<int, Rational>& terms() const { return terms_; }
  // Exponent range; only meaningful on nonzero values.
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  TauScalar& operator+=(const TauScalar& o);
  TauScalar& operator-=(const TauScalar& o);
  TauScalar& operator*=(const TauScalar& o);

  friend TauScalar operator+(TauScalar a, const TauScalar& b) { return a += b; }
  friend TauScalar operator-(TauScalar a, const TauScalar& b) { return a -= b; }
  friend TauScalar operator*(const TauScalar& a, const TauScalar& b);
  TauScalar operator-() const;

  bool operator==(const TauScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const TauScalar& o) const { return !(*this == o); }

  // Evaluate at a rational value of tau (used for nondegeneracy sampling).
  Rational eval(const Rational& tau_value) const;

  // Rendering contract: terms in ascending exponent order joined by " + " /
  // " - "; a term is "p/q" (exp 0), "tau"/"tau^k" (unit coefficient), or
  // "p/q*tau^k". Zero renders as "0".
  std::string str() const;

 private:
  void set(int exp, const Rational& coeff) {
    if (coeff != 0) terms_[exp] = coeff;
  }
  std::map<int, Rational> terms_;
  friend class CharSeries;
};

}  // namespace nchodge
