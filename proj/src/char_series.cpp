#include "nchodge/char_series.hpp"

#include "nchodge/errors.hpp"

#include <sstream>

namespace nchodge {

namespace {

void require_same_order(const CharSeries& a, const CharSeries& b) {
  if (a.order() != b.order())
    fail("OrderMismatch", "series orders " + std::to_string(a.order()) +
                              " and " + std::to_string(b.order()));
}

}  // namespace

CharSeries::CharSeries(int order) : order_(order) {
  if (order < 0) fail("ValidationError", "negative series order");
  coeffs_.resize(order + 1);
}

CharSeries::CharSeries(int order, std::vector<TauScalar> coeffs)
    : CharSeries(order) {
  if (coeffs.size() > coeffs_.size())
    fail("ValidationError", "coefficient list longer than order allows");
  for (size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

CharSeries CharSeries::constant(int order, const TauScalar& value) {
  CharSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

CharSeries CharSeries::variable(int order) {
  if (order < 1) fail("ValidationError", "variable needs order >= 1");
  CharSeries s(order);
  s.coeffs_[1] = TauScalar(1);
  return s;
}

const TauScalar& CharSeries::coeff(int k) const {
  if (k < 0 || k > order_) fail("ValidationError", "coefficient index out of range");
  return coeffs_[k];
}

void CharSeries::set_coeff(int k, const TauScalar& value) {
  if (k < 0 || k > order_) fail("ValidationError", "coefficient index out of range");
  coeffs_[k] = value;
}

bool CharSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

CharSeries operator+(const CharSeries& a, const CharSeries& b) {
  require_same_order(a, b);
  CharSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

CharSeries operator-(const CharSeries& a, const CharSeries& b) {
  require_same_order(a, b);
  CharSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

CharSeries CharSeries::operator-() const {
  CharSeries r(order_);
  for (int k = 0; k <= order_; ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
  require_same_order(a, b);
  CharSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

CharSeries div(const CharSeries& a, const CharSeries& b) {
  require_same_order(a, b);
  if (!b.is_unital())
    fail("DivisorNotUnital", "series division needs divisor with constant term 1");
  CharSeries q(a.order_);
  for (int k = 0; k <= a.order_; ++k) {
    TauScalar c = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) c -= b.coeffs_[j] * q.coeffs_[k - j];
    q.coeffs_[k] = c;
  }
  return q;
}

CharSeries exp(const CharSeries& f) {
  if (!f.coeffs_[0].is_zero())
    fail("NonzeroConstantTerm", "exp needs vanishing constant term");
  // e' = f' e gives n*e_n = sum_{k=1..n} k f_k e_{n-k}.
  CharSeries e(f.order_);
  e.coeffs_[0] = TauScalar(1);
  for (int n = 1; n <= f.order_; ++n) {
    TauScalar acc;
    for (int k = 1; k <= n; ++k)
      acc += TauScalar(Rational(k)) * f.coeffs_[k] * e.coeffs_[n - k];
    e.coeffs_[n] = TauScalar(Rational(1, n)) * acc;
  }
  return e;
}

CharSeries log(const CharSeries& f) {
  if (!f.is_unital()) fail("NotUnital", "log needs constant term 1");
  // l' f = f' gives n*l_n = n*f_n - sum_{k=1..n-1} k l_k f_{n-k}.
  CharSeries l(f.order_);
  for (int n = 1; n <= f.order_; ++n) {
    TauScalar acc = TauScalar(Rational(n)) * f.coeffs_[n];
    for (int k = 1; k < n; ++k)
      acc -= TauScalar(Rational(k)) * l.coeffs_[k] * f.coeffs_[n - k];
    l.coeffs_[n] = TauScalar(Rational(1, n)) * acc;
  }
  return l;
}

CharSeries sqrt(const CharSeries& f) {
  if (!f.is_unital()) fail("NotUnital", "sqrt needs constant term 1");
  CharSeries half = log(f);
  for (int k = 0; k <= half.order_; ++k)
    half.coeffs_[k] = TauScalar(Rational(1, 2)) * half.coeffs_[k];
  return exp(half);
}

std::string CharSeries::str(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    std::string c = coeffs_[k].str();
    bool negative = false;
    if (coeffs_[k].terms().size() == 1) {
      if (c[0] == '-') {
        negative = true;
        c = c.substr(1);
      }
    } else {
      c = "(" + c + ")";
    }
    std::string body;
    if (k == 0) {
      body = c;
    } else {
      std::string power = k == 1 ? var : var + "^" + std::to_string(k);
      body = (c == "1") ? power : c + "*" + power;
    }
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  if (first) return "0";
  return out.str();
}

CharSeries todd_series(int order) {
  if (order < 0) fail("ValidationError", "negative series order");
  // (1 - e^{-z})/z truncated: coefficient of z^k is (-1)^k/(k+1)!.
  CharSeries den(order);
  for (int k = 0; k <= order; ++k) {
    Rational c = Rational(1) / Rational(factorial(k + 1));
    den.set_coeff(k, TauScalar(k % 2 ? -c : c));
  }
  return div(CharSeries::constant(order, TauScalar(1)), den);
}

CharSeries modified_todd_series(int order) {
  if (order < 0) fail("ValidationError", "negative series order");
  // (e^{z/2} - e^{-z/2})/z truncated: coefficient of z^k is 1/(2^k (k+1)!)
  // for even k, zero for odd k.
  CharSeries den(order);
  BigInt pow2 = 1;
  for (int k = 0; k <= order; ++k) {
    if (k % 2 == 0)
      den.set_coeff(k, TauScalar(Rational(1, pow2 * factorial(k + 1))));
    pow2 *= 2;
  }
  return div(CharSeries::constant(order, TauScalar(1)), den);
}

}  // namespace nchodge
