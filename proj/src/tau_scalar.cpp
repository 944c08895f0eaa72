#include "nchodge/tau_scalar.hpp"

#include <sstream>

namespace nchodge {

TauScalar& TauScalar::operator+=(const TauScalar& o) {
  for (const auto& [exp, c] : o.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TauScalar& TauScalar::operator-=(const TauScalar& o) {
  for (const auto& [exp, c] : o.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TauScalar operator*(const TauScalar& a, const TauScalar& b) {
  TauScalar r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      int e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

TauScalar& TauScalar::operator*=(const TauScalar& o) {
  *this = *this * o;
  return *this;
}

TauScalar TauScalar::operator-() const {
  TauScalar r;
  for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
  return r;
}

Rational TauScalar::eval(const Rational& tau_value) const {
  Rational r = 0;
  for (const auto& [exp, c] : terms_) {
    Rational p = 1;
    for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) p *= tau_value;
    r += exp < 0 ? Rational(c / p) : Rational(c * p);
  }
  return r;
}

std::string TauScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    std::string body;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (exp == 0) {
      body = render_rational(mag);
    } else {
      std::string tau = exp == 1 ? "tau" : "tau^" + std::to_string(exp);
      body = (mag == 1) ? tau : render_rational(mag) + "*" + tau;
    }
    if (first) {
      out << (c < 0 ? "-" : "") << body;
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ") << body;
    }
  }
  return out.str();
}

}  // namespace nchodge
