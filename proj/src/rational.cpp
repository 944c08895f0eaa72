#include "nchodge/rational.hpp"

#include "nchodge/errors.hpp"

#include <cctype>

namespace nchodge {

Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits(text)) fail("ParseError", "not a rational: '" + text + "'");
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!digits(num) || !digits(den))
    fail("ParseError", "not a rational: '" + text + "'");
  BigInt d(den);
  if (d == 0) fail("ParseError", "zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

std::string render_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binomial(const Rational& n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (n - i) / Rational(i + 1);
  return r;
}

}  // namespace nchodge
