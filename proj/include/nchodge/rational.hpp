#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nchodge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q". Throws Error("ParseError", ...) on anything else
// or on a zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string render_rational(const Rational& value);

BigInt factorial(unsigned n);

// C(n, k) for integer n (possibly negative), exact.
Rational binomial(const Rational& n, unsigned k);

}  // namespace nchodge
