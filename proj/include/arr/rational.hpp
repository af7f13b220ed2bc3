#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace arr {

// Arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator; every operation is exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const Rational& r) { return r.sign(); }

// Canonical "p/q" form ("p" when q == 1), lowest terms.
std::string to_string(const Rational& r);

// Parses "p", "-p", "p/q". Rejects zero denominators and malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// Nearest double, for rendering only. Never used in a predicate.
double to_double_approx(const Rational& r);

}  // namespace arr
