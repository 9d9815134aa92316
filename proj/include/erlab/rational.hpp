#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace erlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& r);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

inline Rational make_rational(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace erlab
