#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" with q > 0 and gcd(p,q) = 1, or "0"/"p" for integers.
std::string rational_to_string(const Rational& r);

// Inverse of rational_to_string; accepts "p" and "p/q". Throws
// std::invalid_argument on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

// Binomial coefficient C(n, k) for integer n (n may be any sign).
Rational binom(const BigInt& n, unsigned k);

}  // namespace wsys
