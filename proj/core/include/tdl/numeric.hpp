#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tdl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Number of perfect matchings of `points` items: (points-1)!! for even
/// counts, 0 for odd, 1 for zero points.
BigInt matching_count(std::int64_t points);

BigInt pow(BigInt base, std::uint64_t exp);

/// Natural log of a positive BigInt, exact up to the final double rounding.
double log_big(const BigInt& x);

double to_double(const Rational& r);

/// Accepts "3", "-0.25", "3/10", "1e-3"-free decimal forms. Exact.
Rational parse_rational(const std::string& text);

/// "p/q" in lowest terms ("p" when q == 1).
std::string rational_string(const Rational& r);

bool is_integer(const Rational& r);

/// Round-half-up to an integer; rejects negative input.
std::int64_t round_half_up(const Rational& r);

}  // namespace tdl
