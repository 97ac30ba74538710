#include "tdl/numeric.hpp"

#include "tdl/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>

namespace tdl {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j;  // exact at every step: acc is C(n-k+j, j)
  }
  return acc;
}

BigInt matching_count(std::int64_t points) {
  if (points < 0 || points % 2 != 0) return 0;
  BigInt acc = 1;
  for (std::int64_t m = points - 1; m > 1; m -= 2) acc *= m;
  return acc;
}

BigInt pow(BigInt base, std::uint64_t exp) {
  BigInt acc = 1;
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw UsageError("log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 512) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 512;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

// cpp_int's string constructor reads a leading 0 as an octal prefix
BigInt decimal_digits(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return BigInt(digits.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return UsageError("not a number: '" + text + "'"); };
  std::string s = text;
  if (s.empty()) throw bad();
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  const auto slash = s.find('/', pos);
  if (slash != std::string::npos) {
    const std::string num = s.substr(pos, slash - pos);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    for (char c : num + den)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    const BigInt d = decimal_digits(den);
    if (d == 0) throw UsageError("zero denominator: '" + text + "'");
    Rational r(decimal_digits(num), d);
    return negative ? -r : r;
  }
  const auto dot = s.find('.', pos);
  std::string digits;
  std::int64_t frac_len = 0;
  if (dot == std::string::npos) {
    digits = s.substr(pos);
  } else {
    digits = s.substr(pos, dot - pos) + s.substr(dot + 1);
    frac_len = static_cast<std::int64_t>(s.size() - dot - 1);
  }
  if (digits.empty()) throw bad();
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
  BigInt scale = 1;
  for (std::int64_t i = 0; i < frac_len; ++i) scale *= 10;
  Rational r(decimal_digits(digits), scale);
  return negative ? -r : r;
}

std::string rational_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t round_half_up(const Rational& r) {
  if (r < 0) throw UsageError("expected a nonnegative value");
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt shifted = (2 * num + den) / (2 * den);  // floor(r + 1/2)
  return shifted.convert_to<std::int64_t>();
}

}  // namespace tdl
