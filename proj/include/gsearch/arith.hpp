#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gsearch {

/// Query costs, vertex weights and every derived cost total.
using Cost = std::int64_t;

/// Exact rational used for alpha, delta and epsilon parameters.
using Rational = boost::rational<std::int64_t>;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Cost checked_add(Cost a, Cost b) {
  Cost r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cost addition overflows 64 bits");
  return r;
}

inline Cost checked_mul(Cost a, Cost b) {
  Cost r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cost multiplication overflows 64 bits");
  return r;
}

inline Cost narrow_cost(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Cost>(v);
}

/// floor(q) for a rational with positive denominator.
inline std::int64_t floor_of(const Rational& q) {
  std::int64_t n = q.numerator(), d = q.denominator();
  std::int64_t f = n / d;
  if ((n % d != 0) && (n < 0)) --f;
  return f;
}

/// Parses "3", "0.25", "-1.5" or "7/4" into an exact rational.
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace gsearch
