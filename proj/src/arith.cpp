#include "gsearch/arith.hpp"

#include <charconv>

namespace gsearch {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  bool negative = text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (frac_part.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  std::int64_t scale = 1;
  std::int64_t frac = 0;
  if (!frac_part.empty()) {
    frac = parse_int(frac_part, text);
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  }
  Rational r = Rational(whole) + Rational(frac, scale);
  return negative ? -r : r;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace gsearch
