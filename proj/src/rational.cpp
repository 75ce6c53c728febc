#include "sparse_evolve/rational.hpp"

#include <charconv>

#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("invalid rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Alpha::Alpha(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw ArgumentError("alpha denominator must be positive");
  }
  if (numerator <= 0 || numerator >= denominator) {
    throw ArgumentError("alpha must lie strictly in (0,1), got " +
                        std::to_string(numerator) + "/" + std::to_string(denominator));
  }
  value_ = Rational(numerator, denominator);
}

Alpha Alpha::parse(std::string_view text) {
  Rational r = parse_rational(text);
  return Alpha(r.numerator(), r.denominator());
}

std::string Alpha::to_string() const { return sparse_evolve::to_string(value_); }

}  // namespace sparse_evolve
