#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sparse_evolve {

// Small exact rationals. Predimensions are n*q - p*e over q with tiny n, e,
// so 64-bit components never come close to overflowing.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// Edge-probability exponent, an exact reduced fraction strictly inside (0,1).
class Alpha {
 public:
  Alpha(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q" (or a bare integer, which is always rejected as out of range).
  static Alpha parse(std::string_view text);

  std::int64_t num() const { return value_.numerator(); }
  std::int64_t den() const { return value_.denominator(); }
  const Rational& value() const { return value_; }
  double to_double() const {
    return static_cast<double>(num()) / static_cast<double>(den());
  }
  std::string to_string() const;

  // Smallest integer >= 1/alpha.
  int min_rigid_degree() const {
    return static_cast<int>((den() + num() - 1) / num());
  }

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Rational value_;
};

// delta-units: vertices minus alpha times edges.
struct Predim {
  Rational value;

  // n - alpha * e
  static Predim of(std::int64_t vertices, std::int64_t edges, const Alpha& alpha) {
    return Predim{Rational(vertices) - alpha.value() * edges};
  }
  // Signs via the numerator: boost 1.74 mixed rational/int comparisons
  // recurse forever under C++20 rewritten operators.
  bool positive() const { return value.numerator() > 0; }
  bool negative() const { return value.numerator() < 0; }
  bool zero() const { return value.numerator() == 0; }
  double to_double() const {
    return static_cast<double>(value.numerator()) /
           static_cast<double>(value.denominator());
  }
  std::string to_string() const { return sparse_evolve::to_string(value); }

  friend auto operator<=>(const Predim& a, const Predim& b) {
    if (a.value < b.value) return std::strong_ordering::less;
    if (b.value < a.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Predim&, const Predim&) = default;
  friend Predim operator+(const Predim& a, const Predim& b) {
    return Predim{a.value + b.value};
  }
  friend Predim operator-(const Predim& a, const Predim& b) {
    return Predim{a.value - b.value};
  }
};

}  // namespace sparse_evolve
