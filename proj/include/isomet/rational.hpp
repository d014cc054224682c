#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace isomet {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// member-wise. Intermediate products are formed in 128 bits; a result that
/// does not fit back into 64 bits throws std::overflow_error rather than
/// wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isomet

template <>
struct std::hash<isomet::Rational> {
  std::size_t operator()(const isomet::Rational& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
