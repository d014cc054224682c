#include "isomet/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace isomet {

namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = from_wide(n, d);
}

Rational Rational::from_wide(wide n, wide d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<wide>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from_wide(static_cast<wide>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                           static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = from_wide(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::string_view rest = text.substr(slash + 1);
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::int64_t d = parse_int(rest, text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace isomet
