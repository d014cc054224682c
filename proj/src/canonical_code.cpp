#include "isomet/canonical_code.hpp"

#include <algorithm>
#include <utility>

namespace isomet {

CanonicalCode CanonicalCode::node(std::optional<Rational> radius, std::vector<CanonicalCode> children) {
  CanonicalCode c;
  c.internal_ = true;
  c.radius_ = std::move(radius);
  c.children_ = std::move(children);
  std::sort(c.children_.begin(), c.children_.end());
  return c;
}

std::size_t CanonicalCode::leaf_count() const {
  if (!internal_) return 1;
  std::size_t total = 0;
  for (const auto& c : children_) total += c.leaf_count();
  return total;
}

std::string CanonicalCode::to_string() const {
  if (!internal_) return "L";
  std::string out = "(";
  bool first = true;
  if (radius_) {
    out += radius_->to_string();
    first = false;
  }
  for (const auto& c : children_) {
    if (!first) out += ' ';
    out += c.to_string();
    first = false;
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
  if (a.internal_ != b.internal_) return a.internal_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a.internal_) return std::strong_ordering::equal;
  if (a.radius_.has_value() != b.radius_.has_value()) {
    return a.radius_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.radius_ && *a.radius_ != *b.radius_) {
    // larger radius first
    return *b.radius_ <=> *a.radius_;
  }
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                b.children_.end());
}

}  // namespace isomet
