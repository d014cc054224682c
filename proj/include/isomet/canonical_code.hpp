#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "isomet/rational.hpp"

namespace isomet {

/// Order-independent fingerprint of a rooted hierarchy.
///
/// Ultrametric dendrograms carry a radius on every internal node; tree
/// (AHU) codes carry none. Children are kept sorted, so two codes built from
/// isomorphic inputs compare equal member-wise.
///
/// Total order: Leaf sorts first; internal nodes compare by radius
/// descending, then lexicographically on their sorted children (which also
/// orders by child count when one list is a prefix of the other).
class CanonicalCode {
 public:
  CanonicalCode() = default;

  static CanonicalCode leaf() { return {}; }
  static CanonicalCode node(std::optional<Rational> radius, std::vector<CanonicalCode> children);

  bool is_leaf() const { return !internal_; }
  const std::optional<Rational>& radius() const { return radius_; }
  const std::vector<CanonicalCode>& children() const { return children_; }

  /// Number of leaves below (and including) this node.
  std::size_t leaf_count() const;

  /// "L" for a leaf, "(r c1 c2 ...)" for a radius node, "(c1 c2 ...)" for a
  /// tree node.
  std::string to_string() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b);

 private:
  bool internal_ = false;
  std::optional<Rational> radius_;
  std::vector<CanonicalCode> children_;
};

}  // namespace isomet
