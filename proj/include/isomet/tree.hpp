#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isomet/canonical_code.hpp"
#include "isomet/metric.hpp"

namespace isomet {

/// A finite sequence over {0..k-1}; the empty sequence is the root.
using Sequence = std::vector<std::size_t>;

std::string sequence_to_string(const Sequence& s);

/// True iff u is an initial segment of v (u ⊆ v).
bool is_prefix(const Sequence& u, const Sequence& v);

/// Longest common initial segment u ⊓ v.
Sequence meet(const Sequence& u, const Sequence& v);

/// Finite prefix-closed set of sequences. Nodes are stored in lexicographic
/// order, so index 0 is always the root and every prefix precedes its
/// extensions.
class Tree {
 public:
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Sequence>& nodes() const { return nodes_; }
  const Sequence& node(std::size_t i) const { return nodes_[i]; }
  std::size_t length(std::size_t i) const { return nodes_[i].size(); }

  /// Immediate predecessor, absent for the root.
  std::optional<std::size_t> parent(std::size_t i) const;
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  bool is_terminal(std::size_t i) const { return children_[i].empty(); }

  std::optional<std::size_t> index_of(const Sequence& s) const;

  /// Longest node length.
  std::size_t depth() const;
  /// One more than the largest symbol used (0 for the root-only tree).
  std::size_t branching() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.nodes_ == b.nodes_; }

 private:
  friend Tree validate_tree(std::vector<Sequence> sequences);

  std::vector<Sequence> nodes_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

/// Builds a Tree from a set of sequences (duplicates collapse). Throws
/// EmptyInput or MissingPrefix(node, shortest missing prefix).
Tree validate_tree(std::vector<Sequence> sequences);

/// AHU code: leaf -> L, internal node -> sorted multiset of child codes.
CanonicalCode tree_canonical(const Tree& t);

bool trees_isomorphic(const Tree& t, const Tree& s);

/// Rank of the root: 0 at terminal nodes, otherwise max over successors + 1.
std::size_t tree_rank(const Tree& t);

/// Rank of every node, indexed like t.nodes().
std::vector<std::size_t> node_ranks(const Tree& t);

/// Certificate check: f is a bijection with u ⊆ v ⟺ f(u) ⊆ f(v) and
/// lh(f(u)) = lh(u).
bool is_tree_isomorphism(const Tree& t, const Tree& s, const Bijection& f);

/// Every tree with at most `max_nodes` nodes, symbols < `branching`, lengths
/// <= `depth`, each exactly once. Ordered by node count, then
/// lexicographically on the sorted node lists.
void enumerate_trees(std::size_t max_nodes, std::size_t branching, std::size_t depth,
                     const std::function<void(const Tree&)>& visit);

std::vector<Tree> enumerate_trees(std::size_t max_nodes, std::size_t branching, std::size_t depth);

}  // namespace isomet
