#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isomet/metric.hpp"

namespace isomet {

using Tuple = std::vector<std::size_t>;

struct Relation {
  std::size_t arity = 0;
  std::set<Tuple> tuples;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite universe {0..n-1} with named relations.
class RelationalStructure {
 public:
  RelationalStructure() = default;
  explicit RelationalStructure(std::size_t universe) : universe_(universe) {}

  std::size_t universe() const { return universe_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }

  /// Declares a relation. Redeclaring with a different arity throws
  /// MalformedStructure.
  Relation& declare(const std::string& name, std::size_t arity);

  /// Adds a tuple; throws MalformedStructure on arity mismatch or an entry
  /// outside the universe.
  void add(const std::string& name, Tuple tuple);

  bool holds(const std::string& name, const Tuple& tuple) const;

  friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;

 private:
  std::size_t universe_ = 0;
  std::map<std::string, Relation> relations_;
};

/// Same relation names with the same arities.
bool same_signature(const RelationalStructure& a, const RelationalStructure& b);

/// Universe bijection mapping every relation of `a` exactly onto the same
/// relation of `b`, or nullopt. Throws SignatureMismatch if the signatures
/// differ. Pruned mode backtracks with per-element occurrence profiles and
/// partial-tuple consistency; exhaustive mode checks every permutation.
std::optional<Bijection> structure_isomorphic(const RelationalStructure& a, const RelationalStructure& b,
                                              SearchMode mode = SearchMode::pruned);

bool is_structure_isomorphism(const RelationalStructure& a, const RelationalStructure& b, const Bijection& f);

}  // namespace isomet
