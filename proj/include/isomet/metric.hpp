#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "isomet/rational.hpp"

namespace isomet {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// A point correspondence: source index i goes to forward[i].
struct Bijection {
  std::vector<std::size_t> forward;

  static Bijection identity(std::size_t n);

  std::size_t size() const { return forward.size(); }
  std::size_t operator()(std::size_t i) const { return forward[i]; }

  /// True iff forward is a permutation of 0..n-1.
  bool is_valid(std::size_t n) const;
  Bijection inverse() const;

  friend bool operator==(const Bijection&, const Bijection&) = default;
};

/// Finite metric space with exact distances. Only obtainable through
/// validate_metric (or derived from a validated space), so every instance
/// satisfies the metric axioms.
class MetricSpace {
 public:
  std::size_t size() const { return n_; }
  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_ultrametric() const { return ultrametric_; }

  Rational diameter() const;
  DistanceMatrix matrix() const;

  /// Induced subspace on `points`, in the given order.
  MetricSpace subspace(std::span<const std::size_t> points) const;

  /// Copy in which point i of this space sits at index pi(i).
  MetricSpace relabeled(const Bijection& pi) const;

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  friend MetricSpace validate_metric(std::vector<std::string> labels, const DistanceMatrix& matrix);

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  bool ultrametric_ = false;
};

/// Checks the metric axioms in order: diagonal, symmetry, positivity, triangle
/// inequality, and throws an Error naming the first witnessing indices.
/// An empty label list gets default labels "0".."n-1".
MetricSpace validate_metric(std::vector<std::string> labels, const DistanceMatrix& matrix);

/// R(X): all nonzero distances realized in X.
std::set<Rational> distance_spectrum(const MetricSpace& x);

/// R_X(i): nonzero distances realized from point i.
std::set<Rational> realized_by(const MetricSpace& x, std::size_t i);

enum class SearchMode { pruned, exhaustive };

struct IsometryResult {
  enum class Status { found, none, size_mismatch };

  Status status = Status::none;
  Bijection map;

  bool found() const { return status == Status::found; }
  explicit operator bool() const { return found(); }
};

/// Searches for a distance-preserving bijection X -> Y.
///
/// `pruned` backtracks over points of X in index order, restricting each to
/// targets with the same sorted distance row, and returns the
/// lexicographically least certificate. `exhaustive` walks all |X|!
/// permutations in lexicographic order and checks each in full; it is the
/// reference oracle for the pruned search.
IsometryResult find_isometry(const MetricSpace& x, const MetricSpace& y,
                             SearchMode mode = SearchMode::pruned);

bool isometric(const MetricSpace& x, const MetricSpace& y, SearchMode mode = SearchMode::pruned);

/// Certificate check: f is a bijection with d_X(i,j) = d_Y(f(i),f(j)).
bool is_isometry(const MetricSpace& x, const MetricSpace& y, const Bijection& f);

}  // namespace isomet
