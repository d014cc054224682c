#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "isomet/metric.hpp"
#include "isomet/structure.hpp"
#include "isomet/tree.hpp"

namespace isomet {

// ---------------------------------------------------------------------------
// Trees to ultrametric spaces
// ---------------------------------------------------------------------------

/// Strictly decreasing positive radii r_0 > r_1 > ... > r_d.
class RadiusSequence {
 public:
  /// Throws std::invalid_argument unless strictly decreasing and positive.
  explicit RadiusSequence(std::vector<Rational> radii);

  /// r_b = 1 + 1/(b+1), bounded away from 0.
  static RadiusSequence harmonic(std::size_t length);
  /// r_b = 2^-b.
  static RadiusSequence geometric(std::size_t length);

  std::size_t size() const { return radii_.size(); }
  const Rational& operator[](std::size_t b) const { return radii_[b]; }
  const std::vector<Rational>& values() const { return radii_; }

 private:
  std::vector<Rational> radii_;
};

/// X_T: the nodes of T with d_T(u,v) = r_{lh(u ⊓ v)} for u != v. Point i is
/// t.node(i). Throws SequenceTooShort unless r has at least depth(T) entries.
MetricSpace tree_to_space(const Tree& t, const RadiusSequence& r);

/// A φ-switching pair (v0, v1): v1 terminal in T with immediate predecessor
/// v0, φ(v0) terminal in S with immediate predecessor φ(v1), and the lengths
/// crossed.
struct SwitchingPair {
  std::size_t predecessor;  // v0
  std::size_t terminal;     // v1

  friend bool operator==(const SwitchingPair&, const SwitchingPair&) = default;
};

std::vector<SwitchingPair> switching_pairs(const Tree& t, const Tree& s, const Bijection& phi);

/// Turns an isometry X_T -> X_S into a tree isomorphism T -> S by swapping φ
/// on every switching pair. Throws NotAnIsometry if φ is not an isometry of
/// the images, RepairFailed if the repaired map is not a tree isomorphism.
Bijection repair_isometry_to_tree_iso(const Tree& t, const Tree& s, const RadiusSequence& r, const Bijection& phi);

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Simple undirected graph on {0..n-1}; edges stored as (i,j) with i < j.
class Graph {
 public:
  explicit Graph(std::size_t vertices) : n_(vertices) {}

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  void add_edge(std::size_t a, std::size_t b);

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Brute-force graph isomorphism over all vertex permutations.
std::optional<Bijection> graph_isomorphism(const Graph& g, const Graph& h);

/// All 2^(n(n-1)/2) labeled graphs on n vertices, by edge bitmask.
std::vector<Graph> enumerate_graphs(std::size_t vertices);

/// Distance 1 between adjacent vertices, 2 between other distinct ones.
MetricSpace graph_to_space(const Graph& g);

// ---------------------------------------------------------------------------
// Metric spaces to relational structures
// ---------------------------------------------------------------------------

/// R(X) ∪ R(Y) ∪ {max + 1}; separates the distances of both spaces.
std::vector<Rational> separating_thresholds(const MetricSpace& x, const MetricSpace& y);
std::vector<Rational> separating_thresholds(const MetricSpace& x);

/// Binary relations P_q = { (n,m) : d(n,m) < q } for q in Q. Throws
/// InsufficientThresholds unless every pair of consecutive realized
/// distances a < b has some q with a < q <= b and some q exceeds max R(X).
RelationalStructure discrete_to_structure(const MetricSpace& x, const std::vector<Rational>& thresholds);

// ---------------------------------------------------------------------------
// Sums and Gromov invariants
// ---------------------------------------------------------------------------

/// Disjoint union of ultrametric parts, distance r across parts. Throws
/// RadiusTooSmall (naming the part) unless r > diam of every part.
MetricSpace sum_space(const std::vector<MetricSpace>& parts, const Rational& r);

/// An (n+1)x(n+1) distance matrix, row-major.
using GromovMatrix = std::vector<Rational>;
using GromovSet = std::set<GromovMatrix>;

/// { (d(x_i,x_j))_{i,j<=n} : (x_0..x_n) ∈ X^{n+1} }.
GromovSet gromov_invariant(const MetricSpace& x, std::size_t n);

/// gromov_invariant for n = 0..|X|-1.
std::vector<GromovSet> gromov_full(const MetricSpace& x);

// ---------------------------------------------------------------------------
// Group actions and orbit encoding
// ---------------------------------------------------------------------------

/// A finite group G (Cayley table) with a metric d_G, acting on a finite
/// metric space Y.
struct GroupAction {
  std::vector<std::vector<std::size_t>> product;  // product[g][h] = g*h
  DistanceMatrix group_metric;                    // d_G
  DistanceMatrix space_metric;                    // d_Y
  std::vector<std::vector<std::size_t>> act;      // act[g][y] = g.y

  std::size_t group_size() const { return product.size(); }
  std::size_t space_size() const { return space_metric.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;

  friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

/// Checks the group axioms and action laws (NotAnAction), that both metrics
/// are metrics, and that d_G is left-invariant (NotLeftInvariant).
void check_group_action(const GroupAction& a);

/// Checks d_G, d_Y <= 1 and d_G(g,h) >= ½ d_Y(g⁻¹.y, h⁻¹.y) for all y, g, h;
/// throws PreconditionViolated otherwise.
void check_orbit_encoding_preconditions(const GroupAction& a);

/// Rescales both metrics into [0,1] and replaces d_G with
/// ½ d_G(g,h) + ½ max_y d_Y(g⁻¹.y, h⁻¹.y).
GroupAction adjust_group_metric(const GroupAction& candidate);

/// Orbit index of every point of Y (orbits numbered by smallest member).
std::vector<std::size_t> orbits(const GroupAction& a);

/// X_z on G ∪ {x*_0..x*_{|Y|-1}}: points 0..|G|-1 are group elements, then
/// the stars. d(g,h) = d_G(g,h), d(x*_n,x*_m) = max{n+2,m+2},
/// d(x*_n,g) = (n+2) + ½ d_Y(y_n, g⁻¹.z).
MetricSpace orbit_encode(const GroupAction& a, std::size_t z);

}  // namespace isomet
