#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "isomet/canonical_code.hpp"
#include "isomet/metric.hpp"
#include "isomet/structure.hpp"

namespace isomet {

using PointSet = std::vector<std::size_t>;

// Every operation here takes a MetricSpace and throws NotUltrametric when its
// ultrametric flag is unset.

/// Open balls of radius r: classes of d(x,y) < r, ordered by smallest member.
std::vector<PointSet> ball_partition(const MetricSpace& x, const Rational& r);

/// The open ball B_r(center).
PointSet open_ball(const MetricSpace& x, std::size_t center, const Rational& r);

/// Dendrogram code. Equal codes iff isometric spaces.
CanonicalCode canonical_code(const MetricSpace& x);

/// Finite ball structure (B_X, R, S_q) over a threshold set Q.
struct BallStructure {
  std::vector<PointSet> balls;           // distinct open balls B_q(x), q in Q, sorted
  std::vector<Rational> thresholds;      // Q, ascending
  std::set<std::pair<std::size_t, std::size_t>> inclusion;  // (i,j): balls[i] ⊆ balls[j]
  std::map<Rational, std::set<std::size_t>> diameter_below;   // q -> { i : diam(balls[i]) < q }

  /// Relational form: binary "R" plus one unary "S_<q>" per threshold.
  RelationalStructure to_structure() const;
};

/// Default thresholds: R(X) ∪ {diam(X)+1}.
std::vector<Rational> default_ball_thresholds(const MetricSpace& x);

BallStructure ball_structure(const MetricSpace& x, std::optional<std::vector<Rational>> thresholds = std::nullopt);

struct Sphere {
  Rational radius;
  PointSet points;

  friend bool operator==(const Sphere&, const Sphere&) = default;
};

/// Spheres C_r(center) = { y : d(center,y) = r } for every realized r, in
/// increasing radius order. Works on any metric space.
std::vector<Sphere> sphere_decompose(const MetricSpace& x, std::size_t center);

/// Isometry test by anchoring the first point of X and matching sphere
/// decompositions recursively.
bool anchored_isometry_check(const MetricSpace& x, const MetricSpace& y);

/// Returns (X, rho∘d). `rho` is given as a finite table and must be strictly
/// increasing with positive values on its domain.
MetricSpace transfer(const MetricSpace& x, const std::map<Rational, Rational>& rho);

/// U_D with k copies of every distance: points D × {0..k-1},
/// d((r,a),(q,b)) = max{r,q} for distinct points.
MetricSpace universal_discrete(const std::set<Rational>& distances, std::size_t copies);

}  // namespace isomet
