#include "isomet/ultrametric.hpp"

#include <algorithm>
#include <stdexcept>

#include "isomet/error.hpp"

namespace isomet {

namespace {

void require_ultrametric(const MetricSpace& x) {
  if (!x.is_ultrametric()) throw Error(ErrorKind::NotUltrametric, "space violates the ultrametric inequality");
}

void require_point(const MetricSpace& x, std::size_t p) {
  if (p >= x.size()) throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(p) + " not in space", {p});
}

// Blocks of d < r restricted to `points`. The relation is an equivalence on an
// ultrametric space, so comparing against each block's first member suffices.
std::vector<PointSet> partition_of(const MetricSpace& x, const PointSet& points, const Rational& r) {
  std::vector<PointSet> blocks;
  for (std::size_t p : points) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const PointSet& b) { return x.d(b.front(), p) < r; });
    if (it == blocks.end())
      blocks.push_back({p});
    else
      it->push_back(p);
  }
  return blocks;
}

Rational diameter_of(const MetricSpace& x, const PointSet& points) {
  Rational best;
  for (std::size_t a : points)
    for (std::size_t b : points) best = max(best, x.d(a, b));
  return best;
}

CanonicalCode code_of(const MetricSpace& x, const PointSet& points) {
  if (points.size() == 1) return CanonicalCode::leaf();
  Rational r = diameter_of(x, points);
  std::vector<CanonicalCode> children;
  for (const auto& block : partition_of(x, points, r)) children.push_back(code_of(x, block));
  return CanonicalCode::node(r, std::move(children));
}

std::vector<Sphere> spheres_of(const MetricSpace& x, const PointSet& points, std::size_t center) {
  std::map<Rational, PointSet> by_radius;
  for (std::size_t p : points)
    if (p != center) by_radius[x.d(center, p)].push_back(p);
  std::vector<Sphere> out;
  for (auto& [r, pts] : by_radius) out.push_back({r, std::move(pts)});
  return out;
}

class AnchoredMatcher {
 public:
  AnchoredMatcher(const MetricSpace& x, const MetricSpace& y) : x_(x), y_(y) {}

  bool match(const PointSet& px, const PointSet& py) {
    if (px.size() != py.size()) return false;
    if (px.size() <= 1) return true;
    auto key = std::make_pair(px, py);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto anchor_spheres = spheres_of(x_, px, px.front());
    bool verdict = false;
    for (std::size_t candidate : py) {
      const auto spheres = spheres_of(y_, py, candidate);
      if (spheres.size() != anchor_spheres.size()) continue;
      bool ok = true;
      for (std::size_t s = 0; s < spheres.size() && ok; ++s) {
        ok = spheres[s].radius == anchor_spheres[s].radius &&
             spheres[s].points.size() == anchor_spheres[s].points.size();
      }
      for (std::size_t s = 0; s < spheres.size() && ok; ++s) ok = match(anchor_spheres[s].points, spheres[s].points);
      if (ok) {
        verdict = true;
        break;
      }
    }
    memo_.emplace(std::move(key), verdict);
    return verdict;
  }

 private:
  const MetricSpace& x_;
  const MetricSpace& y_;
  std::map<std::pair<PointSet, PointSet>, bool> memo_;
};

PointSet all_points(const MetricSpace& x) {
  PointSet p(x.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  return p;
}

}  // namespace

std::vector<PointSet> ball_partition(const MetricSpace& x, const Rational& r) {
  require_ultrametric(x);
  if (!r.is_positive()) throw Error(ErrorKind::NonPositiveRadius, "radius must be positive", {}, {r});
  return partition_of(x, all_points(x), r);
}

PointSet open_ball(const MetricSpace& x, std::size_t center, const Rational& r) {
  require_point(x, center);
  PointSet out;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x.d(center, p) < r) out.push_back(p);
  return out;
}

CanonicalCode canonical_code(const MetricSpace& x) {
  require_ultrametric(x);
  return code_of(x, all_points(x));
}

std::vector<Rational> default_ball_thresholds(const MetricSpace& x) {
  auto spectrum = distance_spectrum(x);
  std::vector<Rational> q(spectrum.begin(), spectrum.end());
  q.push_back(x.diameter() + 1);
  return q;
}

BallStructure ball_structure(const MetricSpace& x, std::optional<std::vector<Rational>> thresholds) {
  require_ultrametric(x);
  std::vector<Rational> q = thresholds ? std::move(*thresholds) : default_ball_thresholds(x);
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  for (const auto& v : q)
    if (!v.is_positive()) throw Error(ErrorKind::NonPositiveRadius, "threshold must be positive", {}, {v});

  BallStructure bs;
  bs.thresholds = q;
  std::set<PointSet> distinct;
  for (const auto& r : q)
    for (std::size_t c = 0; c < x.size(); ++c) distinct.insert(open_ball(x, c, r));
  bs.balls.assign(distinct.begin(), distinct.end());

  for (std::size_t i = 0; i < bs.balls.size(); ++i) {
    for (std::size_t j = 0; j < bs.balls.size(); ++j) {
      if (std::includes(bs.balls[j].begin(), bs.balls[j].end(), bs.balls[i].begin(), bs.balls[i].end())) {
        bs.inclusion.emplace(i, j);
      }
    }
  }
  for (const auto& r : q) {
    auto& members = bs.diameter_below[r];
    for (std::size_t i = 0; i < bs.balls.size(); ++i)
      if (diameter_of(x, bs.balls[i]) < r) members.insert(i);
  }
  return bs;
}

RelationalStructure BallStructure::to_structure() const {
  RelationalStructure s(balls.size());
  s.declare("R", 2);
  for (const auto& [a, b] : inclusion) s.add("R", {a, b});
  for (const auto& [q, members] : diameter_below) {
    const std::string name = "S_" + q.to_string();
    s.declare(name, 1);
    for (std::size_t m : members) s.add(name, {m});
  }
  return s;
}

std::vector<Sphere> sphere_decompose(const MetricSpace& x, std::size_t center) {
  require_point(x, center);
  return spheres_of(x, all_points(x), center);
}

bool anchored_isometry_check(const MetricSpace& x, const MetricSpace& y) {
  require_ultrametric(x);
  require_ultrametric(y);
  return AnchoredMatcher(x, y).match(all_points(x), all_points(y));
}

MetricSpace transfer(const MetricSpace& x, const std::map<Rational, Rational>& rho) {
  require_ultrametric(x);
  const std::pair<const Rational, Rational>* prev = nullptr;
  for (const auto& entry : rho) {
    if (!entry.first.is_positive() || !entry.second.is_positive()) {
      throw Error(ErrorKind::NotMonotone, "map must send positive distances to positive distances", {},
                  {entry.first, entry.second});
    }
    if (prev && !(prev->second < entry.second)) {
      throw Error(ErrorKind::NotMonotone,
                  "rho(" + prev->first.to_string() + ") >= rho(" + entry.first.to_string() + ")", {},
                  {prev->first, entry.first});
    }
    prev = &entry;
  }
  DistanceMatrix m(x.size(), std::vector<Rational>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      auto it = rho.find(x.d(i, j));
      if (it == rho.end()) {
        throw Error(ErrorKind::DomainGap, "realized distance " + x.d(i, j).to_string() + " outside domain", {i, j},
                    {x.d(i, j)});
      }
      m[i][j] = it->second;
    }
  }
  return validate_metric(x.labels(), m);
}

MetricSpace universal_discrete(const std::set<Rational>& distances, std::size_t copies) {
  if (distances.empty()) throw std::invalid_argument("universal_discrete needs a nonempty distance set");
  if (copies < 2) throw std::invalid_argument("universal_discrete needs at least two copies");
  std::vector<std::pair<Rational, std::size_t>> points;
  std::vector<std::string> labels;
  for (const auto& r : distances) {
    for (std::size_t a = 0; a < copies; ++a) {
      points.emplace_back(r, a);
      labels.push_back(r.to_string() + "#" + std::to_string(a));
    }
  }
  DistanceMatrix m(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j) m[i][j] = max(points[i].first, points[j].first);
  return validate_metric(std::move(labels), m);
}

}  // namespace isomet
