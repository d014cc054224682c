#include "isomet/metric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "isomet/error.hpp"

namespace isomet {

Bijection Bijection::identity(std::size_t n) {
  Bijection b;
  b.forward.resize(n);
  std::iota(b.forward.begin(), b.forward.end(), std::size_t{0});
  return b;
}

bool Bijection::is_valid(std::size_t n) const {
  if (forward.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : forward) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Bijection Bijection::inverse() const {
  Bijection inv;
  inv.forward.resize(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) inv.forward[forward[i]] = i;
  return inv;
}

Rational MetricSpace::diameter() const {
  Rational best;
  for (const auto& v : dist_) best = max(best, v);
  return best;
}

DistanceMatrix MetricSpace::matrix() const {
  DistanceMatrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = d(i, j);
  return m;
}

MetricSpace MetricSpace::subspace(std::span<const std::size_t> points) const {
  MetricSpace out;
  out.n_ = points.size();
  out.labels_.reserve(points.size());
  out.dist_.resize(out.n_ * out.n_);
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a] >= n_) throw Error(ErrorKind::PointOutOfRange, "subspace point out of range", {points[a]});
    out.labels_.push_back(labels_[points[a]]);
    for (std::size_t b = 0; b < points.size(); ++b) out.dist_[a * out.n_ + b] = d(points[a], points[b]);
  }
  out.ultrametric_ = ultrametric_;
  return out;
}

MetricSpace MetricSpace::relabeled(const Bijection& pi) const {
  if (!pi.is_valid(n_)) throw std::invalid_argument("relabeling is not a permutation of the points");
  MetricSpace out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    out.labels_[pi(i)] = labels_[i];
    for (std::size_t j = 0; j < n_; ++j) out.dist_[pi(i) * n_ + pi(j)] = d(i, j);
  }
  return out;
}

MetricSpace validate_metric(std::vector<std::string> labels, const DistanceMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, "a metric space needs at least one point");
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("distance matrix is not square");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw std::invalid_argument("label count does not match matrix size");
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero()) {
      throw Error(ErrorKind::NonzeroDiagonal, "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0", {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorKind::SymmetryViolation,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" + std::to_string(j) + "," +
                        std::to_string(i) + ")",
                    {i, j});
      }
      if (matrix[i][j].is_zero()) {
        throw Error(ErrorKind::ZeroOffDiagonal, "distinct points " + std::to_string(i) + "," + std::to_string(j) +
                                                    " at distance 0",
                    {i, j});
      }
      if (!matrix[i][j].is_positive()) {
        throw Error(ErrorKind::NegativeDistance,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + matrix[i][j].to_string(), {i, j},
                    {matrix[i][j]});
      }
    }
  }

  bool ultra = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& ik = matrix[i][k];
        if (ik > matrix[i][j] + matrix[j][k]) {
          throw Error(ErrorKind::TriangleViolation,
                      "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                          std::to_string(j) + ") + d(" + std::to_string(j) + "," + std::to_string(k) + ")",
                      {i, j, k});
        }
        if (ultra && ik > max(matrix[i][j], matrix[j][k])) ultra = false;
      }
    }
  }

  MetricSpace x;
  x.n_ = n;
  x.labels_ = std::move(labels);
  x.dist_.reserve(n * n);
  for (const auto& row : matrix) x.dist_.insert(x.dist_.end(), row.begin(), row.end());
  x.ultrametric_ = ultra;
  return x;
}

std::set<Rational> distance_spectrum(const MetricSpace& x) {
  std::set<Rational> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out.insert(x.d(i, j));
  return out;
}

std::set<Rational> realized_by(const MetricSpace& x, std::size_t i) {
  if (i >= x.size()) throw Error(ErrorKind::PointOutOfRange, "point index out of range", {i});
  std::set<Rational> out;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i) out.insert(x.d(i, j));
  return out;
}

bool is_isometry(const MetricSpace& x, const MetricSpace& y, const Bijection& f) {
  if (x.size() != y.size() || !f.is_valid(x.size())) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x.d(i, j) != y.d(f(i), f(j))) return false;
  return true;
}

namespace {

IsometryResult exhaustive_search(const MetricSpace& x, const MetricSpace& y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (x.d(i, j) != y.d(perm[i], perm[j])) {
          ok = false;
          break;
        }
    if (ok) return {IsometryResult::Status::found, Bijection{perm}};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

class PrunedSearch {
 public:
  PrunedSearch(const MetricSpace& x, const MetricSpace& y) : x_(x), y_(y), n_(x.size()) {
    auto rows = [](const MetricSpace& s) {
      std::vector<std::vector<Rational>> out(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) out[i].push_back(s.d(i, j));
        std::sort(out[i].begin(), out[i].end());
      }
      return out;
    };
    auto rx = rows(x);
    auto ry = rows(y);
    candidates_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (rx[i] == ry[j]) candidates_[i].push_back(j);
    image_.assign(n_, 0);
    used_.assign(n_, false);
  }

  IsometryResult run() {
    for (const auto& c : candidates_)
      if (c.empty()) return {};
    if (extend(0)) return {IsometryResult::Status::found, Bijection{image_}};
    return {};
  }

 private:
  bool extend(std::size_t i) {
    if (i == n_) return true;
    for (std::size_t j : candidates_[i]) {
      if (used_[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (x_.d(i, k) != y_.d(j, image_[k])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[i] = j;
      used_[j] = true;
      if (extend(i + 1)) return true;
      used_[j] = false;
    }
    return false;
  }

  const MetricSpace& x_;
  const MetricSpace& y_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

IsometryResult find_isometry(const MetricSpace& x, const MetricSpace& y, SearchMode mode) {
  if (x.size() != y.size()) return {IsometryResult::Status::size_mismatch, {}};
  if (mode == SearchMode::exhaustive) return exhaustive_search(x, y);
  return PrunedSearch(x, y).run();
}

bool isometric(const MetricSpace& x, const MetricSpace& y, SearchMode mode) {
  return find_isometry(x, y, mode).found();
}

}  // namespace isomet
