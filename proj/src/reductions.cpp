#include "isomet/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "isomet/error.hpp"

namespace isomet {

RadiusSequence::RadiusSequence(std::vector<Rational> radii) : radii_(std::move(radii)) {
  for (std::size_t b = 0; b < radii_.size(); ++b) {
    if (!radii_[b].is_positive()) throw std::invalid_argument("radius r_" + std::to_string(b) + " is not positive");
    if (b > 0 && !(radii_[b] < radii_[b - 1])) {
      throw std::invalid_argument("radii not strictly decreasing at index " + std::to_string(b));
    }
  }
}

RadiusSequence RadiusSequence::harmonic(std::size_t length) {
  std::vector<Rational> r;
  for (std::size_t b = 0; b < length; ++b) r.push_back(Rational(1) + Rational(1, static_cast<std::int64_t>(b + 1)));
  return RadiusSequence(std::move(r));
}

RadiusSequence RadiusSequence::geometric(std::size_t length) {
  std::vector<Rational> r;
  Rational v(1);
  for (std::size_t b = 0; b < length; ++b, v /= 2) r.push_back(v);
  return RadiusSequence(std::move(r));
}

MetricSpace tree_to_space(const Tree& t, const RadiusSequence& r) {
  if (r.size() < t.depth()) {
    throw Error(ErrorKind::SequenceTooShort, "tree of depth " + std::to_string(t.depth()) + " needs " +
                                                 std::to_string(t.depth()) + " radii, got " +
                                                 std::to_string(r.size()));
  }
  const std::size_t n = t.size();
  DistanceMatrix m(n, std::vector<Rational>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(sequence_to_string(t.node(i)));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = r[meet(t.node(i), t.node(j)).size()];
  }
  return validate_metric(std::move(labels), m);
}

std::vector<SwitchingPair> switching_pairs(const Tree& t, const Tree& s, const Bijection& phi) {
  std::vector<SwitchingPair> out;
  for (std::size_t v1 = 0; v1 < t.size(); ++v1) {
    auto v0 = t.parent(v1);
    if (!t.is_terminal(v1) || !v0) continue;
    const std::size_t a = phi(*v0);
    const std::size_t b = phi(v1);
    if (!s.is_terminal(a) || s.parent(a) != b) continue;
    if (t.length(*v0) != s.length(b) || t.length(v1) != s.length(a)) continue;
    out.push_back({*v0, v1});
  }
  return out;
}

Bijection repair_isometry_to_tree_iso(const Tree& t, const Tree& s, const RadiusSequence& r, const Bijection& phi) {
  if (!is_isometry(tree_to_space(t, r), tree_to_space(s, r), phi)) {
    throw Error(ErrorKind::NotAnIsometry, "map is not an isometry between the tree spaces");
  }
  Bijection repaired = phi;
  for (const auto& p : switching_pairs(t, s, phi)) {
    repaired.forward[p.predecessor] = phi(p.terminal);
    repaired.forward[p.terminal] = phi(p.predecessor);
  }
  if (!is_tree_isomorphism(t, s, repaired)) {
    throw Error(ErrorKind::RepairFailed, "repaired map is not a tree isomorphism");
  }
  return repaired;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("loops are not allowed in a simple graph");
  edges_.emplace(std::min(a, b), std::max(a, b));
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::optional<Bijection> graph_isomorphism(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edges().size() != h.edges().size()) return std::nullopt;
  Bijection f = Bijection::identity(g.size());
  do {
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      if (!h.adjacent(f(a), f(b))) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  } while (std::next_permutation(f.forward.begin(), f.forward.end()));
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < vertices; ++a)
    for (std::size_t b = a + 1; b < vertices; ++b) slots.emplace_back(a, b);
  if (slots.size() >= 63) throw std::invalid_argument("too many vertices to enumerate");
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(vertices);
    for (std::size_t e = 0; e < slots.size(); ++e)
      if (mask >> e & 1U) g.add_edge(slots[e].first, slots[e].second);
    out.push_back(std::move(g));
  }
  return out;
}

MetricSpace graph_to_space(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorKind::EmptySpace, "graph has no vertices");
  DistanceMatrix m(g.size(), std::vector<Rational>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (a != b) m[a][b] = g.adjacent(a, b) ? 1 : 2;
  return validate_metric({}, m);
}

std::vector<Rational> separating_thresholds(const MetricSpace& x, const MetricSpace& y) {
  std::set<Rational> q = distance_spectrum(x);
  q.merge(distance_spectrum(y));
  Rational top = max(x.diameter(), y.diameter());
  q.insert(top + 1);
  return {q.begin(), q.end()};
}

std::vector<Rational> separating_thresholds(const MetricSpace& x) {
  return separating_thresholds(x, x);
}

RelationalStructure discrete_to_structure(const MetricSpace& x, const std::vector<Rational>& thresholds) {
  std::set<Rational> q(thresholds.begin(), thresholds.end());
  for (const auto& v : q)
    if (!v.is_positive()) throw Error(ErrorKind::InsufficientThresholds, "thresholds must be positive", {}, {v});

  const auto spectrum = distance_spectrum(x);
  std::optional<Rational> prev;
  for (const auto& b : spectrum) {
    if (prev) {
      auto it = q.upper_bound(*prev);
      if (it == q.end() || *it > b) {
        throw Error(ErrorKind::InsufficientThresholds,
                    "no threshold separates " + prev->to_string() + " from " + b.to_string(), {}, {*prev, b});
      }
    }
    prev = b;
  }
  if (prev && (q.empty() || !(*prev < *q.rbegin()))) {
    throw Error(ErrorKind::InsufficientThresholds, "no threshold exceeds " + prev->to_string(), {}, {*prev});
  }

  RelationalStructure s(x.size());
  for (const auto& v : q) {
    const std::string name = "P_" + v.to_string();
    s.declare(name, 2);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b)
        if (x.d(a, b) < v) s.add(name, {a, b});
  }
  return s;
}

MetricSpace sum_space(const std::vector<MetricSpace>& parts, const Rational& r) {
  if (parts.empty()) throw std::invalid_argument("sum_space needs at least one part");
  std::size_t total = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!parts[p].is_ultrametric()) {
      throw Error(ErrorKind::NotUltrametric, "part " + std::to_string(p) + " is not ultrametric", {p});
    }
    if (!(parts[p].diameter() < r)) {
      throw Error(ErrorKind::RadiusTooSmall,
                  "r = " + r.to_string() + " does not exceed diameter " + parts[p].diameter().to_string() +
                      " of part " + std::to_string(p),
                  {p}, {parts[p].diameter()});
    }
    total += parts[p].size();
  }
  DistanceMatrix m(total, std::vector<Rational>(total, r));
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    for (std::size_t i = 0; i < part.size(); ++i) {
      labels.push_back(std::to_string(p) + ":" + part.labels()[i]);
      for (std::size_t j = 0; j < part.size(); ++j) m[offset + i][offset + j] = part.d(i, j);
    }
    offset += part.size();
  }
  return validate_metric(std::move(labels), m);
}

GromovSet gromov_invariant(const MetricSpace& x, std::size_t n) {
  const std::size_t width = n + 1;
  GromovSet out;
  std::vector<std::size_t> tuple(width, 0);
  GromovMatrix m(width * width);
  while (true) {
    for (std::size_t i = 0; i < width; ++i)
      for (std::size_t j = 0; j < width; ++j) m[i * width + j] = x.d(tuple[i], tuple[j]);
    out.insert(m);
    // odometer over X^{n+1}
    std::size_t pos = width;
    while (pos > 0 && ++tuple[pos - 1] == x.size()) tuple[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<GromovSet> gromov_full(const MetricSpace& x) {
  std::vector<GromovSet> out;
  for (std::size_t n = 0; n < x.size(); ++n) out.push_back(gromov_invariant(x, n));
  return out;
}

std::size_t GroupAction::identity() const {
  for (std::size_t e = 0; e < group_size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < group_size() && ok; ++g) ok = product[e][g] == g && product[g][e] == g;
    if (ok) return e;
  }
  throw Error(ErrorKind::NotAnAction, "group table has no identity element");
}

std::size_t GroupAction::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t h = 0; h < group_size(); ++h)
    if (product[g][h] == e && product[h][g] == e) return h;
  throw Error(ErrorKind::NotAnAction, "element " + std::to_string(g) + " has no inverse", {g});
}

namespace {

void check_shapes(const GroupAction& a) {
  const std::size_t m = a.group_size();
  const std::size_t k = a.space_size();
  if (m == 0) throw Error(ErrorKind::NotAnAction, "group is empty");
  if (k == 0) throw Error(ErrorKind::EmptySpace, "acted-on space is empty");
  auto table_ok = [](const auto& table, std::size_t rows, std::size_t cols, std::size_t bound) {
    if (table.size() != rows) return false;
    for (const auto& row : table) {
      if (row.size() != cols) return false;
      for (std::size_t v : row)
        if (v >= bound) return false;
    }
    return true;
  };
  if (!table_ok(a.product, m, m, m)) throw Error(ErrorKind::NotAnAction, "malformed group table");
  if (!table_ok(a.act, m, k, k)) throw Error(ErrorKind::NotAnAction, "malformed action table");
  if (a.group_metric.size() != m) throw std::invalid_argument("group metric has wrong size");
}

}  // namespace

void check_group_action(const GroupAction& a) {
  check_shapes(a);
  const std::size_t m = a.group_size();
  const std::size_t k = a.space_size();
  const std::size_t e = a.identity();
  for (std::size_t g = 0; g < m; ++g) (void)a.inverse(g);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t l = 0; l < m; ++l)
        if (a.product[a.product[g][h]][l] != a.product[g][a.product[h][l]]) {
          throw Error(ErrorKind::NotAnAction, "group table is not associative", {g, h, l});
        }
  for (std::size_t y = 0; y < k; ++y)
    if (a.act[e][y] != y) throw Error(ErrorKind::NotAnAction, "identity moves point " + std::to_string(y), {e, y});
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t y = 0; y < k; ++y)
        if (a.act[a.product[g][h]][y] != a.act[g][a.act[h][y]]) {
          throw Error(ErrorKind::NotAnAction, "(gh).y != g.(h.y)", {g, h, y});
        }

  (void)validate_metric({}, a.group_metric);
  (void)validate_metric({}, a.space_metric);
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t g2 = 0; g2 < m; ++g2)
        if (a.group_metric[a.product[h][g]][a.product[h][g2]] != a.group_metric[g][g2]) {
          throw Error(ErrorKind::NotLeftInvariant, "d_G(hg,hg') != d_G(g,g')", {h, g, g2});
        }
}

void check_orbit_encoding_preconditions(const GroupAction& a) {
  const std::size_t m = a.group_size();
  const std::size_t k = a.space_size();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      if (a.group_metric[g][h] > 1) throw Error(ErrorKind::PreconditionViolated, "d_G exceeds 1", {g, h});
  for (std::size_t y = 0; y < k; ++y)
    for (std::size_t y2 = 0; y2 < k; ++y2)
      if (a.space_metric[y][y2] > 1) throw Error(ErrorKind::PreconditionViolated, "d_Y exceeds 1", {y, y2});
  const Rational half(1, 2);
  for (std::size_t g = 0; g < m; ++g) {
    const std::size_t gi = a.inverse(g);
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t hi = a.inverse(h);
      for (std::size_t y = 0; y < k; ++y) {
        if (a.group_metric[g][h] < half * a.space_metric[a.act[gi][y]][a.act[hi][y]]) {
          throw Error(ErrorKind::PreconditionViolated,
                      "d_G(g,h) < ½ d_Y(g⁻¹.y, h⁻¹.y); run adjust_group_metric first", {g, h, y});
        }
      }
    }
  }
}

GroupAction adjust_group_metric(const GroupAction& candidate) {
  check_group_action(candidate);
  GroupAction out = candidate;
  auto rescale = [](DistanceMatrix& d) {
    Rational diam;
    for (const auto& row : d)
      for (const auto& v : row) diam = max(diam, v);
    const Rational factor = max(Rational(1), diam);
    for (auto& row : d)
      for (auto& v : row) v /= factor;
  };
  rescale(out.group_metric);
  rescale(out.space_metric);

  const std::size_t m = out.group_size();
  const Rational half(1, 2);
  DistanceMatrix adjusted(m, std::vector<Rational>(m));
  for (std::size_t g = 0; g < m; ++g) {
    const std::size_t gi = out.inverse(g);
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t hi = out.inverse(h);
      Rational sup;
      for (std::size_t y = 0; y < out.space_size(); ++y) sup = max(sup, out.space_metric[out.act[gi][y]][out.act[hi][y]]);
      adjusted[g][h] = half * out.group_metric[g][h] + half * sup;
    }
  }
  out.group_metric = std::move(adjusted);
  return out;
}

std::vector<std::size_t> orbits(const GroupAction& a) {
  const std::size_t k = a.space_size();
  std::vector<std::size_t> label(k, k);
  for (std::size_t y = 0; y < k; ++y) {
    if (label[y] != k) continue;
    for (std::size_t g = 0; g < a.group_size(); ++g) label[a.act[g][y]] = y;
  }
  return label;
}

MetricSpace orbit_encode(const GroupAction& a, std::size_t z) {
  check_group_action(a);
  check_orbit_encoding_preconditions(a);
  const std::size_t m = a.group_size();
  const std::size_t k = a.space_size();
  if (z >= k) throw Error(ErrorKind::PointOutOfRange, "z is not a point of Y", {z});

  const std::size_t n = m + k;
  DistanceMatrix d(n, std::vector<Rational>(n));
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < m; ++g) labels.push_back("g" + std::to_string(g));
  for (std::size_t s = 0; s < k; ++s) labels.push_back("x*" + std::to_string(s));

  const Rational half(1, 2);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) d[g][h] = a.group_metric[g][h];
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (s != t) d[m + s][m + t] = Rational(static_cast<std::int64_t>(std::max(s, t) + 2));
    }
    for (std::size_t g = 0; g < m; ++g) {
      const Rational v = Rational(static_cast<std::int64_t>(s + 2)) + half * a.space_metric[s][a.act[a.inverse(g)][z]];
      d[m + s][g] = v;
      d[g][m + s] = v;
    }
  }
  return validate_metric(std::move(labels), d);
}

}  // namespace isomet
