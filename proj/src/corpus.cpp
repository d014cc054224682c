#include "isomet/corpus.hpp"

#include <algorithm>
#include <queue>

#include "isomet/ultrametric.hpp"

namespace isomet::corpus {

std::vector<Tree> trees(std::size_t max_nodes) {
  const std::size_t branching = std::max<std::size_t>(1, std::min<std::size_t>(max_nodes - 1, 3));
  return enumerate_trees(max_nodes, branching, max_nodes - 1);
}

std::vector<Graph> graphs(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<MetricSpace> path_metric(const Graph& g) {
  const std::size_t n = g.size();
  DistanceMatrix m(n, std::vector<Rational>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, n);
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] == n && g.adjacent(u, v)) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == n) return std::nullopt;
      m[s][v] = Rational(static_cast<std::int64_t>(dist[v]));
    }
  }
  return validate_metric({}, m);
}

std::vector<MetricSpace> spaces(std::size_t max_points) {
  std::vector<MetricSpace> out;
  if (max_points == 0) return out;
  for (const auto& t : enumerate_trees(max_points, 2, max_points - 1)) {
    out.push_back(tree_to_space(t, RadiusSequence::harmonic(t.depth() + 1)));
    out.push_back(tree_to_space(t, RadiusSequence::geometric(t.depth() + 1)));
  }
  for (const auto& g : graphs(std::min<std::size_t>(max_points, 4))) {
    out.push_back(graph_to_space(g));
    if (auto pm = path_metric(g)) out.push_back(*pm);
  }
  const std::vector<std::set<Rational>> distance_sets = {{1}, {1, 2}, {Rational(1, 2), 3}, {1, 2, 3}};
  for (const auto& d : distance_sets) {
    for (std::size_t k = 2; k * d.size() <= max_points; ++k) out.push_back(universal_discrete(d, k));
  }
  return out;
}

std::vector<MetricSpace> ultrametric_spaces(std::size_t max_points) {
  auto all = spaces(max_points);
  std::vector<MetricSpace> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const MetricSpace& x) { return x.is_ultrametric(); });
  return out;
}

Tree random_tree(Rng& rng, std::size_t max_nodes, std::size_t branching, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
  const std::size_t target = size_dist(rng);
  std::vector<Sequence> nodes{Sequence{}};
  while (nodes.size() < target) {
    std::vector<Sequence> frontier;
    for (const auto& u : nodes) {
      if (u.size() >= depth) continue;
      for (std::size_t s = 0; s < branching; ++s) {
        Sequence c = u;
        c.push_back(s);
        if (std::find(nodes.begin(), nodes.end(), c) == nodes.end()) frontier.push_back(std::move(c));
      }
    }
    if (frontier.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    nodes.push_back(frontier[pick(rng)]);
  }
  return validate_tree(std::move(nodes));
}

Bijection random_permutation(Rng& rng, std::size_t n) {
  Bijection b = Bijection::identity(n);
  std::shuffle(b.forward.begin(), b.forward.end(), rng);
  return b;
}

std::map<Rational, Rational> random_monotone_map(Rng& rng, const std::set<Rational>& domain) {
  std::uniform_int_distribution<std::int64_t> num(1, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::map<Rational, Rational> rho;
  Rational acc;
  for (const auto& r : domain) {
    acc += Rational(num(rng), den(rng));
    rho[r] = acc;
  }
  return rho;
}

MetricSpace random_ultrametric(Rng& rng, std::size_t max_points) {
  Tree t = random_tree(rng, max_points, 3, max_points);
  MetricSpace x = tree_to_space(t, RadiusSequence::harmonic(t.depth() + 1));
  return transfer(x, random_monotone_map(rng, distance_spectrum(x)));
}

}  // namespace isomet::corpus
