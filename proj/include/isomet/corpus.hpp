#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <random>
#include <vector>

#include "isomet/metric.hpp"
#include "isomet/reductions.hpp"
#include "isomet/tree.hpp"

// Deterministic and seeded corpora for the verification suites.

namespace isomet::corpus {

using Rng = std::mt19937_64;

/// All trees with <= max_nodes nodes, branching min(max_nodes-1, 3) (at
/// least 1), depth max_nodes-1.
std::vector<Tree> trees(std::size_t max_nodes);

/// All labeled graphs on 1..max_vertices vertices.
std::vector<Graph> graphs(std::size_t max_vertices);

/// Shortest-path metric of a connected graph; nullopt when disconnected.
std::optional<MetricSpace> path_metric(const Graph& g);

/// Deterministic mix of metric spaces with at most max_points points: tree
/// images under both radius sequences, graph images, path metrics of
/// connected graphs (mostly not ultrametric) and U_D spaces.
std::vector<MetricSpace> spaces(std::size_t max_points);

/// The ultrametric members of spaces(max_points).
std::vector<MetricSpace> ultrametric_spaces(std::size_t max_points);

Tree random_tree(Rng& rng, std::size_t max_nodes, std::size_t branching, std::size_t depth);

Bijection random_permutation(Rng& rng, std::size_t n);

/// Strictly increasing map on a finite distance set with random positive
/// rational values.
std::map<Rational, Rational> random_monotone_map(Rng& rng, const std::set<Rational>& domain);

/// tree_to_space of a random tree, pushed through a random monotone map.
MetricSpace random_ultrametric(Rng& rng, std::size_t max_points);

}  // namespace isomet::corpus
