#include "isomet/verify.hpp"

#include <cstdlib>
#include <string>

namespace isomet {

std::size_t default_worker_count() {
  if (const char* env = std::getenv("ISOMET_WORKERS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<std::size_t>& match_right,
             std::vector<char>& seen) {
  for (std::size_t v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] == static_cast<std::size_t>(-1) || augment(match_right[v], adj, match_right, seen)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& left_adjacency, std::size_t right_size) {
  std::vector<std::size_t> match_right(right_size, static_cast<std::size_t>(-1));
  std::size_t matched = 0;
  for (std::size_t u = 0; u < left_adjacency.size(); ++u) {
    std::vector<char> seen(right_size, 0);
    if (augment(u, left_adjacency, match_right, seen)) ++matched;
  }
  return matched;
}

}  // namespace isomet
