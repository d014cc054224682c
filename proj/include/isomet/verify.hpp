#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "isomet/error.hpp"

namespace isomet {

template <class T>
using EquivalenceOracle = std::function<bool(const T&, const T&)>;

struct Counterexample {
  std::size_t first = 0;  // corpus indices, first <= second
  std::size_t second = 0;
  bool source_equivalent = false;  // x E y
  bool image_equivalent = false;   // f(x) F f(y)
};

struct ReductionReport {
  std::size_t corpus_size = 0;
  std::size_t pairs_checked = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Worker count from ISOMET_WORKERS, else the hardware concurrency (>= 1).
std::size_t default_worker_count();

namespace detail {

// Pairs (i,j) with i <= j, ordered by i then j.
inline std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i - 1) / 2 + (j - i);
}

}  // namespace detail

/// Checks x E y ⟺ f(x) F f(y) on every unordered pair of the corpus,
/// reflexive pairs included.
///
/// Rows of the pair triangle are shared among `workers` threads. The
/// reported counterexample is always the first one in corpus order, and
/// pairs_checked counts the pairs up to and including it, so the report does
/// not depend on scheduling. An exception from either oracle is rethrown as
/// OracleFailure naming the earliest failing pair.
template <class X, class Y>
ReductionReport verify_reduction(const std::vector<X>& corpus, const std::function<Y(const X&)>& f,
                                 const EquivalenceOracle<X>& source, const EquivalenceOracle<Y>& target,
                                 std::size_t workers = default_worker_count()) {
  const std::size_t n = corpus.size();
  std::vector<Y> images;
  images.reserve(n);
  for (const auto& x : corpus) images.push_back(f(x));

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next_row{0};
  std::atomic<std::size_t> first_bad{none};
  std::mutex mu;
  Counterexample found;
  std::size_t failure_rank = none;
  std::string failure_message;

  auto lower_to = [](std::atomic<std::size_t>& slot, std::size_t v) {
    std::size_t cur = slot.load();
    while (v < cur && !slot.compare_exchange_weak(cur, v)) {
    }
  };

  auto work = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      for (std::size_t j = i; j < n; ++j) {
        const std::size_t rank = detail::pair_rank(n, i, j);
        if (rank >= first_bad.load()) return;
        try {
          const bool e = source(corpus[i], corpus[j]);
          const bool fe = target(images[i], images[j]);
          if (e != fe) {
            std::lock_guard lock(mu);
            if (rank < first_bad.load()) found = {i, j, e, fe};
            lower_to(first_bad, rank);
            break;
          }
        } catch (const std::exception& ex) {
          std::lock_guard lock(mu);
          if (rank < failure_rank) {
            failure_rank = rank;
            failure_message = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + ex.what();
          }
          lower_to(first_bad, rank);
          break;
        }
      }
    }
  };

  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ReductionReport report;
  report.corpus_size = n;
  const std::size_t total = n * (n + 1) / 2;
  const std::size_t bad = first_bad.load();
  if (bad != none && bad == failure_rank) throw Error(ErrorKind::OracleFailure, failure_message);
  if (bad == none) {
    report.pairs_checked = total;
  } else {
    report.pairs_checked = bad + 1;
    report.counterexample = found;
  }
  return report;
}

/// Re-runs both oracles on a reported counterexample; true iff it reproduces.
template <class X, class Y>
bool recheck_counterexample(const Counterexample& c, const std::vector<X>& corpus,
                            const std::function<Y(const X&)>& f, const EquivalenceOracle<X>& source,
                            const EquivalenceOracle<Y>& target) {
  const bool e = source(corpus[c.first], corpus[c.second]);
  const bool fe = target(f(corpus[c.first]), f(corpus[c.second]));
  return e == c.source_equivalent && fe == c.image_equivalent && e != fe;
}

/// Reflexivity, symmetry and transitivity of an oracle over a corpus; returns
/// a description of the first violation.
template <class T>
std::optional<std::string> spot_check_equivalence(const std::vector<T>& corpus, const EquivalenceOracle<T>& eq) {
  const std::size_t n = corpus.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = eq(corpus[i], corpus[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) return "not reflexive at " + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) return "not symmetric at " + std::to_string(i) + "," + std::to_string(j);
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (rel[j][k] && !rel[i][k]) {
          return "not transitive at " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        }
    }
  }
  return std::nullopt;
}

/// Finite E⁺: every entry of xs is E-equivalent to some entry of ys and vice
/// versa.
template <class T>
bool eplus_equal(const std::vector<T>& xs, const std::vector<T>& ys, const EquivalenceOracle<T>& eq) {
  auto covered = [&](const std::vector<T>& a, const std::vector<T>& b) {
    return std::all_of(a.begin(), a.end(), [&](const T& x) {
      return std::any_of(b.begin(), b.end(), [&](const T& y) { return eq(x, y); });
    });
  };
  return covered(xs, ys) && covered(ys, xs);
}

/// Size of a maximum matching in a bipartite graph given as adjacency lists
/// from the left side; augmenting-path search.
std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& left_adjacency, std::size_t right_size);

/// Finite E^ω: a bijection f of indices with xs[n] E ys[f(n)].
template <class T>
bool eomega_equal(const std::vector<T>& xs, const std::vector<T>& ys, const EquivalenceOracle<T>& eq) {
  if (xs.size() != ys.size()) return false;
  std::vector<std::vector<std::size_t>> adj(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (eq(xs[i], ys[j])) adj[i].push_back(j);
  return maximum_matching(adj, ys.size()) == xs.size();
}

/// First representative of every E-class, in order of appearance.
template <class T>
std::vector<T> dedup_by_oracle(const std::vector<T>& xs, const EquivalenceOracle<T>& eq) {
  std::vector<T> out;
  for (const auto& x : xs) {
    if (std::none_of(out.begin(), out.end(), [&](const T& kept) { return eq(kept, x); })) out.push_back(x);
  }
  return out;
}

}  // namespace isomet
