#include <algorithm>

#include "doctest.h"
#include "isomet/corpus.hpp"
#include "isomet/error.hpp"
#include "isomet/reductions.hpp"
#include "isomet/ultrametric.hpp"
#include "support/oracles.hpp"

using namespace isomet;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an isomet::Error");
  return ErrorKind::ParseError;
}

GroupAction c2_swap(Rational group_distance = 1) {
  GroupAction a;
  a.product = {{0, 1}, {1, 0}};
  a.group_metric = {{0, group_distance}, {group_distance, 0}};
  a.space_metric = oracle::matrix({{0, 1}, {1, 0}});
  a.act = {{0, 1}, {1, 0}};
  return a;
}

GroupAction trivial_on(std::size_t points) {
  GroupAction a;
  a.product = {{0}};
  a.group_metric = {{0}};
  a.space_metric.assign(points, std::vector<Rational>(points, Rational(1)));
  for (std::size_t i = 0; i < points; ++i) a.space_metric[i][i] = 0;
  a.act = {oracle::iota(points)};
  return a;
}

}  // namespace

TEST_CASE("radius sequences") {
  auto h = RadiusSequence::harmonic(3);
  CHECK(h.values() == std::vector<Rational>{2, Rational(3, 2), Rational(4, 3)});
  auto g = RadiusSequence::geometric(3);
  CHECK(g.values() == std::vector<Rational>{1, Rational(1, 2), Rational(1, 4)});
  CHECK_THROWS_AS(RadiusSequence({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RadiusSequence({1, 0}), std::invalid_argument);
}

TEST_CASE("tree_to_space examples") {
  auto single = tree_to_space(oracle::tree({{}}), RadiusSequence({5}));
  CHECK(single.size() == 1);

  auto cherry = tree_to_space(oracle::tree({{}, {0}, {1}}), RadiusSequence({2, 1}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(cherry.d(i, j) == Rational(2));

  auto chain = tree_to_space(oracle::tree({{}, {0}, {0, 0}}), RadiusSequence({2, 1}));
  CHECK(chain.d(0, 1) == Rational(2));
  CHECK(chain.d(0, 2) == Rational(2));
  CHECK(chain.d(1, 2) == Rational(1));
  CHECK(chain.is_ultrametric());
  CHECK(chain.labels() == std::vector<std::string>{"()", "(0)", "(0,0)"});

  CHECK(kind_of([] { tree_to_space(oracle::tree({{}, {0}, {0, 0}}), RadiusSequence({2})); }) ==
        ErrorKind::SequenceTooShort);
}

TEST_CASE("tree images satisfy the nesting remarks") {
  for (const auto& t : corpus::trees(5)) {
    for (const auto& r : {RadiusSequence::harmonic(t.depth() + 1), RadiusSequence::geometric(t.depth() + 1)}) {
      auto x = tree_to_space(t, r);
      CHECK(x.size() == t.size());
      CHECK(oracle::is_ultrametric(x.matrix()));
      for (const auto& d : distance_spectrum(x)) CHECK(std::count(r.values().begin(), r.values().end(), d) == 1);
      for (std::size_t u = 0; u < t.size(); ++u) {
        const Rational ru = r[t.length(u)];
        CHECK((realized_by(x, u).count(ru) == 1) == !t.is_terminal(u));
        for (std::size_t v = 0; v < t.size(); ++v) {
          if (u == v) continue;
          const bool strict = is_prefix(t.node(u), t.node(v));
          CHECK(strict == (x.d(u, v) == ru));
        }
      }
    }
  }
}

TEST_CASE("repair_isometry_to_tree_iso examples") {
  auto edge = oracle::tree({{}, {0}});
  RadiusSequence r({2, 1});
  Bijection swap{{1, 0}};
  REQUIRE(is_isometry(tree_to_space(edge, r), tree_to_space(edge, r), swap));
  auto pairs = switching_pairs(edge, edge, swap);
  CHECK(pairs == std::vector<SwitchingPair>{{0, 1}});
  CHECK(repair_isometry_to_tree_iso(edge, edge, r, swap) == Bijection::identity(2));

  auto t = oracle::tree({{}, {0}, {1}, {1, 0}});
  auto s = oracle::tree({{}, {0}, {0, 0}, {1}});
  auto iso = oracle::tree_iso(t, s);
  REQUIRE(iso.has_value());
  Bijection phi{*iso};
  CHECK(switching_pairs(t, s, phi).empty());
  CHECK(repair_isometry_to_tree_iso(t, s, RadiusSequence::harmonic(3), phi) == phi);

  auto chain = oracle::tree({{}, {0}, {0, 0}});
  auto cherry = oracle::tree({{}, {0}, {1}});
  CHECK(kind_of([&] { repair_isometry_to_tree_iso(chain, cherry, RadiusSequence({2, 1}), Bijection::identity(3)); }) ==
        ErrorKind::NotAnIsometry);
}

TEST_CASE("repair turns every isometry of small tree images into a tree isomorphism") {
  auto trees = enumerate_trees(5, 3, 3);
  std::size_t isometries = 0, repaired_with_pairs = 0;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i; j < trees.size(); ++j) {
      const auto& t = trees[i];
      const auto& s = trees[j];
      if (t.size() != s.size()) continue;
      auto r = RadiusSequence::geometric(std::max(t.depth(), s.depth()) + 1);
      auto xt = tree_to_space(t, r);
      auto xs = tree_to_space(s, r);
      auto p = oracle::iota(t.size());
      do {
        if (!oracle::certifies_isometry(xt, xs, p)) continue;
        ++isometries;
        Bijection phi{p};
        repaired_with_pairs += !switching_pairs(t, s, phi).empty();
        auto fixed = repair_isometry_to_tree_iso(t, s, r, phi);
        CHECK(oracle::certifies_tree_iso(t, s, fixed.forward));
      } while (std::next_permutation(p.begin(), p.end()));
    }
  CHECK(isometries > 0);
  CHECK(repaired_with_pairs > 0);
}

TEST_CASE("graph_to_space examples") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(graph_to_space(k2).d(0, 1) == Rational(1));
  CHECK(graph_to_space(Graph(2)).d(0, 1) == Rational(2));

  Graph p3(3), k3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  CHECK_FALSE(oracle::isometric(graph_to_space(p3), graph_to_space(k3)));
  CHECK_FALSE(find_isometry(graph_to_space(p3), graph_to_space(k3), SearchMode::exhaustive).found());
  CHECK_THROWS_AS(k3.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(k3.add_edge(1, 3), std::invalid_argument);
  CHECK(enumerate_graphs(4).size() == 64);
}

TEST_CASE("graph isomorphism equals isometry of images on four vertices") {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& g : enumerate_graphs(n)) graphs.push_back(g);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto x = graph_to_space(graphs[i]);
    CHECK(oracle::is_metric(x.matrix()));
    for (std::size_t j = i; j < graphs.size(); ++j)
      CHECK(graph_isomorphism(graphs[i], graphs[j]).has_value() ==
            oracle::isometric(x, graph_to_space(graphs[j])));
  }
}

TEST_CASE("discrete_to_structure examples") {
  auto one = discrete_to_structure(oracle::space({{0}}), {1});
  CHECK(one.universe() == 1);
  CHECK(one.relations().at("P_1").tuples == std::set<Tuple>{{0, 0}});

  auto two = discrete_to_structure(oracle::space({{0, 1}, {1, 0}}), {1, 2});
  CHECK(two.relations().at("P_1").tuples == std::set<Tuple>{{0, 0}, {1, 1}});
  CHECK(two.relations().at("P_2").tuples.size() == 4);

  auto x = oracle::space({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  CHECK(kind_of([&] { discrete_to_structure(x, {2}); }) == ErrorKind::InsufficientThresholds);
  CHECK(kind_of([&] { discrete_to_structure(x, {3}); }) == ErrorKind::InsufficientThresholds);
  CHECK(discrete_to_structure(x, {Rational(3, 2), 3}).relations().count("P_3/2") == 1);
  CHECK(separating_thresholds(x) == std::vector<Rational>{1, 2, 3});
}

TEST_CASE("threshold structures and ball structures decide isometry") {
  auto spaces = corpus::spaces(4);
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i; j < spaces.size(); ++j) {
      const auto& x = spaces[i];
      const auto& y = spaces[j];
      const bool truth = oracle::isometric(x, y);
      auto q = separating_thresholds(x, y);
      CHECK(oracle::structure_iso(discrete_to_structure(x, q), discrete_to_structure(y, q)) == truth);
      if (x.is_ultrametric() && y.is_ultrametric()) {
        CHECK(oracle::structure_iso(ball_structure(x, q).to_structure(), ball_structure(y, q).to_structure()) ==
              truth);
      }
    }
}

TEST_CASE("sum_space examples") {
  auto a = oracle::space({{0, 1}, {1, 0}});
  auto b = oracle::space({{0}});
  auto c = oracle::space({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  auto s = sum_space({a}, 3);
  CHECK(oracle::isometric(s, a));
  auto ab = sum_space({a, b}, 2);
  CHECK(ab.size() == 3);
  CHECK(ab.labels() == std::vector<std::string>{"0:0", "0:1", "1:0"});
  CHECK(ab.is_ultrametric());
  CHECK(ball_partition(ab, 2) == std::vector<PointSet>{{0, 1}, {2}});
  CHECK(oracle::isometric(ab, sum_space({b, a}, 2)));
  CHECK_FALSE(oracle::isometric(sum_space({a, a}, 2), sum_space({a, c}, 2)));

  try {
    sum_space({b, a}, 1);
    FAIL("expected RadiusTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadiusTooSmall);
    CHECK(e.indices() == std::vector<std::size_t>{1});
  }
  auto path = oracle::space({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(kind_of([&] { sum_space({path}, 5); }) == ErrorKind::NotUltrametric);
}

TEST_CASE("gromov_invariant examples") {
  auto two = oracle::space({{0, 1}, {1, 0}});
  CHECK(gromov_invariant(two, 0) == GromovSet{{0}});
  CHECK(gromov_invariant(oracle::space({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}), 0) == GromovSet{{0}});
  CHECK(gromov_invariant(two, 1) == GromovSet{{0, 0, 0, 0}, {0, 1, 1, 0}});
  CHECK(gromov_full(two).size() == 2);
}

TEST_CASE("gromov sets are relabeling invariant, consistent and complete") {
  corpus::Rng rng(41);
  auto spaces = corpus::spaces(4);
  for (const auto& x : spaces) {
    CHECK(gromov_full(x) == gromov_full(x.relabeled(corpus::random_permutation(rng, x.size()))));
    for (std::size_t n = 0; n + 1 < x.size(); ++n) {
      auto lower = gromov_invariant(x, n);
      std::set<GromovMatrix> restricted;
      for (const auto& m : gromov_invariant(x, n + 1)) {
        GromovMatrix sub;
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j <= n; ++j) sub.push_back(m[i * (n + 2) + j]);
        restricted.insert(sub);
      }
      CHECK(restricted == lower);
    }
  }
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i; j < spaces.size(); ++j)
      CHECK((gromov_full(spaces[i]) == gromov_full(spaces[j])) == oracle::isometric(spaces[i], spaces[j]));
}

TEST_CASE("adjust_group_metric examples") {
  auto adjusted = adjust_group_metric(c2_swap());
  CHECK(adjusted.group_metric[0][0] == Rational(0));
  CHECK(adjusted.group_metric[0][1] == Rational(1));
  CHECK_NOTHROW(check_orbit_encoding_preconditions(adjusted));
  CHECK(orbits(adjusted) == std::vector<std::size_t>{0, 0});

  auto big = c2_swap(4);
  big.space_metric = oracle::matrix({{0, 6}, {6, 0}});
  auto scaled = adjust_group_metric(big);
  CHECK(scaled.space_metric[0][1] == Rational(1));
  CHECK(scaled.group_metric[0][1] == Rational(1));

  auto trivial = adjust_group_metric(trivial_on(3));
  CHECK(trivial.group_metric == DistanceMatrix{{0}});
  CHECK(orbits(trivial) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("group action errors") {
  GroupAction z3;
  z3.product = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  z3.group_metric = {{0, 1, 1}, {1, 0, Rational(1, 2)}, {1, Rational(1, 2), 0}};
  z3.space_metric = oracle::matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  z3.act = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(kind_of([&] { adjust_group_metric(z3); }) == ErrorKind::NotLeftInvariant);

  auto broken = c2_swap();
  broken.act = {{0, 1}, {0, 0}};
  CHECK(kind_of([&] { adjust_group_metric(broken); }) == ErrorKind::NotAnAction);

  auto too_close = c2_swap(Rational(1, 4));
  CHECK_NOTHROW(check_group_action(too_close));
  CHECK(kind_of([&] { orbit_encode(too_close, 0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("orbit_encode examples") {
  auto trivial = adjust_group_metric(trivial_on(2));
  auto x0 = orbit_encode(trivial, 0);
  auto x1 = orbit_encode(trivial, 1);
  CHECK(x0.size() == 3);
  CHECK(x0.labels() == std::vector<std::string>{"g0", "x*0", "x*1"});
  CHECK(x0.d(1, 0) == Rational(2));
  CHECK(x0.d(2, 0) == Rational(7, 2));
  CHECK(x1.d(1, 0) == Rational(5, 2));
  CHECK_FALSE(oracle::isometric(x0, x1));

  auto c2 = adjust_group_metric(c2_swap());
  auto y0 = orbit_encode(c2, 0);
  auto y1 = orbit_encode(c2, 1);
  CHECK(is_isometry(y0, y1, Bijection{{1, 0, 2, 3}}));
  CHECK(oracle::certifies_isometry(y0, y1, {1, 0, 2, 3}));
  for (std::size_t z = 0; z < 2; ++z) CHECK(orbit_encode(c2, z).d(2, 3) == Rational(3));
}

TEST_CASE("isometries of orbit encodings fix the star points") {
  GroupAction z3;
  z3.product = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  z3.group_metric = oracle::matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  z3.space_metric = oracle::matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  z3.act = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto a = adjust_group_metric(z3);
  for (std::size_t z1 = 0; z1 < 3; ++z1)
    for (std::size_t z2 = 0; z2 < 3; ++z2) {
      auto x = orbit_encode(a, z1);
      auto y = orbit_encode(a, z2);
      auto p = oracle::iota(x.size());
      std::size_t found = 0;
      do {
        if (!oracle::certifies_isometry(x, y, p)) continue;
        ++found;
        for (std::size_t n = 3; n < 6; ++n) CHECK(p[n] == n);
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(found > 0);
    }
}
