#include <sstream>

#include "doctest.h"
#include "isomet/corpus.hpp"
#include "isomet/error.hpp"
#include "isomet/io.hpp"
#include "isomet/ultrametric.hpp"
#include "support/oracles.hpp"

using namespace isomet;

namespace {

template <class T, class Write, class Read>
T round_trip(const T& value, Write write, Read read) {
  std::ostringstream out;
  write(out, value);
  std::istringstream in(out.str());
  return read(in);
}

std::size_t parse_error_line(const std::string& text, const std::function<void(std::istream&)>& read) {
  std::istringstream in(text);
  try {
    read(in);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::ParseError);
    REQUIRE(e.indices().size() == 1);
    return e.indices()[0];
  }
  FAIL("expected ParseError");
  return 0;
}

}  // namespace

TEST_CASE("metric round trip") {
  corpus::Rng rng(2);
  for (const auto& x : corpus::spaces(4)) CHECK(round_trip(x, io::write_metric, io::read_metric) == x);
  for (int i = 0; i < 30; ++i) {
    auto x = corpus::random_ultrametric(rng, 6);
    CHECK(round_trip(x, io::write_metric, io::read_metric) == x);
  }
  std::ostringstream out;
  io::write_metric(out, oracle::space({{0, 1}, {1, 0}}));
  CHECK(out.str() == "# isomet metric v1\n2\n0\n1\n0 1\n1 0\n");
}

TEST_CASE("metric parsing") {
  std::istringstream in("# comment\n2\na b\n0 1/2\n1/2 0\n");
  auto x = io::read_metric(in);
  CHECK(x.labels() == std::vector<std::string>{"a", "b"});
  CHECK(x.d(0, 1) == Rational(1, 2));

  CHECK(parse_error_line("2\na b\n0 1\n1 x\n", [](std::istream& s) { io::read_metric(s); }) == 4);
  CHECK(parse_error_line("2\na b\n0 1\n", [](std::istream& s) { io::read_metric(s); }) > 0);
  CHECK(parse_error_line("two\n", [](std::istream& s) { io::read_metric(s); }) == 1);
  CHECK(parse_error_line("2\na b\n0 1 1\n1 0\n", [](std::istream& s) { io::read_metric(s); }) == 3);
  CHECK(parse_error_line("1\na\n0\n5\n", [](std::istream& s) { io::read_metric(s); }) == 4);

  std::istringstream bad("2\na b\n0 1\n2 0\n");
  try {
    io::read_metric(bad);
    FAIL("expected SymmetryViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SymmetryViolation);
  }
}

TEST_CASE("tree round trip and parsing") {
  for (const auto& t : corpus::trees(5)) CHECK(round_trip(t, io::write_tree, io::read_tree) == t);
  std::istringstream in("\n0\n0,1\n");
  CHECK(io::read_tree(in) == oracle::tree({{}, {0}, {0, 1}}));
  CHECK(parse_error_line("\n0\n0,x\n", [](std::istream& s) { io::read_tree(s); }) == 3);
  std::istringstream missing("\n0,1\n");
  CHECK_THROWS_AS(io::read_tree(missing), Error);
}

TEST_CASE("structure round trip and parsing") {
  for (const auto& x : corpus::ultrametric_spaces(4)) {
    auto s = ball_structure(x).to_structure();
    CHECK(round_trip(s, io::write_structure, io::read_structure) == s);
  }
  RelationalStructure empty_rel(3);
  empty_rel.declare("E", 2);
  empty_rel.declare("U", 1);
  empty_rel.add("U", {2});
  CHECK(round_trip(empty_rel, io::write_structure, io::read_structure) == empty_rel);
  CHECK(parse_error_line("2\nE 2\n0 1\n0 5\n", [](std::istream& s) { io::read_structure(s); }) == 4);
  CHECK(parse_error_line("2\nE 2\n0\n", [](std::istream& s) { io::read_structure(s); }) == 3);
  CHECK(parse_error_line("2\n0 1\n", [](std::istream& s) { io::read_structure(s); }) == 2);
}

TEST_CASE("graph round trip and parsing") {
  for (const auto& g : corpus::graphs(4)) CHECK(round_trip(g, io::write_graph, io::read_graph) == g);
  CHECK(parse_error_line("3\n0 1\n1 1\n", [](std::istream& s) { io::read_graph(s); }) == 3);
  CHECK(parse_error_line("3\n0 9\n", [](std::istream& s) { io::read_graph(s); }) == 2);
}

TEST_CASE("action round trip") {
  GroupAction a;
  a.product = {{0, 1}, {1, 0}};
  a.group_metric = oracle::matrix({{0, 1}, {1, 0}});
  a.space_metric = {{0, Rational(1, 2)}, {Rational(1, 2), 0}};
  a.act = {{0, 1}, {1, 0}};
  CHECK(round_trip(a, io::write_action, io::read_action) == a);
  CHECK(parse_error_line("2\n0 1\n1 0\n2\n0 1\n1 0\n0 1\n1 0\n0 1\n", [](std::istream& s) { io::read_action(s); }) >
        0);
}

TEST_CASE("loading a missing file is a parse error") {
  try {
    io::load_metric("/nonexistent/space.txt");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}
