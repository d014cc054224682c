#include "isomet/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "isomet/error.hpp"

namespace isomet::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what, {line});
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is not a comment. Blank lines are returned only when
  // keep_blank is set.
  bool next(std::string& line, bool keep_blank = false) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      if (!keep_blank && line.find_first_not_of(" \t") == std::string::npos) continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> tokens(const char* what) {
    std::string line;
    if (!next(line)) fail(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t to_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    fail(line, "integer out of range: '" + tok + "'");
  }
}

Rational to_rational(const std::string& tok, std::size_t line) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception& e) {
    fail(line, e.what());
  }
}

std::size_t read_count(LineReader& r, const char* what) {
  auto toks = r.tokens(what);
  if (toks.size() != 1) fail(r.line_no(), std::string("expected a single ") + what);
  return to_index(toks[0], r.line_no());
}

DistanceMatrix read_matrix(LineReader& r, std::size_t n, const char* what) {
  DistanceMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    auto toks = r.tokens(what);
    if (toks.size() != n) {
      fail(r.line_no(), std::string(what) + " row has " + std::to_string(toks.size()) + " entries, expected " +
                            std::to_string(n));
    }
    std::vector<Rational> row;
    for (const auto& t : toks) row.push_back(to_rational(t, r.line_no()));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<std::size_t>> read_table(LineReader& r, std::size_t rows, std::size_t cols, const char* what) {
  std::vector<std::vector<std::size_t>> t;
  for (std::size_t i = 0; i < rows; ++i) {
    auto toks = r.tokens(what);
    if (toks.size() != cols) fail(r.line_no(), std::string(what) + " row has the wrong number of entries");
    std::vector<std::size_t> row;
    for (const auto& tok : toks) row.push_back(to_index(tok, r.line_no()));
    t.push_back(std::move(row));
  }
  return t;
}

void write_matrix(std::ostream& out, const DistanceMatrix& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<std::vector<std::size_t>>& t) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

void expect_end(LineReader& r) {
  std::string line;
  if (r.next(line)) fail(r.line_no(), "trailing content '" + line + "'");
}

template <class T, class F>
T load(const std::filesystem::path& path, F read) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string(), {0});
  try {
    return read(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what(), e.indices());
  }
}

}  // namespace

MetricSpace read_metric(std::istream& in) {
  LineReader r(in);
  const std::size_t n = read_count(r, "point count");
  std::vector<std::string> labels;
  while (labels.size() < n) {
    for (auto& t : r.tokens("labels")) labels.push_back(std::move(t));
  }
  if (labels.size() != n) fail(r.line_no(), "too many labels");
  DistanceMatrix m = read_matrix(r, n, "distance");
  expect_end(r);
  return validate_metric(std::move(labels), m);
}

void write_metric(std::ostream& out, const MetricSpace& x) {
  out << "# isomet metric " << kSchemaVersion << '\n' << x.size() << '\n';
  for (const auto& l : x.labels()) out << l << '\n';
  write_matrix(out, x.matrix());
}

Tree read_tree(std::istream& in) {
  LineReader r(in);
  std::vector<Sequence> nodes;
  std::string line;
  while (r.next(line, true)) {
    Sequence s;
    std::string cleaned;
    for (char c : line)
      if (c != ' ' && c != '\t') cleaned += c;
    if (!cleaned.empty()) {
      std::istringstream ss(cleaned);
      for (std::string tok; std::getline(ss, tok, ',');) s.push_back(to_index(tok, r.line_no()));
      if (cleaned.back() == ',') fail(r.line_no(), "trailing comma");
    }
    nodes.push_back(std::move(s));
  }
  return validate_tree(std::move(nodes));
}

void write_tree(std::ostream& out, const Tree& t) {
  out << "# isomet tree " << kSchemaVersion << '\n';
  for (const auto& node : t.nodes()) {
    for (std::size_t i = 0; i < node.size(); ++i) out << (i ? "," : "") << node[i];
    out << '\n';
  }
}

RelationalStructure read_structure(std::istream& in) {
  LineReader r(in);
  RelationalStructure s(read_count(r, "universe size"));
  std::string current;
  std::string line;
  while (r.next(line)) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string tok; ss >> tok;) toks.push_back(tok);
    const char lead = toks[0][0];
    if (lead < '0' || lead > '9') {
      if (toks.size() != 2) fail(r.line_no(), "relation header must be 'name arity'");
      current = toks[0];
      try {
        s.declare(current, to_index(toks[1], r.line_no()));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(r.line_no(), e.what());
      }
      continue;
    }
    if (current.empty()) fail(r.line_no(), "tuple before any relation header");
    Tuple t;
    for (const auto& tok : toks) t.push_back(to_index(tok, r.line_no()));
    try {
      if (t.size() != s.relations().at(current).arity) fail(r.line_no(), "tuple arity does not match relation");
      s.add(current, std::move(t));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      fail(r.line_no(), e.what());
    }
  }
  return s;
}

void write_structure(std::ostream& out, const RelationalStructure& s) {
  out << "# isomet structure " << kSchemaVersion << '\n' << s.universe() << '\n';
  for (const auto& [name, rel] : s.relations()) {
    out << name << ' ' << rel.arity << '\n';
    for (const auto& t : rel.tuples) {
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
      out << '\n';
    }
  }
}

Graph read_graph(std::istream& in) {
  LineReader r(in);
  Graph g(read_count(r, "vertex count"));
  std::string line;
  while (r.next(line)) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string tok; ss >> tok;) toks.push_back(tok);
    if (toks.size() != 2) fail(r.line_no(), "edge line must be 'i j'");
    try {
      g.add_edge(to_index(toks[0], r.line_no()), to_index(toks[1], r.line_no()));
    } catch (const std::invalid_argument& e) {
      fail(r.line_no(), e.what());
    }
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "# isomet graph " << kSchemaVersion << '\n' << g.size() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

GroupAction read_action(std::istream& in) {
  LineReader r(in);
  GroupAction a;
  const std::size_t m = read_count(r, "group size");
  a.group_metric = read_matrix(r, m, "group metric");
  const std::size_t k = read_count(r, "space size");
  a.space_metric = read_matrix(r, k, "space metric");
  a.act = read_table(r, m, k, "action table");
  a.product = read_table(r, m, m, "group table");
  expect_end(r);
  return a;
}

void write_action(std::ostream& out, const GroupAction& a) {
  out << "# isomet action " << kSchemaVersion << '\n' << a.group_size() << '\n';
  write_matrix(out, a.group_metric);
  out << a.space_size() << '\n';
  write_matrix(out, a.space_metric);
  write_table(out, a.act);
  write_table(out, a.product);
}

MetricSpace load_metric(const std::filesystem::path& path) {
  return load<MetricSpace>(path, [](std::istream& in) { return read_metric(in); });
}

Tree load_tree(const std::filesystem::path& path) {
  return load<Tree>(path, [](std::istream& in) { return read_tree(in); });
}

RelationalStructure load_structure(const std::filesystem::path& path) {
  return load<RelationalStructure>(path, [](std::istream& in) { return read_structure(in); });
}

Graph load_graph(const std::filesystem::path& path) {
  return load<Graph>(path, [](std::istream& in) { return read_graph(in); });
}

GroupAction load_action(const std::filesystem::path& path) {
  return load<GroupAction>(path, [](std::istream& in) { return read_action(in); });
}

}  // namespace isomet::io
