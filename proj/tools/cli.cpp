#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "isomet/corpus.hpp"
#include "isomet/error.hpp"
#include "isomet/io.hpp"
#include "isomet/reductions.hpp"
#include "isomet/structure.hpp"
#include "isomet/tree.hpp"
#include "isomet/ultrametric.hpp"
#include "isomet/verify.hpp"

namespace isomet::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void header(std::ostream& out, const std::string& command) {
  out << "# isomet " << command << ' ' << io::kSchemaVersion << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  return parts;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_rational_flag(p, flag));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::size_t parse_index_flag(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  }
  return std::stoull(text);
}

void print_map(std::ostream& out, const Bijection& f) {
  for (std::size_t i = 0; i < f.size(); ++i) out << "map " << i << ' ' << f(i) << '\n';
}

void print_matrix(std::ostream& out, const GromovMatrix& m, std::size_t width) {
  out << '[';
  for (std::size_t i = 0; i < width; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < width; ++j) out << (j ? "," : "") << m[i * width + j];
    out << ']';
  }
  out << "]\n";
}

RadiusSequence radii_for(const Tree& t, const std::string& radii_flag) {
  if (radii_flag.empty()) return RadiusSequence::harmonic(t.depth() + 1);
  try {
    return RadiusSequence(parse_rational_list(radii_flag, "--radii"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--radii: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// verify-reduction registry
// ---------------------------------------------------------------------------

using Object = std::variant<Tree, Graph, MetricSpace, RelationalStructure>;

enum class Kind { tree, graph, space, structure };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::tree: return "tree";
    case Kind::graph: return "graph";
    case Kind::space: return "space";
    case Kind::structure: return "structure";
  }
  return "?";
}

Kind kind_of(const Object& o) { return static_cast<Kind>(o.index()); }

struct NamedMap {
  Kind from;
  Kind to;
  std::function<Object(const Object&)> apply;
};

struct NamedOracle {
  Kind kind;
  EquivalenceOracle<Object> decide;
};

std::vector<Object> build_corpus(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--corpus must look like name:N");
  const std::string name = spec.substr(0, colon);
  const std::size_t n = parse_index_flag(spec.substr(colon + 1), "--corpus");
  if (n == 0) throw UsageError("--corpus size must be positive");
  std::vector<Object> out;
  if (name == "trees") {
    if (n > 7) throw UsageError("trees corpus supports at most 7 nodes");
    for (auto& t : corpus::trees(n)) out.emplace_back(std::move(t));
  } else if (name == "graphs") {
    if (n > 6) throw UsageError("graphs corpus supports at most 6 vertices");
    for (auto& g : corpus::graphs(n)) out.emplace_back(std::move(g));
  } else if (name == "spaces") {
    if (n > 7) throw UsageError("spaces corpus supports at most 7 points");
    for (auto& x : corpus::spaces(n)) out.emplace_back(std::move(x));
  } else if (name == "ultra") {
    if (n > 7) throw UsageError("ultra corpus supports at most 7 points");
    for (auto& x : corpus::ultrametric_spaces(n)) out.emplace_back(std::move(x));
  } else if (name == "random-ultra") {
    corpus::Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(corpus::random_ultrametric(rng, 7));
  } else {
    throw UsageError("unknown corpus '" + name + "' (trees, graphs, spaces, ultra, random-ultra)");
  }
  return out;
}

// Thresholds shared by the whole corpus so every image has one signature.
std::vector<Rational> corpus_thresholds(const std::vector<Object>& corpus) {
  std::set<Rational> q;
  Rational top;
  for (const auto& o : corpus) {
    if (const auto* x = std::get_if<MetricSpace>(&o)) {
      q.merge(distance_spectrum(*x));
      top = max(top, x->diameter());
    }
  }
  q.insert(top + 1);
  return {q.begin(), q.end()};
}

std::map<std::string, NamedMap> maps_for(const std::vector<Object>& corpus) {
  auto thresholds = std::make_shared<std::vector<Rational>>(corpus_thresholds(corpus));
  std::map<std::string, NamedMap> maps;
  maps["identity"] = {Kind::space, Kind::space, [](const Object& o) { return o; }};
  maps["tree2space"] = {Kind::tree, Kind::space, [](const Object& o) -> Object {
                          const auto& t = std::get<Tree>(o);
                          return tree_to_space(t, RadiusSequence::harmonic(t.depth() + 1));
                        }};
  maps["tree2space-geometric"] = {Kind::tree, Kind::space, [](const Object& o) -> Object {
                                    const auto& t = std::get<Tree>(o);
                                    return tree_to_space(t, RadiusSequence::geometric(t.depth() + 1));
                                  }};
  maps["graph2space"] = {Kind::graph, Kind::space,
                         [](const Object& o) -> Object { return graph_to_space(std::get<Graph>(o)); }};
  maps["disc2struct"] = {Kind::space, Kind::structure, [thresholds](const Object& o) -> Object {
                           return discrete_to_structure(std::get<MetricSpace>(o), *thresholds);
                         }};
  maps["ball-structure"] = {Kind::space, Kind::structure, [thresholds](const Object& o) -> Object {
                              return ball_structure(std::get<MetricSpace>(o), *thresholds).to_structure();
                            }};
  maps["const"] = {Kind::space, Kind::space, [](const Object&) -> Object { return validate_metric({}, {{0}}); }};
  return maps;
}

std::map<std::string, NamedOracle> oracles() {
  std::map<std::string, NamedOracle> o;
  o["tree-iso"] = {Kind::tree, [](const Object& a, const Object& b) {
                     return trees_isomorphic(std::get<Tree>(a), std::get<Tree>(b));
                   }};
  o["graph-iso"] = {Kind::graph, [](const Object& a, const Object& b) {
                      return graph_isomorphism(std::get<Graph>(a), std::get<Graph>(b)).has_value();
                    }};
  o["isometry"] = {Kind::space, [](const Object& a, const Object& b) {
                     return isometric(std::get<MetricSpace>(a), std::get<MetricSpace>(b), SearchMode::exhaustive);
                   }};
  o["isometry-pruned"] = {Kind::space, [](const Object& a, const Object& b) {
                            return isometric(std::get<MetricSpace>(a), std::get<MetricSpace>(b), SearchMode::pruned);
                          }};
  o["anchored"] = {Kind::space, [](const Object& a, const Object& b) {
                     return anchored_isometry_check(std::get<MetricSpace>(a), std::get<MetricSpace>(b));
                   }};
  o["canon-ultra"] = {Kind::space, [](const Object& a, const Object& b) {
                        return canonical_code(std::get<MetricSpace>(a)) == canonical_code(std::get<MetricSpace>(b));
                      }};
  o["gromov"] = {Kind::space, [](const Object& a, const Object& b) {
                   return gromov_full(std::get<MetricSpace>(a)) == gromov_full(std::get<MetricSpace>(b));
                 }};
  o["struct-iso"] = {Kind::structure, [](const Object& a, const Object& b) {
                       return structure_isomorphic(std::get<RelationalStructure>(a), std::get<RelationalStructure>(b))
                           .has_value();
                     }};
  return o;
}

template <class Map>
const auto& lookup(const Map& m, const std::string& key, const std::string& flag) {
  auto it = m.find(key);
  if (it == m.end()) {
    std::string known;
    for (const auto& [k, v] : m) known += (known.empty() ? "" : ", ") + k;
    throw UsageError(flag + ": unknown '" + key + "' (" + known + ")");
  }
  return it->second;
}

int verify_command(std::ostream& out, const std::string& corpus_spec, const std::string& map_name,
                   const std::string& e_name, const std::string& f_name, std::uint64_t seed,
                   std::optional<std::size_t> workers) {
  const auto corpus = build_corpus(corpus_spec, seed);
  const auto maps = maps_for(corpus);
  const auto all_oracles = oracles();
  const NamedMap& f = lookup(maps, map_name, "--map");
  const NamedOracle& e = lookup(all_oracles, e_name, "--E");
  const NamedOracle& ff = lookup(all_oracles, f_name, "--F");
  const Kind corpus_kind = kind_of(corpus.front());
  if (f.from != corpus_kind) {
    throw UsageError("map '" + map_name + "' expects " + kind_name(f.from) + " inputs, corpus holds " +
                     kind_name(corpus_kind));
  }
  if (e.kind != corpus_kind) throw UsageError("--E '" + e_name + "' does not apply to " + kind_name(corpus_kind));
  if (ff.kind != f.to) throw UsageError("--F '" + f_name + "' does not apply to " + kind_name(f.to));

  const std::function<Object(const Object&)> apply = f.apply;
  const auto report =
      verify_reduction<Object, Object>(corpus, apply, e.decide, ff.decide, workers.value_or(default_worker_count()));
  header(out, "verify-reduction");
  out << "corpus " << corpus_spec << '\n';
  out << "corpus-size " << report.corpus_size << '\n';
  out << "pairs-checked " << report.pairs_checked << '\n';
  if (report.passed()) {
    out << "verdict pass\n";
    return kOk;
  }
  const auto& c = *report.counterexample;
  out << "verdict counterexample\n";
  out << "first " << c.first << '\n' << "second " << c.second << '\n';
  out << "E " << (c.source_equivalent ? "yes" : "no") << '\n';
  out << "F " << (c.image_equivalent ? "yes" : "no") << '\n';
  return kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"isomet: finite metric spaces, trees and the reductions between them"};
  app.name("isomet");
  app.require_subcommand(1);

  std::vector<std::string> files;
  bool exhaustive = false;
  std::string radii, thresholds, rho, distances, map_flag, r_flag;
  std::size_t center = 0, copies = 2, z = 0;
  std::optional<std::size_t> gromov_n;
  std::string corpus_spec, map_name, e_name, f_name;
  std::uint64_t seed = 1;
  std::optional<std::size_t> workers;

  auto* check_metric = app.add_subcommand("check-metric", "validate a metric space file");
  check_metric->add_option("file", files, "metric space")->required()->expected(1);

  auto* isometry = app.add_subcommand("isometry", "search for an isometry between two spaces");
  isometry->add_option("files", files, "two metric spaces")->required()->expected(2);
  isometry->add_flag("--exhaustive", exhaustive, "enumerate all bijections");

  auto* canon_ultra = app.add_subcommand("canon-ultra", "canonical dendrogram code of an ultrametric space");
  canon_ultra->add_option("file", files)->required()->expected(1);

  auto* ball = app.add_subcommand("ball-structure", "ball structure of an ultrametric space");
  ball->add_option("file", files)->required()->expected(1);
  ball->add_option("--thresholds", thresholds, "comma-separated radii (default R(X) and diam+1)");

  auto* sphere = app.add_subcommand("sphere", "sphere decomposition around a point");
  sphere->add_option("file", files)->required()->expected(1);
  sphere->add_option("--center", center, "point index")->required();

  auto* transfer_cmd = app.add_subcommand("transfer", "push distances through a monotone map");
  transfer_cmd->add_option("file", files)->required()->expected(1);
  transfer_cmd->add_option("--rho", rho, "comma-separated from:to pairs")->required();

  auto* universal = app.add_subcommand("universal", "the space U_D");
  universal->add_option("--distances", distances, "comma-separated distance set D")->required();
  universal->add_option("--copies", copies, "copies per distance (>= 2)");

  auto* tree_canon = app.add_subcommand("tree-canon", "AHU code of a tree");
  tree_canon->add_option("file", files)->required()->expected(1);

  auto* tree_rank_cmd = app.add_subcommand("tree-rank", "rank of a tree");
  tree_rank_cmd->add_option("file", files)->required()->expected(1);

  auto* tree2space = app.add_subcommand("tree2space", "ultrametric space of a tree");
  tree2space->add_option("file", files)->required()->expected(1);
  tree2space->add_option("--radii", radii, "comma-separated strictly decreasing radii");

  auto* repair = app.add_subcommand("repair-iso", "repair an isometry of tree spaces into a tree isomorphism");
  repair->add_option("files", files, "two trees")->required()->expected(2);
  repair->add_option("--map", map_flag, "comma-separated images of the nodes of the first tree")->required();
  repair->add_option("--radii", radii, "comma-separated strictly decreasing radii");

  auto* graph2space = app.add_subcommand("graph2space", "metric space of a graph");
  graph2space->add_option("file", files)->required()->expected(1);

  auto* disc2struct = app.add_subcommand("disc2struct", "threshold structure of a metric space");
  disc2struct->add_option("file", files)->required()->expected(1);
  disc2struct->add_option("--thresholds", thresholds, "comma-separated thresholds (default R(X) and max+1)");

  auto* struct_iso = app.add_subcommand("struct-iso", "isomorphism of relational structures");
  struct_iso->add_option("files", files)->required()->expected(2);
  struct_iso->add_flag("--exhaustive", exhaustive, "enumerate all bijections");

  auto* sum = app.add_subcommand("sum", "sum of ultrametric spaces at distance r");
  sum->add_option("files", files)->required()->expected(1, -1);
  sum->add_option("--r", r_flag, "cross-part distance p/q")->required();

  auto* gromov = app.add_subcommand("gromov", "Gromov distance-matrix invariants");
  gromov->add_option("file", files)->required()->expected(1);
  gromov->add_option("--n", gromov_n, "tuple length minus one (default: all)");

  auto* adjust = app.add_subcommand("adjust-action", "rescale and adjust a group action's metrics");
  adjust->add_option("file", files)->required()->expected(1);

  auto* orbit = app.add_subcommand("orbit-encode", "metric space encoding the orbit of z");
  orbit->add_option("file", files)->required()->expected(1);
  orbit->add_option("--z", z, "point of Y")->required();

  auto* verify = app.add_subcommand("verify-reduction", "check x E y <=> f(x) F f(y) over a corpus");
  verify->add_option("--corpus", corpus_spec, "trees:N, graphs:N, spaces:N, ultra:N, random-ultra:COUNT")->required();
  verify->add_option("--map", map_name, "identity, tree2space, tree2space-geometric, graph2space, disc2struct, "
                                        "ball-structure, const")
      ->required();
  verify->add_option("--E", e_name, "source oracle")->required();
  verify->add_option("--F", f_name, "target oracle")->required();
  verify->add_option("--seed", seed, "seed for randomized corpora");
  verify->add_option("--workers", workers, "worker threads (default: ISOMET_WORKERS or hardware)");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (check_metric->parsed()) {
      auto x = io::load_metric(files[0]);
      header(out, "check-metric");
      out << "points " << x.size() << '\n' << "valid yes\n";
      out << "ultrametric " << (x.is_ultrametric() ? "yes" : "no") << '\n';
      out << "diameter " << x.diameter() << '\n';
    } else if (isometry->parsed()) {
      auto x = io::load_metric(files[0]);
      auto y = io::load_metric(files[1]);
      auto result = find_isometry(x, y, exhaustive ? SearchMode::exhaustive : SearchMode::pruned);
      header(out, "isometry");
      switch (result.status) {
        case IsometryResult::Status::found:
          out << "status found\n";
          print_map(out, result.map);
          break;
        case IsometryResult::Status::none: out << "status none\n"; break;
        case IsometryResult::Status::size_mismatch: out << "status size-mismatch\n"; break;
      }
    } else if (canon_ultra->parsed()) {
      auto x = io::load_metric(files[0]);
      auto code = canonical_code(x);
      header(out, "canon-ultra");
      out << "code " << code.to_string() << '\n';
    } else if (ball->parsed()) {
      auto x = io::load_metric(files[0]);
      std::optional<std::vector<Rational>> q;
      if (!thresholds.empty()) q = parse_rational_list(thresholds, "--thresholds");
      io::write_structure(out, ball_structure(x, q).to_structure());
    } else if (sphere->parsed()) {
      auto x = io::load_metric(files[0]);
      auto spheres = sphere_decompose(x, center);
      header(out, "sphere");
      out << "center " << center << '\n';
      for (const auto& s : spheres) {
        out << "sphere " << s.radius << ':';
        for (std::size_t p : s.points) out << ' ' << p;
        out << '\n';
      }
    } else if (transfer_cmd->parsed()) {
      auto x = io::load_metric(files[0]);
      std::map<Rational, Rational> table;
      for (const auto& entry : split(rho, ',')) {
        auto parts = split(entry, ':');
        if (parts.size() != 2) throw UsageError("--rho entries must be from:to");
        table[parse_rational_flag(parts[0], "--rho")] = parse_rational_flag(parts[1], "--rho");
      }
      io::write_metric(out, transfer(x, table));
    } else if (universal->parsed()) {
      auto list = parse_rational_list(distances, "--distances");
      if (copies < 2) throw UsageError("--copies must be at least 2");
      for (const auto& d : list)
        if (!d.is_positive()) throw UsageError("--distances must be positive");
      io::write_metric(out, universal_discrete({list.begin(), list.end()}, copies));
    } else if (tree_canon->parsed()) {
      auto t = io::load_tree(files[0]);
      header(out, "tree-canon");
      out << "code " << tree_canonical(t).to_string() << '\n';
    } else if (tree_rank_cmd->parsed()) {
      auto t = io::load_tree(files[0]);
      header(out, "tree-rank");
      out << "rank " << tree_rank(t) << '\n';
    } else if (tree2space->parsed()) {
      auto t = io::load_tree(files[0]);
      io::write_metric(out, tree_to_space(t, radii_for(t, radii)));
    } else if (repair->parsed()) {
      auto t = io::load_tree(files[0]);
      auto s = io::load_tree(files[1]);
      Bijection phi;
      for (const auto& p : split(map_flag, ',')) phi.forward.push_back(parse_index_flag(p, "--map"));
      auto r = radii_for(t.depth() >= s.depth() ? t : s, radii);
      auto pairs = phi.is_valid(t.size()) ? switching_pairs(t, s, phi) : std::vector<SwitchingPair>{};
      auto repaired = repair_isometry_to_tree_iso(t, s, r, phi);
      header(out, "repair-iso");
      out << "switching-pairs " << pairs.size() << '\n';
      for (const auto& p : pairs) out << "pair " << p.predecessor << ' ' << p.terminal << '\n';
      print_map(out, repaired);
    } else if (graph2space->parsed()) {
      io::write_metric(out, graph_to_space(io::load_graph(files[0])));
    } else if (disc2struct->parsed()) {
      auto x = io::load_metric(files[0]);
      auto q = thresholds.empty() ? separating_thresholds(x) : parse_rational_list(thresholds, "--thresholds");
      io::write_structure(out, discrete_to_structure(x, q));
    } else if (struct_iso->parsed()) {
      auto a = io::load_structure(files[0]);
      auto b = io::load_structure(files[1]);
      auto f = structure_isomorphic(a, b, exhaustive ? SearchMode::exhaustive : SearchMode::pruned);
      header(out, "struct-iso");
      if (f) {
        out << "status found\n";
        print_map(out, *f);
      } else {
        out << "status none\n";
      }
    } else if (sum->parsed()) {
      std::vector<MetricSpace> parts;
      for (const auto& f : files) parts.push_back(io::load_metric(f));
      io::write_metric(out, sum_space(parts, parse_rational_flag(r_flag, "--r")));
    } else if (gromov->parsed()) {
      auto x = io::load_metric(files[0]);
      if (gromov_n && *gromov_n > 6) throw UsageError("--n is limited to 6");
      if (!gromov_n && x.size() > 7) throw UsageError("gromov without --n is limited to 7 points");
      header(out, "gromov");
      auto emit = [&](std::size_t n) {
        auto set = gromov_invariant(x, n);
        out << "n " << n << " count " << set.size() << '\n';
        for (const auto& m : set) print_matrix(out, m, n + 1);
      };
      if (gromov_n) {
        emit(*gromov_n);
      } else {
        for (std::size_t n = 0; n < x.size(); ++n) emit(n);
      }
    } else if (adjust->parsed()) {
      io::write_action(out, adjust_group_metric(io::load_action(files[0])));
    } else if (orbit->parsed()) {
      io::write_metric(out, orbit_encode(io::load_action(files[0]), z));
    } else if (verify->parsed()) {
      return verify_command(out, corpus_spec, map_name, e_name, f_name, seed, workers);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kUsageError : kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace isomet::cli
