#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "isomet/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "isomet");
  std::ostringstream out, err;
  int code = isomet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("isomet_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

const char* kAbc = "3\na b c\n0 1 2\n1 0 2\n2 2 0\n";
const char* kPath = "3\na b c\n0 1 2\n1 0 1\n2 1 0\n";
const char* kC2 = "2\n0 1\n1 0\n2\n0 1\n1 0\n0 1\n1 0\n0 1\n1 0\n";

}  // namespace

TEST_CASE("isometry of a space with itself prints the identity") {
  Workspace ws;
  auto a = ws.write("a.space", kAbc);
  auto r = run({"isometry", a, a});
  CHECK(r.code == 0);
  CHECK(r.out == "# isomet isometry v1\nstatus found\nmap 0 0\nmap 1 1\nmap 2 2\n");
  auto e = run({"isometry", a, a, "--exhaustive"});
  CHECK(e.out == r.out);
  auto p = ws.write("p.space", kPath);
  CHECK(run({"isometry", a, p}).out == "# isomet isometry v1\nstatus none\n");
}

TEST_CASE("tree2space output checks as an ultrametric") {
  Workspace ws;
  auto chain = ws.write("chain.tree", "\n0\n0,0\n");
  auto r = run({"tree2space", chain, "--radii", "2,1"});
  REQUIRE(r.code == 0);
  auto space = ws.write("chain.space", r.out);
  auto c = run({"check-metric", space});
  CHECK(c.code == 0);
  CHECK(c.out.find("valid yes\n") != std::string::npos);
  CHECK(c.out.find("ultrametric yes\n") != std::string::npos);
  auto code = run({"canon-ultra", space});
  CHECK(code.out == "# isomet canon-ultra v1\ncode (2 L (1 L L))\n");
}

TEST_CASE("verify-reduction exit codes") {
  auto pass = run({"verify-reduction", "--corpus", "graphs:4", "--map", "graph2space", "--E", "graph-iso", "--F",
                   "isometry"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("verdict pass\n") != std::string::npos);

  auto fail = run({"verify-reduction", "--corpus", "spaces:3", "--map", "const", "--E", "isometry", "--F",
                   "isometry"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("verdict counterexample\n") != std::string::npos);

  auto mismatch = run({"verify-reduction", "--corpus", "graphs:3", "--map", "tree2space", "--E", "tree-iso",
                       "--F", "isometry"});
  CHECK(mismatch.code == 2);
  CHECK(run({"verify-reduction", "--corpus", "moons:3", "--map", "identity", "--E", "isometry", "--F",
             "isometry"})
            .code == 2);
}

TEST_CASE("identical invocations produce identical output") {
  auto args = std::vector<std::string>{"verify-reduction", "--corpus", "random-ultra:30", "--map", "ball-structure",
                                       "--E", "isometry", "--F", "struct-iso", "--seed", "9"};
  auto a = run(args);
  auto w = args;
  w.insert(w.end(), {"--workers", "3"});
  auto b = run(w);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run(args).out == a.out);
}

TEST_CASE("usage, parse and domain errors") {
  Workspace ws;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-metric"}).code == 2);
  auto a = ws.write("a.space", kAbc);
  CHECK(run({"check-metric", a, "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto bad = ws.write("bad.space", "2\na b\n0 1\n1 zz\n");
  auto p = run({"check-metric", bad});
  CHECK(p.code == 2);
  CHECK(p.err.find("ParseError") != std::string::npos);
  CHECK(p.err.find("line 4") != std::string::npos);

  auto tri = ws.write("tri.space", "3\na b c\n0 1 3\n1 0 1\n3 1 0\n");
  auto d = run({"check-metric", tri});
  CHECK(d.code == 1);
  CHECK(d.err.find("TriangleViolation") != std::string::npos);

  auto path = ws.write("p.space", kPath);
  auto nu = run({"canon-ultra", path});
  CHECK(nu.code == 1);
  CHECK(nu.err.find("NotUltrametric") != std::string::npos);
  CHECK(run({"tree2space", ws.write("t.tree", "\n0\n"), "--radii", "1,2"}).code == 2);
  CHECK(run({"transfer", a, "--rho", "1:3,2:2"}).code == 1);
  CHECK(run({"transfer", a, "--rho", "1-3"}).code == 2);
  CHECK(run({"sum", a, "--r", "2"}).code == 1);
}

TEST_CASE("every subcommand runs") {
  Workspace ws;
  auto a = ws.write("a.space", kAbc);

  auto ball = run({"ball-structure", a});
  REQUIRE(ball.code == 0);
  std::istringstream ball_in(ball.out);
  CHECK(isomet::io::read_structure(ball_in).universe() == 5);
  CHECK(run({"ball-structure", a, "--thresholds", "1,2,3"}).code == 0);

  CHECK(run({"sphere", a, "--center", "0"}).out == "# isomet sphere v1\ncenter 0\nsphere 1: 1\nsphere 2: 2\n");
  CHECK(run({"sphere", a, "--center", "7"}).code == 1);

  auto doubled = run({"transfer", a, "--rho", "1:2,2:4"});
  CHECK(doubled.out.find("0 2 4\n") != std::string::npos);

  auto u = run({"universal", "--distances", "1,2", "--copies", "2"});
  REQUIRE(u.code == 0);
  std::istringstream u_in(u.out);
  CHECK(isomet::io::read_metric(u_in).size() == 4);
  CHECK(run({"universal", "--distances", "1", "--copies", "1"}).code == 2);

  auto t = ws.write("t.tree", "\n0\n1\n1,0\n");
  CHECK(run({"tree-canon", t}).out == "# isomet tree-canon v1\ncode (L (L))\n");
  CHECK(run({"tree-rank", t}).out == "# isomet tree-rank v1\nrank 2\n");

  auto edge = ws.write("edge.tree", "\n0\n");
  auto rep = run({"repair-iso", edge, edge, "--map", "1,0", "--radii", "2,1"});
  CHECK(rep.code == 0);
  CHECK(rep.out == "# isomet repair-iso v1\nswitching-pairs 1\npair 0 1\nmap 0 0\nmap 1 1\n");
  auto cherry = ws.write("cherry.tree", "\n0\n1\n");
  auto chain = ws.write("chain.tree", "\n0\n0,0\n");
  auto notiso = run({"repair-iso", chain, cherry, "--map", "0,1,2"});
  CHECK(notiso.code == 1);
  CHECK(notiso.err.find("NotAnIsometry") != std::string::npos);

  auto g = ws.write("p3.graph", "3\n0 1\n1 2\n");
  auto gs = run({"graph2space", g});
  CHECK(gs.out.find("0 1 2\n") != std::string::npos);

  auto s1 = ws.write("s1.struct", run({"disc2struct", a, "--thresholds", "1,2,3"}).out);
  auto b = ws.write("b.space", "3\nx y z\n0 2 2\n2 0 1\n2 1 0\n");
  auto s2 = ws.write("s2.struct", run({"disc2struct", b, "--thresholds", "1,2,3"}).out);
  auto iso = run({"struct-iso", s1, s2});
  CHECK(iso.code == 0);
  CHECK(iso.out == "# isomet struct-iso v1\nstatus found\nmap 0 1\nmap 1 2\nmap 2 0\n");
  CHECK(run({"struct-iso", s1, s2, "--exhaustive"}).out.find("status found") != std::string::npos);
  CHECK(run({"disc2struct", a, "--thresholds", "3"}).code == 1);

  auto sum = run({"sum", a, b, "--r", "5/2"});
  REQUIRE(sum.code == 0);
  std::istringstream sum_in(sum.out);
  CHECK(isomet::io::read_metric(sum_in).size() == 6);

  auto gr = run({"gromov", ws.write("two.space", "2\na b\n0 1\n1 0\n"), "--n", "1"});
  CHECK(gr.out == "# isomet gromov v1\nn 1 count 2\n[[0,0],[0,0]]\n[[0,1],[1,0]]\n");
  CHECK(run({"gromov", a}).out.find("n 2 count") != std::string::npos);

  auto action = ws.write("c2.action", kC2);
  auto adj = run({"adjust-action", action});
  CHECK(adj.code == 0);
  auto enc = run({"orbit-encode", action, "--z", "1"});
  CHECK(enc.code == 0);
  CHECK(enc.out.find("x*1") != std::string::npos);
  CHECK(run({"orbit-encode", action, "--z", "5"}).code == 1);
}
