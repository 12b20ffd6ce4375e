#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hullx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A scratch directory with the fixture configurations used below.
class Workspace {
 public:
  explicit Workspace(const std::string& name) : dir_(fs::temp_directory_path() / ("hullx-cli-" + name)) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("square.json", R"({"dim":2,"points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
    write("line5.json", R"({"dim":1,"points":[["1"],["2"],["3"],["4"],["5"]]})");
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

std::size_t count_repros(const fs::path& dir) {
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().filename().string().starts_with("repro-")) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cowan at the centre of the square") {
  Workspace ws("cowan");
  const auto r = invoke({"verify", "cowan", "--config", ws.path("square.json"), "--point", "1/2,1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs = 1, rhs = 1  PASS") != std::string::npos);
}

TEST_CASE("euler cut through a vertex and an edge midpoint") {
  Workspace ws("euler");
  const auto r = invoke({"verify", "euler-cut", "--config", ws.path("square.json"), "--flat", "0,0;2,1", "--out",
                        ws.path("report.json")});
  CHECK(r.code == 0);
  const auto report = slurp(ws.path("report.json"));
  CHECK(report.find("\"lhs\": \"-1\"") != std::string::npos);
  CHECK(report.find("\"a\": [\n") != std::string::npos);
}

TEST_CASE("b sum on the integer line is a hypothesis error") {
  Workspace ws("faces");
  const auto r = invoke({"verify", "faces", "--config", ws.path("line5.json"), "--index-set", "2,4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("hypothesis") != std::string::npos);
  CHECK(count_repros(ws.dir()) == 0);

  const auto clean = invoke({"verify", "faces-clean", "--config", ws.path("line5.json"), "--index-set", "2,4"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("lhs = -1") != std::string::npos);
}

TEST_CASE("violations exit 1 and leave a repro") {
  Workspace ws("violation");
  // A negative tolerance turns the Monte Carlo comparison into a failure.
  const auto r = invoke({"verify", "intrinsic", "--config", ws.path("square.json"), "--r", "1", "--tol", "-1",
                        "--samples", "1000", "--out", ws.path("report.json")});
  CHECK(r.code == 1);
  CHECK(count_repros(ws.dir()) == 1);
  CHECK(slurp(ws.path("report.json")).find("\"pass\": false") != std::string::npos);
  for (const auto& entry : fs::directory_iterator(ws.dir())) {
    if (!entry.path().filename().string().starts_with("repro-")) continue;
    // The repro is a valid input for another run.
    const auto again = invoke({"verify", "cowan", "--config", entry.path().string(), "--point", "0,0"});
    CHECK(again.code == 0);
  }
}

TEST_CASE("usage errors exit 2") {
  Workspace ws("usage");
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "nonsense", "--config", ws.path("square.json")}).code == 2);
  CHECK(invoke({"verify", "cowan"}).code == 2);
  CHECK(invoke({"verify", "cowan", "--config", ws.path("missing.json"), "--point", "0,0"}).code == 2);
  CHECK(invoke({"verify", "cowan", "--config", ws.path("square.json")}).code == 2);
  CHECK(invoke({"verify", "cowan", "--config", ws.path("square.json"), "--point", "0.5,0"}).code == 2);
  CHECK(invoke({"verify", "intrinsic", "--config", ws.path("square.json")}).code == 2);
  CHECK(invoke({"sample", "buchta", "--distribution", "gaussian", "--l", "3", "--trials", "5"}).code == 2);
  CHECK(invoke({"fuzz", "degenerate", "--profile", "nope"}).code == 2);

  ws.write("float.json", R"({"dim":2,"points":[[0.5,"0"]]})");
  const auto r = invoke({"verify", "cowan", "--config", ws.path("float.json"), "--point", "0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"1/2\"") != std::string::npos);

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("subset limit from flag and environment") {
  Workspace ws("limit");
  const std::vector<std::string> base = {"verify", "cowan", "--config", ws.path("square.json"), "--point", "0,0"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  CHECK(with({"--limit-n", "3"}).code == 2);
  ::setenv("HULLX_LIMIT_N", "3", 1);
  CHECK(with({}).code == 2);
  CHECK(with({"--limit-n", "4"}).code == 0);
  ::setenv("HULLX_LIMIT_N", "abc", 1);
  CHECK(with({}).code == 2);
  ::unsetenv("HULLX_LIMIT_N");
  CHECK(with({}).code == 0);
}

TEST_CASE("projection flag") {
  Workspace ws("project");
  ws.write("flat.json", R"({"dim":3,"points":[["0","0","0"],["1","0","0"],["0","1","0"],["1","1","0"]]})");
  const std::vector<std::string> args = {"verify", "face-counts", "--config", ws.path("flat.json"), "--r", "1"};
  CHECK(invoke(args).code == 2);
  auto projected = args;
  projected.push_back("--project-to-affine-hull");
  const auto r = invoke(projected);
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs = 2, rhs = 2") != std::string::npos);
}

TEST_CASE("face enumeration output") {
  Workspace ws("enumerate");
  const auto r = invoke({"enumerate", "faces", "--config", ws.path("square.json"), "--out", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"f_vector\": [\n") != std::string::npos);
  const auto human = invoke({"enumerate", "faces", "--config", ws.path("line5.json"), "--index-set", "2,3,4"});
  CHECK(human.out.find("P{2,3,4}: f = 2 1") != std::string::npos);
}

TEST_CASE("reports are reproducible and digests track the input") {
  Workspace ws("determinism");
  const std::vector<std::string> sample = {"sample", "buchta", "--l", "3", "--trials", "300", "--seed", "8"};
  auto a = sample;
  a.insert(a.end(), {"--out", ws.path("a.json")});
  auto b = sample;
  b.insert(b.end(), {"--out", ws.path("b.json")});
  CHECK(invoke(a).code == 0);
  CHECK(invoke(b).code == 0);
  CHECK(slurp(ws.path("a.json")) == slurp(ws.path("b.json")));

  auto c = a;
  c[7] = "9";
  c.back() = ws.path("c.json");
  invoke(c);
  CHECK(slurp(ws.path("a.json")) != slurp(ws.path("c.json")));

  auto digest = [&](const std::string& config) {
    invoke({"verify", "cowan", "--config", config, "--point", "0,0", "--out", ws.path("d.json")});
    const auto text = slurp(ws.path("d.json"));
    const auto at = text.find("sha256:");
    return text.substr(at, 71);
  };
  const auto first = digest(ws.path("square.json"));
  ws.write("square2.json", R"({"dim":2,"points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  CHECK(digest(ws.path("square2.json")) == first);
  ws.write("square3.json", R"({"dim":2, "points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  CHECK(digest(ws.path("square3.json")) != first);
}

TEST_CASE("fuzzing runs every profile") {
  Workspace ws("fuzz");
  const auto r = invoke({"fuzz", "degenerate", "--count", "2", "--seed", "4", "--repro-dir", ws.path("")});
  CHECK(r.code == 0);
  for (const char* p : {"collinear", "point-on-facet", "flat-through-vertex", "duplicated-points",
                        "simplex-degenerate", "exceptional"}) {
    CHECK(r.out.find(std::string(p) + ": 2 cases") != std::string::npos);
  }
  CHECK(r.out.find(" 0 failures") != std::string::npos);
  CHECK(count_repros(ws.dir()) == 0);
}
