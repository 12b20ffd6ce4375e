#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "hullx/errors.hpp"
#include "hullx/identities.hpp"
#include "hullx/io.hpp"
#include "oracles.hpp"

using namespace hullx;
using namespace hullx::testing;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_config(text, "cfg.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hullx-io-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("the unit square parses") {
  const auto file = parse_config(R"({"dim":2,"points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  CHECK(file.cfg == unit_square());
  CHECK(file.flats.empty());
  CHECK(file.index_sets.empty());
  CHECK(file.query_points.empty());
}

TEST_CASE("auxiliary objects parse") {
  const auto file = parse_config(R"({
    "dim": 2,
    "points": [["0","0"], ["1","0"], ["1","1"], [0, 1]],
    "flats": [{"anchor": ["0","0"], "directions": [["2","1"]]}, {"anchor": ["1/3","2/6"]}],
    "index_sets": [[1, 3], [4]],
    "query_points": [["1/2","-1/2"]]
  })");
  CHECK(file.cfg == unit_square());
  REQUIRE(file.flats.size() == 2);
  CHECK(file.flats[0].dim() == 1);
  CHECK(file.flats[1].anchor() == vec({"1/3", "1/3"}));
  CHECK(file.index_sets == std::vector<IndexSet>{labels({1, 3}), labels({4})});
  CHECK(file.query_points == std::vector<RatVector>{vec({"1/2", "-1/2"})});
}

TEST_CASE("parse errors say where") {
  const auto zero = parse_error(R"({"dim":2,"points":[["0","0"],["1/0","1"]]})");
  CHECK(contains(zero, "point 2"));
  CHECK(contains(zero, "1/0"));

  const auto quoted = parse_error(R"({"dim":2,"points":[["0.5","0"]]})");
  CHECK(contains(quoted, "point 1, coordinate 1"));
  CHECK(contains(quoted, "\"1/2\""));

  const auto bare = parse_error(R"({"dim":2,"points":[["0","0"],["1",0.25]]})");
  CHECK(contains(bare, "point 2, coordinate 2"));
  CHECK(contains(bare, "\"1/4\""));

  const auto count = parse_error(R"({"dim":2,"points":[["0","0"],["1","0"],["1"]]})");
  CHECK(contains(count, "point 3"));
  CHECK(contains(count, "has 1 coordinates, expected 2"));

  CHECK(contains(parse_error(R"({"dim":2,"points":[]})"), "points"));
  CHECK(contains(parse_error(R"({"points":[["0"]]})"), "dim"));
  CHECK(contains(parse_error("{not json"), "invalid JSON"));
  CHECK(contains(parse_error(R"({"dim":1,"points":[["0"]],"index_sets":[[2]]})"), "index set 1"));
  CHECK(contains(parse_error(R"({"dim":1,"points":[["0"]],"index_sets":[[0]]})"), "index set 1"));
  CHECK(contains(parse_error(R"({"dim":2,"points":[["0","0"]],"flats":[{"anchor":["0","0"],
      "directions":[["1","1"],["2","2"]]}]})"),
                 "flat 1"));
  CHECK(contains(parse_error(R"({"dim":1,"points":[["0"]],"query_points":[["1","2"]]})"), "query point 1"));
}

TEST_CASE("configurations survive a round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + trial % 3;
    std::vector<RatVector> pts(2 + trial % 5, RatVector(d));
    for (auto& p : pts) {
      for (auto& c : p) c = random_rational(rng, 5, 7);
    }
    ConfigFile file{Configuration(d, pts), {}, {}, {}};
    file.flats.push_back(AffineFlat(pts[0], {RatVector(d, 1)}));
    file.index_sets.push_back(labels({1, 2}));
    file.query_points.push_back(pts[1]);
    const auto text = serialize_config(file);
    const auto back = parse_config(text);
    CHECK(back.cfg == file.cfg);
    CHECK(back.flats == file.flats);
    CHECK(back.index_sets == file.index_sets);
    CHECK(back.query_points == file.query_points);
    CHECK(serialize_config(back) == text);
  }
}

TEST_CASE("sha-256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("report files") {
  ReportFile file;
  file.input_digest = sha256_hex("input");
  file.reports.push_back(cowan_check(unit_square(), vec({"1/2", "1/2"})));
  CHECK(file.pass());
  const auto text = serialize_report(file);
  CHECK(contains(text, "\"tool_version\": \"0.1.0\""));
  CHECK(contains(text, "\"input_digest\": \"sha256:" + file.input_digest + "\""));
  CHECK(contains(text, "\"identity\": \"cowan\""));
  CHECK(contains(text, "\"pass\": true"));
  CHECK(serialize_report(file) == text);

  file.reports.back().pass = false;
  CHECK_FALSE(file.pass());
  CHECK(contains(serialize_report(file), "\"pass\": false"));

  ReportFile stochastic;
  stochastic.summaries.push_back({"buchta", {{"n", "4"}}, TrialSummary{}});
  CHECK_FALSE(stochastic.pass());
  stochastic.summaries.back().summary.pass = true;
  CHECK(stochastic.pass());
}

TEST_CASE("atomic writes and repro dumps") {
  const auto dir = scratch_dir("write");
  const auto target = dir / "report.json";
  write_atomically(target, "first\n");
  write_atomically(target, "second\n");
  std::ifstream in(target);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "report.json.tmp"));

  const ConfigFile file{unit_square(), {}, {}, {vec({"1/2", "1/2"})}};
  auto report = cowan_check(file.cfg, file.query_points[0]);
  const auto path = write_repro(dir / "repro", file, report);
  CHECK(path.filename().string().starts_with("repro-cowan-"));
  std::ifstream repro(path);
  std::stringstream body;
  body << repro.rdbuf();
  const auto back = parse_config(body.str());
  CHECK(back.cfg == file.cfg);
  CHECK(back.query_points == file.query_points);
  std::filesystem::remove_all(dir);
}
