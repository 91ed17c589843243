#include "skel/cli.hpp"
#include "skel/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace skel;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fix(const std::string& rel) { return (test::fixture_dir() / rel).string(); }

}  // namespace

TEST_CASE("golden outputs") {
  std::ifstream cases(test::golden_dir() / "cases.tsv");
  REQUIRE(cases);
  std::string line;
  int count = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    const std::string golden = line.substr(0, tab);
    std::istringstream words(line.substr(tab + 1));
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w[0] == '@' ? fix(w.substr(1)) : w);
    CAPTURE(golden);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(test::golden_dir() / golden));
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kInputError);
  CHECK(run({"frobnicate"}).code == kInputError);
  CHECK(run({"--help"}).code == kPass);
  CHECK(run({"chi", fix("nowhere.json")}).code == kInputError);
  CHECK(run({"farey", "--mult", "2", "--dist", "1/2"}).code == kInputError);
  CHECK(run({"farey", "--mult", "2", "--dist", "1/0"}).code == kInputError);
  CHECK(run({"check-model", fix("interval/graph.json")}).code == kPass);
  const Run bad = run({"check-rh", fix("example_ii/cover.json"), fix("pot_mult/nu1_dlog1/different.json")});
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("E_UNKNOWN_ID") != std::string::npos);
}

TEST_CASE("failing checks exit with 1") {
  const fs::path dir = fs::temp_directory_path() / "skelcalc_cli_test";
  fs::create_directories(dir);
  write_file(dir / "zero.json", R"({"values": {"x0'": "0", "mid'": "0", "y'": "0", "z1'": "0", "z2'": "0"}})");
  const Run r = run({"check-rh", fix("example_ii/cover.json"), (dir / "zero.json").string()});
  CHECK(r.code == kCheckFailed);
  CHECK(r.out.find("rh: fail") != std::string::npos);
  CHECK(r.out.find("x0'=6") != std::string::npos);

  write_file(dir / "bad.json", R"({"vertices": [{"id": "a", "mult": 2}, {"id": "b", "mult": 3}],
    "edges": [{"id": "e", "ends": ["a", "b"], "length": "1/5"}]})");
  CHECK(run({"check-model", (dir / "bad.json").string()}).code == kCheckFailed);

  const Run solve = run({"solve-different", fix("example_ii/cover.json"), "--anchor", "x0'=0",
                         "--anchor", "z1'=1", "--anchor", "z2'=2"});
  CHECK(solve.code == kCheckFailed);
  CHECK(solve.err.find("E_INCONSISTENT_ANCHORS") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("solve-different reproduces the shipped different") {
  const Run r = run({"solve-different", fix("example_ii/cover.json"), "--anchor", "x0'=0",
                     "--anchor", "z1'=1", "--anchor", "z2'=1"});
  CHECK(r.code == kPass);
  CHECK(r.out == read_file(fix("example_ii/different.json")));
}

TEST_CASE("builders reproduce the shipped fixtures") {
  const fs::path dir = fs::temp_directory_path() / "skelcalc_build_test";
  fs::remove_all(dir);
  struct Case {
    std::vector<std::string> args;
    std::string fixture;
  };
  const Case cases[] = {
      {{"build-example-ii", "--out", (dir / "a").string()}, "example_ii"},
      {{"build-elliptic", "--nu", "3", "--dlog", "2", "--out", (dir / "b").string()}, "pot_mult/nu3_dlog2"},
      {{"build-quotient", "--p", "5", "--j", "2", "--d", "2", "--genus", "0", "--out", (dir / "c").string()},
       "quotient/p5_j2"},
  };
  for (const auto& c : cases) {
    const Run r = run(c.args);
    CHECK(r.code == kPass);
    CHECK(r.out.find("fail") == std::string::npos);
    const fs::path out = c.args.back();
    for (const char* f : {"base.json", "total.json", "cover.json", "different.json", "markings.json"})
      CHECK(read_file(out / f) == read_file(test::fixture_dir() / c.fixture / f));
  }
  fs::remove_all(dir);
}

TEST_CASE("render tikz") {
  const Run r = run({"render", fix("example_ii/total.json"), "--format", "tikz"});
  CHECK(r.code == kPass);
  CHECK(r.out.find("tikzpicture") != std::string::npos);
  CHECK(run({"render", fix("example_ii/total.json"), "--format", "svg"}).code == kInputError);
}
