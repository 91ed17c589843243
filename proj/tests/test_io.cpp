#include "skel/elliptic_reduction.hpp"
#include "skel/error.hpp"
#include "skel/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace skel;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("6/8") == rat(3, 4));
  CHECK(to_string(rat(-6, 8)) == "-3/4");
  CHECK(to_string(rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("graph round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const MetricGraph g = test::random_graph(rng, 1 + i);
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("graph schema errors") {
  CHECK(parse_code("{") == ErrorCode::MalformedJson);
  CHECK(parse_code("[]") == ErrorCode::SchemaError);
  CHECK(parse_code(R"({"vertices": []})") == ErrorCode::SchemaError);
  CHECK(parse_code(R"({"vertices": [{"id": "a"}], "edges": []})") == ErrorCode::SchemaError);
  CHECK(parse_code(R"({"vertices": [{"id": "a", "mult": 1}],
      "edges": [{"id": "e", "ends": ["a", "a"], "length": 1}]})") == ErrorCode::SchemaError);
  CHECK(parse_code(R"({"vertices": [{"id": "a", "mult": 1}],
      "edges": [{"id": "e", "ends": ["a", "b"], "length": "1"}]})") == ErrorCode::UnknownId);
  CHECK(parse_code(R"({"vertices": [{"id": "a", "mult": 1}],
      "edges": [{"id": "e", "ends": ["a", "a"], "length": "-1/2"}]})") == ErrorCode::NonPositiveLength);
  CHECK(parse_code(R"({"vertices": [{"id": "a", "mult": 1}, {"id": "b", "mult": 1}], "edges": []})") ==
        ErrorCode::Disconnected);
  // Genus defaults to zero.
  CHECK(parse_graph(R"({"vertices": [{"id": "a", "mult": 2}], "edges": []})").vertex("a").genus == 0);
}

TEST_CASE("cover and function round trip") {
  const BaseChangeFixture fx = example_ii_fixture();
  const std::string text = serialize_cover(fx.cover);
  CHECK(parse_cover(text) == fx.cover);
  CHECK(serialize_cover(parse_cover(text)) == text);
  const std::string f = serialize_function(fx.different);
  CHECK(parse_function(f, fx.cover.total()) == fx.different);
  CHECK_THROWS_AS(parse_function(R"({"values": {"ghost": "0"}})", fx.cover.total()), Error);
  CHECK_THROWS_AS(parse_function(R"({"values": {"y'": "1"}})", fx.cover.total()), Error);
}

TEST_CASE("cover with graphs by path") {
  const fs::path dir = test::fixture_dir() / "example_ii";
  const std::string text = R"({"base": "base.json", "total": "total.json", "degree": 2,
    "vertex_map": {"x0'": "x0", "mid'": "mid", "y'": "y", "z1'": "z1", "z2'": "z2"},
    "edge_map": {"e1'": "e1", "e2'": "e2", "e3'": "e3", "e4'": "e4"}})";
  CHECK(parse_cover(text, dir) == example_ii_fixture().cover);
  try {
    parse_cover(text, dir / "missing");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("shipped fixtures round trip byte for byte") {
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(test::fixture_dir())) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    const std::string text = read_file(p);
    const std::string name = p.filename().string();
    if (name == "cover.json") {
      CHECK(serialize_cover(parse_cover(text, p.parent_path())) == text);
    } else if (name == "different.json") {
      const MetricGraph total = load_graph(p.parent_path() / "total.json");
      CHECK(serialize_function(parse_function(text, total)) == text);
    } else if (name == "base.json" || name == "total.json" || name == "graph.json") {
      CHECK(serialize_graph(parse_graph(text)) == text);
    } else {
      continue;
    }
    ++files;
  }
  CHECK(files > 150);
}

TEST_CASE("renderers") {
  const BaseChangeFixture fx = example_ii_fixture();
  const std::string dot = render_dot(fx.cover.total(), fx.different);
  CHECK(dot.rfind("graph skeleton {", 0) == 0);
  CHECK(dot.find("delta=3/4") != std::string::npos);
  CHECK(dot.find("slope=6") != std::string::npos);
  CHECK(render_dot(fx.cover.total(), fx.different) == dot);
  const std::string tikz = render_tikz(fx.cover.total(), fx.different);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("3/4") != std::string::npos);
  CHECK_THROWS_AS(render_dot(fx.cover.base(), fx.different), Error);
}
