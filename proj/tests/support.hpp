#pragma once
// Shared helpers for the test binaries: fixture paths and seeded random graphs.

#include "skel/metric_graph.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace skel::test {

inline std::filesystem::path fixture_dir() { return SKEL_FIXTURE_DIR; }
inline std::filesystem::path golden_dir() { return SKEL_GOLDEN_DIR; }

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num = 12,
                                std::int64_t max_den = 12, bool allow_negative = true) {
  std::uniform_int_distribution<std::int64_t> num(allow_negative ? -max_num : 1, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Connected graph on n vertices: a random tree plus a few extra edges and loops.
inline MetricGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> mult(1, 6), genus(0, 2);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), mult(rng), genus(rng)});
  std::vector<Edge> es;
  auto add = [&](std::size_t a, std::size_t b) {
    es.push_back({"e" + std::to_string(es.size()), vs[a].id, vs[b].id,
                  random_rational(rng, 12, 12, false)});
  };
  for (std::size_t i = 1; i < n; ++i) add(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n / 2 + 1)(rng);
  for (std::size_t k = 0; k < extra; ++k) add(pick(rng), pick(rng));
  return MetricGraph(std::move(vs), std::move(es));
}

/// Graph whose every edge already has snc length, so node blow-ups apply.
inline MetricGraph random_snc_graph(std::mt19937_64& rng, std::size_t n) {
  const MetricGraph g = random_graph(rng, n);
  std::vector<Edge> es;
  for (auto e : g.edges()) {
    e.length = snc_length(g.vertex(e.u).mult, g.vertex(e.v).mult);
    es.push_back(e);
  }
  return MetricGraph(g.vertices(), es);
}

}  // namespace skel::test
