#include "skel/elliptic_reduction.hpp"
#include "skel/error.hpp"
#include "skel/harmonic_cover.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace skel;

namespace {

// Double cover of an interval, split over one half and ramified over the other.
CoverMap split_then_ramified(std::int64_t len_num = 1) {
  const MetricGraph base({{"a", 1, 0}, {"b", 1, 0}, {"c", 1, 0}},
                         {{"ab", "a", "b", rat(1)}, {"bc", "b", "c", rat(1)}});
  const MetricGraph total({{"a1", 1, 0}, {"a2", 1, 0}, {"b'", 1, 0}, {"c'", 1, 0}},
                          {{"ab1", "a1", "b'", rat(len_num)},
                           {"ab2", "a2", "b'", rat(1)},
                           {"bc'", "b'", "c'", rat(1, 2)}});
  return CoverMap(base, total, 2, {{"a1", "a"}, {"a2", "a"}, {"b'", "b"}, {"c'", "c"}},
                  {{"ab1", "ab"}, {"ab2", "ab"}, {"bc'", "bc"}});
}

}  // namespace

TEST_CASE("degrees and balancing") {
  const CoverMap c = split_then_ramified();
  CHECK(edge_degree(c, "ab1") == 1);
  CHECK(edge_degree(c, "bc'") == 2);
  CHECK(vertex_degree(c, "b'") == 2);
  CHECK(vertex_degree(c, "a1") == 1);
  CHECK(c.vertex_preimages("a") == std::vector<std::string>{"a1", "a2"});
  const BalancingReport r = check_balancing(c);
  CHECK(r.passed());
  CHECK(r.edges.size() == 2);
}

TEST_CASE("pullback multiplies degrees") {
  const CoverMap c = split_then_ramified();
  Divisor d;
  d.add("a", rat(3));
  d.add("c", rat(-1, 2));
  const Divisor pb = pullback(c, d);
  CHECK(pb["a1"] == 3);
  CHECK(pb["a2"] == 3);
  CHECK(pb["c'"] == -1);
  CHECK(pb.degree() == 2 * d.degree());
}

TEST_CASE("malformed covers") {
  const MetricGraph base({{"a", 1, 0}, {"b", 1, 0}}, {{"e", "a", "b", rat(1)}});
  const MetricGraph total({{"a'", 1, 0}, {"b'", 1, 0}}, {{"e'", "a'", "b'", rat(1, 3)}});
  // Non-integral degree 3/2.
  const MetricGraph odd({{"a'", 1, 0}, {"b'", 1, 0}}, {{"e'", "a'", "b'", rat(2, 3)}});
  CHECK_THROWS_AS(CoverMap(base, odd, 2, {{"a'", "a"}, {"b'", "b"}}, {{"e'", "e"}}), Error);
  // Missing vertex image.
  CHECK_THROWS_AS(CoverMap(base, total, 3, {{"a'", "a"}}, {{"e'", "e"}}), Error);
  // Incidence not respected.
  CHECK_THROWS_AS(CoverMap(base, total, 3, {{"a'", "a"}, {"b'", "a"}}, {{"e'", "e"}}), Error);
  // Degree-3 map declared as degree 2 is well formed but unbalanced.
  const CoverMap wrong(base, total, 2, {{"a'", "a"}, {"b'", "b"}}, {{"e'", "e"}});
  const BalancingReport r = check_balancing(wrong);
  CHECK_FALSE(r.passed());
  CHECK(r.offending_edges() == std::vector<std::string>{"e"});
}

TEST_CASE("non-integral edge degree is rejected") {
  CHECK_THROWS_AS(split_then_ramified(2), Error);
}

TEST_CASE("identity cover") {
  std::mt19937_64 rng(7);
  const MetricGraph g = test::random_graph(rng, 10);
  const CoverMap id = identity_cover(g);
  CHECK(check_balancing(id).passed());
  for (const auto& v : g.vertices()) CHECK(vertex_degree(id, v.id) == 1);
}

TEST_CASE("random pullback degrees on fixture covers") {
  std::mt19937_64 rng(99);
  const CoverMap covers[] = {example_ii_fixture().cover, build_pot_mult_cover(3, 2).fixture.cover};
  for (const auto& c : covers) {
    for (int i = 0; i < 50; ++i) {
      Divisor d;
      for (const auto& v : c.base().vertices())
        if (rng() % 2) d.add(v.id, test::random_rational(rng));
      CHECK(pullback(c, d).degree() == c.degree() * d.degree());
    }
  }
}

TEST_CASE("vertex degree disagreeing between branches") {
  const MetricGraph base({{"a", 1, 0}, {"b", 1, 0}, {"c", 1, 0}},
                         {{"ab", "a", "b", rat(1)}, {"bc", "b", "c", rat(1)}});
  const MetricGraph total({{"a1", 1, 0}, {"a2", 1, 0}, {"b1", 1, 0}, {"b2", 1, 0}, {"c'", 1, 0}},
                          {{"ab1", "a1", "b1", rat(1)},
                           {"ab2", "a2", "b2", rat(1)},
                           {"bc'", "b1", "c'", rat(1, 2)},
                           {"link", "b2", "c'", rat(1, 2)}});
  const CoverMap c(base, total, 2,
                   {{"a1", "a"}, {"a2", "a"}, {"b1", "b"}, {"b2", "b"}, {"c'", "c"}},
                   {{"ab1", "ab"}, {"ab2", "ab"}, {"bc'", "bc"}, {"link", "bc"}});
  CHECK_FALSE(check_balancing(c).passed());
  CHECK_THROWS_AS(vertex_degree(c, "b1"), Error);
}
