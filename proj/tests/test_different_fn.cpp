#include "skel/base_change.hpp"
#include "skel/different_fn.hpp"
#include "skel/elliptic_reduction.hpp"
#include "skel/error.hpp"
#include "skel/quotient_sing.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace skel;

TEST_CASE("slopes and laplacian on the worked example") {
  const BaseChangeFixture fx = example_ii_fixture();
  const PLFunction& delta = fx.different;
  CHECK(delta("y'") == 1);
  CHECK(delta("mid'") == rat(3, 4));
  CHECK(edge_slope(delta, "e1'") == 6);
  CHECK(edge_slope(delta, "e2'") == 6);
  CHECK(outgoing_slope(delta, "y'", "e2'") == -6);
  CHECK_THROWS_AS(outgoing_slope(delta, "x0'", "e3'"), Error);
  const Divisor lap = laplacian(delta);
  CHECK(lap["x0'"] == -6);
  CHECK(lap["y'"] == 6);
  CHECK(lap.degree() == 0);
  CHECK(ramification_divisor(fx.cover) == lap);
  CHECK(rh_residual(fx.cover, delta).is_zero());
  CHECK(temperate_value(2, 2) == 1);
  CHECK(residual_slope(2, 3) == 6);
}

TEST_CASE("function on the wrong graph") {
  const BaseChangeFixture fx = example_ii_fixture();
  CHECK_THROWS_AS(PLFunction(fx.cover.total(), {{"x0'", rat(0)}}), Error);
  std::map<std::string, Rational> zeros;
  for (const auto& v : fx.cover.base().vertices()) zeros[v.id] = 0;
  const PLFunction on_base(fx.cover.base(), zeros);
  try {
    rh_residual(fx.cover, on_base);
    FAIL("expected WrongGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongGraph);
  }
}

TEST_CASE("validation of differents") {
  const BaseChangeFixture fx = example_ii_fixture();
  CHECK(validate_different(fx.different, 2, 1).passed());
  CHECK(validate_different(fx.different, 2, 1).max_value == 1);
  std::map<std::string, Rational> values = fx.different.values();
  values["mid'"] = rat(-1, 3);
  const DifferentReport r = validate_different(PLFunction(fx.cover.total(), values), 2, 1);
  CHECK(r.negative_vertices == std::vector<std::string>{"mid'"});
  CHECK_FALSE(r.nonintegral_edges.empty());
  values = fx.different.values();
  values["y'"] = 2;
  values["z1'"] = 2;
  values["z2'"] = 2;
  values["mid'"] = rat(3, 2);
  CHECK_FALSE(validate_different(PLFunction(fx.cover.total(), values), 2, 1).passed());
}

TEST_CASE("laplacian is linear with degree zero on random graphs") {
  std::mt19937_64 rng(314159);
  for (int round = 0; round < 100; ++round) {
    const MetricGraph g = test::random_graph(rng, 1 + round % 30);
    std::map<std::string, Rational> a, b;
    for (const auto& v : g.vertices()) {
      a[v.id] = test::random_rational(rng);
      b[v.id] = test::random_rational(rng);
    }
    const Rational s = test::random_rational(rng);
    std::map<std::string, Rational> combo;
    for (const auto& v : g.vertices()) combo[v.id] = a[v.id] + s * b[v.id];
    const PLFunction fa(g, a), fb(g, b), fc(g, combo);
    CHECK(laplacian(fa).degree() == 0);
    CHECK(laplacian(fc) == laplacian(fa) + s * laplacian(fb));
  }
}

TEST_CASE("solver round trip on built fixtures") {
  std::vector<BaseChangeFixture> fixtures{example_ii_fixture(), build_pot_mult_cover(2, 1).fixture,
                                          build_pot_mult_cover(5, 3).fixture,
                                          build_quotient_cover(3, 2, 2, 0).fixture};
  for (const auto& fx : fixtures) {
    const PLFunction solved = solve_different(fx.cover, leaf_anchors(fx.different));
    CHECK(solved == fx.different);
  }
}

TEST_CASE("inconsistent anchors are reported") {
  const BaseChangeFixture fx = example_ii_fixture();
  std::map<std::string, Rational> anchors{{"x0'", rat(0)}, {"z1'", rat(1)}, {"z2'", rat(2)}};
  try {
    solve_different(fx.cover, anchors);
    FAIL("expected InconsistentAnchors");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentAnchors);
  }
  CHECK_THROWS_AS(solve_different(fx.cover, {}), Error);
  CHECK_THROWS_AS(solve_different(fx.cover, {{"ghost", rat(0)}}), Error);
}
