#include "skel/error.hpp"
#include "skel/ramification.hpp"

#include <doctest.h>

#include <vector>

using namespace skel;

TEST_CASE("primes") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("hilbert formula on cyclic filtrations") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t j = 0; j <= 10; ++j) {
      std::vector<std::int64_t> orders(static_cast<std::size_t>(j + 1), p);
      CHECK(hilbert_different(orders) == (p - 1) * (j + 1));
      CHECK(lower_jumps(orders) == std::vector<std::int64_t>{j});
      if (j == 0) continue;
      const DifferentValue v = cyclic_jump_invariants(p, j);
      CHECK(v.delta == (p - 1) * (j + 1));
      CHECK(v.delta_log == log_different(v.delta, p));
      CHECK(v.delta_log == (p - 1) * j);
    }
  }
}

TEST_CASE("wild quadratic extension of the worked example") {
  const std::vector<std::int64_t> orders{2, 2, 2};
  CHECK(hilbert_different(orders) == 3);
  CHECK(log_different(3, 2) == 2);
  CHECK(cyclic_jump_invariants(2, 2) == DifferentValue{3, 2, 2});
  CHECK_FALSE(is_tame(2));
}

TEST_CASE("tame and unramified") {
  const std::vector<std::int64_t> tame{3};
  CHECK(hilbert_different(tame) == 2);
  CHECK(is_tame(log_different(2, 3)));
  CHECK(is_unramified(hilbert_different(std::vector<std::int64_t>{1})));
  CHECK(lower_jumps(std::vector<std::int64_t>{1}).empty());
}

TEST_CASE("two-step filtration") {
  const std::vector<std::int64_t> orders{12, 4, 4, 2, 1};
  CHECK(hilbert_different(orders) == 11 + 3 + 3 + 1);
  CHECK(lower_jumps(orders) == std::vector<std::int64_t>{0, 2, 3});
}

TEST_CASE("towers") {
  // E/F cyclic of degree 2, jump 1; F/G cyclic of degree 3, jump 2.
  const auto ef = cyclic_jump_invariants(2, 1);
  const auto fg = cyclic_jump_invariants(3, 2);
  const auto delta = tower_different(ef.delta, ef.e, fg.delta);
  CHECK(delta == 2 + 2 * 6);
  CHECK(tower_log_different(ef.delta_log, ef.e, fg.delta_log) == log_different(delta, 6));
  CHECK(different_bound_holds(2, 2));
  CHECK_FALSE(different_bound_holds(3, 2));
}

TEST_CASE("validation") {
  CHECK_NOTHROW(validate({2, 2, {2, 2, 2}}));
  CHECK_NOTHROW(validate({3, 0, {3}}));
  CHECK_THROWS_AS(validate({2, 2, {2, 3}}), Error);
  CHECK_THROWS_AS(validate({6, 2, {6, 4}}), Error);
  CHECK_THROWS_AS(validate({2, 4, {2}}), Error);
  CHECK_THROWS_AS(validate({2, 0, {2, 2}}), Error);
  try {
    validate({2, 2, {2, 3}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedFiltration);
  }
  CHECK_THROWS_AS(cyclic_jump_invariants(4, 1), Error);
}
