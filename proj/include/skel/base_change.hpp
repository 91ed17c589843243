#pragma once

// A simultaneous skeleton Gamma' -> Gamma together with its different
// function, as produced by the elliptic and quotient builders, and the suite
// of invariants every such fixture has to satisfy.

#include "skel/different_fn.hpp"
#include "skel/harmonic_cover.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace skel {

/// Where a vertex of Gamma' sits relative to the ramification of Gamma' -> Gamma.
enum class Locus {
  Split,       ///< several preimages, phi a local isometry
  Unramified,  ///< single preimage but H(x')/H(x) unramified, delta = 0
  Ramified,    ///< interior of the topological ramification locus, delta > 0
  Temperate,   ///< above the temperate part, delta = dlog(k'/k)/[k':k]
};

std::string_view to_string(Locus locus);

struct BaseChangeFixture {
  CoverMap cover;
  PLFunction different;
  std::map<std::string, Locus> markings;
  std::int64_t dlog_base = 0;     ///< log-different of k'/k
  std::int64_t bound = 0;         ///< v_k([k':k]) used to bound delta
  std::int64_t curve_chi = 0;     ///< chi(C') = 2 - 2g(C')
};

/// Smallest b with dlog <= degree * b: the least v_k([k':k]) compatible with
/// the bound dlog(k'/k) <= v_{k'}([k':k]).
std::int64_t minimal_bound(std::int64_t degree, std::int64_t dlog_base);

struct FixtureCheck {
  bool balanced = false;
  bool rh_holds = false;
  bool different_valid = false;
  bool skeleton = false;          ///< chi(Gamma') / [k':k] == chi(C')
  bool zero_locus_matches = false;  ///< delta == 0 exactly on Split/Unramified
  bool temperate_constant = false;
  Divisor residual;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

FixtureCheck check_fixture(const BaseChangeFixture& fixture);

/// Anchors on the leaves of Gamma' (valency 1) with the fixture's values.
std::map<std::string, Rational> leaf_anchors(const PLFunction& delta);

}  // namespace skel
