#include "skel/base_change.hpp"

#include "skel/error.hpp"

namespace skel {

std::string_view to_string(Locus locus) {
  switch (locus) {
    case Locus::Split: return "split";
    case Locus::Unramified: return "unramified";
    case Locus::Ramified: return "ramified";
    case Locus::Temperate: return "temperate";
  }
  return "unknown";
}

std::int64_t minimal_bound(std::int64_t degree, std::int64_t dlog_base) {
  if (degree < 1) throw Error(ErrorCode::OutOfRange, "degree must be positive");
  return (dlog_base + degree - 1) / degree;
}

FixtureCheck check_fixture(const BaseChangeFixture& fixture) {
  FixtureCheck check;
  const CoverMap& cover = fixture.cover;
  const PLFunction& delta = fixture.different;

  const BalancingReport balance = check_balancing(cover);
  check.balanced = balance.passed();
  if (!check.balanced) check.failures.push_back("balancing");

  check.residual = rh_residual(cover, delta);
  check.rh_holds = check.residual.is_zero();
  if (!check.rh_holds) check.failures.push_back("riemann-hurwitz: " + format_divisor(check.residual));

  check.different_valid = validate_different(delta, cover.degree(), fixture.bound).passed();
  if (!check.different_valid) check.failures.push_back("different validation");

  const std::int64_t chi_total = euler_char(cover.total());
  check.skeleton = chi_total % cover.degree() == 0 &&
                   skeleton_criterion(chi_total / cover.degree(), fixture.curve_chi);
  if (!check.skeleton) check.failures.push_back("skeleton criterion");

  check.zero_locus_matches = true;
  check.temperate_constant = true;
  const Rational temperate = temperate_value(cover.degree(), fixture.dlog_base);
  for (const auto& v : cover.total().vertices()) {
    auto it = fixture.markings.find(v.id);
    if (it == fixture.markings.end()) {
      check.zero_locus_matches = false;
      continue;
    }
    const bool zero_marked = it->second == Locus::Split || it->second == Locus::Unramified;
    if (zero_marked != (delta(v.id) == 0)) check.zero_locus_matches = false;
    if (it->second == Locus::Temperate && delta(v.id) != temperate) check.temperate_constant = false;
  }
  if (!check.zero_locus_matches) check.failures.push_back("zero locus");
  if (!check.temperate_constant) check.failures.push_back("temperate constancy");
  return check;
}

std::map<std::string, Rational> leaf_anchors(const PLFunction& delta) {
  std::map<std::string, Rational> anchors;
  for (const auto& v : delta.graph().vertices())
    if (delta.graph().valency(v.id) == 1) anchors.emplace(v.id, delta(v.id));
  return anchors;
}

}  // namespace skel
